// HTTP Response.setContent
public class HttpResponse095 {
    public void run() {
        String body = template.render(model);
        String json = mapper.writeValueAsString(payload);
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        response.addHeader("Cache-Control", "no-cache");
        response.setStatus(200);
        response.flushBuffer();
    }
}
