// HTTP Response.setContent
public class HttpResponse096 {
    public void run() {
        response.addHeader("Cache-Control", "no-cache");
        response.setContentType("text/html");
        String body = template.render(model);
        response.setStatus(200);
        response.setContent(body.getBytes(charset));
        response.flushBuffer();
    }
}
