// HTTP Response.setContent
public class HttpResponse088 {
    public void run() {
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        String body = template.render(model);
        response.setStatus(200);
        response.flushBuffer();
    }
}
