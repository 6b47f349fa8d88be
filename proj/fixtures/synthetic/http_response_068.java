// HTTP Response.setContent
public class HttpResponse068 {
    public void run() {
        response.addHeader("Cache-Control", "no-cache");
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        response.flushBuffer();
    }
}
