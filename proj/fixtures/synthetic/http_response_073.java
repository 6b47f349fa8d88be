// HTTP Response.setContent
public class HttpResponse073 {
    public void run() {
        response.setContentType("text/html");
        response.setStatus(200);
        response.addHeader("Cache-Control", "no-cache");
        response.setContent(body.getBytes(charset));
        response.flushBuffer();
    }
}
