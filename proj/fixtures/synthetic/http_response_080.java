// HTTP Response.setContent
public class HttpResponse080 {
    public void run() {
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        response.setStatus(200);
        feed.subscribe(listener);
        response.addHeader("Cache-Control", "no-cache");
    }
}
