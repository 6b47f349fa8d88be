public class HttpResponse066 {
    public void run() {
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        response.flushBuffer();
        response.setStatus(200);
    }
}
