public class HttpResponse090 {
    public void run() {
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        response.setStatus(200);
        response.setCharacterEncoding("UTF-8");
        response.flushBuffer();
    }
}
