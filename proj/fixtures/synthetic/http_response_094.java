// HTTP Response.setContent
public class HttpResponse094 {
    public void run() {
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        response.setCharacterEncoding("UTF-8");
        response.flushBuffer();
    }
}
