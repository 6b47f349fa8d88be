// HTTP Response.setContent
public class HttpResponse077 {
    public void run() {
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        response.flushBuffer();
        response.setCharacterEncoding("UTF-8");
    }
}
