// HTTP Response.setContent
public class HttpResponse084 {
    public void run() {
        response.setStatus(200);
        response.setCharacterEncoding("UTF-8");
        String body = template.render(model);
        response.setContentType("text/html");
        response.flushBuffer();
    }
}
