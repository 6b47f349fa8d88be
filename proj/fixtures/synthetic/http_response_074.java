// HTTP Response.setContent
public class HttpResponse074 {
    public void run() {
        response.setContentType("text/html");
        String body = template.render(model);
        response.flushBuffer();
        response.addHeader("Cache-Control", "no-cache");
        response.setCharacterEncoding("UTF-8");
    }
}
