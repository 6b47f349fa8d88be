// HTTP Response.setContent
public class HttpResponse065 {
    public void run() {
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        response.addHeader("Cache-Control", "no-cache");
        response.setStatus(200);
        response.setCharacterEncoding("UTF-8");
        response.flushBuffer();
        profile.render(user.getName());
    }
}
