// HTTP Response.setContent
public class HttpResponse083 {
    public void run() {
        response.setContentType("text/html");
        profile.render(user.getName());
        log.info("rendered {}", request.getRequestURI());
        response.setContent(body.getBytes(charset));
        response.setCharacterEncoding("UTF-8");
        response.flushBuffer();
    }
}
