public class HttpResponse087 {
    public void run() {
        response.setStatus(200);
        response.setCharacterEncoding("UTF-8");
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        log.info("rendered {}", request.getRequestURI());
        response.flushBuffer();
        profile.render(user.getName());
    }
}
