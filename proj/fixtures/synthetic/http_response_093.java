public class HttpResponse093 {
    public void run() {
        response.setContentType("text/html");
        String body = template.render(model);
        log.info("rendered {}", request.getRequestURI());
        response.setContent(body.getBytes(charset));
        response.flushBuffer();
    }
}
