public class HttpResponse086 {
    public void run() {
        log.info("rendered {}", request.getRequestURI());
        response.setStatus(200);
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        response.flushBuffer();
    }
}
