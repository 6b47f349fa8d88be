public class HttpResponse072 {
    public void run() {
        String json = mapper.writeValueAsString(payload);
        response.setContentType("text/html");
        response.setCharacterEncoding("UTF-8");
        response.setContent(body.getBytes(charset));
        response.flushBuffer();
        log.info("rendered {}", request.getRequestURI());
        response.addHeader("Cache-Control", "no-cache");
    }
}
