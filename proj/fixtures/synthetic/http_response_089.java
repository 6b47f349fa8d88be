// HTTP Response.setContent
public class HttpResponse089 {
    public void run() {
        log.info("rendered {}", request.getRequestURI());
        response.addHeader("Cache-Control", "no-cache");
        response.setContentType("text/html");
        response.setCharacterEncoding("UTF-8");
        response.setContent(body.getBytes(charset));
        response.flushBuffer();
    }
}
