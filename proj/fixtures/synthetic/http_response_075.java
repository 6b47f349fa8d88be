// HTTP Response.setContent
public class HttpResponse075 {
    public void run() {
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        log.info("rendered {}", request.getRequestURI());
        response.flushBuffer();
    }
}
