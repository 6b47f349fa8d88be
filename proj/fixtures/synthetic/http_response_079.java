// HTTP Response.setContent
public class HttpResponse079 {
    public void run() {
        response.setContentType("text/html");
        response.flushBuffer();
        log.info("rendered {}", request.getRequestURI());
    }
}
