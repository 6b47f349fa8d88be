// HTTP Response.setContent
public class HttpResponse069 {
    public void run() {
        response.setContentType("text/html");
        log.info("rendered {}", request.getRequestURI());
        response.setContent(body.getBytes(charset));
        response.flushBuffer();
    }
}
