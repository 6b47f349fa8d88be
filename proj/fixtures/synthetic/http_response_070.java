// HTTP Response.setContent
public class HttpResponse070 {
    public void run() {
        log.info("rendered {}", request.getRequestURI());
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        response.setCharacterEncoding("UTF-8");
        response.flushBuffer();
        response.setStatus(200);
    }
}
