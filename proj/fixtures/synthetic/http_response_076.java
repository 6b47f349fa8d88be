// HTTP Response.setContent
public class HttpResponse076 {
    public void run() {
        response.setContentType("text/html");
        log.info("rendered {}", request.getRequestURI());
        response.setContent(body.getBytes(charset));
        String body = template.render(model);
        response.setStatus(200);
        response.flushBuffer();
    }
}
