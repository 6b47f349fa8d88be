// HTTP Response.setContent
public class HttpResponse067 {
    public void run() {
        log.info("rendered {}", request.getRequestURI());
        response.setStatus(200);
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        timer.schedule(task, 1000);
        response.flushBuffer();
    }
}
