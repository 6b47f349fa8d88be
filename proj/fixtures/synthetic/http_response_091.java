// HTTP Response.setContent
public class HttpResponse091 {
    public void run() {
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        Files.write(file.toPath(), bytes);
        response.flushBuffer();
        String body = template.render(model);
        response.addHeader("Cache-Control", "no-cache");
        log.info("rendered {}", request.getRequestURI());
    }
}
