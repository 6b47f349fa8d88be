public class HttpResponse082 {
    public void run() {
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        response.flushBuffer();
        response.addHeader("Cache-Control", "no-cache");
        String body = template.render(model);
    }
}
