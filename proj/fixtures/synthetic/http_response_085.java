// HTTP Response.setContent
public class HttpResponse085 {
    public void run() {
        String body = template.render(model);
        list.sort(Comparator.naturalOrder());
        response.setContentType("text/html");
        response.setContent(body.getBytes(charset));
        response.flushBuffer();
    }
}
