// HTTP Response.setContent
public class HttpResponse081 {
    public void run() {
        graph.publish(post);
        response.setContentType("text/html");
        response.setStatus(200);
        response.setContent(body.getBytes(charset));
        response.setCharacterEncoding("UTF-8");
        response.flushBuffer();
    }
}
