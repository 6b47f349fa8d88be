// copied from a forum answer
// HTTP Response.setContent
public class HttpResponse071 {
  public void run() {
    response.setStatus(200);

    response.setContentType("text/html");
    response.setContent(body.getBytes(charset));
    response.flushBuffer();
  }
}
