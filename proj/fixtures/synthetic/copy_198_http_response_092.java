// copied from a forum answer
// HTTP Response.setContent
public class HttpResponse092 {
  public void run() {
    response.setContentType("text/html");

    response.setContent(body.getBytes(charset));
    log.info("rendered {}", request.getRequestURI());
    String body = template.render(model);
    response.flushBuffer();
  }
}
