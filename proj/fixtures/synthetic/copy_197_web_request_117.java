// copied from a forum answer
// HTTP Web Request.getResponse
public class WebRequest117 {
  public void run() {
    WebRequest request = WebRequest.create(url);

    log.debug(response.getStatusCode());
    WebResponse response = request.getResponse();
    Stream stream = response.getResponseStream();
    response.close();
  }
}
