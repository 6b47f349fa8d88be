// HTTP Web Request.getResponse
public class WebRequest127 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        log.debug(response.getStatusCode());
        Stream stream = response.getResponseStream();
        response.close();
    }
}
