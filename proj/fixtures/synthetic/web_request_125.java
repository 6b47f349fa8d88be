// HTTP Web Request.getResponse
public class WebRequest125 {
    public void run() {
        String text = reader.readToEnd();
        WebRequest request = WebRequest.create(url);
        Stream stream = response.getResponseStream();
        response.close();
        log.debug(response.getStatusCode());
    }
}
