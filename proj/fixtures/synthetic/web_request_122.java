// HTTP Web Request.getResponse
public class WebRequest122 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        notifications.send(user, text);
        WebResponse response = request.getResponse();
        log.debug(response.getStatusCode());
        String text = reader.readToEnd();
        Stream stream = response.getResponseStream();
        response.close();
    }
}
