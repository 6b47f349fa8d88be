// HTTP Web Request.getResponse
public class WebRequest113 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        request.getHeaders().add("Accept", "application/json");
        Stream stream = response.getResponseStream();
        response.close();
    }
}
