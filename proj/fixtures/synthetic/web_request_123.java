// HTTP Web Request.getResponse
public class WebRequest123 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        request.getHeaders().add("Accept", "application/json");
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        response.close();
    }
}
