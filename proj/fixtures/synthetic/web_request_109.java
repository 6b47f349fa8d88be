// HTTP Web Request.getResponse
public class WebRequest109 {
    public void run() {
        request.setTimeout(5000);
        WebRequest request = WebRequest.create(url);
        request.setMethod("GET");
        WebResponse response = request.getResponse();
        request.getHeaders().add("Accept", "application/json");
        Stream stream = response.getResponseStream();
    }
}
