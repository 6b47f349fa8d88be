// HTTP Web Request.getResponse
public class WebRequest119 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        request.setMethod("GET");
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        response.close();
        request.getHeaders().add("Accept", "application/json");
    }
}
