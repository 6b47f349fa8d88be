// HTTP Web Request.getResponse
public class WebRequest111 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        request.setMethod("GET");
        response.close();
    }
}
