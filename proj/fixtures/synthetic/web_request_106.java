// HTTP Web Request.getResponse
public class WebRequest106 {
    public void run() {
        request.setMethod("GET");
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        request.setTimeout(5000);
        Stream stream = response.getResponseStream();
        response.close();
    }
}
