// HTTP Web Request.getResponse
public class WebRequest126 {
    public void run() {
        request.setTimeout(5000);
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        request.setMethod("GET");
        response.close();
    }
}
