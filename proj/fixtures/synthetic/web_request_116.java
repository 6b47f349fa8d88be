// HTTP Web Request.getResponse
public class WebRequest116 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        response.close();
        request.setTimeout(5000);
    }
}
