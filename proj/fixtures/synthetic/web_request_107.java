// HTTP Web Request.getResponse
public class WebRequest107 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        response.close();
    }
}
