// HTTP Web Request.getResponse
public class WebRequest118 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        request.setTimeout(5000);
        Stream stream = response.getResponseStream();
        response.close();
    }
}
