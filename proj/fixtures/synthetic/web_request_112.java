// HTTP Web Request.getResponse
public class WebRequest112 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        String text = reader.readToEnd();
        Stream stream = response.getResponseStream();
        response.close();
    }
}
