// HTTP Web Request.getResponse
public class WebRequest099 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        request.setTimeout(5000);
        WebResponse response = request.getResponse();
        String text = reader.readToEnd();
        request.getHeaders().add("Accept", "application/json");
        Stream stream = response.getResponseStream();
        response.close();
    }
}
