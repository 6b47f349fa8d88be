// HTTP Web Request.getResponse
public class WebRequest101 {
    public void run() {
        request.setMethod("GET");
        String text = reader.readToEnd();
        request.getHeaders().add("Accept", "application/json");
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        response.close();
    }
}
