public class WebRequest114 {
    public void run() {
        request.getHeaders().add("Accept", "application/json");
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
    }
}
