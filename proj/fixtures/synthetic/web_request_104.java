public class WebRequest104 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        request.getHeaders().add("Accept", "application/json");
        Stream stream = response.getResponseStream();
        response.close();
    }
}
