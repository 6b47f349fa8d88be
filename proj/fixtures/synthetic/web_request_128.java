// HTTP Web Request.getResponse
public class WebRequest128 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        request.getHeaders().add("Accept", "application/json");
        Stream stream = response.getResponseStream();
        list.sort(Comparator.naturalOrder());
        response.close();
    }
}
