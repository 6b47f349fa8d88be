// HTTP Web Request.getResponse
public class WebRequest115 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        album.addPhoto(photo);
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        String text = reader.readToEnd();
        log.debug(response.getStatusCode());
        response.close();
        request.getHeaders().add("Accept", "application/json");
    }
}
