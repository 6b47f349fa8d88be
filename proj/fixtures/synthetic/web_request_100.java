// HTTP Web Request.getResponse
public class WebRequest100 {
    public void run() {
        log.debug(response.getStatusCode());
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        response.close();
        album.addPhoto(photo);
    }
}
