// HTTP Web Request.getResponse
public class WebRequest121 {
    public void run() {
        log.debug(response.getStatusCode());
        album.addPhoto(photo);
        String text = reader.readToEnd();
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        response.close();
    }
}
