// HTTP Web Request.getResponse
public class WebRequest102 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        String text = reader.readToEnd();
        Post post = graph.createPost(message);
        Stream stream = response.getResponseStream();
        response.close();
        log.debug(response.getStatusCode());
    }
}
