// HTTP Web Request.getResponse
public class WebRequest124 {
    public void run() {
        String text = reader.readToEnd();
        Post post = graph.createPost(message);
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        request.setMethod("GET");
        response.close();
    }
}
