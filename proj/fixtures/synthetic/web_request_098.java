// HTTP Web Request.getResponse
public class WebRequest098 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        String text = reader.readToEnd();
        WebResponse response = request.getResponse();
        request.setTimeout(5000);
        Stream stream = response.getResponseStream();
        Post post = graph.createPost(message);
        response.close();
    }
}
