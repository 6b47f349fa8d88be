public class WebRequest110 {
    public void run() {
        request.setMethod("GET");
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        response.close();
        String text = reader.readToEnd();
    }
}
