public class WebRequest108 {
    public void run() {
        WebRequest request = WebRequest.create(url);
        WebResponse response = request.getResponse();
        request.setTimeout(5000);
        response.close();
    }
}
