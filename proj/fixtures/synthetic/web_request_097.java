// HTTP Web Request.getResponse
public class WebRequest097 {
    public void run() {
        String json = mapper.writeValueAsString(payload);
        WebRequest request = WebRequest.create(url);
        log.debug(response.getStatusCode());
        WebResponse response = request.getResponse();
        Stream stream = response.getResponseStream();
        response.close();
    }
}
