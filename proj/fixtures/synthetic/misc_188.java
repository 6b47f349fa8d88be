public class Misc188 {
    public void run() {
        String json = mapper.writeValueAsString(payload);
        album.addPhoto(photo);
        graph.publish(post);
        feed.subscribe(listener);
    }
}
