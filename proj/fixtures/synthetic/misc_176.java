public class Misc176 {
    public void run() {
        album.addPhoto(photo);
        feed.subscribe(listener);
        Post post = graph.createPost(message);
    }
}
