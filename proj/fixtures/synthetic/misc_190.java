// HTTP Response.setContent
public class Misc190 {
    public void run() {
        album.addPhoto(photo);
        cache.put(key, value);
        graph.publish(post);
    }
}
