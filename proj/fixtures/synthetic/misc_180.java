public class Misc180 {
    public void run() {
        cache.put(key, value);
        graph.publish(post);
        album.addPhoto(photo);
    }
}
