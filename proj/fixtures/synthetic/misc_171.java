public class Misc171 {
    public void run() {
        Post post = graph.createPost(message);
        album.addPhoto(photo);
        notifications.send(user, text);
    }
}
