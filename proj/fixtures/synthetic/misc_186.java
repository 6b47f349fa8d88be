public class Misc186 {
    public void run() {
        notifications.send(user, text);
        album.addPhoto(photo);
    }
}
