// SQL Connection open
public class Misc168 {
    public void run() {
        timer.schedule(task, 1000);
        notifications.send(user, text);
        album.addPhoto(photo);
    }
}
