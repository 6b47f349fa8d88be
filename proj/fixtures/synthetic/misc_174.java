public class Misc174 {
    public void run() {
        timer.schedule(task, 1000);
        album.addPhoto(photo);
        notifications.send(user, text);
        Files.write(file.toPath(), bytes);
        profile.render(user.getName());
    }
}
