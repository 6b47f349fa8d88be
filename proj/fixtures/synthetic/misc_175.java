public class Misc175 {
    public void run() {
        timer.schedule(task, 1000);
        profile.render(user.getName());
        Post post = graph.createPost(message);
        File file = Paths.get(dir, name).toFile();
    }
}
