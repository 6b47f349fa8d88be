public class Misc173 {
    public void run() {
        profile.render(user.getName());
        File file = Paths.get(dir, name).toFile();
        Post post = graph.createPost(message);
    }
}
