public class Misc167 {
    public void run() {
        profile.render(user.getName());
        graph.publish(post);
    }
}
