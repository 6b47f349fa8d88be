public class Misc169 {
    public void run() {
        timer.schedule(task, 1000);
        Post post = graph.createPost(message);
    }
}
