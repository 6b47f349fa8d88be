public class Misc178 {
    public void run() {
        graph.publish(post);
        Post post = graph.createPost(message);
        String json = mapper.writeValueAsString(payload);
    }
}
