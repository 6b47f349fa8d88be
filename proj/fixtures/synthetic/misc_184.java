public class Misc184 {
    public void run() {
        String json = mapper.writeValueAsString(payload);
        graph.publish(post);
    }
}
