public class Feed {
    public void publish(GraphClient graph, String message) {
        Post post = graph.createPost(message);
        post.setVisibility(Visibility.FRIENDS);
        graph.publish(post);
    }
}
