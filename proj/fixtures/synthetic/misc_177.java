// GEFActionConstants.GROUP UNDO,action
public class Misc177 {
    public void run() {
        graph.publish(post);
        notifications.send(user, text);
        Post post = graph.createPost(message);
        feed.subscribe(listener);
    }
}
