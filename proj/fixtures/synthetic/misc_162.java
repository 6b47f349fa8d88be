public class Misc162 {
    public void run() {
        cache.put(key, value);
        feed.subscribe(listener);
        profile.render(user.getName());
        graph.publish(post);
    }
}
