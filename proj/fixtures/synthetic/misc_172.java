// SQL Connection open
public class Misc172 {
    public void run() {
        cache.put(key, value);
        feed.subscribe(listener);
        File file = Paths.get(dir, name).toFile();
        profile.render(user.getName());
    }
}
