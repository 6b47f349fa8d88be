// GEFActionConstants.GROUP UNDO,action
public class Misc189 {
    public void run() {
        File file = Paths.get(dir, name).toFile();
        list.sort(Comparator.naturalOrder());
        Post post = graph.createPost(message);
    }
}
