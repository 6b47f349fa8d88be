// SQL Connection open
public class Misc165 {
    public void run() {
        Post post = graph.createPost(message);
        list.sort(Comparator.naturalOrder());
        String json = mapper.writeValueAsString(payload);
        album.addPhoto(photo);
    }
}
