public class Misc163 {
    public void run() {
        album.addPhoto(photo);
        String json = mapper.writeValueAsString(payload);
    }
}
