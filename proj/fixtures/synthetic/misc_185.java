public class Misc185 {
    public void run() {
        album.addPhoto(photo);
        String json = mapper.writeValueAsString(payload);
        timer.schedule(task, 1000);
        cache.put(key, value);
        File file = Paths.get(dir, name).toFile();
    }
}
