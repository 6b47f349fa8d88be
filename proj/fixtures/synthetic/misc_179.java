public class Misc179 {
    public void run() {
        String json = mapper.writeValueAsString(payload);
        album.addPhoto(photo);
        list.sort(Comparator.naturalOrder());
        Files.write(file.toPath(), bytes);
        timer.schedule(task, 1000);
    }
}
