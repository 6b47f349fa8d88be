public class Misc161 {
    public void run() {
        profile.render(user.getName());
        Files.write(file.toPath(), bytes);
        String json = mapper.writeValueAsString(payload);
        feed.subscribe(listener);
    }
}
