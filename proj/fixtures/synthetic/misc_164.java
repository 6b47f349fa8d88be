public class Misc164 {
    public void run() {
        Files.write(file.toPath(), bytes);
        File file = Paths.get(dir, name).toFile();
        list.sort(Comparator.naturalOrder());
        String json = mapper.writeValueAsString(payload);
        profile.render(user.getName());
    }
}
