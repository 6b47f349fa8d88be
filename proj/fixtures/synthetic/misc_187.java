// GEFActionConstants.GROUP VIEW,action
public class Misc187 {
    public void run() {
        String json = mapper.writeValueAsString(payload);
        Files.write(file.toPath(), bytes);
    }
}
