// GEFActionConstants.GROUP VIEW,action
public class Misc182 {
    public void run() {
        Files.write(file.toPath(), bytes);
        String json = mapper.writeValueAsString(payload);
        graph.publish(post);
        notifications.send(user, text);
    }
}
