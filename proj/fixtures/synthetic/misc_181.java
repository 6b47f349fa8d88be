public class Misc181 {
    public void run() {
        File file = Paths.get(dir, name).toFile();
        timer.schedule(task, 1000);
    }
}
