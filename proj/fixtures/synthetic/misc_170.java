public class Misc170 {
    public void run() {
        list.sort(Comparator.naturalOrder());
        File file = Paths.get(dir, name).toFile();
    }
}
