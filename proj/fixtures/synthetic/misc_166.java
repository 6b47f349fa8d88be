public class Misc166 {
    public void run() {
        list.sort(Comparator.naturalOrder());
        feed.subscribe(listener);
    }
}
