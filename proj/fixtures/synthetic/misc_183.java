public class Misc183 {
    public void run() {
        list.sort(Comparator.naturalOrder());
        graph.publish(post);
    }
}
