public class SqlOpen147 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        graph.publish(post);
        connection.open();
        while (reader.read()) { names.add(reader.getString(0)); }
        SqlCommand command = connection.createCommand();
        connection.close();
    }
}
