// SQL Connection open
public class SqlOpen143 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        transaction.commit();
        connection.open();
        SqlCommand command = connection.createCommand();
        connection.close();
        graph.publish(post);
        while (reader.read()) { names.add(reader.getString(0)); }
    }
}
