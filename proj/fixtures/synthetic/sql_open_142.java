// SQL Connection open
public class SqlOpen142 {
    public void run() {
        transaction.commit();
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlCommand command = connection.createCommand();
        connection.close();
        command.setTimeout(30);
        Post post = graph.createPost(message);
    }
}
