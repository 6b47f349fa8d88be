public class SqlOpen140 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        command.setTimeout(30);
        SqlCommand command = connection.createCommand();
        connection.close();
    }
}
