// SQL Connection open
public class SqlOpen138 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlCommand command = connection.createCommand();
        command.setTimeout(30);
        connection.close();
    }
}
