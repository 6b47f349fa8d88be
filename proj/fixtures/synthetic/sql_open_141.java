// SQL Connection open
public class SqlOpen141 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlCommand command = connection.createCommand();
        connection.close();
        command.setCommandText("SELECT * FROM friends");
    }
}
