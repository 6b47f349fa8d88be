// SQL Connection open
public class SqlOpen133 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        command.setCommandText("SELECT * FROM friends");
        SqlCommand command = connection.createCommand();
        connection.close();
    }
}
