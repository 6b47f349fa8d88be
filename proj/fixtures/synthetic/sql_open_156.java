// SQL Connection open
public class SqlOpen156 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlCommand command = connection.createCommand();
        command.setCommandText("SELECT * FROM friends");
        connection.close();
        SqlDataReader reader = command.executeReader();
        notifications.send(user, text);
    }
}
