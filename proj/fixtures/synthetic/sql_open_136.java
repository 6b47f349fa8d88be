// SQL Connection open
public class SqlOpen136 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        command.setCommandText("SELECT * FROM friends");
        connection.open();
        transaction.commit();
        notifications.send(user, text);
        SqlCommand command = connection.createCommand();
        while (reader.read()) { names.add(reader.getString(0)); }
        connection.close();
    }
}
