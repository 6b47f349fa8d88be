// SQL Connection open
public class SqlOpen139 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlCommand command = connection.createCommand();
        while (reader.read()) { names.add(reader.getString(0)); }
        SqlDataReader reader = command.executeReader();
        connection.close();
        command.setCommandText("SELECT * FROM friends");
    }
}
