// SQL Connection open
public class SqlOpen130 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlCommand command = connection.createCommand();
        connection.close();
        command.setTimeout(30);
        SqlDataReader reader = command.executeReader();
        while (reader.read()) { names.add(reader.getString(0)); }
    }
}
