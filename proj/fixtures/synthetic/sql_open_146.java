// SQL Connection open
public class SqlOpen146 {
    public void run() {
        while (reader.read()) { names.add(reader.getString(0)); }
        SqlConnection connection = factory.createConnection(connectionString);
        SqlDataReader reader = command.executeReader();
        connection.open();
        SqlCommand command = connection.createCommand();
        connection.close();
    }
}
