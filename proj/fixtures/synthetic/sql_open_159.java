// SQL Connection open
public class SqlOpen159 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        while (reader.read()) { names.add(reader.getString(0)); }
        connection.open();
        SqlCommand command = connection.createCommand();
        connection.close();
    }
}
