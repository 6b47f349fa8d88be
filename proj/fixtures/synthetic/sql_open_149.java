// SQL Connection open
public class SqlOpen149 {
    public void run() {
        while (reader.read()) { names.add(reader.getString(0)); }
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlCommand command = connection.createCommand();
        connection.close();
    }
}
