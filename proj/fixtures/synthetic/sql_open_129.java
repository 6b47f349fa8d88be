// SQL Connection open
public class SqlOpen129 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        while (reader.read()) { names.add(reader.getString(0)); }
        SqlCommand command = connection.createCommand();
        File file = Paths.get(dir, name).toFile();
    }
}
