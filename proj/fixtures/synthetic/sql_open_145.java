public class SqlOpen145 {
    public void run() {
        while (reader.read()) { names.add(reader.getString(0)); }
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        command.setCommandText("SELECT * FROM friends");
        SqlCommand command = connection.createCommand();
        cache.put(key, value);
        connection.close();
    }
}
