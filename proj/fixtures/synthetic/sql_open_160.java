public class SqlOpen160 {
    public void run() {
        command.setTimeout(30);
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        list.sort(Comparator.naturalOrder());
        SqlDataReader reader = command.executeReader();
        SqlCommand command = connection.createCommand();
        while (reader.read()) { names.add(reader.getString(0)); }
        connection.close();
    }
}
