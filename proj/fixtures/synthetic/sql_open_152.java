// SQL Connection open
public class SqlOpen152 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlCommand command = connection.createCommand();
        command.setTimeout(30);
        list.sort(Comparator.naturalOrder());
        while (reader.read()) { names.add(reader.getString(0)); }
        connection.close();
        transaction.commit();
    }
}
