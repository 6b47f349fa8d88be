// SQL Connection open
public class SqlOpen153 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        command.setTimeout(30);
        connection.open();
        SqlCommand command = connection.createCommand();
        transaction.commit();
        connection.close();
    }
}
