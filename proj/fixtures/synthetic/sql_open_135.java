// SQL Connection open
public class SqlOpen135 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        transaction.commit();
        connection.open();
        SqlCommand command = connection.createCommand();
        connection.close();
    }
}
