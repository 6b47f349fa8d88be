// SQL Connection open
public class SqlOpen137 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlCommand command = connection.createCommand();
        connection.close();
    }
}
