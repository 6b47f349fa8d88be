// SQL Connection open
public class SqlOpen148 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlCommand command = connection.createCommand();
        SqlDataReader reader = command.executeReader();
        connection.close();
    }
}
