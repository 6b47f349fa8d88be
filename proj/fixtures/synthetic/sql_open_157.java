// SQL Connection open
public class SqlOpen157 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        SqlDataReader reader = command.executeReader();
        connection.open();
        SqlCommand command = connection.createCommand();
        connection.close();
    }
}
