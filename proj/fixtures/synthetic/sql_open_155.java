public class SqlOpen155 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlCommand command = connection.createCommand();
        connection.close();
        SqlDataReader reader = command.executeReader();
    }
}
