public class SqlOpen154 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        command.setTimeout(30);
        connection.open();
        SqlDataReader reader = command.executeReader();
        SqlCommand command = connection.createCommand();
        connection.close();
    }
}
