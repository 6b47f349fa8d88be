public class SqlOpen151 {
    public void run() {
        command.setTimeout(30);
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlDataReader reader = command.executeReader();
        SqlCommand command = connection.createCommand();
        connection.close();
        transaction.commit();
    }
}
