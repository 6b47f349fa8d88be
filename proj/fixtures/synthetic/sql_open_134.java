// SQL Connection open
public class SqlOpen134 {
    public void run() {
        command.setCommandText("SELECT * FROM friends");
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        SqlCommand command = connection.createCommand();
        connection.close();
        SqlDataReader reader = command.executeReader();
        transaction.commit();
    }
}
