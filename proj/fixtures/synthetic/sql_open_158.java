// SQL Connection open
public class SqlOpen158 {
    public void run() {
        connection.open();
        transaction.commit();
        SqlCommand command = connection.createCommand();
        connection.close();
    }
}
