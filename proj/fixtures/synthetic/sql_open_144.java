// SQL Connection open
public class SqlOpen144 {
    public void run() {
        SqlConnection connection = factory.createConnection(connectionString);
        connection.open();
        album.addPhoto(photo);
        SqlCommand command = connection.createCommand();
        connection.close();
        transaction.commit();
    }
}
