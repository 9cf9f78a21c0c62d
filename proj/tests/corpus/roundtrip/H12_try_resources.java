import java.io.*;

class H12_try_resources {
    String firstLine(File f) throws IOException {
        try (BufferedReader reader = new BufferedReader(new FileReader(f));
             PrintWriter log = new PrintWriter("log.txt")) {
            log.println("reading " + f);
            return reader.readLine();
        } catch (FileNotFoundException | SecurityException e) {
            return null;
        } finally {
            System.gc();
        }
    }
}
