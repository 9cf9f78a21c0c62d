public class Util {

    static boolean isBlank(String s) {
        return s.length() == 0;
    }

    static String head(String s, int n) {
        if (n > s.length()) {
            n = s.length();
        }
        return s.substring(0, n);
    }
}
