public class P24_char_walk {
    public static void main(String[] args) {
        String s = args[0];
        int digits = 0;
        int letters = 0;
        int other = 0;
        for (int i = 0; i < s.length(); i++) {
            char c = s.charAt(i);
            if (Character.isDigit(c)) {
                digits++;
            } else if (Character.isLetter(c)) {
                letters++;
            } else {
                other++;
            }
        }
        System.out.println(digits + "/" + letters + "/" + other);
    }
}
