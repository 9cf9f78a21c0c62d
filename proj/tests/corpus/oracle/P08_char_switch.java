public class P08_char_switch {
    public static void main(String[] args) {
        char grade = args[0].charAt(0);
        int points;
        switch (grade) {
            case 'A':
                points = 4;
                break;
            case 'B':
                points = 3;
                break;
            case 'F':
            case 'f':
                points = 0;
                break;
            default:
                points = -1;
        }
        System.out.println(points);
    }
}
