public class P02_while_countdown {
    public static void main(String[] args) {
        int q = Integer.parseInt(args[0]);
        int steps = 0;
        while (q > 0) {
            q--;
            steps++;
        }
        System.out.println(q + ":" + steps);
    }
}
