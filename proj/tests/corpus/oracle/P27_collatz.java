public class P27_collatz {
    public static void main(String[] args) {
        long n = Long.parseLong(args[0]);
        int steps = 0;
        while (n != 1) {
            if (n % 2 == 0) {
                n = n / 2;
            } else {
                n = 3 * n + 1;
            }
            steps++;
        }
        System.out.println(steps);
    }
}
