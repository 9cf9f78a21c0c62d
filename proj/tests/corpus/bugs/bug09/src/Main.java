public class Main {
    static long safePower(int base, int exp) {
        long result = 1L;
        for (int i = 0; i < exp; i++) {
            result *= base;
        }
        return result;
    }

    public static void main(String[] args) {
        int base = Integer.parseInt(args[0]);
        int exp = Integer.parseInt(args[1]);
        System.out.println(safePower(base, exp));
    }
}
