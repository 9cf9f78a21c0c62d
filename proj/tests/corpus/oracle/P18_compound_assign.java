public class P18_compound_assign {
    public static void main(String[] args) {
        int x = Integer.parseInt(args[0]);
        x += 5;
        x -= 2;
        x *= 3;
        x /= 2;
        x %= 7;
        x <<= 2;
        x >>= 1;
        x |= 8;
        x &= 30;
        x ^= 5;
        System.out.println(x);
    }
}
