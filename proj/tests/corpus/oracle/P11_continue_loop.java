public class P11_continue_loop {
    public static void main(String[] args) {
        int n = Integer.parseInt(args[0]);
        int odd = 0;
        for (int i = 0; i < n; i++) {
            if (i % 2 == 0) continue;
            odd += i;
        }
        int k = 0;
        int seen = 0;
        while (k < n) {
            k++;
            if (k % 3 == 0) continue;
            seen++;
        }
        System.out.println(odd + "," + seen);
    }
}
