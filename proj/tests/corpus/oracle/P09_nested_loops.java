public class P09_nested_loops {
    public static void main(String[] args) {
        int n = Integer.parseInt(args[0]);
        int total = 0;
        for (int i = 0; i < n; i++) {
            int j = i;
            while (j > 0) {
                total += j;
                j--;
            }
        }
        System.out.println(total);
    }
}
