public class P26_bubble_sort {
    public static void main(String[] args) {
        int[] xs = new int[args.length];
        for (int i = 0; i < args.length; i++) {
            xs[i] = Integer.parseInt(args[i]);
        }
        boolean moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i + 1 < xs.length; i++) {
                if (xs[i] > xs[i + 1]) {
                    int t = xs[i];
                    xs[i] = xs[i + 1];
                    xs[i + 1] = t;
                    moved = true;
                }
            }
        }
        String out = "";
        for (int x : xs) {
            out = out + x + " ";
        }
        System.out.println(out.trim());
    }
}
