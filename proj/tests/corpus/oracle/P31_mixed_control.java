public class P31_mixed_control {
    static int classify(int v) {
        switch (v % 4) {
            case 0:
                return 100;
            case 1:
            case 2:
                return 200;
            default:
                return 300;
        }
    }

    public static void main(String[] args) {
        int n = Integer.parseInt(args[0]);
        int acc = 0;
        for (int i = 0; i < n; i++) {
            int c = classify(i);
            if (c == 200) {
                acc += i;
            } else if (c == 300) {
                acc -= i;
            } else {
                acc += 1;
            }
        }
        System.out.println(acc);
    }
}
