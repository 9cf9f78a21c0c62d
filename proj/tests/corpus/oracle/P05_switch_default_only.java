public class P05_switch_default_only {
    public static void main(String[] args) {
        int x = Integer.parseInt(args[0]);
        switch (x) {
            default:
                System.out.println("always " + x);
        }
    }
}
