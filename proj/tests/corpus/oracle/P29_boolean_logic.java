public class P29_boolean_logic {
    static boolean loud(String tag, boolean v) {
        System.out.println(tag);
        return v;
    }

    public static void main(String[] args) {
        boolean a = Integer.parseInt(args[0]) != 0;
        boolean b = Integer.parseInt(args[1]) != 0;
        if (a && loud("rhs-and", b)) {
            System.out.println("both");
        }
        if (a || loud("rhs-or", b)) {
            System.out.println("either");
        }
        boolean x = a ^ b;
        boolean y = !a & b;
        System.out.println(x + " " + y);
    }
}
