public class P28_nested_switch {
    public static void main(String[] args) {
        int outer = Integer.parseInt(args[0]);
        int inner = Integer.parseInt(args[1]);
        switch (outer) {
            case 1:
                switch (inner) {
                    case 10:
                        System.out.println("1-10");
                        break;
                    default:
                        System.out.println("1-?");
                }
                System.out.println("still one");
                break;
            case 2:
                System.out.println("two");
            default:
                System.out.println("tail");
        }
    }
}
