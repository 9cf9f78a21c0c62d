public class P21_exception_exit {
    public static void main(String[] args) {
        int d = Integer.parseInt(args[0]);
        System.out.println("before");
        System.out.println(100 / d);
        System.out.println("after");
    }
}
