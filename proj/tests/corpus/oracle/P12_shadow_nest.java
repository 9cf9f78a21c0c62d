public class P12_shadow_nest {
    public static void main(String[] args) {
        int x = Integer.parseInt(args[0]);
        int out = 0;
        {
            int y = x + 1;
            {
                int z = y * 2;
                out += z;
            }
            out += y;
        }
        out += x;
        System.out.println(out);
    }
}
