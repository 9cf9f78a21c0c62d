import java.util.List;

// fixture 36

public abstract class G36_unit<T> {
    protected static final boolean field0 = false;
    protected static final boolean field1 = false;
    static int field2;

    private static boolean method0(String p0, String p1, long p2) {
        int[] init6 = {1, 2, 6};
        int local6 = 6 * 3;
        for (int k = 0; k < 8; k++) { field0 += k; }
        { int scoped = 6; field0 += scoped; }
        long wide6 = 6L << 4;
        return field2;
    }
}
