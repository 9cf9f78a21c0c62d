// fixture 6

public class G06_unit<T> {
    protected static final long field0 = 0L;
    private int field1 = 0;
    private boolean field2 = false;

    static int method0(boolean p0, boolean p1) {
        int[] xs6 = new int[7];
        assert field0 >= -1006 : "out of range";
        field0 = field0 > 0 ? field0 - 1 : -field0;
        for (int k = 0; k < 8; k++) { field0 += k; }
        try { field0 += Integer.parseInt("6"); } catch (NumberFormatException e) { field0 = 0; }
        return field0;
    }

    public boolean method1(long p0, long p1) {
        long wide16 = 16L << 4;
        { int scoped = 16; field1 += scoped; }
        return field2;
    }

    boolean method2(int p0, String p1, String p2) {
        int local26 = 26 * 3;
        synchronized (this) { field2 |= 26; }
        for (int v : new int[]{26, 27}) { field2 += v; }
        return field2;
    }

    public int method3(boolean p0, String p1) {
        /* block note 36 */ field0 ^= 36;
        while (field0 > 360) { field0 /= 2; }
        return field0;
    }
}
