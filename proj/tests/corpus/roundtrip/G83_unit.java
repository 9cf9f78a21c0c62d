package net.desk.tools;

/** Generated fixture 83. */

public abstract class G83_unit {
    static long field0 = 0L;
    static boolean field1 = false;
    static boolean field2 = false;

    private static void method0(boolean p0) {
        { int scoped = 3; field0 += scoped; }
        if (field0 > 3) { field0 -= 3; } else { field0 += 1; }
        int[] xs3 = new int[4];
        synchronized (this) { field0 |= 3; }
        /* block note 3 */ field0 ^= 3;
    }

    public long method1() {
        int local13 = 13 * 3;
        long wide13 = 13L << 4;
        do { field1++; } while (field1 < 13);
        if (field1 > 13) { field1 -= 13; } else { field1 += 1; }
        return field1;
    }

    static int method2(String p0, String p1) {
        assert field2 >= -1023 : "out of range";
        int[] init23 = {1, 2, 23};
        int[] xs23 = new int[24];
        for (int v : new int[]{23, 24}) { field2 += v; }
        /* block note 23 */ field2 ^= 23;
        return field0;
    }

    void method3(boolean p0, String p1) {
        String tag33 = "item-33" + '/' + 33;
        do { field0++; } while (field0 < 33);
        if (field0 > 33) { field0 -= 33; } else { field0 += 1; }
        synchronized (this) { field0 |= 33; }
    }
}
