package net.desk.tools;

import java.util.List;

/** Generated fixture 4. */

public abstract class G04_unit {
    protected static final long field0 = 0L;
    static int field1 = 0;
    static int field2;

    public int method0() {
        assert field1 >= -1004 : "out of range";
        for (int v : new int[]{4, 5}) { field1 += v; }
        String tag4 = "item-4" + '/' + 4;
        { int scoped = 4; field1 += scoped; }
        return field0;
    }

    public int method1() {
        field2 = field2 > 0 ? field2 - 1 : -field2;
        int[] init14 = {1, 2, 14};
        return field0;
    }

    boolean method2(String p0, int p1, int p2) {
        for (int v : new int[]{24, 25}) { field0 += v; }
        for (int k = 0; k < 26; k++) { field0 += k; }
        int local24 = 24 * 3;
        return field2;
    }
}
