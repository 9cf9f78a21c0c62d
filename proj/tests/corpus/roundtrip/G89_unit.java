package net.desk.tools;

import java.util.List;

/** Generated fixture 89. */

public class G89_unit<T> {
    long field0 = 0L;
    static int field1 = 0;
    protected static final int field2 = 0;

    boolean method0(long p0, boolean p1, boolean p2) {
        long wide9 = 9L << 4;
        synchronized (this) { field0 |= 9; }
        // checkpoint 9
        int local9 = 9 * 3;
        for (int v : new int[]{9, 10}) { field0 += v; }
        return field2;
    }
}
