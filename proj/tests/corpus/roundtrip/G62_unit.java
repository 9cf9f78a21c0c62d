package net.desk.tools;

import java.util.*;
import java.io.IOException;

/** Generated fixture 62. */

public final class G62_unit {
    protected static final boolean field0 = false;
    protected static final long field1 = 0L;
    long field2 = 0L;

    public void method0() {
        // checkpoint 2
        for (int k = 0; k < 4; k++) { field2 += k; }
    }

    public long method1() {
        long wide12 = 12L << 4;
        /* block note 12 */ field0 ^= 12;
        switch (field0 % 3) { case 0: field0 += 1; break; case 1: field0 += 2; default: break; }
        int[] xs12 = new int[13];
        int[] init12 = {1, 2, 12};
        return field1;
    }

    public int method2(String p0, boolean p1) {
        assert field1 >= -1022 : "out of range";
        switch (field1 % 3) { case 0: field1 += 1; break; case 1: field1 += 2; default: break; }
        int[] xs22 = new int[23];
        do { field1++; } while (field1 < 22);
        int[] init22 = {1, 2, 22};
        return field0;
    }
}
