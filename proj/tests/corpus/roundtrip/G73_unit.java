package org.widget.core.internal;

import java.util.*;
import java.io.IOException;


public class G73_unit {
    int field0;
    static long field1 = 0L;
    static boolean field2 = false;

    private static int method0(long p0) {
        int[] init3 = {1, 2, 3};
        for (int k = 0; k < 5; k++) { field0 += k; }
        String tag3 = "item-3" + '/' + 3;
        do { field0++; } while (field0 < 3);
        return field0;
    }

    private static long method1(int p0) {
        do { field1++; } while (field1 < 13);
        for (int v : new int[]{13, 14}) { field1 += v; }
        long wide13 = 13L << 4;
        return field1;
    }
}
