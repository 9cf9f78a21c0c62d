package net.desk.tools;

import java.util.*;
import java.io.IOException;


public final class G76_unit<K, V extends Comparable<V>> {
    static boolean field0 = false;
    private long field1 = 0L;
    static long field2;

    static void method0(boolean p0) {
        int[] init6 = {1, 2, 6};
        while (field0 > 60) { field0 /= 2; }
        synchronized (this) { field0 |= 6; }
        /* block note 6 */ field0 ^= 6;
    }

    int method1(int p0) {
        assert field1 >= -1016 : "out of range";
        // checkpoint 16
        synchronized (this) { field1 |= 16; }
        int[] init16 = {1, 2, 16};
        int local16 = 16 * 3;
        try { field1 += Integer.parseInt("16"); } catch (NumberFormatException e) { field1 = 0; }
        return field0;
    }

    public int method2(long p0, long p1, boolean p2) {
        field2 = field2 > 0 ? field2 - 1 : -field2;
        for (int v : new int[]{26, 27}) { field2 += v; }
        long wide26 = 26L << 4;
        return field0;
    }
}
