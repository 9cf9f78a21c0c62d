package org.widget.core.internal;

// fixture 66

public final class G66_unit<K, V extends Comparable<V>> {
    long field0;
    static int field1;
    private int field2 = 0;

    static long method0(int p0) {
        long wide6 = 6L << 4;
        for (int k = 0; k < 8; k++) { field0 += k; }
        while (field0 > 60) { field0 /= 2; }
        return field1;
    }

    static long method1(String p0, boolean p1) {
        switch (field1 % 3) { case 0: field1 += 1; break; case 1: field1 += 2; default: break; }
        int[] init16 = {1, 2, 16};
        return field1;
    }

    long method2(boolean p0) {
        int local26 = 26 * 3;
        do { field2++; } while (field2 < 26);
        int[] init26 = {1, 2, 26};
        // checkpoint 26
        return field1;
    }
}
