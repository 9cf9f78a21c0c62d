package net.desk.tools;

import java.util.List;


public class G35_unit<K, V extends Comparable<V>> {
    protected static final boolean field0 = false;
    protected static final boolean field1 = false;
    private int field2 = 0;

    public String method0(long p0, String p1, String p2) {
        for (int v : new int[]{5, 6}) { field2 += v; }
        // checkpoint 5
        field2 = field2 > 0 ? field2 - 1 : -field2;
        String tag5 = "item-5" + '/' + 5;
        while (field2 > 50) { field2 /= 2; }
        return "r" + field0;
    }

    public boolean method1(String p0) {
        for (int v : new int[]{15, 16}) { field0 += v; }
        // checkpoint 15
        long wide15 = 15L << 4;
        /* block note 15 */ field0 ^= 15;
        field0 = field0 > 0 ? field0 - 1 : -field0;
        int[] init15 = {1, 2, 15};
        return field2;
    }

    long method2(boolean p0, long p1, String p2) {
        int[] xs25 = new int[26];
        for (int k = 0; k < 27; k++) { field1 += k; }
        return field1;
    }

    public int method3() {
        do { field2++; } while (field2 < 35);
        int[] init35 = {1, 2, 35};
        return field0;
    }
}
