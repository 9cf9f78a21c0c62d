package net.desk.tools;


public class G61_unit {
    long field0 = 0L;
    int field1 = 0;
    static long field2 = 0L;

    private static void method0(String p0, boolean p1) {
        if (field1 > 1) { field1 -= 1; } else { field1 += 1; }
        for (int v : new int[]{1, 2}) { field1 += v; }
        switch (field1 % 3) { case 0: field1 += 1; break; case 1: field1 += 2; default: break; }
        for (int k = 0; k < 3; k++) { field1 += k; }
        while (field1 > 10) { field1 /= 2; }
    }

    void method1(boolean p0) {
        /* block note 11 */ field2 ^= 11;
        field2 = field2 > 0 ? field2 - 1 : -field2;
        int[] xs11 = new int[12];
        for (int v : new int[]{11, 12}) { field2 += v; }
        for (int k = 0; k < 13; k++) { field2 += k; }
        int[] init11 = {1, 2, 11};
    }

    boolean method2(boolean p0, String p1, boolean p2) {
        int[] xs21 = new int[22];
        long wide21 = 21L << 4;
        return field2;
    }

    long method3() {
        try { field1 += Integer.parseInt("31"); } catch (NumberFormatException e) { field1 = 0; }
        // checkpoint 31
        /* block note 31 */ field1 ^= 31;
        switch (field1 % 3) { case 0: field1 += 1; break; case 1: field1 += 2; default: break; }
        { int scoped = 31; field1 += scoped; }
        synchronized (this) { field1 |= 31; }
        return field1;
    }
}
