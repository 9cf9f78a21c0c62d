package net.desk.tools;


public class G46_unit<T> {
    boolean field0;
    boolean field1;
    static int field2;

    public boolean method0(long p0, long p1) {
        int[] xs6 = new int[7];
        do { field0++; } while (field0 < 6);
        long wide6 = 6L << 4;
        return field2;
    }

    private static String method1(String p0) {
        assert field1 >= -1016 : "out of range";
        if (field1 > 16) { field1 -= 16; } else { field1 += 1; }
        String tag16 = "item-16" + '/' + 16;
        for (int k = 0; k < 18; k++) { field1 += k; }
        do { field1++; } while (field1 < 16);
        return "r" + field0;
    }

    long method2() {
        synchronized (this) { field2 |= 26; }
        for (int k = 0; k < 28; k++) { field2 += k; }
        for (int v : new int[]{26, 27}) { field2 += v; }
        int[] init26 = {1, 2, 26};
        long wide26 = 26L << 4;
        return field1;
    }
}
