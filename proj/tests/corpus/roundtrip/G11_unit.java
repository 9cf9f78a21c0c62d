package net.desk.tools;


public final class G11_unit<T> {
    private boolean field0 = false;
    protected static final int field1 = 0;
    private int field2;

    void method0(boolean p0, boolean p1, int p2) {
        for (int v : new int[]{1, 2}) { field1 += v; }
        field1 = field1 > 0 ? field1 - 1 : -field1;
        switch (field1 % 3) { case 0: field1 += 1; break; case 1: field1 += 2; default: break; }
        int[] init1 = {1, 2, 1};
        int[] xs1 = new int[2];
    }

    public void method1(long p0, String p1, long p2) {
        do { field2++; } while (field2 < 11);
        try { field2 += Integer.parseInt("11"); } catch (NumberFormatException e) { field2 = 0; }
        long wide11 = 11L << 4;
        int local11 = 11 * 3;
    }
}
