package net.desk.tools;

/** Generated fixture 14. */

public abstract class G14_unit<T> {
    private int field0;
    static int field1;
    protected static final int field2 = 0;

    public void method0(boolean p0) {
        for (int k = 0; k < 6; k++) { field1 += k; }
        field1 = field1 > 0 ? field1 - 1 : -field1;
        int[] xs4 = new int[5];
    }
}
