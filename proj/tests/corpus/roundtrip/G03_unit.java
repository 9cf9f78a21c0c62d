package net.desk.tools;

// fixture 3

public abstract class G03_unit {
    static int field0 = 0;
    static int field1 = 0;
    private boolean field2 = false;

    static void method0(boolean p0, String p1) {
        for (int k = 0; k < 5; k++) { field0 += k; }
        do { field0++; } while (field0 < 3);
        int[] xs3 = new int[4];
        try { field0 += Integer.parseInt("3"); } catch (NumberFormatException e) { field0 = 0; }
    }

    static boolean method1(int p0, boolean p1, boolean p2) {
        assert field1 >= -1013 : "out of range";
        int[] init13 = {1, 2, 13};
        return field2;
    }
}
