package net.desk.tools;

import java.util.List;

// fixture 16

public class G16_unit {
    static boolean field0;
    static int field1;
    long field2 = 0L;

    static void method0(boolean p0, boolean p1) {
        field0 = field0 > 0 ? field0 - 1 : -field0;
        try { field0 += Integer.parseInt("6"); } catch (NumberFormatException e) { field0 = 0; }
        for (int k = 0; k < 8; k++) { field0 += k; }
        /* block note 6 */ field0 ^= 6;
    }

    private static int method1(String p0, String p1, int p2) {
        while (field1 > 160) { field1 /= 2; }
        int[] xs16 = new int[17];
        for (int v : new int[]{16, 17}) { field1 += v; }
        do { field1++; } while (field1 < 16);
        return field0;
    }

    String method2(boolean p0, int p1, String p2) {
        field2 = field2 > 0 ? field2 - 1 : -field2;
        if (field2 > 26) { field2 -= 26; } else { field2 += 1; }
        int local26 = 26 * 3;
        { int scoped = 26; field2 += scoped; }
        while (field2 > 260) { field2 /= 2; }
        assert field2 >= -1026 : "out of range";
        return "r" + field0;
    }
}
