package org.widget.core.internal;

import java.util.*;
import java.io.IOException;

// fixture 47

public final class G47_unit<T> {
    private boolean field0 = false;
    boolean field1;
    static int field2 = 0;

    static void method0(long p0) {
        // checkpoint 7
        int[] xs7 = new int[8];
        switch (field1 % 3) { case 0: field1 += 1; break; case 1: field1 += 2; default: break; }
        /* block note 7 */ field1 ^= 7;
    }

    boolean method1() {
        /* block note 17 */ field2 ^= 17;
        if (field2 > 17) { field2 -= 17; } else { field2 += 1; }
        return field2;
    }

    public void method2(boolean p0, long p1, boolean p2) {
        String tag27 = "item-27" + '/' + 27;
        if (field0 > 27) { field0 -= 27; } else { field0 += 1; }
        assert field0 >= -1027 : "out of range";
    }

    static long method3(String p0, boolean p1, int p2) {
        while (field1 > 370) { field1 /= 2; }
        switch (field1 % 3) { case 0: field1 += 1; break; case 1: field1 += 2; default: break; }
        { int scoped = 37; field1 += scoped; }
        if (field1 > 37) { field1 -= 37; } else { field1 += 1; }
        return field1;
    }
}
