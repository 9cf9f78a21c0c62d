package org.widget.core.internal;

import java.util.*;
import java.io.IOException;

// fixture 53

public final class G53_unit<T> {
    int field0 = 0;
    protected static final long field1 = 0L;
    static int field2;

    private static boolean method0(boolean p0, boolean p1) {
        switch (field0 % 3) { case 0: field0 += 1; break; case 1: field0 += 2; default: break; }
        int[] xs3 = new int[4];
        { int scoped = 3; field0 += scoped; }
        /* block note 3 */ field0 ^= 3;
        for (int k = 0; k < 5; k++) { field0 += k; }
        for (int v : new int[]{3, 4}) { field0 += v; }
        return field2;
    }

    boolean method1(String p0, long p1) {
        for (int k = 0; k < 15; k++) { field1 += k; }
        switch (field1 % 3) { case 0: field1 += 1; break; case 1: field1 += 2; default: break; }
        if (field1 > 13) { field1 -= 13; } else { field1 += 1; }
        int[] init13 = {1, 2, 13};
        try { field1 += Integer.parseInt("13"); } catch (NumberFormatException e) { field1 = 0; }
        int[] xs13 = new int[14];
        return field2;
    }

    long method2(String p0) {
        String tag23 = "item-23" + '/' + 23;
        // checkpoint 23
        switch (field2 % 3) { case 0: field2 += 1; break; case 1: field2 += 2; default: break; }
        int[] xs23 = new int[24];
        assert field2 >= -1023 : "out of range";
        synchronized (this) { field2 |= 23; }
        return field1;
    }
}
