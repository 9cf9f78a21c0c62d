package org.widget.core.internal;

import java.util.List;


public final class G10_unit {
    private int field0;
    long field1 = 0L;
    private boolean field2;

    boolean method0() {
        switch (field0 % 3) { case 0: field0 += 1; break; case 1: field0 += 2; default: break; }
        /* block note 0 */ field0 ^= 0;
        int local0 = 0 * 3;
        do { field0++; } while (field0 < 0);
        field0 = field0 > 0 ? field0 - 1 : -field0;
        String tag0 = "item-0" + '/' + 0;
        return field2;
    }
}
