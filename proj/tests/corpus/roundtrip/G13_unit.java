package org.widget.core.internal;

import java.util.List;

/** Generated fixture 13. */

public class G13_unit {
    int field0 = 0;
    static long field1 = 0L;
    protected static final int field2 = 0;

    String method0(int p0, String p1) {
        synchronized (this) { field0 |= 3; }
        /* block note 3 */ field0 ^= 3;
        do { field0++; } while (field0 < 3);
        assert field0 >= -1003 : "out of range";
        return "r" + field0;
    }
}
