package org.widget.core.internal;

import java.util.*;
import java.io.IOException;

/** Generated fixture 26. */

public abstract class G26_unit {
    protected static final int field0 = 0;
    protected static final boolean field1 = false;
    static int field2 = 0;

    static void method0(String p0, String p1, long p2) {
        int local6 = 6 * 3;
        while (field0 > 60) { field0 /= 2; }
    }
}
