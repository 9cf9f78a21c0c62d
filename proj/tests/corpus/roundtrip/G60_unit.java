package org.widget.core.internal;

import java.util.List;

/** Generated fixture 60. */

public final class G60_unit {
    boolean field0 = false;
    boolean field1 = false;
    boolean field2;

    long method0() {
        for (int k = 0; k < 2; k++) { field0 += k; }
        for (int v : new int[]{0, 1}) { field0 += v; }
        return field1;
    }
}
