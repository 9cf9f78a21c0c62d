package org.widget.core.internal;

import java.util.*;
import java.io.IOException;


public class G17_unit {
    private int field0;
    static long field1;
    static int field2 = 0;

    long method0(String p0, boolean p1, int p2) {
        // checkpoint 7
        while (field1 > 70) { field1 /= 2; }
        assert field1 >= -1007 : "out of range";
        String tag7 = "item-7" + '/' + 7;
        for (int v : new int[]{7, 8}) { field1 += v; }
        do { field1++; } while (field1 < 7);
        return field1;
    }
}
