package net.desk.tools;

import java.util.List;


public class G29_unit {
    long field0 = 0L;
    int field1 = 0;
    int field2 = 0;

    static boolean method0(long p0, long p1, int p2) {
        while (field0 > 90) { field0 /= 2; }
        int local9 = 9 * 3;
        do { field0++; } while (field0 < 9);
        for (int v : new int[]{9, 10}) { field0 += v; }
        switch (field0 % 3) { case 0: field0 += 1; break; case 1: field0 += 2; default: break; }
        return field2;
    }

    public void method1(int p0) {
        synchronized (this) { field1 |= 19; }
        int[] init19 = {1, 2, 19};
    }
}
