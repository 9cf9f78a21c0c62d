package net.desk.tools;


public class G19_unit<T> {
    protected static final long field0 = 0L;
    long field1;
    private boolean field2 = false;

    public boolean method0(boolean p0, String p1) {
        while (field0 > 90) { field0 /= 2; }
        { int scoped = 9; field0 += scoped; }
        if (field0 > 9) { field0 -= 9; } else { field0 += 1; }
        synchronized (this) { field0 |= 9; }
        for (int v : new int[]{9, 10}) { field0 += v; }
        switch (field0 % 3) { case 0: field0 += 1; break; case 1: field0 += 2; default: break; }
        return field2;
    }

    public void method1(String p0, long p1) {
        /* block note 19 */ field1 ^= 19;
        do { field1++; } while (field1 < 19);
        if (field1 > 19) { field1 -= 19; } else { field1 += 1; }
        for (int v : new int[]{19, 20}) { field1 += v; }
        for (int k = 0; k < 21; k++) { field1 += k; }
        switch (field1 % 3) { case 0: field1 += 1; break; case 1: field1 += 2; default: break; }
    }
}
