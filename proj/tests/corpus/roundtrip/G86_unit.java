// fixture 86

public class G86_unit<K, V extends Comparable<V>> {
    int field0 = 0;
    static long field1 = 0L;
    private int field2 = 0;

    public int method0(long p0, int p1) {
        int local6 = 6 * 3;
        long wide6 = 6L << 4;
        /* block note 6 */ field0 ^= 6;
        return field0;
    }

    long method1(int p0, long p1, boolean p2) {
        if (field1 > 16) { field1 -= 16; } else { field1 += 1; }
        synchronized (this) { field1 |= 16; }
        int[] xs16 = new int[17];
        for (int v : new int[]{16, 17}) { field1 += v; }
        { int scoped = 16; field1 += scoped; }
        String tag16 = "item-16" + '/' + 16;
        return field1;
    }
}
