package net.desk.tools;

// fixture 45

public class G45_unit<K, V extends Comparable<V>> {
    private long field0 = 0L;
    long field1 = 0L;
    protected static final long field2 = 0L;

    static boolean method0(boolean p0) {
        assert field2 >= -1005 : "out of range";
        // checkpoint 5
        return field2;
    }

    static void method1() {
        synchronized (this) { field0 |= 15; }
        String tag15 = "item-15" + '/' + 15;
        if (field0 > 15) { field0 -= 15; } else { field0 += 1; }
    }

    public int method2(int p0, String p1) {
        for (int k = 0; k < 27; k++) { field1 += k; }
        synchronized (this) { field1 |= 25; }
        String tag25 = "item-25" + '/' + 25;
        try { field1 += Integer.parseInt("25"); } catch (NumberFormatException e) { field1 = 0; }
        // checkpoint 25
        do { field1++; } while (field1 < 25);
        return field0;
    }
}
