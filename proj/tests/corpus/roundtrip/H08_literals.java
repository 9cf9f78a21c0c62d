class H08_literals {
    int dec = 1_000_000;
    int hex = 0xDEAD_BEEF;
    int bin = 0b1010_0101;
    int oct = 0777;
    long big = 9_223_372_036_854_775_807L;
    long hexLong = 0xCAFEL;
    float f1 = 1.5f;
    float f2 = .5F;
    double d1 = 2.0e-3;
    double d2 = 1e10;
    double d3 = 0x1.8p3;
    char tab = '\t';
    char quote = '\'';
    char uni = 'é';
    char octEsc = '\101';
    String s = "line\nbreak \"quoted\" back\\slash ü";
    boolean[] flags = {true, false, true};
    Object nothing = null;
}
