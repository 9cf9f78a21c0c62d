class H06_crlf_endings {
    int total;

    void bump(int by) {
        total += by; // CRLF file
    }
}
