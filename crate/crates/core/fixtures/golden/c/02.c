int clamp_positive(int a, int b) {
    if (a > 0 && b > 0) {
        return a + b;
    }
    return 0;
}
