template <typename T>
T largest(const T *xs, int n) {
    T best = xs[0];
    for (int i = 1; i < n; i++) {
        if (xs[i] > best) {
            best = xs[i];
        }
    }
    return best;
}

bool both_positive(int a, int b) {
    return a > 0 && b > 0;
}
