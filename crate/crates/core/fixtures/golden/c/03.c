int sum_evens(const int *xs, int n) {
    int total = 0;
    for (int i = 0; i < n; i++) {
        if (xs[i] % 2 == 0) {
            total += xs[i];
        }
    }
    return total;
}

int identity(int x) {
    return x;
}
