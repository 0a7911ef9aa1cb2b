int classify(int x) {
    switch (x % 3) {
    case 0:
        return 10;
    case 1:
        return 20;
    default:
        return x > 100 ? 1 : 0;
    }
}

int countdown(int n) {
    int steps = 0;
    while (n > 0) {
        n = n % 2 == 0 ? n / 2 : n - 1;
        steps++;
    }
    return steps;
}
