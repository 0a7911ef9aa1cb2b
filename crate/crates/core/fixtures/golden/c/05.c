static int parse_flag(const char *s) {
    return s && s[0] == 'y' ? 1 : 0;
}

int count_until(const int *xs, int n, int stop) {
    int i = 0;
    while (i < n) {
        if (xs[i] == stop || xs[i] < 0) {
            break;
        }
        i++;
    }
    return i;
}
