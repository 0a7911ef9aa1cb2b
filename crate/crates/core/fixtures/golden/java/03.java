public class Summer {
    public int sumPositive(int[] xs) {
        int total = 0;
        for (int x : xs) {
            if (x > 0) {
                total += x;
            }
        }
        return total;
    }

    public int twice(int x) {
        return x * 2;
    }
}
