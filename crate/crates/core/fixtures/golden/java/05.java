public class Retry {
    private int limit;

    public Retry(int limit) {
        this.limit = limit;
    }

    public int run(int n) {
        int tries = 0;
        while (tries < limit) {
            try {
                if (n < 0 || tries > 2) {
                    return -1;
                }
                return tries;
            } catch (RuntimeException e) {
                tries++;
            }
        }
        return tries;
    }
}
