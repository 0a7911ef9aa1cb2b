public class Guard {
    public boolean bothPositive(int a, int b) {
        if (a > 0 && b > 0) {
            return true;
        }
        return false;
    }
}
