public class Labeler {
    public String label(int kind) {
        switch (kind) {
            case 0:
                return "zero";
            case 1:
                return "one";
            default:
                return kind > 10 ? "big" : "other";
        }
    }
}
