public class Labeler
{
    public string Label(int kind, string fallback)
    {
        switch (kind)
        {
            case 0:
                return "zero";
            case 1:
                return "one";
            default:
                return fallback ?? "none";
        }
    }
}
