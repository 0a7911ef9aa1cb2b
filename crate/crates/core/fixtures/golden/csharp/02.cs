public class Guard
{
    public bool BothPositive(int a, int b)
    {
        if (a > 0 && b > 0)
        {
            return true;
        }
        return false;
    }
}
