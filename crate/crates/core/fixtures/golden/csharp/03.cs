public class Summer
{
    public int SumPositive(int[] xs)
    {
        int total = 0;
        foreach (int x in xs)
        {
            if (x > 0)
            {
                total += x;
            }
        }
        return total;
    }

    public int Twice(int x)
    {
        return x * 2;
    }
}
