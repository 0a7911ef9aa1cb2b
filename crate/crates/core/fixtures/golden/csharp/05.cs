public class Retry
{
    public int Run(int attempts)
    {
        int tries = 0;
        while (tries < attempts)
        {
            try
            {
                return tries == 0 || attempts < 0 ? -1 : tries;
            }
            catch (System.Exception)
            {
                tries++;
            }
        }
        return tries;
    }
}
