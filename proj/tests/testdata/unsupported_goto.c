int f(int x)
{
    if (x < 0)
        goto out;
    x = x + 1;
out:
    return x;
}
