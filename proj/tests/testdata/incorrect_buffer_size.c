#include <string.h>

void incorrect_buffer_size_bad(void)
{
    /* FLAW: the buffer holds 10 bytes, not 10 ints */
    char data[10];
    /* FLAW: writes 10*sizeof(int) bytes */
    memset(data, 'C', 10 * sizeof(int));
}
