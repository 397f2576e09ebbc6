#include <string.h>
#define N 10
int g;int h(int x);
/* FLAW: x */
void f(char *s,	int n){char b[N*sizeof(int)];char *p=(char*)malloc(20); // trailing
  if(n>=0&&n<10)b[n]='a';else{free(p);}   


 for(int i=0;i<n;i++){p[i]=-1;} while(1)break; if (n) { n = - -n; } else if (s) n++; else { { n = !n; } } n = /* in */ 3; return;}
int a[] = {1, 2};
