# (e,f) (a,d) (b,e) (a,g) (b,c) (a,b)
4 5
0 3
1 4
0 6
1 2
0 1
