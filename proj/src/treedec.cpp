namespace cubicay { int placeholder_treedec = 0; }
