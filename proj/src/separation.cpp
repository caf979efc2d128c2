namespace cubicay { int placeholder_separation = 0; }
