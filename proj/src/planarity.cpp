namespace cubicay { int placeholder_planarity = 0; }
