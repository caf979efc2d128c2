namespace cubicay { int placeholder_classify = 0; }
