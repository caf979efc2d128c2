namespace cubicay { int placeholder_report = 0; }
