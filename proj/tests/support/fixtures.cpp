namespace cubicay::testsupport { int placeholder_fx = 0; }
