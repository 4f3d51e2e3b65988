#include <gtest/gtest.h>
TEST(Placeholder, BoundedTest) { SUCCEED(); }
