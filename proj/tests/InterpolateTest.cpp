#include <gtest/gtest.h>
TEST(Placeholder, InterpolateTest) { SUCCEED(); }
