#include <gtest/gtest.h>
TEST(Placeholder, CfaTest) { SUCCEED(); }
