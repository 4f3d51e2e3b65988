#include <gtest/gtest.h>
TEST(Placeholder, ChcSystemTest) { SUCCEED(); }
