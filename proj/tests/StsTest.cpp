#include <gtest/gtest.h>
TEST(Placeholder, StsTest) { SUCCEED(); }
