#include <gtest/gtest.h>
TEST(Placeholder, CliTest) { SUCCEED(); }
