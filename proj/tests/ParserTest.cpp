#include <gtest/gtest.h>
TEST(Placeholder, ParserTest) { SUCCEED(); }
