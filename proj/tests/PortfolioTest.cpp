#include <gtest/gtest.h>
TEST(Placeholder, PortfolioTest) { SUCCEED(); }
