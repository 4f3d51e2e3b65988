#include <gtest/gtest.h>
TEST(Placeholder, DomainTest) { SUCCEED(); }
