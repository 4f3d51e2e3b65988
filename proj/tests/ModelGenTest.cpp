#include <gtest/gtest.h>
TEST(Placeholder, ModelGenTest) { SUCCEED(); }
