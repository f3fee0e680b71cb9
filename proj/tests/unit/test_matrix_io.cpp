#include <gtest/gtest.h>

#include "lef/errors.hpp"
#include "lef/markings.hpp"
#include "lef/matrix_io.hpp"

using namespace lef;

TEST(MatrixIo, IdentityLayout) {
  EXPECT_EQ(write_matrices({MatFp::identity(2, 5)}), "2 5\n1 0\n0 1\n");
}

TEST(MatrixIo, RoundTrip) {
  const RingDescriptor F3 = PrimeField{3};
  RingAssignment x;
  for (const char* k : {"x1", "x2", "x3", "x4", "x5", "x6"}) x[k] = ring_one(F3);
  const auto nine = nine_marking_images(x, 3);
  const auto text = write_matrices(nine.mats);
  const auto back = read_matrices(text);
  ASSERT_EQ(back.size(), 9u);
  EXPECT_EQ(back, nine.mats);
  EXPECT_EQ(write_matrices(back), text);
  EXPECT_EQ(read_matrices(text + "\n").size(), 9u);
}

TEST(MatrixIo, Malformed) {
  EXPECT_THROW(read_matrices(""), ParseError);
  EXPECT_THROW(read_matrices("2 4\n1 0\n0 1\n"), ParseError);
  EXPECT_THROW(read_matrices("2 3\n1 0\n"), ParseError);
  EXPECT_THROW(read_matrices("2 3\n1 0\n0 3\n"), ParseError);
  EXPECT_THROW(read_matrices("2 3\n1 0\n0 1\nx\n"), ParseError);
  try {
    read_matrices("2 3\n1 0 0\n0 1\n");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}
