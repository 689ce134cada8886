#include "doctest.h"
#include "virw/linalg.hpp"

using namespace virw;

TEST_CASE("exact rank over the complex rationals") {
  Scalar i = Scalar::i();
  std::vector<Row> rows = {
      {Scalar(1), i},
      {i, Scalar(-1)},          // i * first row: dependent
      {Scalar(0), Scalar(1)},
  };
  CHECK(exact_rank(rows, 2) == 2);
  CHECK(exact_rank({}, 2) == 0);
  CHECK(exact_rank({{Scalar(0), Scalar(0)}}, 2) == 0);
}

TEST_CASE("span tracker membership") {
  SpanTracker t(3);
  CHECK(t.insert({Scalar(1), Scalar(2), Scalar(3)}));
  CHECK(t.insert({Scalar(0), Scalar(1), Scalar(1)}));
  CHECK(!t.insert({Scalar(1), Scalar(3), Scalar(4)}));  // sum of the first two
  CHECK(t.rank() == 2);
  CHECK(t.contains({Scalar(2), Scalar(5), Scalar(7)}));
  CHECK(!t.contains({Scalar(0), Scalar(0), Scalar(1)}));
  // Fractions reduce exactly.
  CHECK(t.contains({Rational(1, 2), Scalar(1), Rational(3, 2)}));
}
