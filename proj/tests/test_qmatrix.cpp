#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "green/qmatrix.hpp"

using namespace green;

namespace {

QMat from_longs(const CycField& F, int r, int c, std::vector<long> v) {
  QMat M(F, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M.at(i, j) = F.from_long(v[i * c + j]);
  return M;
}

}  // namespace

TEST_CASE("kernel and rank") {
  CycField F(3);
  QMat A = from_longs(F, 2, 3, {1, 2, 3, 2, 4, 6});  // rank 1
  CHECK(A.rank() == 1);
  QMat K = A.kernel();
  CHECK(K.cols() == 2);
  CHECK((A * K).is_zero());
}

TEST_CASE("inverse and solve") {
  CycField F(4);
  QMat A = from_longs(F, 2, 2, {1, 1, 0, 1});
  A.at(0, 1) = F.q();  // [[1, q], [0, 1]]
  auto Ai = A.inverse();
  REQUIRE(Ai.has_value());
  CHECK((A * *Ai).is_identity());
  QMat B = from_longs(F, 2, 1, {3, 5});
  auto X = A.solve(B);
  REQUIRE(X.has_value());
  CHECK((A * *X) == B);
}

TEST_CASE("inconsistent solve returns nullopt") {
  CycField F(3);
  QMat A = from_longs(F, 2, 1, {1, 2});
  QMat B = from_longs(F, 2, 1, {1, 3});
  CHECK(!A.solve(B).has_value());
}

TEST_CASE("stacking and independent columns") {
  CycField F(3);
  QMat A = from_longs(F, 2, 2, {1, 2, 0, 0});
  QMat B = from_longs(F, 2, 1, {0, 1});
  QMat H = QMat::hstack(A, B);
  CHECK(H.cols() == 3);
  auto idx = H.independent_cols();
  CHECK((int)idx.size() == 2);
  CHECK(H.cols_subset(idx).rank() == 2);
  QMat V = QMat::vstack(A, A);
  CHECK(V.rows() == 4);
  CHECK(V.rank() == 1);
}

TEST_CASE("matrix power") {
  CycField F(3);
  QMat N = from_longs(F, 2, 2, {0, 1, 0, 0});
  CHECK(N.pow(2).is_zero());
  CHECK(N.pow(0).is_identity());
}
