#include <doctest.h>

#include "qflag/action.hpp"
#include "qflag/frt.hpp"
#include "qflag/rmatrix.hpp"

using namespace qflag;

namespace {

AlgebraElement zs(int n, int s, int t) { return AlgebraElement::generator(n, Kind::ahol, s, t); }

}  // namespace

TEST_CASE("spectral parameter bookkeeping") {
  LambdaParams p = LambdaParams::from_sigma({1});
  REQUIRE(p.n() == 2);
  CHECK(p.lambda[0] == Laurent::q(2));
  CHECK(p.lambda[1] == Laurent::one());
  p.validate();

  LambdaParams p3 = LambdaParams::from_sigma({1, 1});
  CHECK(p3.lambda[0] == Laurent::q(4));
  CHECK(p3.lambda[1] == Laurent::q(2));
  CHECK(p3.lambda[2] == Laurent::one());

  LambdaParams dup;
  dup.lambda = {Laurent::one(), Laurent::one()};
  CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
}

TEST_CASE("prefix matrices: conventions and the series oracle") {
  for (int n = 2; n <= 3; ++n) {
    CHECK(build_X12(n, 0).is_zero());
    CHECK(build_X12(n, n) == alg_identity(n * n));
    for (int m = 0; m <= n; ++m) CHECK(build_X12(n, m) == build_X12_series(n, m));
  }
}

TEST_CASE("action on the unit") {
  // N=2, sigma=(1): diagonal carries the spectral parameters, the corner the
  // weighted generator
  FrtState st(2, LambdaParams::from_sigma({1}));
  AlgMatrix mu = st.m_dot(AlgebraElement::unit());
  CHECK(mu(0, 0) == AlgebraElement::scalar(Laurent::q(2)));
  CHECK(mu(1, 1) == AlgebraElement::unit());
  CHECK(mu(1, 0) == (Laurent::q(2) - Laurent::one()) * zs(2, 1, 2));
  // the holomorphic half dies on the unit; its mirror is recovered by adjoint
  CHECK(mu(0, 1).is_zero());
  CHECK(mu(1, 0).adjoint() ==
        (Laurent::q(2) - Laurent::one()) * AlgebraElement::generator(2, Kind::hol, 1, 2));

  // full matrix equals the telescoped idempotent sum, any N and lambda
  FrtState st3(3, LambdaParams::from_sigma({2, 1}));
  AlgMatrix mu3 = st3.m_dot(AlgebraElement::unit());
  AlgMatrix expect(3, 3);
  const auto& lam = st3.lambda().lambda;
  for (int m = 1; m <= 3; ++m) {
    Laurent c = lam[m - 1] - (m == 3 ? Laurent::zero() : lam[m]);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!st3.idempotent(m)(i, j).is_zero()) expect(i, j) += c * st3.idempotent(m)(i, j);
  }
  CHECK(mu3 == expect);
  // corner entry: both nontrivial blocks contribute
  AlgebraElement corner = (lam[0] - lam[1]) * zs(3, 1, 3) +
                          (lam[1] - lam[2]) * (zs(3, 1, 3) - zs(3, 2, 3) * zs(3, 1, 2));
  CHECK(mu3(2, 0) == corner);
  CHECK(mu3(2, 1) == (lam[1] - lam[2]) * zs(3, 2, 3));
}

TEST_CASE("recursive action reproduces the previous layer") {
  // the internal consistency asserts run on every recursion step; drive a
  // few words through explicitly
  FrtState st(2, LambdaParams::from_sigma({2}));
  AlgebraElement f = zs(2, 1, 2);
  CHECK_NOTHROW(st.m_dot(f));
  CHECK_NOTHROW(st.m_dot(f * f));
  FrtState st3(3, LambdaParams::from_sigma({1, 1}));
  CHECK_NOTHROW(st3.m_dot(zs(3, 1, 3) * zs(3, 2, 3)));
}

TEST_CASE("frt suite at N=2") {
  Report rep = verify_frt(2, LambdaParams::from_sigma({1}), 2);
  CHECK_MESSAGE(rep.all_pass(), rep.text());
  // the maximal supported reflection degree
  Report deep = verify_frt(2, LambdaParams::from_sigma({2}), 3);
  CHECK_MESSAGE(deep.all_pass(), deep.text());
}

TEST_CASE("frt suite at N=3") {
  Report rep = verify_frt(3, LambdaParams::from_sigma({1, 1}), 1);
  CHECK_MESSAGE(rep.all_pass(), rep.text());
}

TEST_CASE("bridge to the Cartan action on the unit") {
  // with lambda built from sigma, the diagonal ratios of M . 1 reproduce the
  // square of the Cartan eigenvalue on the unit
  std::vector<int> sigma{2, 1};
  const int n = 3;
  LambdaParams lam = LambdaParams::from_sigma(sigma);
  FrtState st(n, lam);
  AlgMatrix mu = st.m_dot(AlgebraElement::unit());
  SigmaParams sp{sigma};
  for (int j = 1; j < n; ++j) {
    CHECK(lam.lambda[j] == Laurent::q(-2 * sigma[j - 1]) * lam.lambda[j - 1]);
    // ratio of consecutive diagonal entries of M . 1
    Laurent num = mu(j, j).scalar_part(), den = mu(j - 1, j - 1).scalar_part();
    CHECK(num == Laurent::q(-2 * sigma[j - 1]) * den);
    // square of the Cartan eigenvalue on the unit
    AlgebraElement kk = dot_apply(UElement::gen(UKindTag::KPlus, j) *
                                      UElement::gen(UKindTag::KPlus, j),
                                  AlgebraElement::unit(), sp);
    CHECK(kk == AlgebraElement::scalar(Laurent::q(-sigma[j - 1])));
    CHECK(exact_div(num, den) == kk.scalar_part() * kk.scalar_part());
  }
}
