#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "qflag/irreps.hpp"
#include "qflag/serialize.hpp"

using namespace qflag;

namespace {

long weyl_oracle_su2(int s) { return s + 1; }

// dimension for N=3 from the three factor terms, written out independently
long weyl_oracle_su3(int s1, int s2) {
  return static_cast<long>((s1 + 1)) * (s2 + 1) * (s1 + s2 + 2) / 2;
}

}  // namespace

TEST_CASE("classical dimension formula") {
  CHECK(weyl_dimension(2, {0}) == 1);
  for (int s = 0; s <= 6; ++s) CHECK(weyl_dimension(2, {s}) == weyl_oracle_su2(s));
  CHECK(weyl_dimension(3, {1, 1}) == 8);
  for (int s1 = 0; s1 <= 3; ++s1)
    for (int s2 = 0; s2 <= 3; ++s2) CHECK(weyl_dimension(3, {s1, s2}) == weyl_oracle_su3(s1, s2));
  CHECK(weyl_dimension(4, {1, 0, 0}) == 4);
  CHECK(weyl_dimension(4, {0, 1, 0}) == 6);
  CHECK_THROWS(weyl_dimension(2, {-1}));
}

TEST_CASE("two-dimensional module at sigma = 1") {
  Representation rep = build_irrep(2, SigmaParams{{1}});
  REQUIRE(rep.dimension() == 2);
  CHECK(rep.basis[0] == AlgebraElement::unit());
  CHECK(rep.basis[1] == AlgebraElement::generator(2, Kind::ahol, 1, 2));

  const ScalarMatrix& xp = rep.matrix(UGen{UKindTag::XPlus, 1});
  const ScalarMatrix& xm = rep.matrix(UGen{UKindTag::XMinus, 1});
  const ScalarMatrix& k = rep.matrix(UGen{UKindTag::KPlus, 1});
  // raising maps the unit onto -q^-1 zs[1,2]; lowering sends it back with -q
  CHECK(xp(1, 0) == -Laurent::q(-1));
  CHECK(xp(0, 0).is_zero());
  CHECK(xp(0, 1).is_zero());
  CHECK(xp(1, 1).is_zero());
  CHECK(xm(0, 1) == -Laurent::q(1));
  CHECK(xm(1, 1).is_zero());
  CHECK(k(0, 0) == Laurent::v(-1));
  CHECK(k(1, 1) == Laurent::v(1));
  // commutator identity as 2x2 matrices
  ScalarMatrix comm = xp * xm - xm * xp;
  ScalarMatrix cartan = k * k - rep.matrix(UGen{UKindTag::KMinus, 1}) * rep.matrix(UGen{UKindTag::KMinus, 1});
  CHECK(q_gamma() * comm == cartan);
  CHECK(rep.weights[0].w == std::vector<int>{-1});
  CHECK(rep.weights[1].w == std::vector<int>{1});
}

TEST_CASE("trivial module at sigma = 0") {
  Representation rep = build_irrep(2, SigmaParams{{0}});
  REQUIRE(rep.dimension() == 1);
  CHECK(rep.matrix(UGen{UKindTag::XPlus, 1}).is_zero());
  CHECK(rep.matrix(UGen{UKindTag::XMinus, 1}).is_zero());
  CHECK(rep.matrix(UGen{UKindTag::KPlus, 1}) == ScalarMatrix::identity(1, Laurent::one()));
}

TEST_CASE("su(2) string of weights") {
  Representation rep = build_irrep(2, SigmaParams{{2}});
  Report r = verify_representation(rep);
  CHECK_MESSAGE(r.all_pass(), r.text());
  REQUIRE(rep.dimension() == 3);
  std::multiset<int> got;
  for (const auto& w : rep.weights) got.insert(w.w[0]);
  CHECK(got == std::multiset<int>{-2, 0, 2});
}

TEST_CASE("fundamental modules of su(3)") {
  Representation rep = build_irrep(3, SigmaParams{{1, 0}});
  CHECK(rep.dimension() == 3);
  Report r = verify_representation(rep);
  CHECK_MESSAGE(r.all_pass(), r.text());

  Representation rep2 = build_irrep(3, SigmaParams{{0, 1}});
  CHECK(rep2.dimension() == 3);
  CHECK(verify_representation(rep2).all_pass());
}

TEST_CASE("adjoint module of su(3)") {
  Representation rep = build_irrep(3, SigmaParams{{1, 1}});
  REQUIRE(rep.dimension() == 8);
  Report r = verify_representation(rep);
  CHECK_MESSAGE(r.all_pass(), r.text());
  int zero_mult = 0;
  for (const auto& w : rep.weights)
    if (w.w == std::vector<int>{0, 0}) ++zero_mult;
  CHECK(zero_mult == 2);
}

TEST_CASE("negative sigma and cap violations are rejected") {
  CHECK_THROWS_AS(build_irrep(2, SigmaParams{{-1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_irrep(2, SigmaParams{{3}}, 2), ClosureExceedsCap);
}

TEST_CASE("determinism and export round trip") {
  Representation a = build_irrep(2, SigmaParams{{1}});
  Representation b = build_irrep(2, SigmaParams{{1}});
  CHECK(representation_to_string(a) == representation_to_string(b));

  const std::string path = "/tmp/qflag_test_rep.json";
  export_representation(a, path);
  Representation c = import_representation(path);
  CHECK(representation_to_string(a) == representation_to_string(c));
  CHECK(c.matrix(UGen{UKindTag::XPlus, 1})(1, 0) == -Laurent::q(-1));
  std::remove(path.c_str());

  // writing twice produces byte-identical files
  export_representation(a, path);
  Representation d = import_representation(path);
  CHECK(representation_to_string(c) == representation_to_string(d));
  std::remove(path.c_str());

  CHECK_THROWS(export_representation(a, "/nonexistent-dir/rep.json"));
  CHECK(!std::ifstream("/nonexistent-dir/rep.json").good());
}

TEST_CASE("import rejects inconsistent files") {
  Representation rep = build_irrep(2, SigmaParams{{1}});
  auto j = representation_to_json(rep);
  j["dimension"] = 5;
  CHECK_THROWS_AS(representation_from_json(j), std::invalid_argument);
}

TEST_CASE("empty off-diagonal data for the trivial module file") {
  Representation rep = build_irrep(2, SigmaParams{{0}});
  auto j = representation_to_json(rep);
  CHECK(j.at("dimension") == 1);
  CHECK(j.at("matrices").at("Xplus1").at(0).at(0).empty());
}
