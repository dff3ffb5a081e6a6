#include <doctest.h>

#include <random>

#include "slp/algebra.hpp"

using slp::DenseMatrix;
using slp::FieldSpec;
using slp::GradedAlgebra;
using slp::MonicExtensionPoly;
using slp::Scalar;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Hilbert function of a tower with relation degrees d_i: prod (1 + t + ... + t^{d_i-1}).
std::vector<std::size_t> tower_hilbert_oracle(const std::vector<int>& degrees) {
  std::vector<std::size_t> h{1};
  for (int d : degrees) h = convolve(h, std::vector<std::size_t>(static_cast<std::size_t>(d), 1));
  return h;
}

GradedAlgebra xy_squares(const FieldSpec& f) { return slp::monomial_complete_intersection(f, {2, 2}); }

// K[u]/(u^3), then x^2 + u x + u^2, then y^2 + x y - 2 u^2.
GradedAlgebra twisted_tower(const FieldSpec& f) {
  auto a = slp::monomial_complete_intersection(f, {3});
  MonicExtensionPoly fx{2, {a.variable(0), a.power(a.variable(0), 2)}};
  auto b = slp::extend_monic(a, fx, "x");
  const auto u = b.variable(0);
  const auto x = b.variable(1);
  MonicExtensionPoly fy{2, {x, Scalar::from_int(f, -2) * b.power(u, 2)}};
  return slp::extend_monic(b, fy, "y");
}

}  // namespace

TEST_CASE("trivial algebra") {
  for (const auto& f : {QQ, FieldSpec::prime(7)}) {
    const auto k = slp::trivial_algebra(f);
    CHECK(k.hilbert_function() == std::vector<std::size_t>{1});
    CHECK(k.socle_degree() == 0);
    CHECK(k.multiplicity() == 1);
    CHECK(k.socle().is_gorenstein);
  }
}

TEST_CASE("monic extensions") {
  auto k = slp::trivial_algebra(QQ);
  const auto a = slp::extend_monic(k, MonicExtensionPoly::pure_power(k, 3));
  CHECK(a.hilbert_function() == std::vector<std::size_t>{1, 1, 1});

  const auto b = slp::monomial_complete_intersection(QQ, {2, 3});
  CHECK(b.hilbert_function() == convolve({1, 1}, {1, 1, 1}));
  CHECK(b.hilbert_function() == std::vector<std::size_t>{1, 2, 2, 1});

  const auto big = slp::monomial_complete_intersection(FieldSpec::prime(32003), {4, 4, 4, 4, 2});
  CHECK(big.multiplicity() == 512);
  CHECK(big.socle_degree() == 13);
  CHECK(big.dim(1) == 5);
  CHECK(big.hilbert_function() == tower_hilbert_oracle({4, 4, 4, 4, 2}));
  CHECK(big.hilbert_function() ==
        std::vector<std::size_t>{1, 5, 14, 30, 51, 71, 84, 84, 71, 51, 30, 14, 5, 1});

  MonicExtensionPoly bad{2, {k.zero(1), k.zero(1)}};
  CHECK_THROWS_AS(slp::extend_monic(k, bad), std::invalid_argument);
  MonicExtensionPoly short_poly{2, {k.zero(1)}};
  CHECK_THROWS_AS(slp::extend_monic(k, short_poly), std::invalid_argument);
}

TEST_CASE("tower dimensions match the Hilbert series product") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = slp::trivial_algebra(trial % 2 == 0 ? QQ : FieldSpec::prime(101));
    std::vector<int> degrees;
    const int depth = 1 + static_cast<int>(rng() % 4);
    std::size_t e = 1;
    for (int k = 0; k < depth; ++k) {
      const int d = 1 + static_cast<int>(rng() % 5);
      if (e * static_cast<std::size_t>(d) > 1000) break;
      e *= static_cast<std::size_t>(d);
      a = slp::extend_monic(a, slp::random_monic(a, d, rng));
      degrees.push_back(d);
    }
    CHECK(a.hilbert_function() == tower_hilbert_oracle(degrees));
    CHECK(a.multiplicity() == e);
  }
}

TEST_CASE("multiplication") {
  const auto a = xy_squares(QQ);
  const auto x = a.variable(0);
  const auto y = a.variable(1);
  const auto s = x + y;
  CHECK(a.multiply(s, s) == Scalar::from_int(QQ, 2) * a.multiply(x, y));
  CHECK(a.format(a.multiply(s, s)) == "2*x1*x2");
  CHECK(a.multiply(x, x).is_zero());

  const auto c = slp::monomial_complete_intersection(QQ, {3});
  const auto t = c.variable(0);
  const auto prod = c.multiply(t, c.power(t, 2));
  CHECK(prod.degree() == 3);
  CHECK(prod.coeffs().empty());
  CHECK(prod.is_zero());

  const auto g = xy_squares(FieldSpec::prime(2));
  const auto sg = g.variable(0) + g.variable(1);
  CHECK(g.multiply(sg, sg).is_zero());

  CHECK_THROWS_AS(a.multiply(x, c.variable(0)), std::invalid_argument);
}

TEST_CASE("tower relations hold and multiplication is a commutative ring product") {
  for (const auto& f : {QQ, FieldSpec::prime(5)}) {
    const auto a = twisted_tower(f);
    const auto u = a.variable(0);
    const auto x = a.variable(1);
    const auto y = a.variable(2);
    CHECK(a.power(u, 3).is_zero());
    CHECK((a.power(x, 2) + a.multiply(u, x) + a.power(u, 2)).is_zero());
    CHECK((a.power(y, 2) + a.multiply(x, y) - Scalar::from_int(f, 2) * a.power(u, 2)).is_zero());
    CHECK(a.hilbert_function() == std::vector<std::size_t>{1, 3, 4, 3, 1});

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
      const int d1 = static_cast<int>(rng() % 3);
      const int d2 = static_cast<int>(rng() % 3);
      const int d3 = static_cast<int>(rng() % 3);
      const auto p = slp::random_homogeneous(a, d1, rng);
      const auto q = slp::random_homogeneous(a, d2, rng);
      const auto r = slp::random_homogeneous(a, d3, rng);
      CHECK(a.multiply(p, q) == a.multiply(q, p));
      CHECK(a.multiply(a.multiply(p, q), r) == a.multiply(p, a.multiply(q, r)));
      if (d2 == d3) CHECK(a.multiply(p, q + r) == a.multiply(p, q) + a.multiply(p, r));
    }
  }
}

TEST_CASE("multiplication map matrices") {
  const auto a = xy_squares(QQ);
  const auto w = a.variable(0) + a.variable(1);
  const auto m = a.mult_map_matrix(w, 1);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 2);
  CHECK(m == DenseMatrix::from_ints(QQ, {{1, 1}}));
  CHECK(slp::rank(m) == 1);

  const auto c = slp::monomial_complete_intersection(QQ, {3});
  CHECK(c.mult_map_matrix(c.variable(0), 0) == DenseMatrix::identity(QQ, 1));
  const auto z = a.mult_map_matrix(a.zero(1), 0);
  CHECK(z.rows() == 2);
  CHECK(z.is_zero());
  CHECK(a.mult_map_matrix(w, 2).empty());
}

TEST_CASE("powers compose as matrix products") {
  const auto a = twisted_tower(QQ);
  std::mt19937_64 rng(4);
  const auto w = slp::random_homogeneous(a, 1, rng);
  for (int r = 1; r <= 4; ++r) {
    for (int i = 0; i <= a.socle_degree(); ++i) {
      DenseMatrix composed = DenseMatrix::identity(QQ, a.dim(i));
      for (int step = 0; step < r; ++step) composed = a.mult_map_matrix(w, i + step) * composed;
      CHECK(a.mult_map_matrix(a.power(w, r), i) == composed);
    }
  }
}

TEST_CASE("quotients by forms") {
  const auto a = xy_squares(QQ);
  const auto b = slp::quotient_by_form(a, a.multiply(a.variable(0), a.variable(1)));
  CHECK(b.hilbert_function() == std::vector<std::size_t>{1, 2});
  CHECK(!b.is_pure_tower());

  const auto c = slp::monomial_complete_intersection(QQ, {4});
  const auto d = slp::quotient_by_form(c, c.power(c.variable(0), 2));
  CHECK(d.hilbert_function() == std::vector<std::size_t>{1, 1});

  CHECK_THROWS_AS(slp::quotient_by_form(a, a.zero(2)), std::invalid_argument);
  CHECK_THROWS_AS(slp::quotient_by_form(a, a.one()), std::invalid_argument);
}

TEST_CASE("quotient dimension formula and projection/section") {
  std::mt19937_64 rng(17);
  for (const auto& f : {QQ, FieldSpec::prime(31)}) {
    const auto a = twisted_tower(f);
    for (int deg = 1; deg <= 3; ++deg) {
      const auto g = slp::random_homogeneous(a, deg, rng);
      if (g.is_zero()) continue;
      const auto b = slp::quotient_by_form(a, g);
      for (int t = 0; t <= a.socle_degree(); ++t) {
        CHECK(b.dim(t) + slp::rank(a.mult_map_matrix(g, t - deg)) == a.dim(t));
        if (b.dim(t) > 0) CHECK(b.projection(t) * b.section(t) == DenseMatrix::identity(f, b.dim(t)));
      }
      // A second form, applied on top of the first.
      const auto h = slp::random_homogeneous(b, 1, rng);
      if (h.is_zero()) continue;
      const auto c = slp::quotient_by_form(b, h);
      for (int t = 0; t <= b.socle_degree(); ++t) {
        CHECK(c.dim(t) + slp::rank(b.mult_map_matrix(h, t - 1)) == b.dim(t));
        if (c.dim(t) > 0) CHECK(c.projection(t) * c.section(t) == DenseMatrix::identity(f, c.dim(t)));
      }
      // Ring structure survives the quotient.
      const auto p = slp::random_homogeneous(c, 1, rng);
      const auto q = slp::random_homogeneous(c, 1, rng);
      CHECK(c.multiply(p, q) == c.multiply(q, p));
      CHECK(c.multiply(c.multiply(p, q), p) == c.multiply(p, c.multiply(q, p)));
    }
  }
}

TEST_CASE("extension of a quotient keeps the quotient relations") {
  const auto a = xy_squares(QQ);
  const auto b = slp::quotient_by_form(a, a.multiply(a.variable(0), a.variable(1)));
  const auto c = slp::extend_monic(b, MonicExtensionPoly::pure_power(b, 2), "z");
  CHECK(c.hilbert_function() == convolve({1, 2}, {1, 1}));
  CHECK(c.multiply(c.variable(0), c.variable(1)).is_zero());
  CHECK(!c.multiply(c.variable(0), c.variable(2)).is_zero());
}

TEST_CASE("Hilbert functions and socles") {
  const auto a = xy_squares(QQ);
  CHECK(a.hilbert_function() == std::vector<std::size_t>{1, 2, 1});
  const auto s = a.socle();
  CHECK(s.dims == std::vector<std::size_t>{0, 0, 1});
  CHECK(s.is_gorenstein);

  const auto b = slp::quotient_by_form(a, a.multiply(a.variable(0), a.variable(1)));
  const auto sb = b.socle();
  CHECK(sb.dims == std::vector<std::size_t>{0, 2});
  CHECK(!sb.is_gorenstein);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto t = slp::trivial_algebra(QQ);
    for (int k = 0; k < 3; ++k) t = slp::extend_monic(t, slp::random_monic(t, 1 + static_cast<int>(rng() % 3), rng));
    CHECK(t.socle().is_gorenstein);
    const auto flags = slp::check_symmetric_unimodal(t.hilbert_function());
    CHECK(flags.symmetric);
    CHECK(flags.unimodal);
  }
}

TEST_CASE("random forms") {
  const auto a = slp::monomial_complete_intersection(FieldSpec::prime(32003), {4, 4, 4, 4, 2});
  std::mt19937_64 r1(42);
  std::mt19937_64 r2(42);
  CHECK(slp::random_homogeneous(a, 3, r1) == slp::random_homogeneous(a, 3, r2));
  CHECK(slp::random_homogeneous(a, 1, r1).coeffs().size() == 5);
  CHECK_THROWS_AS(slp::random_homogeneous(a, 14, r1), std::invalid_argument);

  std::mt19937_64 r3(1);
  const auto q = slp::random_homogeneous(xy_squares(QQ), 1, r3);
  for (const auto& c : q.coeffs()) {
    CHECK(c.as_rational() >= -10);
    CHECK(c.as_rational() <= 10);
  }
}

TEST_CASE("symmetry and unimodality flags") {
  auto f = slp::check_symmetric_unimodal({1, 2, 1});
  CHECK(f.symmetric);
  CHECK(f.unimodal);
  f = slp::check_symmetric_unimodal({1, 5, 14, 30, 51, 71, 84, 84, 70, 46, 16});
  CHECK(!f.symmetric);
  CHECK(f.unimodal);
  f = slp::check_symmetric_unimodal({1, 3, 2, 3, 1});
  CHECK(f.symmetric);
  CHECK(!f.unimodal);
}

TEST_CASE("fingerprints and basis labels") {
  const auto a = xy_squares(QQ);
  const auto b = xy_squares(QQ);
  CHECK(a.fingerprint() == b.fingerprint());
  CHECK(a.id() != b.id());
  CHECK(a.fingerprint() != xy_squares(FieldSpec::prime(3)).fingerprint());
  const auto basis = a.basis(1);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].to_string(a.variable_names()) == "x1");
  CHECK(a.basis_index(basis[1]) == 1);
  CHECK(a.basis_index(slp::Monomial{{2, 0}}) == -1);
}
