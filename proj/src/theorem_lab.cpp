#include "slp/theorem_lab.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace slp::lab {

namespace {

const FieldSpec QQ = FieldSpec::rationals();

std::size_t dim_of(const GradedAlgebra& a, int t) { return a.dim(t); }

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k == 0 ? "" : ",") << v[k];
  return os.str();
}

// Block offsets of B_t = sum_{i<k} A_{t-i} x^i.
std::vector<std::size_t> offsets(const GradedAlgebra& a, int t, int k) {
  std::vector<std::size_t> off{0};
  for (int i = 0; i < k; ++i) off.push_back(off.back() + dim_of(a, t - i));
  return off;
}

HomogeneousElement small_form(const GradedAlgebra& a, int d, std::mt19937_64& rng, long span) {
  std::uniform_int_distribution<long> dist(-span, span);
  std::vector<long> c(a.dim(d));
  for (auto& v : c) v = dist(rng);
  return a.from_ints(d, c);
}

MonicExtensionPoly small_monic(const GradedAlgebra& base, int d, std::mt19937_64& rng, long span) {
  MonicExtensionPoly f;
  f.d = d;
  for (int i = 1; i <= d; ++i) f.lower.push_back(small_form(base, i, rng, span));
  return f;
}

void stanley_rec(std::vector<int>& cur, std::size_t product, std::size_t dimcap, std::size_t max_vars,
                 std::vector<std::vector<int>>& out) {
  if (!cur.empty()) out.push_back(cur);
  if (cur.size() == max_vars) return;
  const int start = cur.empty() ? 2 : cur.back();
  for (int e = start; product * static_cast<std::size_t>(e) <= dimcap; ++e) {
    cur.push_back(e);
    stanley_rec(cur, product * static_cast<std::size_t>(e), dimcap, max_vars, out);
    cur.pop_back();
  }
}

}  // namespace

mpq_class c_coefficient(long r, long j, long k) {
  if (k < 1 || r < 0) throw std::invalid_argument("c_coefficient needs k >= 1 and r >= 0");
  if (j < 0 || j >= k) {
    throw std::invalid_argument("c_coefficient index j=" + std::to_string(j) + " outside [0, " +
                                std::to_string(k - 1) + "]");
  }
  if (r <= k - 1) return r == j ? 1 : 0;
  mpq_class v(binomial(r, k) * binomial(k - 1, j) * k, mpz_class(r - j));
  v.canonicalize();
  if ((r - k - 1) % 2 != 0) v = -v;
  return v;
}

ReductionTable power_reduction_oracle(long k, long r_max) {
  if (k < 1 || r_max < 0) throw std::invalid_argument("oracle needs k >= 1 and r_max >= 0");
  // Polynomials in the formal symbols a and x, keyed by (deg_a, deg_x).
  using Poly = std::map<std::pair<long, long>, mpq_class>;
  ReductionTable table;
  table.k = k;
  Poly cur{{{0, 0}, mpq_class(1)}};
  for (long r = 0; r <= r_max; ++r) {
    if (r > 0) {
      Poly next;
      for (const auto& [mon, c] : cur) {
        const auto [da, dx] = mon;
        if (dx + 1 < k) {
          next[{da, dx + 1}] += c;
          continue;
        }
        // x^k = -sum_{j<k} binom(k,j) a^{k-j} x^j
        for (long j = 0; j < k; ++j) next[{da + k - j, j}] -= c * mpq_class(binomial(k, j));
      }
      cur.clear();
      for (auto& [mon, c] : next)
        if (sgn(c) != 0) cur.emplace(mon, std::move(c));
    }
    std::vector<mpq_class> row(static_cast<std::size_t>(k), 0);
    for (const auto& [mon, c] : cur) {
      const auto [da, dx] = mon;
      if (dx >= k || da != r - dx) {
        throw std::logic_error("rewriting produced a term a^" + std::to_string(da) + " x^" + std::to_string(dx) +
                               " in row " + std::to_string(r));
      }
      row[static_cast<std::size_t>(dx)] = c;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

bool verify_binomial_identity(long r, long j, long k) {
  if (!(r >= k && k >= 1 && j >= 0 && j < k)) throw std::invalid_argument("binomial identity needs r >= k >= 1, 0 <= j < k");
  const mpq_class lhs(binomial(r - j - 1, r - k) * binomial(r, j));
  mpq_class rhs(binomial(r, k) * binomial(k - 1, j) * k, mpz_class(r - j));
  rhs.canonicalize();
  return lhs == rhs;
}

MonicExtensionPoly binomial_power(const GradedAlgebra& a, const HomogeneousElement& elem, int k) {
  if (elem.degree() != 1) throw std::invalid_argument("binomial_power needs a degree-1 element");
  MonicExtensionPoly f;
  f.d = k;
  auto p = a.one();
  for (int i = 1; i <= k; ++i) {
    p = a.multiply(p, elem);
    f.lower.push_back(Scalar::from_mpz(a.field(), binomial(k, i)) * p);
  }
  return f;
}

DenseMatrix build_block_matrix(const GradedAlgebra& a, const HomogeneousElement& elem, int k, int q, int t) {
  a.check_owns(elem);
  if (elem.degree() != 1) throw std::invalid_argument("block matrix needs a degree-1 element");
  if (k < 1 || q < 1 || t < 0) throw std::invalid_argument("block matrix needs k, q >= 1 and t >= 0");
  const auto cols = offsets(a, t, k);
  const auto rows = offsets(a, t + q, k);
  std::vector<HomogeneousElement> powers{a.one()};
  for (int m = 1; m < q + k; ++m) powers.push_back(a.multiply(powers.back(), elem));

  DenseMatrix m(a.field(), rows.back(), cols.back());
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) {
      const auto c = c_coefficient(q + i, j, k);
      const int exponent = q + i - j;
      if (sgn(c) == 0 || exponent < 0) continue;
      const auto block = a.mult_map_matrix(powers[static_cast<std::size_t>(exponent)], t - i);
      m.set_block(rows[static_cast<std::size_t>(j)], cols[static_cast<std::size_t>(i)], to_field(a.field(), c) * block);
    }
  }
  return m;
}

DenseMatrix build_reduced_block_matrix(const GradedAlgebra& a, const HomogeneousElement& elem, int k, int q, int t) {
  const auto m = build_block_matrix(a, elem, k, q, t);
  const int s = std::min(q, k);
  const int r = std::max(q, k);
  const auto cols = offsets(a, t, k);
  const auto rows = offsets(a, t + q, k);
  const auto c0 = cols[static_cast<std::size_t>(r - q)];
  return m.submatrix(0, c0, rows[static_cast<std::size_t>(s)], cols.back() - c0);
}

BlockMatrixCheck check_block_matrix(const GradedAlgebra& a, const HomogeneousElement& elem, int k, int q, int t) {
  if (!a.is_pure_tower()) throw std::invalid_argument("block matrix check needs a pure tower");
  BlockMatrixCheck out;
  const auto m = build_block_matrix(a, elem, k, q, t);
  const auto b = extend_monic(a, binomial_power(a, elem, k), "z");
  const auto x = b.variable(b.num_variables() - 1);
  const auto direct = b.mult_map_matrix(b.power(x, q), t);

  out.rank_block = rank(m);
  out.rank_direct = rank(direct);
  out.rank_reduced = rank(build_reduced_block_matrix(a, elem, k, q, t));
  for (int i = 0; i + q < k; ++i) out.identity_size += dim_of(a, t - i);

  // Reorder the basis of B into the block layout A_{t-i} x^i.
  const auto place = [&](int degree) {
    const auto off = offsets(a, degree, k);
    std::vector<std::size_t> pos;
    for (const auto& mon : b.basis(degree)) {
      const int i = mon.exponents.back();
      Monomial base{std::vector<int>(mon.exponents.begin(), mon.exponents.end() - 1)};
      pos.push_back(off[static_cast<std::size_t>(i)] + static_cast<std::size_t>(a.basis_index(base)));
    }
    return pos;
  };
  out.entries_match = direct.rows() == m.rows() && direct.cols() == m.cols();
  if (out.entries_match) {
    const auto rp = place(t + q);
    const auto cp = place(t);
    for (std::size_t r = 0; r < direct.rows() && out.entries_match; ++r)
      for (std::size_t c = 0; c < direct.cols(); ++c) {
        if (!(direct(r, c) == m(rp[r], cp[c]))) {
          out.entries_match = false;
          break;
        }
      }
  }
  return out;
}

CoefficientMatrices coefficient_matrix_L(int q, int k) {
  if (q < 1 || k < 1) throw std::invalid_argument("coefficient matrix needs q, k >= 1");
  const int s = std::min(q, k);
  const int r = std::max(q, k);
  CoefficientMatrices out{DenseMatrix(QQ, s, s), DenseMatrix(QQ, s, s)};
  for (int i = 0; i < s; ++i) {
    for (int jj = 0; jj < s; ++jj) {
      const long j = r - q + jj;
      const auto c = c_coefficient(q + j, i, k);
      mpq_class col_div(binomial(q + j, k) * k);
      if ((q + j - k - 1) % 2 != 0) col_div = -col_div;
      const mpq_class row_div(binomial(k - 1, i));
      out.raw(i, jj) = Scalar::rational(c);
      out.normalized(i, jj) = Scalar::rational(c / col_div / row_div);
    }
  }
  return out;
}

DenseMatrix s_matrix(long r, long t) {
  if (!(t >= 0 && r > t)) throw std::invalid_argument("S matrix needs r > t >= 0");
  DenseMatrix s(QQ, static_cast<std::size_t>(t + 1), static_cast<std::size_t>(t + 1));
  for (long i = 0; i <= t; ++i)
    for (long j = 0; j <= t; ++j) s(i, j) = Scalar::from_ratio(QQ, 1, r - i + j);
  return s;
}

SMatrixResult s_matrix_nonsingular(long r, long t) {
  const auto s = s_matrix(r, t);
  std::vector<Scalar> u;
  std::vector<Scalar> v;
  for (long i = 0; i <= t; ++i) {
    u.push_back(Scalar::from_int(QQ, r - i));
    v.push_back(Scalar::from_int(QQ, i));
  }
  SMatrixResult out{false, determinant(s), cauchy_determinant(u, v)};
  out.nonsingular = !out.det_elimination.is_zero();
  return out;
}

DualityResult verify_duality_instance(const GradedAlgebra& a, const MonicExtensionPoly& f, const HomogeneousElement& elem) {
  a.check_owns(elem);
  DualityResult out;
  out.lhs = is_lefschetz(a, a.evaluate(f, elem)).ok;
  const auto b = extend_monic(a, f, "z");
  const auto g = b.embed(a, elem) - b.variable(b.num_variables() - 1);
  out.rhs = is_lefschetz(b, g).ok;
  return out;
}

ScalingResult find_scaling(const GradedAlgebra& a, const HomogeneousElement& l, const MonicExtensionPoly& f) {
  if (!is_strong_lefschetz(a, l).ok) throw std::invalid_argument("find_scaling needs a strong Lefschetz element");
  std::size_t limit = a.multiplicity() + 1;
  if (a.field().is_prime()) limit = std::min<std::size_t>(limit, a.field().characteristic() - 1);
  for (std::size_t n = 1; n <= limit; ++n) {
    const auto c = Scalar::from_int(a.field(), static_cast<long>(n));
    MonicExtensionPoly fc{f.d, {}};
    for (int i = 1; i <= f.d; ++i) fc.lower.push_back(c.pow(static_cast<unsigned long>(i)) * f.lower[static_cast<std::size_t>(i - 1)]);
    const auto value = a.evaluate(fc, l);
    const auto scaled = c.pow(static_cast<unsigned long>(f.d)) * a.evaluate(f, c.inv() * l);
    if (!(scaled == value)) throw std::logic_error("f(l/c) * c^d differs from f_c(l)");
    auto check = is_lefschetz(a, value);
    if (check.ok) return ScalingResult{c, n, std::move(check.profiles.front())};
  }
  throw std::runtime_error("scaling search failed after " + std::to_string(limit) + " candidates");
}

long char_bound(long q, long sigma, long e, bool f_is_pure_power) {
  const long base = 2 * q + sigma - 1;
  return f_is_pure_power ? base : std::max(e, base);
}

std::string to_string(MapClass c) {
  switch (c) {
    case MapClass::injective:
      return "injective";
    case MapClass::surjective:
      return "surjective";
    case MapClass::both:
      return "both";
  }
  return "unknown";
}

MapClass classify_injective_surjective(const GradedAlgebra& a, const HomogeneousElement& l, int i, int j) {
  if (!(0 <= i && i < j)) throw std::invalid_argument("classification needs 0 <= i < j");
  const int sigma = a.socle_degree();
  const auto predicted = i < sigma - j ? MapClass::injective : (i > sigma - j ? MapClass::surjective : MapClass::both);
  const auto src = a.dim(i);
  const auto tgt = a.dim(j);
  const auto r = (src == 0 || tgt == 0) ? std::size_t{0} : rank(a.mult_map_matrix(a.power(l, j - i), i));
  const bool inj = r == src;
  const bool surj = r == tgt;
  const bool holds = predicted == MapClass::injective ? inj : (predicted == MapClass::surjective ? surj : inj && surj);
  if (!holds) {
    throw ClassificationMismatch("l^" + std::to_string(j - i) + ": A_" + std::to_string(i) + " -> A_" +
                                 std::to_string(j) + " predicted " + to_string(predicted) + " but rank is " +
                                 std::to_string(r) + " (dims " + std::to_string(src) + ", " + std::to_string(tgt) + ")");
  }
  return predicted;
}

bool antidiagonal_maps_uniform(const GradedAlgebra& a, const HomogeneousElement& l, int q, int k, int t) {
  const int s = std::min(q, k);
  const int r = std::max(q, k);
  bool all_inj = true;
  bool all_surj = true;
  for (int i = 0; i < s; ++i) {
    const int m = r - s + 2 * i + 1;
    const int src = t + q - r - i;
    const auto ds = a.dim(src);
    const auto dt = a.dim(src + m);
    const auto rk = (ds == 0 || dt == 0) ? std::size_t{0} : rank(a.mult_map_matrix(a.power(l, m), src));
    all_inj = all_inj && rk == ds;
    all_surj = all_surj && rk == dt;
  }
  return all_inj || all_surj;
}

std::optional<SlpDisproof> certified_slp_disproof(const GradedAlgebra& a, const HomogeneousElement& l, int r, int i) {
  a.check_owns(l);
  if (r < 1) throw std::invalid_argument("disproof needs r >= 1");
  const auto lr = a.power(l, r);
  SlpDisproof d;
  d.power = r;
  d.degree = i;
  d.quotient_hilbert = lr.is_zero() ? a.hilbert_function() : quotient_by_form(a, lr).hilbert_function();
  const auto cdim = [&](int t) {
    return t >= 0 && t < static_cast<int>(d.quotient_hilbert.size()) ? d.quotient_hilbert[static_cast<std::size_t>(t)] : 0;
  };
  d.source_dim = a.dim(i);
  d.quotient_dim = cdim(i + r * l.degree());
  d.target_dim = a.dim(i + r * l.degree());
  if (d.source_dim + d.quotient_dim > d.target_dim && d.quotient_dim > 0) return d;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

SweepResult verify_coefficients(long kmax, long rmax) {
  SweepResult out{"coefficients", 0, {}, {}};
  for (long k = 1; k <= kmax; ++k) {
    const auto table = power_reduction_oracle(k, rmax);
    for (long r = 0; r <= rmax; ++r) {
      for (long j = 0; j < k; ++j) {
        ++out.cases;
        const auto closed = c_coefficient(r, j, k);
        if (closed != table.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) {
          out.failures.push_back("c(" + std::to_string(r) + "," + std::to_string(j) + "," + std::to_string(k) +
                                 ") closed form " + closed.get_str() + " vs oracle " +
                                 table.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)].get_str());
        }
        if (r >= k && !verify_binomial_identity(r, j, k)) {
          out.failures.push_back("binomial identity fails at r=" + std::to_string(r) + " j=" + std::to_string(j) +
                                 " k=" + std::to_string(k));
        }
      }
    }
  }
  return out;
}

SweepResult verify_smatrix(long rmax) {
  SweepResult out{"smatrix", 0, {}, {}};
  for (long r = 1; r <= rmax; ++r) {
    for (long t = 0; t < r; ++t) {
      ++out.cases;
      const auto res = s_matrix_nonsingular(r, t);
      if (!res.nonsingular || !(res.det_elimination == res.det_cauchy)) {
        out.failures.push_back("S(r=" + std::to_string(r) + ", t=" + std::to_string(t) + "): elimination " +
                               res.det_elimination.to_string() + " vs Cauchy " + res.det_cauchy.to_string());
      }
    }
  }
  return out;
}

SweepResult verify_duality(std::size_t instances, std::uint64_t seed) {
  SweepResult out{"duality", 0, {}, {}};
  std::mt19937_64 rng(seed);
  std::size_t lefschetz = 0;
  for (std::size_t n = 0; n < instances; ++n) {
    const int depth = 1 + static_cast<int>(rng() % 2);
    auto a = trivial_algebra(QQ);
    for (int level = 0; level < depth; ++level) {
      const int room = 8 - a.socle_degree();
      const int d = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(3, std::max(1, room - 1))));
      a = extend_monic(a, small_monic(a, d, rng, 2), "u" + std::to_string(level + 1));
    }
    const int fd = 1 + static_cast<int>(rng() % 3);
    const auto f = small_monic(a, fd, rng, 2);
    const auto elem = small_form(a, 1, rng, 1);
    const auto res = verify_duality_instance(a, f, elem);
    ++out.cases;
    if (res.lhs) ++lefschetz;
    if (!res.agree()) {
      out.failures.push_back("instance " + std::to_string(n) + ": lhs " + (res.lhs ? "true" : "false") + ", rhs " +
                             (res.rhs ? "true" : "false"));
    }
  }
  out.notes.push_back(std::to_string(lefschetz) + " of " + std::to_string(out.cases) + " instances have f(elem) Lefschetz");
  return out;
}

SweepResult verify_blockmatrix(std::uint64_t seed) {
  SweepResult out{"blockmatrix", 0, {}, {}};
  std::vector<GradedAlgebra> towers;
  towers.push_back(monomial_complete_intersection(QQ, {2}));
  towers.push_back(monomial_complete_intersection(QQ, {3}));
  towers.push_back(monomial_complete_intersection(QQ, {2, 2}));
  towers.push_back(monomial_complete_intersection(QQ, {2, 3}));
  {
    std::mt19937_64 rng(seed);
    towers.push_back(random_tower(QQ, 2, 3, 4, rng));
  }
  for (std::size_t n = 0; n < towers.size(); ++n) {
    const auto& a = towers[n];
    const auto strong = search_strong(a, default_trials, seed + n);
    if (strong.verdict != Verdict::certified_success) {
      out.failures.push_back("tower " + std::to_string(n) + ": no strong Lefschetz element found");
      continue;
    }
    const auto& elem = *strong.element;
    for (int k = 1; k <= 3; ++k) {
      for (int q = 1; q <= 4; ++q) {
        const int sigma_b = a.socle_degree() + k - 1;
        for (int t = 0; t <= sigma_b; ++t) {
          ++out.cases;
          const auto chk = check_block_matrix(a, elem, k, q, t);
          const std::string where = "tower " + std::to_string(n) + " k=" + std::to_string(k) + " q=" +
                                    std::to_string(q) + " t=" + std::to_string(t);
          if (!chk.ok()) {
            out.failures.push_back(where + ": rank(M)=" + std::to_string(chk.rank_block) + " direct=" +
                                   std::to_string(chk.rank_direct) + " rank(N)+id=" +
                                   std::to_string(chk.rank_reduced + chk.identity_size) +
                                   (chk.entries_match ? "" : " entries differ"));
          }
          if (!antidiagonal_maps_uniform(a, elem, q, k, t)) {
            out.failures.push_back(where + ": anti-diagonal maps mix injective and surjective");
          }
        }
        if (n == 0 && !anti_triangularize(coefficient_matrix_L(q, k).normalized).ok()) {
          out.failures.push_back("coefficient matrix L(q=" + std::to_string(q) + ", k=" + std::to_string(k) +
                                 ") does not anti-triangularize");
        }
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> stanley_corpus(std::size_t dimcap, std::size_t max_vars) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  stanley_rec(cur, 1, dimcap, max_vars, out);
  return out;
}

SweepResult verify_stanley(std::size_t dimcap, std::size_t trials, std::uint64_t seed) {
  SweepResult out{"stanley", 0, {}, {}};
  for (const auto& exps : stanley_corpus(dimcap)) {
    ++out.cases;
    const auto a = monomial_complete_intersection(QQ, exps);
    const auto rep = search_strong(a, trials, seed);
    if (rep.verdict != Verdict::certified_success) {
      out.failures.push_back("exponents (" + join(exps) + "): no strong Lefschetz element in " +
                             std::to_string(trials) + " trials");
    }
  }
  return out;
}

GradedAlgebra random_tower(const FieldSpec& field, int depth, int max_degree, int max_sigma, std::mt19937_64& rng) {
  auto a = trivial_algebra(field);
  for (int level = 0; level < depth; ++level) {
    const int room = max_sigma - a.socle_degree();
    if (room < 1) break;
    const int hi = std::min(max_degree, room + 1);
    std::uniform_int_distribution<int> deg(2, std::max(2, hi));
    const int d = deg(rng);
    a = extend_monic(a, random_monic(a, d, rng), "x" + std::to_string(level + 1));
  }
  return a;
}

SweepResult verify_extensions(std::size_t count, std::uint64_t seed) {
  SweepResult out{"extensions", 0, {}, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < count; ++n) {
    const int depth = 1 + static_cast<int>(rng() % 3);
    const auto a = random_tower(QQ, depth, 4, 10, rng);
    const int d = 1 + static_cast<int>(rng() % 3);
    const auto b = extend_monic(a, random_monic(a, d, rng), "y");
    ++out.cases;
    const std::string where = "tower " + std::to_string(n) + " (degrees " + join(b.relation_degrees()) + ")";
    if (!a.socle().is_gorenstein) out.failures.push_back(where + ": base is not Gorenstein");
    const auto rep = search_strong(b, default_trials, rng());
    if (rep.verdict != Verdict::certified_success) {
      out.failures.push_back(where + ": no strong Lefschetz element in " + std::to_string(default_trials) + " trials");
    }
  }
  return out;
}

}  // namespace slp::lab
