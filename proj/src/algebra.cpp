#include "slp/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slp {

namespace detail {

using Sparse = std::vector<std::pair<std::uint32_t, Scalar>>;

namespace {

// a + c * b, both sorted by code; zero sums are dropped.
Sparse merge_add(const Sparse& a, const Sparse& b) {
  Sparse out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Scalar s = a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

void add_into(Sparse& acc, const Sparse& b) {
  if (b.empty()) return;
  if (acc.empty()) {
    acc = b;
    return;
  }
  acc = merge_add(acc, b);
}

}  // namespace

struct TowerLevel {
  std::string var;
  int d = 1;
  std::uint32_t stride = 1;  // size of the tower below this level
  std::vector<Sparse> lower;               // a_1..a_d in codes of the level below
  std::vector<std::vector<Sparse>> reduce;  // x^e, e = d..2d-2, as coefficients of x^0..x^{d-1}
};

struct Tower {
  FieldSpec field = FieldSpec::rationals();
  std::vector<TowerLevel> levels;

  // Tables for the full tower.
  std::vector<int> code_degree;
  std::vector<std::uint32_t> code_index;
  std::vector<std::vector<std::uint32_t>> basis;  // per degree, in basis order

  std::uint32_t size_at(std::size_t nlevels) const {
    if (nlevels == 0) return 1;
    const auto& l = levels[nlevels - 1];
    return l.stride * static_cast<std::uint32_t>(l.d);
  }
  std::uint32_t size() const { return size_at(levels.size()); }

  std::vector<int> exponents(std::uint32_t code) const {
    std::vector<int> e(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
      e[i] = static_cast<int>((code / levels[i].stride) % static_cast<std::uint32_t>(levels[i].d));
    }
    return e;
  }

  // Returns size() when some exponent is out of range.
  std::uint32_t code_of(const std::vector<int>& e) const {
    if (e.size() != levels.size()) return size();
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (e[i] < 0 || e[i] >= levels[i].d) return size();
      code += static_cast<std::uint32_t>(e[i]) * levels[i].stride;
    }
    return code;
  }

  // Product in the tower truncated to its first `nlevels` variables.
  Sparse mul(std::size_t nlevels, const Sparse& u, const Sparse& v) const {
    if (u.empty() || v.empty()) return {};
    if (nlevels == 0) return {{0, u.front().second * v.front().second}};
    const auto& l = levels[nlevels - 1];
    const auto d = static_cast<std::size_t>(l.d);
    std::vector<Sparse> us(d);
    std::vector<Sparse> vs(d);
    for (const auto& [code, c] : u) us[code / l.stride].emplace_back(code % l.stride, c);
    for (const auto& [code, c] : v) vs[code / l.stride].emplace_back(code % l.stride, c);

    std::vector<Sparse> acc(2 * d - 1);
    for (std::size_t j1 = 0; j1 < d; ++j1) {
      if (us[j1].empty()) continue;
      for (std::size_t j2 = 0; j2 < d; ++j2) {
        if (vs[j2].empty()) continue;
        add_into(acc[j1 + j2], mul(nlevels - 1, us[j1], vs[j2]));
      }
    }
    for (std::size_t e = d; e + 1 < 2 * d; ++e) {
      if (acc[e].empty()) continue;
      const auto& red = l.reduce[e - d];
      for (std::size_t j = 0; j < d; ++j) {
        if (!red[j].empty()) add_into(acc[j], mul(nlevels - 1, acc[e], red[j]));
      }
    }
    Sparse out;
    for (std::size_t j = 0; j < d; ++j) {
      for (auto& [code, c] : acc[j]) out.emplace_back(code + static_cast<std::uint32_t>(j) * l.stride, std::move(c));
    }
    return out;
  }

  void add_level(std::string var, int d, std::vector<Sparse> lower) {
    TowerLevel l;
    l.var = std::move(var);
    l.d = d;
    l.stride = size();
    l.lower = std::move(lower);
    const auto below = levels.size();
    const auto ud = static_cast<std::size_t>(d);
    // x^d = -sum_i a_i x^{d-i}
    std::vector<Sparse> base(ud);
    for (std::size_t j = 0; j < ud; ++j) {
      for (const auto& [code, c] : l.lower[ud - j - 1]) base[j].emplace_back(code, -c);
    }
    l.reduce.push_back(base);
    for (std::size_t e = ud + 1; e + 1 < 2 * ud; ++e) {
      const auto& prev = l.reduce.back();
      std::vector<Sparse> next(ud);
      for (std::size_t j = 0; j + 1 < ud; ++j) next[j + 1] = prev[j];
      if (!prev[ud - 1].empty()) {
        for (std::size_t j = 0; j < ud; ++j) add_into(next[j], mul(below, prev[ud - 1], base[j]));
      }
      l.reduce.push_back(std::move(next));
    }
    levels.push_back(std::move(l));
    build_tables();
  }

  void build_tables() {
    const auto n = size();
    code_degree.assign(n, 0);
    code_index.assign(n, 0);
    int top = 0;
    for (const auto& l : levels) top += l.d - 1;
    basis.assign(static_cast<std::size_t>(top) + 1, {});
    std::vector<std::vector<int>> exps(n);
    for (std::uint32_t code = 0; code < n; ++code) {
      exps[code] = exponents(code);
      code_degree[code] = std::accumulate(exps[code].begin(), exps[code].end(), 0);
      basis[static_cast<std::size_t>(code_degree[code])].push_back(code);
    }
    for (auto& codes : basis) {
      std::sort(codes.begin(), codes.end(),
                [&](std::uint32_t a, std::uint32_t b) { return exps[a] > exps[b]; });
      for (std::size_t k = 0; k < codes.size(); ++k) code_index[codes[k]] = static_cast<std::uint32_t>(k);
    }
  }
};

}  // namespace detail

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial / HomogeneousElement

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (exponents[i] > 1) out += '^' + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

bool HomogeneousElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

void HomogeneousElement::check_compatible(const HomogeneousElement& o) const {
  if (algebra_id_ != o.algebra_id_) throw std::invalid_argument("elements belong to different algebras");
  if (degree_ != o.degree_) throw std::invalid_argument("adding elements of different degrees");
}

HomogeneousElement& HomogeneousElement::operator+=(const HomogeneousElement& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

HomogeneousElement& HomogeneousElement::operator-=(const HomogeneousElement& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

HomogeneousElement operator*(const Scalar& c, HomogeneousElement a) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

HomogeneousElement HomogeneousElement::operator-() const {
  HomogeneousElement out(*this);
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

bool operator==(const HomogeneousElement& a, const HomogeneousElement& b) {
  return a.algebra_id_ == b.algebra_id_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

MonicExtensionPoly MonicExtensionPoly::pure_power(const GradedAlgebra& base, int d) {
  MonicExtensionPoly f;
  f.d = d;
  for (int i = 1; i <= d; ++i) f.lower.push_back(base.zero(i));
  return f;
}

// ---------------------------------------------------------------------------
// GradedAlgebra

std::size_t GradedAlgebra::dim(int t) const {
  if (t < 0 || t >= static_cast<int>(dims_.size())) return 0;
  return dims_[static_cast<std::size_t>(t)];
}

std::size_t GradedAlgebra::multiplicity() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

std::size_t GradedAlgebra::num_variables() const { return tower_->levels.size(); }

std::vector<int> GradedAlgebra::relation_degrees() const {
  std::vector<int> out;
  for (const auto& l : tower_->levels) out.push_back(l.d);
  return out;
}

void GradedAlgebra::check_owns(const HomogeneousElement& w) const {
  if (!(w.field() == field_)) throw FieldMismatch("element field does not match the algebra");
  if (w.algebra_id() != id_) throw std::invalid_argument("element belongs to a different algebra");
  if (w.coeffs().size() != dim(w.degree())) throw std::invalid_argument("element has the wrong coefficient count");
}

HomogeneousElement GradedAlgebra::zero(int degree) const {
  return HomogeneousElement(id_, field_, degree, std::vector<Scalar>(dim(degree), Scalar::zero(field_)));
}

HomogeneousElement GradedAlgebra::one() const {
  return basis_element(0, 0);
}

HomogeneousElement GradedAlgebra::basis_element(int degree, std::size_t index) const {
  auto e = zero(degree);
  if (index >= dim(degree)) throw std::out_of_range("basis index out of range");
  std::vector<Scalar> c = e.coeffs();
  c[index] = Scalar::one(field_);
  return HomogeneousElement(id_, field_, degree, std::move(c));
}

HomogeneousElement GradedAlgebra::element(int degree, std::vector<Scalar> coeffs) const {
  if (coeffs.size() != dim(degree)) {
    throw std::invalid_argument("expected " + std::to_string(dim(degree)) + " coefficients in degree " +
                                std::to_string(degree) + ", got " + std::to_string(coeffs.size()));
  }
  for (const auto& c : coeffs) {
    if (!(c.field() == field_)) throw FieldMismatch("coefficient outside " + field_.to_string());
  }
  return HomogeneousElement(id_, field_, degree, std::move(coeffs));
}

HomogeneousElement GradedAlgebra::from_ints(int degree, const std::vector<long>& coeffs) const {
  std::vector<Scalar> c;
  for (long v : coeffs) c.push_back(Scalar::from_int(field_, v));
  return element(degree, std::move(c));
}

HomogeneousElement GradedAlgebra::variable(std::size_t i) const {
  if (i >= num_variables()) throw std::out_of_range("variable index out of range");
  const auto& l = tower_->levels[i];
  Sparse v;
  if (l.d >= 2) {
    v.emplace_back(l.stride, Scalar::one(field_));
  } else {
    for (const auto& [code, c] : l.lower[0]) v.emplace_back(code, -c);
  }
  return HomogeneousElement(id_, field_, 1, project(1, v));
}

GradedAlgebra::Sparse GradedAlgebra::lift(int degree, const std::vector<Scalar>& coeffs) const {
  Sparse out;
  if (coeffs.empty()) return out;
  const auto& codes = tower_->basis[static_cast<std::size_t>(degree)];
  if (is_pure_tower()) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (!coeffs[k].is_zero()) out.emplace_back(codes[k], coeffs[k]);
    }
  } else {
    const auto tower_vec = sect_[static_cast<std::size_t>(degree)].apply(coeffs);
    for (std::size_t k = 0; k < tower_vec.size(); ++k) {
      if (!tower_vec[k].is_zero()) out.emplace_back(codes[k], tower_vec[k]);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<Scalar> GradedAlgebra::project(int degree, const Sparse& tower_vec) const {
  std::vector<Scalar> out(dim(degree), Scalar::zero(field_));
  if (out.empty()) return out;
  if (is_pure_tower()) {
    for (const auto& [code, c] : tower_vec) {
      if (tower_->code_degree[code] != degree) throw std::logic_error("inhomogeneous tower product");
      out[tower_->code_index[code]] = c;
    }
    return out;
  }
  const auto& p = proj_[static_cast<std::size_t>(degree)];
  for (const auto& [code, c] : tower_vec) {
    const auto k = tower_->code_index[code];
    for (std::size_t r = 0; r < out.size(); ++r) {
      if (!p(r, k).is_zero()) out[r] += p(r, k) * c;
    }
  }
  return out;
}

HomogeneousElement GradedAlgebra::multiply(const HomogeneousElement& u, const HomogeneousElement& v) const {
  check_owns(u);
  check_owns(v);
  const int deg = u.degree() + v.degree();
  if (dim(deg) == 0) return zero(deg);
  const auto prod = tower_->mul(tower_->levels.size(), lift(u.degree(), u.coeffs()), lift(v.degree(), v.coeffs()));
  return HomogeneousElement(id_, field_, deg, project(deg, prod));
}

HomogeneousElement GradedAlgebra::embed(const GradedAlgebra& base, const HomogeneousElement& w) const {
  base.check_owns(w);
  const auto& mine = tower_->levels;
  const auto& theirs = base.tower_->levels;
  bool prefix = field_ == base.field_ && theirs.size() <= mine.size();
  for (std::size_t i = 0; prefix && i < theirs.size(); ++i) {
    prefix = mine[i].var == theirs[i].var && mine[i].d == theirs[i].d && mine[i].lower == theirs[i].lower;
  }
  if (!prefix) throw std::invalid_argument("algebra is not an extension of the given base");
  if (dim(w.degree()) == 0) return zero(w.degree());
  return HomogeneousElement(id_, field_, w.degree(), project(w.degree(), base.lift(w.degree(), w.coeffs())));
}

HomogeneousElement GradedAlgebra::power(const HomogeneousElement& w, int r) const {
  if (r < 0) throw std::invalid_argument("negative power");
  auto out = one();
  for (int k = 0; k < r; ++k) out = multiply(out, w);
  return out;
}

HomogeneousElement GradedAlgebra::evaluate(const MonicExtensionPoly& f, const HomogeneousElement& y) const {
  check_owns(y);
  if (f.lower.size() != static_cast<std::size_t>(f.d)) throw std::invalid_argument("malformed monic polynomial");
  // Horner: ((y + a_1) y + a_2) y + ...
  const int deg = f.d * y.degree();
  std::vector<HomogeneousElement> powers{one()};
  for (int k = 1; k <= f.d; ++k) powers.push_back(multiply(powers.back(), y));
  auto out = powers[static_cast<std::size_t>(f.d)];
  for (int i = 1; i <= f.d; ++i) {
    const auto& a = f.lower[static_cast<std::size_t>(i - 1)];
    check_owns(a);
    if (a.degree() + (f.d - i) * y.degree() != deg) throw std::invalid_argument("inhomogeneous evaluation");
    out += multiply(a, powers[static_cast<std::size_t>(f.d - i)]);
  }
  return out;
}

DenseMatrix GradedAlgebra::mult_map_matrix(const HomogeneousElement& w, int i) const {
  check_owns(w);
  const int target = i + w.degree();
  DenseMatrix m(field_, dim(target), dim(i));
  if (m.empty() || w.is_zero()) return m;
  const auto wl = lift(w.degree(), w.coeffs());
  std::vector<Scalar> unit(dim(i), Scalar::zero(field_));
  for (std::size_t c = 0; c < dim(i); ++c) {
    unit[c] = Scalar::one(field_);
    const auto col = project(target, tower_->mul(tower_->levels.size(), wl, lift(i, unit)));
    unit[c] = Scalar::zero(field_);
    for (std::size_t r = 0; r < col.size(); ++r) m(r, c) = col[r];
  }
  return m;
}

SocleInfo GradedAlgebra::socle() const {
  SocleInfo info;
  std::vector<HomogeneousElement> vars;
  for (std::size_t v = 0; v < num_variables(); ++v) vars.push_back(variable(v));
  std::size_t total = 0;
  for (int t = 0; t <= socle_degree(); ++t) {
    const auto src = dim(t);
    const auto tgt = dim(t + 1);
    DenseMatrix stacked(field_, tgt * vars.size(), src);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      stacked.set_block(v * tgt, 0, mult_map_matrix(vars[v], t));
    }
    const auto k = src - rank(stacked);
    info.dims.push_back(k);
    total += k;
  }
  info.is_gorenstein = total == 1;
  return info;
}

std::size_t GradedAlgebra::tower_dim(int t) const {
  if (t < 0 || t >= static_cast<int>(tower_->basis.size())) return 0;
  return tower_->basis[static_cast<std::size_t>(t)].size();
}

DenseMatrix GradedAlgebra::projection(int t) const {
  if (is_pure_tower()) return DenseMatrix::identity(field_, dim(t));
  if (dim(t) == 0) return DenseMatrix(field_, 0, tower_dim(t));
  return proj_[static_cast<std::size_t>(t)];
}

DenseMatrix GradedAlgebra::section(int t) const {
  if (is_pure_tower()) return DenseMatrix::identity(field_, dim(t));
  if (dim(t) == 0) return DenseMatrix(field_, tower_dim(t), 0);
  return sect_[static_cast<std::size_t>(t)];
}

std::vector<Monomial> GradedAlgebra::basis(int t) const {
  std::vector<Monomial> out;
  if (dim(t) == 0) return out;
  const auto& codes = tower_->basis[static_cast<std::size_t>(t)];
  if (is_pure_tower()) {
    for (auto code : codes) out.push_back(Monomial{tower_->exponents(code)});
    return out;
  }
  const auto& s = sect_[static_cast<std::size_t>(t)];
  for (std::size_t c = 0; c < s.cols(); ++c) {
    std::size_t row = 0;
    while (row < s.rows() && s(row, c).is_zero()) ++row;
    out.push_back(Monomial{tower_->exponents(codes[row])});
  }
  return out;
}

long GradedAlgebra::basis_index(const Monomial& m) const {
  const auto code = tower_->code_of(m.exponents);
  if (code >= tower_->size()) return -1;
  const int t = m.degree();
  if (dim(t) == 0) return -1;
  if (is_pure_tower()) return tower_->code_index[code];
  const auto& s = sect_[static_cast<std::size_t>(t)];
  const auto k = tower_->code_index[code];
  for (std::size_t c = 0; c < s.cols(); ++c) {
    if (s(k, c).is_one()) return static_cast<long>(c);
  }
  return -1;
}

std::string GradedAlgebra::format(const HomogeneousElement& w) const {
  check_owns(w);
  const auto mons = basis(w.degree());
  const auto& names = variable_names();
  std::string out;
  for (std::size_t k = 0; k < w.coeffs().size(); ++k) {
    const auto& c = w.coeffs()[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const auto label = mons[k].to_string(names);
    if (label == "1") {
      out += c.to_string();
    } else if (c.is_one()) {
      out += label;
    } else {
      out += c.to_string() + "*" + label;
    }
  }
  return out.empty() ? "0" : out;
}

void GradedAlgebra::finish(std::vector<std::size_t> dims) {
  while (dims.size() > 1 && dims.back() == 0) dims.pop_back();
  dims_ = std::move(dims);
  id_ = next_algebra_id.fetch_add(1);
  names_.clear();
  for (const auto& l : tower_->levels) names_.push_back(l.var);
  std::ostringstream os;
  os << field_.to_string() << '|';
  for (const auto& l : tower_->levels) {
    os << l.var << ':' << l.d << '[';
    for (const auto& a : l.lower) {
      for (const auto& [code, c] : a) os << code << '=' << c << ',';
      os << ';';
    }
    os << ']';
  }
  for (const auto& [deg, coeffs] : quotient_forms_) {
    os << "/(" << deg << ':';
    for (const auto& c : coeffs) os << c << ',';
    os << ')';
  }
  fingerprint_ = fnv1a(os.str());
}

// ---------------------------------------------------------------------------
// Constructions

GradedAlgebra trivial_algebra(const FieldSpec& field) {
  GradedAlgebra a;
  a.field_ = field;
  auto tower = std::make_shared<detail::Tower>();
  tower->field = field;
  tower->build_tables();
  a.tower_ = std::move(tower);
  a.construction_.push_back("field " + field.to_string());
  a.finish({1});
  return a;
}

GradedAlgebra extend_monic(const GradedAlgebra& a, const MonicExtensionPoly& f, std::string var) {
  if (f.d < 1) throw std::invalid_argument("monic extension needs degree >= 1");
  if (f.lower.size() != static_cast<std::size_t>(f.d)) {
    throw std::invalid_argument("monic polynomial of degree " + std::to_string(f.d) + " needs " +
                                std::to_string(f.d) + " lower coefficients");
  }
  std::vector<detail::Sparse> lower;
  for (int i = 1; i <= f.d; ++i) {
    const auto& c = f.lower[static_cast<std::size_t>(i - 1)];
    a.check_owns(c);
    if (c.degree() != i) {
      throw std::invalid_argument("coefficient a_" + std::to_string(i) + " has degree " +
                                  std::to_string(c.degree()) + ", expected " + std::to_string(i));
    }
    lower.push_back(a.lift(i, c.coeffs()));
  }
  if (var.empty()) var = "x" + std::to_string(a.num_variables() + 1);

  auto tower = std::make_shared<detail::Tower>(*a.tower_);
  tower->add_level(var, f.d, std::move(lower));

  GradedAlgebra b;
  b.field_ = a.field_;
  b.tower_ = tower;
  b.construction_ = {a.construction_.front()};
  for (const auto& l : tower->levels) b.construction_.push_back("extend " + l.var + " degree " + std::to_string(l.d));
  std::vector<std::size_t> dims;
  for (const auto& codes : tower->basis) dims.push_back(codes.size());
  b.finish(std::move(dims));

  // Re-impose the quotient forms of `a`; tower codes of `a` embed unchanged.
  for (const auto& [deg, coeffs] : a.quotient_forms_) {
    detail::Sparse tv;
    const auto& old_codes = a.tower_->basis[static_cast<std::size_t>(deg)];
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (!coeffs[k].is_zero()) tv.emplace_back(old_codes[k], coeffs[k]);
    }
    std::sort(tv.begin(), tv.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    const auto g = HomogeneousElement(b.id_, b.field_, deg, b.project(deg, tv));
    if (!g.is_zero()) b = quotient_by_form(b, g);
  }
  return b;
}

GradedAlgebra quotient_by_form(const GradedAlgebra& a, const HomogeneousElement& g) {
  a.check_owns(g);
  if (g.degree() < 1) throw std::invalid_argument("quotient form must have degree >= 1");
  if (g.is_zero()) throw std::invalid_argument("quotient by the zero form");
  const auto& field = a.field_;
  const int dg = g.degree();

  GradedAlgebra b;
  b.field_ = field;
  b.tower_ = a.tower_;
  b.construction_ = a.construction_;
  b.construction_.push_back("quotient by a form of degree " + std::to_string(dg));
  b.quotient_forms_ = a.quotient_forms_;
  {
    const auto lifted = a.lift(dg, g.coeffs());
    std::vector<Scalar> dense(a.tower_->basis[static_cast<std::size_t>(dg)].size(), Scalar::zero(field));
    for (const auto& [code, c] : lifted) dense[a.tower_->code_index[code]] = c;
    b.quotient_forms_.emplace_back(dg, std::move(dense));
  }

  std::vector<std::size_t> dims;
  for (int t = 0; t <= a.socle_degree(); ++t) {
    const auto n = a.dim(t);
    DenseMatrix q = DenseMatrix::identity(field, n);
    DenseMatrix iota = DenseMatrix::identity(field, n);
    if (t >= dg) {
      const auto image = rref_rank(a.mult_map_matrix(g, t - dg).transpose());
      std::vector<bool> is_pivot(n, false);
      for (auto c : image.pivot_cols) is_pivot[c] = true;
      std::vector<std::size_t> free;
      for (std::size_t k = 0; k < n; ++k)
        if (!is_pivot[k]) free.push_back(k);
      q = DenseMatrix(field, free.size(), n);
      iota = DenseMatrix(field, n, free.size());
      for (std::size_t c = 0; c < free.size(); ++c) {
        q(c, free[c]) = Scalar::one(field);
        iota(free[c], c) = Scalar::one(field);
        for (std::size_t row = 0; row < image.rank; ++row) {
          q(c, image.pivot_cols[row]) = -image.rref(row, free[c]);
        }
      }
    }
    dims.push_back(q.rows());
    if (a.is_pure_tower()) {
      b.proj_.push_back(std::move(q));
      b.sect_.push_back(std::move(iota));
    } else {
      b.proj_.push_back(q * a.proj_[static_cast<std::size_t>(t)]);
      b.sect_.push_back(a.sect_[static_cast<std::size_t>(t)] * iota);
    }
  }
  b.finish(std::move(dims));
  b.proj_.resize(b.dims_.size());
  b.sect_.resize(b.dims_.size());
  return b;
}

GradedAlgebra monomial_complete_intersection(const FieldSpec& field, const std::vector<int>& exponents) {
  auto a = trivial_algebra(field);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    a = extend_monic(a, MonicExtensionPoly::pure_power(a, exponents[i]), "x" + std::to_string(i + 1));
  }
  return a;
}

HomogeneousElement random_homogeneous(const GradedAlgebra& a, int degree, std::mt19937_64& rng) {
  const auto n = a.dim(degree);
  if (n == 0) {
    throw std::invalid_argument("no nonzero forms of degree " + std::to_string(degree) +
                                " (socle degree " + std::to_string(a.socle_degree()) + ")");
  }
  std::vector<Scalar> coeffs;
  coeffs.reserve(n);
  if (a.field().is_prime()) {
    const auto p = a.field().characteristic();
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (std::size_t k = 0; k < n; ++k) coeffs.push_back(Scalar::residue(dist(rng), p));
  } else {
    std::uniform_int_distribution<long> dist(-10, 10);
    for (std::size_t k = 0; k < n; ++k) coeffs.push_back(Scalar::from_int(a.field(), dist(rng)));
  }
  return a.element(degree, std::move(coeffs));
}

MonicExtensionPoly random_monic(const GradedAlgebra& base, int d, std::mt19937_64& rng) {
  MonicExtensionPoly f;
  f.d = d;
  for (int i = 1; i <= d; ++i) {
    f.lower.push_back(base.dim(i) == 0 ? base.zero(i) : random_homogeneous(base, i, rng));
  }
  return f;
}

SymmetryFlags check_symmetric_unimodal(const std::vector<std::size_t>& h) {
  SymmetryFlags out;
  out.symmetric = std::equal(h.begin(), h.end(), h.rbegin());
  std::size_t k = 1;
  while (k < h.size() && h[k] >= h[k - 1]) ++k;
  while (k < h.size() && h[k] <= h[k - 1]) ++k;
  out.unimodal = k >= h.size();
  return out;
}

}  // namespace slp
