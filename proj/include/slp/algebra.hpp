#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "slp/field.hpp"
#include "slp/linalg.hpp"

namespace slp {

namespace detail {
struct Tower;
}  // namespace detail

/// Exponent vector over the tower variables; every variable has degree 1.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  std::string to_string(const std::vector<std::string>& names) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Degree plus coefficient vector over the degree-d basis of one algebra.
class HomogeneousElement {
 public:
  HomogeneousElement(std::uint64_t algebra_id, FieldSpec field, int degree, std::vector<Scalar> coeffs)
      : algebra_id_(algebra_id), field_(field), degree_(degree), coeffs_(std::move(coeffs)) {}

  std::uint64_t algebra_id() const { return algebra_id_; }
  const FieldSpec& field() const { return field_; }
  int degree() const { return degree_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  HomogeneousElement& operator+=(const HomogeneousElement& o);
  HomogeneousElement& operator-=(const HomogeneousElement& o);
  friend HomogeneousElement operator+(HomogeneousElement a, const HomogeneousElement& b) { return a += b; }
  friend HomogeneousElement operator-(HomogeneousElement a, const HomogeneousElement& b) { return a -= b; }
  friend HomogeneousElement operator*(const Scalar& c, HomogeneousElement a);
  HomogeneousElement operator-() const;
  friend bool operator==(const HomogeneousElement& a, const HomogeneousElement& b);

 private:
  void check_compatible(const HomogeneousElement& o) const;

  std::uint64_t algebra_id_;
  FieldSpec field_;
  int degree_;
  std::vector<Scalar> coeffs_;
};

/// f = x^d + a_1 x^{d-1} + ... + a_d with a_i homogeneous of degree i in the
/// base algebra.
struct MonicExtensionPoly {
  int d = 0;
  std::vector<HomogeneousElement> lower;  // lower[i - 1] = a_i

  /// x^d over `base` (all a_i zero).
  static MonicExtensionPoly pure_power(const class GradedAlgebra& base, int d);
};

struct SocleInfo {
  std::vector<std::size_t> dims;  // per degree 0..sigma
  bool is_gorenstein = false;
};

/// Finite-dimensional standard graded algebra: a tower of monic extensions of
/// the base field, optionally followed by quotients by homogeneous forms.
///
/// Tower basis in degree t: monomials x^e with e_i < d_i and |e| = t, sorted
/// lexicographically with larger exponents of earlier variables first.
/// Quotient bases are the coordinates left free by the rref of the image of
/// the quotient map. Instances are immutable after construction.
class GradedAlgebra {
 public:
  const FieldSpec& field() const { return field_; }
  std::uint64_t id() const { return id_; }

  /// dim A_t; zero outside [0, sigma].
  std::size_t dim(int t) const;
  int socle_degree() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t multiplicity() const;
  const std::vector<std::size_t>& hilbert_function() const { return dims_; }

  bool is_pure_tower() const { return quotient_forms_.empty(); }
  std::size_t num_variables() const;
  const std::vector<std::string>& variable_names() const { return names_; }
  /// Monic degrees d_i of the tower relations.
  std::vector<int> relation_degrees() const;

  /// Stable hash of the construction record (field, relations, quotient forms).
  std::uint64_t fingerprint() const { return fingerprint_; }
  const std::vector<std::string>& construction() const { return construction_; }

  HomogeneousElement zero(int degree) const;
  HomogeneousElement one() const;
  /// Image of the i-th tower variable.
  HomogeneousElement variable(std::size_t i) const;
  /// Throws std::invalid_argument if coeffs.size() != dim(degree).
  HomogeneousElement element(int degree, std::vector<Scalar> coeffs) const;
  HomogeneousElement from_ints(int degree, const std::vector<long>& coeffs) const;
  /// Basis element `index` of A_degree.
  HomogeneousElement basis_element(int degree, std::size_t index) const;

  /// Representative tower monomial of each basis element of A_t.
  std::vector<Monomial> basis(int t) const;
  /// Index of a tower monomial in the basis of A_t, or -1 if it is not a
  /// basis label.
  long basis_index(const Monomial& m) const;
  std::string format(const HomogeneousElement& w) const;

  /// Image of an element of `base` when this algebra was obtained from `base`
  /// by monic extensions. Throws std::invalid_argument otherwise.
  HomogeneousElement embed(const GradedAlgebra& base, const HomogeneousElement& w) const;

  HomogeneousElement multiply(const HomogeneousElement& u, const HomogeneousElement& v) const;
  HomogeneousElement power(const HomogeneousElement& w, int r) const;
  /// y^d + a_1 y^{d-1} + ... + a_d evaluated inside this algebra.
  HomogeneousElement evaluate(const MonicExtensionPoly& f, const HomogeneousElement& y) const;

  /// Matrix of w * : A_i -> A_{i + deg w}, shape dim A_{i+deg w} x dim A_i.
  DenseMatrix mult_map_matrix(const HomogeneousElement& w, int i) const;

  SocleInfo socle() const;

  /// Projection tower_t -> A_t and its section A_t -> tower_t (identities for
  /// pure towers); projection(t) * section(t) is the identity.
  DenseMatrix projection(int t) const;
  DenseMatrix section(int t) const;
  std::size_t tower_dim(int t) const;

  /// Throws FieldMismatch / std::invalid_argument if w does not belong here.
  void check_owns(const HomogeneousElement& w) const;

 private:
  friend GradedAlgebra trivial_algebra(const FieldSpec& field);
  friend GradedAlgebra extend_monic(const GradedAlgebra& a, const MonicExtensionPoly& f, std::string var);
  friend GradedAlgebra quotient_by_form(const GradedAlgebra& a, const HomogeneousElement& g);

  using Sparse = std::vector<std::pair<std::uint32_t, Scalar>>;

  GradedAlgebra() = default;

  // Tower coordinates of a degree-t element and back.
  Sparse lift(int degree, const std::vector<Scalar>& coeffs) const;
  std::vector<Scalar> project(int degree, const Sparse& tower_vec) const;
  void finish(std::vector<std::size_t> dims);

  std::uint64_t id_ = 0;
  FieldSpec field_ = FieldSpec::rationals();
  std::shared_ptr<const detail::Tower> tower_;
  // Per degree of the quotient; empty for pure towers.
  std::vector<DenseMatrix> proj_;
  std::vector<DenseMatrix> sect_;
  // Quotient generators in tower coordinates, (degree, coefficients).
  std::vector<std::pair<int, std::vector<Scalar>>> quotient_forms_;
  std::vector<std::size_t> dims_;
  std::vector<std::string> names_;
  std::vector<std::string> construction_;
  std::uint64_t fingerprint_ = 0;
};

/// The base field as a graded algebra concentrated in degree 0.
GradedAlgebra trivial_algebra(const FieldSpec& field);

/// B = A[x]/(f). Throws std::invalid_argument if some a_i is not of degree i
/// in A.
GradedAlgebra extend_monic(const GradedAlgebra& a, const MonicExtensionPoly& f, std::string var = "");

/// B = A/(g). Throws std::invalid_argument if g is zero or of degree 0.
GradedAlgebra quotient_by_form(const GradedAlgebra& a, const HomogeneousElement& g);

/// K[x_1..x_n]/(x_1^{a_1}, ..., x_n^{a_n}) as a pure tower.
GradedAlgebra monomial_complete_intersection(const FieldSpec& field, const std::vector<int>& exponents);

/// Coefficients uniform over GF(p), or uniform integers in [-10, 10] over QQ.
/// Throws std::invalid_argument when dim A_d = 0.
HomogeneousElement random_homogeneous(const GradedAlgebra& a, int degree, std::mt19937_64& rng);

/// Monic polynomial of degree d whose lower coefficients are random forms
/// (zero where the base has no forms of that degree).
MonicExtensionPoly random_monic(const GradedAlgebra& base, int d, std::mt19937_64& rng);

struct SymmetryFlags {
  bool symmetric = false;
  bool unimodal = false;
};

SymmetryFlags check_symmetric_unimodal(const std::vector<std::size_t>& h);

}  // namespace slp
