#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "slp/algebra.hpp"
#include "slp/lefschetz.hpp"
#include "slp/linalg.hpp"

/// Mechanical checks of the ingredients behind "simple extensions of
/// Gorenstein algebras with the strong Lefschetz property keep it".
///
/// Throughout, B = A[x]/((a + x)^k) for a degree-1 element a of A, and
///   x^r = sum_{j<k} c_{rj} a^{r-j} x^j   in B,
/// with c_{rj} the Kronecker delta for r < k and
///   c_{rj} = (-1)^{r-k-1} binom(r,k) binom(k-1,j) k / (r-j)   for r >= k.
namespace slp::lab {

/// Closed-form reduction coefficient c_{rj} for the relation (a + x)^k.
/// Throws std::invalid_argument unless k >= 1, r >= 0 and 0 <= j < k.
mpq_class c_coefficient(long r, long j, long k);

/// Rows r = 0..r_max of reduction coefficients; rows[r][j] = c_{rj}.
struct ReductionTable {
  long k = 1;
  std::vector<std::vector<mpq_class>> rows;
};

/// Builds the table by literal rewriting in Q[a, x]: multiply the previous
/// row by x and replace x^k by -sum_{j<k} binom(k,j) a^{k-j} x^j. Throws
/// std::logic_error if a row is not of the shape sum c_j a^{r-j} x^j.
ReductionTable power_reduction_oracle(long k, long r_max);

/// binom(r-j-1, r-k) binom(r,j) == k/(r-j) binom(r,k) binom(k-1,j), exactly.
/// Throws std::invalid_argument outside r >= k >= 1, 0 <= j < k.
bool verify_binomial_identity(long r, long j, long k);

/// Matrix of x^q : B_t -> B_{t+q} assembled from blocks
/// c_{q+i,j} * (a^{q+i-j} : A_{t-i} -> A_{t+q-j}), block column i = x^i
/// part of the source, block row j = x^j part of the target.
DenseMatrix build_block_matrix(const GradedAlgebra& a, const HomogeneousElement& elem, int k, int q, int t);

/// The part of the block matrix that decides its rank: block rows 0..s-1,
/// block columns r-q..k-1 with s = min(q,k), r = max(q,k).
DenseMatrix build_reduced_block_matrix(const GradedAlgebra& a, const HomogeneousElement& elem, int k, int q, int t);

struct BlockMatrixCheck {
  std::size_t rank_block = 0;
  std::size_t rank_direct = 0;
  std::size_t rank_reduced = 0;
  /// Total size of the identity blocks split off when q < k.
  std::size_t identity_size = 0;
  /// Block matrix equals the direct matrix up to reordering of the bases.
  bool entries_match = false;

  bool ok() const { return rank_block == rank_direct && rank_block == rank_reduced + identity_size && entries_match; }
};

/// Compares the block matrix against x^q computed inside A[x]/((a + x)^k).
/// `a` must be a pure tower.
BlockMatrixCheck check_block_matrix(const GradedAlgebra& a, const HomogeneousElement& elem, int k, int q, int t);

/// The monic polynomial (x + elem)^k over the algebra of elem.
MonicExtensionPoly binomial_power(const GradedAlgebra& a, const HomogeneousElement& elem, int k);

struct CoefficientMatrices {
  DenseMatrix raw;         // (c_{q+j,i}), i = 0..s-1, j = r-q..k-1
  DenseMatrix normalized;  // after the column and row divisions
};

/// Normalizing divides column j by (-1)^{q+j-k-1} binom(q+j,k) k and row i by
/// binom(k-1,i), which leaves (1 / (r - i + j')) with j' = j - (r - q).
CoefficientMatrices coefficient_matrix_L(int q, int k);

/// (1 / (r - i + j))_{i,j = 0..t}.
DenseMatrix s_matrix(long r, long t);

struct SMatrixResult {
  bool nonsingular = false;
  Scalar det_elimination;
  Scalar det_cauchy;
};

/// det S by elimination and by the Cauchy closed form with u_i = r - i,
/// v_j = j. Throws std::invalid_argument unless r > t >= 0.
SMatrixResult s_matrix_nonsingular(long r, long t);

struct DualityResult {
  bool lhs = false;  // f(elem) is Lefschetz on A
  bool rhs = false;  // elem - x is Lefschetz on A[x]/(f)
  bool agree() const { return lhs == rhs; }
};

DualityResult verify_duality_instance(const GradedAlgebra& a, const MonicExtensionPoly& f, const HomogeneousElement& elem);

struct ScalingResult {
  Scalar c;
  std::size_t attempts = 0;
  RankProfile profile;
};

/// Finds c = 1, 2, 3, ... with f_c(l) = l^d + sum c^i a_i l^{d-i} Lefschetz on
/// A, checking f(l/c) = f_c(l)/c^d along the way. Throws std::invalid_argument
/// if l is not strong Lefschetz and std::runtime_error if e(A) + 1 candidates
/// all fail.
ScalingResult find_scaling(const GradedAlgebra& a, const HomogeneousElement& l, const MonicExtensionPoly& f);

/// Characteristic above which A[x]/(f) keeps the strong Lefschetz property:
/// 2q + sigma - 1 for f = x^q, max(e, 2q + sigma - 1) otherwise.
long char_bound(long q, long sigma, long e, bool f_is_pure_power);

enum class MapClass { injective, surjective, both };

std::string to_string(MapClass c);

class ClassificationMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Predicts l^{j-i} : A_i -> A_j from "injective iff i <= sigma - j" and
/// confirms with the exact rank. Throws ClassificationMismatch when the rank
/// disagrees, std::invalid_argument unless 0 <= i < j.
MapClass classify_injective_surjective(const GradedAlgebra& a, const HomogeneousElement& l, int i, int j);

/// The s maps on the anti-diagonal of the reduced block matrix after
/// anti-triangularization are either all injective or all surjective.
bool antidiagonal_maps_uniform(const GradedAlgebra& a, const HomogeneousElement& l, int q, int k, int t);

/// l^r : A_i -> A_{i+r} is neither injective nor surjective, read off from
/// C = A/(l^r): dim A_i + dim C_{i+r} > dim A_{i+r} and dim C_{i+r} > 0.
struct SlpDisproof {
  int power = 0;
  int degree = 0;
  std::size_t source_dim = 0;    // dim A_i
  std::size_t quotient_dim = 0;  // dim C_{i+r}
  std::size_t target_dim = 0;    // dim A_{i+r}
  std::vector<std::size_t> quotient_hilbert;
};

std::optional<SlpDisproof> certified_slp_disproof(const GradedAlgebra& a, const HomogeneousElement& l, int r, int i);

// ---------------------------------------------------------------------------
// Sweeps

struct SweepResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
};

/// Closed form vs rewriting oracle and the binomial identity, 1 <= k <= kmax,
/// 0 <= r <= rmax.
SweepResult verify_coefficients(long kmax, long rmax);

/// S-matrix determinants for 0 <= t < r <= rmax.
SweepResult verify_smatrix(long rmax);

/// Random instances: towers of depth <= 2 with sigma <= 8, random monic f and
/// degree-1 elements with small coefficients.
SweepResult verify_duality(std::size_t instances, std::uint64_t seed);

/// Block matrix against direct x^q for k <= 3, q <= 4 on small Gorenstein
/// towers, every t up to the socle degree of B.
SweepResult verify_blockmatrix(std::uint64_t seed);

/// Strong Lefschetz search on every monomial complete intersection with at
/// most four variables, exponents >= 2 and e(A) <= dimcap, over QQ.
SweepResult verify_stanley(std::size_t dimcap, std::size_t trials, std::uint64_t seed);

/// Random towers A (depth <= 3, sigma <= 10) over QQ, B = A[x]/(f) for a
/// random monic f; B must have a certified strong Lefschetz element.
SweepResult verify_extensions(std::size_t count, std::uint64_t seed);

/// Exponent vectors enumerated by verify_stanley.
std::vector<std::vector<int>> stanley_corpus(std::size_t dimcap, std::size_t max_vars = 4);

/// Random pure tower over `field` with the given number of levels, relation
/// degrees in [2, max_degree], socle degree at most max_sigma.
GradedAlgebra random_tower(const FieldSpec& field, int depth, int max_degree, int max_sigma, std::mt19937_64& rng);

}  // namespace slp::lab
