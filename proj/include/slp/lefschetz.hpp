#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slp/algebra.hpp"

namespace slp {

/// One row of a rank profile: the map w^r : A_i -> A_{i + r deg w}.
struct RankRow {
  int degree = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool maximal = true;

  bool injective() const { return rank == source_dim; }
  bool surjective() const { return rank == target_dim; }
};

struct RankProfile {
  int element_degree = 0;
  int power = 1;
  std::vector<RankRow> rows;

  bool all_maximal() const;
  /// First row that is not of maximal rank, if any.
  std::optional<RankRow> first_failure() const;
};

enum class Verdict { certified_success, element_failure, search_inconclusive };

std::string to_string(Verdict v);

/// Power r and source degree i of a multiplication map without maximal rank.
struct FailureWitness {
  int power = 1;
  int degree = 0;
  friend bool operator==(const FailureWitness&, const FailureWitness&) = default;
};

struct TrialRecord {
  std::string element;
  std::optional<FailureWitness> failure;
};

/// Evidence for (or against) a Lefschetz element. A success for one element
/// certifies the property, since the Lefschetz elements form an open set; a
/// failed search proves nothing.
struct LefschetzReport {
  std::string kind;  // "weak" or "strong"
  std::uint64_t algebra_fingerprint = 0;
  FieldSpec field = FieldSpec::rationals();
  /// Set over GF(p): genericity there is only probabilistic.
  bool probabilistic_field = false;
  std::optional<HomogeneousElement> element;
  std::string element_text;
  std::vector<int> powers;
  std::vector<RankProfile> profiles;
  Verdict verdict = Verdict::search_inconclusive;
  std::optional<FailureWitness> witness;
  std::size_t trials_used = 0;
  std::optional<std::uint64_t> seed;
  std::vector<TrialRecord> trials;
};

/// Ranks of w^r : A_i -> A_{i + r deg w} for 0 <= i <= sigma.
/// Throws std::invalid_argument for r < 1.
RankProfile rank_profile(const GradedAlgebra& a, const HomogeneousElement& w, int r);

struct LefschetzCheck {
  bool ok = false;
  std::vector<RankProfile> profiles;
  std::optional<FailureWitness> witness;
};

/// w (of any degree >= 1) has maximal rank in every degree.
LefschetzCheck is_lefschetz(const GradedAlgebra& a, const HomogeneousElement& w);

/// l^r is Lefschetz for r = 1..sigma. With stop_at_failure, profiles end at
/// the first failing power.
LefschetzCheck is_strong_lefschetz(const GradedAlgebra& a, const HomogeneousElement& l, bool stop_at_failure = true);

/// Report for a specific element: certified_success or element_failure.
LefschetzReport check_weak_element(const GradedAlgebra& a, const HomogeneousElement& l);
LefschetzReport check_strong_element(const GradedAlgebra& a, const HomogeneousElement& l);

inline constexpr std::size_t default_trials = 8;

/// Samples degree-1 elements from a generator seeded with `seed`. Returns
/// certified_success on the first Lefschetz element, otherwise
/// search_inconclusive with the best profiles seen. Throws
/// std::invalid_argument if trials == 0 or A_1 = 0 while sigma > 0.
LefschetzReport search_weak(const GradedAlgebra& a, std::size_t trials, std::uint64_t seed);
LefschetzReport search_strong(const GradedAlgebra& a, std::size_t trials, std::uint64_t seed);

struct MaxRankDegree {
  int degree = 0;
  Verdict verdict = Verdict::search_inconclusive;
  std::size_t trials_used = 0;
  std::string element;
  RankProfile profile;
};

struct MaxRankReport {
  std::uint64_t algebra_fingerprint = 0;
  FieldSpec field = FieldSpec::rationals();
  bool probabilistic_field = false;
  std::uint64_t seed = 0;
  std::vector<MaxRankDegree> degrees;  // d = 1..sigma

  bool all_certified() const;
};

/// For each d = 1..sigma, samples forms of degree d until one has maximal
/// rank in every degree.
MaxRankReport maximal_rank_property(const GradedAlgebra& a, std::size_t trials, std::uint64_t seed);

}  // namespace slp
