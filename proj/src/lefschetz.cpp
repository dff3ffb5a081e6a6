#include "slp/lefschetz.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace slp {

namespace {

RankProfile profile_of_power(const GradedAlgebra& a, const HomogeneousElement& wr, int element_degree, int r) {
  RankProfile p;
  p.element_degree = element_degree;
  p.power = r;
  for (int i = 0; i <= a.socle_degree(); ++i) {
    RankRow row;
    row.degree = i;
    row.source_dim = a.dim(i);
    row.target_dim = a.dim(i + wr.degree());
    if (row.source_dim != 0 && row.target_dim != 0) row.rank = rank(a.mult_map_matrix(wr, i));
    row.maximal = row.rank == std::min(row.source_dim, row.target_dim);
    p.rows.push_back(row);
  }
  return p;
}

void check_sampling_possible(const GradedAlgebra& a, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("at least one trial is required");
  if (a.dim(1) == 0 && a.socle_degree() > 0) {
    throw std::invalid_argument("algebra has no degree-1 elements to test");
  }
}

LefschetzReport base_report(const GradedAlgebra& a, const char* kind) {
  LefschetzReport r;
  r.kind = kind;
  r.algebra_fingerprint = a.fingerprint();
  r.field = a.field();
  r.probabilistic_field = a.field().is_prime();
  return r;
}

// Higher is better: how far a failing element got before its first failure.
std::pair<int, int> progress(const LefschetzCheck& c) {
  if (!c.witness) return {1 << 30, 0};
  return {c.witness->power, c.witness->degree};
}

LefschetzReport search(const GradedAlgebra& a, std::size_t trials, std::uint64_t seed, bool strong) {
  check_sampling_possible(a, trials);
  auto report = base_report(a, strong ? "strong" : "weak");
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::optional<LefschetzCheck> best;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto l = a.dim(1) == 0 ? a.zero(1) : random_homogeneous(a, 1, rng);
    auto check = strong ? is_strong_lefschetz(a, l) : is_lefschetz(a, l);
    report.trials_used = t + 1;
    report.trials.push_back({a.format(l), check.witness});
    if (check.ok) {
      report.verdict = Verdict::certified_success;
      report.element = l;
      report.element_text = a.format(l);
      report.profiles = std::move(check.profiles);
      for (const auto& p : report.profiles) report.powers.push_back(p.power);
      return report;
    }
    if (!best || progress(check) > progress(*best)) {
      best = std::move(check);
      report.element = l;
      report.element_text = a.format(l);
    }
  }
  report.verdict = Verdict::search_inconclusive;
  report.profiles = std::move(best->profiles);
  report.witness = best->witness;
  for (const auto& p : report.profiles) report.powers.push_back(p.power);
  return report;
}

LefschetzReport check_element(const GradedAlgebra& a, const HomogeneousElement& l, bool strong) {
  auto report = base_report(a, strong ? "strong" : "weak");
  auto check = strong ? is_strong_lefschetz(a, l) : is_lefschetz(a, l);
  report.element = l;
  report.element_text = a.format(l);
  report.trials_used = 1;
  report.verdict = check.ok ? Verdict::certified_success : Verdict::element_failure;
  report.witness = check.witness;
  report.profiles = std::move(check.profiles);
  for (const auto& p : report.profiles) report.powers.push_back(p.power);
  return report;
}

}  // namespace

bool RankProfile::all_maximal() const {
  return std::all_of(rows.begin(), rows.end(), [](const RankRow& r) { return r.maximal; });
}

std::optional<RankRow> RankProfile::first_failure() const {
  for (const auto& r : rows)
    if (!r.maximal) return r;
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_success:
      return "certified_success";
    case Verdict::element_failure:
      return "element_failure";
    case Verdict::search_inconclusive:
      return "search_inconclusive";
  }
  return "unknown";
}

RankProfile rank_profile(const GradedAlgebra& a, const HomogeneousElement& w, int r) {
  if (r < 1) throw std::invalid_argument("rank profile needs a power r >= 1");
  return profile_of_power(a, a.power(w, r), w.degree(), r);
}

LefschetzCheck is_lefschetz(const GradedAlgebra& a, const HomogeneousElement& w) {
  a.check_owns(w);
  LefschetzCheck out;
  out.profiles.push_back(rank_profile(a, w, 1));
  out.ok = out.profiles.back().all_maximal();
  if (const auto f = out.profiles.back().first_failure()) out.witness = FailureWitness{1, f->degree};
  return out;
}

LefschetzCheck is_strong_lefschetz(const GradedAlgebra& a, const HomogeneousElement& l, bool stop_at_failure) {
  a.check_owns(l);
  if (l.degree() != 1) throw std::invalid_argument("strong Lefschetz elements have degree 1");
  LefschetzCheck out;
  out.ok = true;
  auto lr = a.one();
  for (int r = 1; r <= a.socle_degree(); ++r) {
    lr = a.multiply(lr, l);
    out.profiles.push_back(profile_of_power(a, lr, 1, r));
    if (const auto f = out.profiles.back().first_failure()) {
      if (out.ok) out.witness = FailureWitness{r, f->degree};
      out.ok = false;
      if (stop_at_failure) break;
    }
  }
  return out;
}

LefschetzReport check_weak_element(const GradedAlgebra& a, const HomogeneousElement& l) {
  return check_element(a, l, false);
}

LefschetzReport check_strong_element(const GradedAlgebra& a, const HomogeneousElement& l) {
  return check_element(a, l, true);
}

LefschetzReport search_weak(const GradedAlgebra& a, std::size_t trials, std::uint64_t seed) {
  return search(a, trials, seed, false);
}

LefschetzReport search_strong(const GradedAlgebra& a, std::size_t trials, std::uint64_t seed) {
  return search(a, trials, seed, true);
}

bool MaxRankReport::all_certified() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const MaxRankDegree& d) { return d.verdict == Verdict::certified_success; });
}

MaxRankReport maximal_rank_property(const GradedAlgebra& a, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("at least one trial is required");
  MaxRankReport report;
  report.algebra_fingerprint = a.fingerprint();
  report.field = a.field();
  report.probabilistic_field = a.field().is_prime();
  report.seed = seed;
  std::mt19937_64 rng(seed);
  for (int d = 1; d <= a.socle_degree(); ++d) {
    MaxRankDegree entry;
    entry.degree = d;
    std::size_t best_failures = SIZE_MAX;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto f = random_homogeneous(a, d, rng);
      auto profile = rank_profile(a, f, 1);
      entry.trials_used = t + 1;
      const auto failures = static_cast<std::size_t>(
          std::count_if(profile.rows.begin(), profile.rows.end(), [](const RankRow& r) { return !r.maximal; }));
      if (failures < best_failures) {
        best_failures = failures;
        entry.element = a.format(f);
        entry.profile = std::move(profile);
      }
      if (failures == 0) {
        entry.verdict = Verdict::certified_success;
        break;
      }
    }
    report.degrees.push_back(std::move(entry));
  }
  return report;
}

}  // namespace slp
