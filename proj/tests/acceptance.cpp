// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "slp/cli.hpp"

namespace lab = slp::lab;
using slp::FieldSpec;
using slp::GradedAlgebra;
using slp::Verdict;

namespace {

const FieldSpec QQ = FieldSpec::rationals();
const std::vector<std::size_t> hilb_b{1, 5, 14, 30, 51, 71, 84, 84, 70, 46, 16};
const std::vector<std::size_t> hilb_c{1, 5, 14, 30, 51, 71, 84, 84, 70, 45, 12};
const std::vector<std::uint64_t> example_seeds{1, 2, 3};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string spaced(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string first_failure(const lab::SweepResult& s) {
  return std::to_string(s.cases) + " cases, " + std::to_string(s.failures.size()) + " failures" +
         (s.ok() ? "" : "; first: " + s.failures.front()) + (s.notes.empty() ? "" : "; " + s.notes.front());
}

GradedAlgebra example_b(std::uint64_t seed) {
  return slp::cli::build_algebra(slp::cli::parse_spec(slp::cli::gegen_spec_text(seed)));
}

int failures = 0;

void criterion(int n, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    o.pass = false;
    o.detail += "; over the time limit";
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << n << "] " << name << "  (" << std::fixed
            << std::setprecision(2) << secs << " s)  " << o.detail << std::endl;
}

}  // namespace

int main() {
  criterion(1, "example quotient B has the expected Hilbert function", 60, [] {
    Outcome o;
    for (auto seed : example_seeds) {
      const auto h = example_b(seed).hilbert_function();
      o.detail += "seed " + std::to_string(seed) + ": " + spaced(h) + "; ";
      o.pass = o.pass || h == hilb_b;
    }
    return o;
  });

  criterion(2, "C = B/(b^9) Hilbert function and the 5 + 12 > 16 certificate", 60, [] {
    Outcome o;
    for (auto seed : example_seeds) {
      const auto b = example_b(seed);
      std::mt19937_64 rng(seed);
      const auto l = slp::random_homogeneous(b, 1, rng);
      const auto lr = b.power(l, 9);
      const auto hc = lr.is_zero() ? b.hilbert_function() : slp::quotient_by_form(b, lr).hilbert_function();
      const auto cert = lab::certified_slp_disproof(b, l, 9, 1);
      const bool ok = hc == hilb_c && cert && cert->source_dim == 5 && cert->quotient_dim == 12 && cert->target_dim == 16;
      o.detail += "seed " + std::to_string(seed) + ": Hilb_C " + spaced(hc) + (cert ? ", certificate" : ", no certificate") + "; ";
      o.pass = o.pass || ok;
    }
    return o;
  });

  criterion(3, "B has the maximal rank property in degrees 1..10", 300, [] {
    Outcome o;
    for (auto seed : example_seeds) {
      const auto b = example_b(seed);
      if (b.hilbert_function() != hilb_b) continue;
      const auto m = slp::maximal_rank_property(b, slp::default_trials, seed);
      o.pass = m.all_certified() && m.degrees.size() == 10;
      o.detail = "seed " + std::to_string(seed) + ": " + std::to_string(m.degrees.size()) + " degrees, " +
                 (m.all_certified() ? "all certified" : "not all certified");
      return o;
    }
    o.detail = "no seed produced the expected B";
    return o;
  });

  criterion(4, "monomial complete intersections, n <= 4, e <= 256, are strong Lefschetz", 600, [] {
    const auto s = lab::verify_stanley(256, slp::default_trials, 1);
    return Outcome{s.ok(), first_failure(s)};
  });

  criterion(5, "20 random towers extended by a random monic polynomial are strong Lefschetz", 600, [] {
    const auto s = lab::verify_extensions(20, 2024);
    return Outcome{s.ok() && s.cases == 20, first_failure(s)};
  });

  criterion(6, "reduction coefficients match the rewrite oracle, binomial identity holds", 10, [] {
    const auto s = lab::verify_coefficients(8, 25);
    return Outcome{s.ok(), first_failure(s)};
  });

  criterion(7, "S determinants equal the Cauchy formula and are nonzero, t < r <= 30", 30, [] {
    const auto s = lab::verify_smatrix(30);
    return Outcome{s.ok() && s.cases == 465, first_failure(s)};
  });

  criterion(8, "50 duality instances agree", 300, [] {
    const auto s = lab::verify_duality(50, 1);
    return Outcome{s.ok() && s.cases == 50, first_failure(s)};
  });

  criterion(9, "block matrix ranks equal direct ranks, k <= 3, q <= 4", 300, [] {
    const auto s = lab::verify_blockmatrix(1);
    return Outcome{s.ok(), first_failure(s)};
  });

  criterion(10, "K[x,y]/(x^2,y^2): strong over QQ, certified failure for every form over GF(2)", 1, [] {
    Outcome o;
    const auto q = slp::monomial_complete_intersection(QQ, {2, 2});
    const bool q_ok = slp::search_strong(q, slp::default_trials, 1).verdict == Verdict::certified_success;
    const auto g = slp::monomial_complete_intersection(FieldSpec::prime(2), {2, 2});
    // The projective line over GF(2) has three points: x, y, x + y.
    std::size_t refuted = 0;
    for (const auto& c : std::vector<std::vector<long>>{{1, 0}, {0, 1}, {1, 1}}) {
      const auto l = g.from_ints(1, c);
      const bool fails = slp::check_strong_element(g, l).verdict == Verdict::element_failure;
      bool certified = false;
      for (int r = 1; r <= g.socle_degree() && !certified; ++r)
        for (int i = 0; i + r <= g.socle_degree() && !certified; ++i)
          certified = lab::certified_slp_disproof(g, l, r, i).has_value();
      if (fails && certified) ++refuted;
    }
    o.pass = q_ok && refuted == 3;
    o.detail = std::string("QQ ") + (q_ok ? "certified" : "not certified") + ", GF(2) " + std::to_string(refuted) +
               " of 3 forms refuted";
    return o;
  });

  criterion(11, "pure towers are Gorenstein with symmetric unimodal Hilbert functions", 0, [] {
    std::vector<GradedAlgebra> corpus;
    for (const auto& e : lab::stanley_corpus(256)) corpus.push_back(slp::monomial_complete_intersection(QQ, e));
    std::mt19937_64 rng(11);
    for (int n = 0; n < 40; ++n) corpus.push_back(lab::random_tower(QQ, 1 + n % 3, 4, 10, rng));
    for (int n = 0; n < 10; ++n) corpus.push_back(lab::random_tower(FieldSpec::prime(101), 1 + n % 3, 4, 10, rng));
    std::size_t bad = 0;
    for (const auto& a : corpus) {
      const auto f = slp::check_symmetric_unimodal(a.hilbert_function());
      if (!(a.is_pure_tower() && a.socle().is_gorenstein && f.symmetric && f.unimodal)) ++bad;
    }
    return Outcome{bad == 0, std::to_string(corpus.size()) + " towers, " + std::to_string(bad) + " violations"};
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
