#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slp/algebra.hpp"

namespace slp::cli {

/// Parse or build failure. line() is 1-based; 0 means no particular line.
class SpecError : public std::runtime_error {
 public:
  SpecError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Integer polynomial over the variables declared so far. Terms are combined,
/// nonzero and sorted like the algebra basis (larger early exponents first).
struct SpecPolynomial {
  std::vector<std::pair<std::vector<int>, mpz_class>> terms;
  int degree() const;
};

struct SpecStep {
  enum class Kind { extend, quotient, quotient_random };
  Kind kind = Kind::extend;
  std::string var;      // extend only
  SpecPolynomial poly;  // extend and quotient
  int degree = 0;       // quotient_random
  std::uint64_t seed = 0;
  int line = 0;
};

struct AlgebraSpec {
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::string> variables;
  std::vector<SpecStep> steps;
};

/// Line grammar, '#' starts a comment:
///   field rational | field prime <p>
///   extend <var> : <monic polynomial in var>
///   quotient : <form>
///   quotient random degree=<d> seed=<s>
AlgebraSpec parse_spec(const std::string& text);
AlgebraSpec load_spec(const std::string& path);

std::string format_polynomial(const SpecPolynomial& p, const std::vector<std::string>& names);
std::string print_spec(const AlgebraSpec& spec);

GradedAlgebra build_algebra(const AlgebraSpec& spec);

/// Homogeneous element of `a` written in its variable names.
HomogeneousElement parse_element(const GradedAlgebra& a, const std::string& text);

}  // namespace slp::cli
