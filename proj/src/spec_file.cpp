#include "slp/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace slp::cli {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Recursive descent over  poly := [+-] term {(+|-) term},  term := factor {* factor},
// factor := integer | name [^ integer].
class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& names, int line)
      : s_(text), names_(names), line_(line) {}

  SpecPolynomial parse() {
    std::map<std::vector<int>, mpz_class, std::greater<>> acc;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' at column " + std::to_string(pos_ + 1));
      }
      first = false;
      auto [exps, coeff] = term();
      acc[exps] += sign * coeff;
      skip();
    }
    SpecPolynomial p;
    for (auto& [e, c] : acc)
      if (c != 0) p.terms.emplace_back(e, c);
    return p;
  }

 private:
  std::pair<std::vector<int>, mpz_class> term() {
    std::vector<int> exps(names_.size(), 0);
    mpz_class coeff = 1;
    while (true) {
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= mpz_class(digits());
      } else {
        const auto name = identifier();
        const auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) fail("unknown variable '" + name + "'");
        long e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          const auto d = digits();
          if (d.size() > 6) fail("exponent too large");
          e = std::stol(d);
        }
        exps[static_cast<std::size_t>(it - names_.begin())] += static_cast<int>(e);
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return {exps, coeff};
  }

  std::string digits() {
    const auto b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a number at column " + std::to_string(b + 1));
    return s_.substr(b, pos_ - b);
  }

  std::string identifier() {
    const auto b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const auto name = s_.substr(b, pos_ - b);
    if (!is_identifier(name)) fail("unexpected input at column " + std::to_string(b + 1));
    return name;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw SpecError(line_, what); }

  const std::string& s_;
  const std::vector<std::string>& names_;
  int line_;
  std::size_t pos_ = 0;
};

int total(const std::vector<int>& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

void require_homogeneous(const SpecPolynomial& p, int line) {
  for (const auto& [e, c] : p.terms)
    if (total(e) != total(p.terms.front().first)) throw SpecError(line, "polynomial is not homogeneous");
}

std::uint64_t parse_u64(const std::string& v, int line, const std::string& key) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      v.size() > 19) {
    throw SpecError(line, "bad value for " + key + ": '" + v + "'");
  }
  return std::stoull(v);
}

HomogeneousElement monomial_element(const GradedAlgebra& a, const std::vector<int>& exps) {
  auto w = a.one();
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0) w = a.multiply(w, a.power(a.variable(i), exps[i]));
  return w;
}

// Sum of c * monomial over the terms, in the algebra a (whose variables are the
// leading coordinates of each exponent vector).
HomogeneousElement realize(const GradedAlgebra& a, int degree,
                           const std::vector<std::pair<std::vector<int>, mpz_class>>& terms) {
  auto w = a.zero(degree);
  for (const auto& [e, c] : terms) w += Scalar::from_mpz(a.field(), c) * monomial_element(a, e);
  return w;
}

}  // namespace

int SpecPolynomial::degree() const { return terms.empty() ? 0 : total(terms.front().first); }

AlgebraSpec parse_spec(const std::string& text) {
  AlgebraSpec spec;
  bool have_field = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto body = trim(raw.substr(0, raw.find('#')));
    if (body.empty()) continue;
    std::istringstream words(body);
    std::string keyword;
    words >> keyword;

    if (keyword == "field") {
      if (have_field) throw SpecError(line, "field declared twice");
      std::string kind, p, extra;
      words >> kind >> p >> extra;
      if (kind == "rational" && p.empty()) {
        spec.field = FieldSpec::rationals();
      } else if (kind == "prime" && extra.empty()) {
        const auto value = parse_u64(p, line, "prime");
        try {
          spec.field = FieldSpec::prime(value);
        } catch (const std::invalid_argument& e) {
          throw SpecError(line, e.what());
        }
      } else {
        throw SpecError(line, "expected 'field rational' or 'field prime <p>'");
      }
      have_field = true;
      continue;
    }
    if (!have_field) throw SpecError(line, "the first statement must declare the field");

    if (keyword == "extend") {
      const auto colon = body.find(':');
      if (colon == std::string::npos) throw SpecError(line, "expected 'extend <var> : <polynomial>'");
      const auto var = trim(body.substr(6, colon - 6));
      if (!is_identifier(var)) throw SpecError(line, "bad variable name '" + var + "'");
      if (std::find(spec.variables.begin(), spec.variables.end(), var) != spec.variables.end())
        throw SpecError(line, "variable '" + var + "' already declared");
      auto names = spec.variables;
      names.push_back(var);
      SpecStep step;
      step.kind = SpecStep::Kind::extend;
      step.var = var;
      step.line = line;
      step.poly = PolyParser(body.substr(colon + 1), names, line).parse();
      if (step.poly.terms.empty()) throw SpecError(line, "relation is zero");
      require_homogeneous(step.poly, line);
      const int d = step.poly.degree();
      std::vector<int> pure(names.size(), 0);
      pure.back() = d;
      const auto lead = std::find_if(step.poly.terms.begin(), step.poly.terms.end(),
                                     [&](const auto& t) { return t.first == pure; });
      if (d < 1 || lead == step.poly.terms.end() || lead->second != 1)
        throw SpecError(line, "relation is not monic in " + var);
      spec.variables.push_back(var);
      spec.steps.push_back(std::move(step));
    } else if (keyword == "quotient") {
      std::string next;
      words >> next;
      SpecStep step;
      step.line = line;
      if (next == "random") {
        step.kind = SpecStep::Kind::quotient_random;
        bool has_degree = false, has_seed = false;
        std::string kv;
        while (words >> kv) {
          const auto eq = kv.find('=');
          const auto key = kv.substr(0, eq);
          const auto value = eq == std::string::npos ? "" : kv.substr(eq + 1);
          if (key == "degree" && !has_degree) {
            const auto d = parse_u64(value, line, key);
            if (d < 1 || d > 10000) throw SpecError(line, "degree must be between 1 and 10000");
            step.degree = static_cast<int>(d);
            has_degree = true;
          } else if (key == "seed" && !has_seed) {
            step.seed = parse_u64(value, line, key);
            has_seed = true;
          } else {
            throw SpecError(line, "unexpected '" + kv + "'");
          }
        }
        if (!has_degree || !has_seed) throw SpecError(line, "expected 'quotient random degree=<d> seed=<s>'");
      } else {
        const auto colon = body.find(':');
        if (colon == std::string::npos || trim(body.substr(8, colon - 8)) != "")
          throw SpecError(line, "expected 'quotient : <form>'");
        step.kind = SpecStep::Kind::quotient;
        step.poly = PolyParser(body.substr(colon + 1), spec.variables, line).parse();
        if (step.poly.terms.empty()) throw SpecError(line, "quotient form is zero");
        require_homogeneous(step.poly, line);
        if (step.poly.degree() < 1) throw SpecError(line, "quotient form must have positive degree");
      }
      spec.steps.push_back(std::move(step));
    } else {
      throw SpecError(line, "unknown statement '" + keyword + "'");
    }
  }
  if (!have_field) throw SpecError(0, "spec declares no field");
  return spec;
}

AlgebraSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(0, "cannot read spec file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string format_polynomial(const SpecPolynomial& p, const std::vector<std::string>& names) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (mag != 1 || total(e) == 0) factors.push_back(mag.get_str());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + std::to_string(e[i]));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::string print_spec(const AlgebraSpec& spec) {
  std::ostringstream os;
  if (spec.field.is_rational()) {
    os << "field rational\n";
  } else {
    os << "field prime " << spec.field.characteristic() << "\n";
  }
  std::vector<std::string> names;
  for (const auto& step : spec.steps) {
    switch (step.kind) {
      case SpecStep::Kind::extend:
        names.push_back(step.var);
        os << "extend " << step.var << " : " << format_polynomial(step.poly, names) << "\n";
        break;
      case SpecStep::Kind::quotient:
        os << "quotient : " << format_polynomial(step.poly, names) << "\n";
        break;
      case SpecStep::Kind::quotient_random:
        os << "quotient random degree=" << step.degree << " seed=" << step.seed << "\n";
        break;
    }
  }
  return os.str();
}

GradedAlgebra build_algebra(const AlgebraSpec& spec) {
  auto a = trivial_algebra(spec.field);
  for (const auto& step : spec.steps) {
    try {
      switch (step.kind) {
        case SpecStep::Kind::extend: {
          const int d = step.poly.degree();
          std::vector<std::vector<std::pair<std::vector<int>, mpz_class>>> by_degree(static_cast<std::size_t>(d + 1));
          for (const auto& [e, c] : step.poly.terms) {
            std::vector<int> base(e.begin(), e.end() - 1);
            by_degree[static_cast<std::size_t>(total(base))].emplace_back(std::move(base), c);
          }
          MonicExtensionPoly f;
          f.d = d;
          for (int i = 1; i <= d; ++i) f.lower.push_back(realize(a, i, by_degree[static_cast<std::size_t>(i)]));
          a = extend_monic(a, f, step.var);
          break;
        }
        case SpecStep::Kind::quotient: {
          const auto g = realize(a, step.poly.degree(), step.poly.terms);
          if (g.is_zero()) throw SpecError(step.line, "quotient form vanishes in the algebra");
          a = quotient_by_form(a, g);
          break;
        }
        case SpecStep::Kind::quotient_random: {
          std::mt19937_64 rng(step.seed);
          if (a.dim(step.degree) == 0) throw SpecError(step.line, "algebra has no forms of degree " + std::to_string(step.degree));
          a = quotient_by_form(a, random_homogeneous(a, step.degree, rng));
          break;
        }
      }
    } catch (const SpecError&) {
      throw;
    } catch (const std::exception& e) {
      throw SpecError(step.line, e.what());
    }
  }
  return a;
}

HomogeneousElement parse_element(const GradedAlgebra& a, const std::string& text) {
  const auto& names = a.variable_names();
  const auto p = PolyParser(text, names, 0).parse();
  if (p.terms.empty()) throw SpecError(0, "element is zero");
  require_homogeneous(p, 0);
  return realize(a, p.degree(), p.terms);
}

}  // namespace slp::cli
