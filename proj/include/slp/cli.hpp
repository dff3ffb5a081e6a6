#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slp/lefschetz.hpp"
#include "slp/spec_file.hpp"
#include "slp/theorem_lab.hpp"

namespace slp::cli {

enum class Format { text, json };

/// Exit codes of the slp tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

struct Report {
  nlohmann::ordered_json body;     // everything except timing
  std::vector<std::string> lines;  // text rendering
  double seconds = 0;
  int exit_code = exit_ok;
};

/// Timing is written only when asked for, so equal inputs give equal bytes.
std::string emit_report(const Report& r, Format format, bool include_timing = false);

nlohmann::ordered_json to_json(const RankProfile& p);
nlohmann::ordered_json to_json(const LefschetzReport& r);
nlohmann::ordered_json to_json(const MaxRankReport& r);
std::string fingerprint_hex(std::uint64_t f);

Report hilbert_report(const AlgebraSpec& spec, const std::string& echo);

enum class CheckMode { weak, strong, maxrank };
Report check_report(const AlgebraSpec& spec, CheckMode mode, std::size_t trials, std::uint64_t seed,
                    const std::optional<std::string>& element, const std::string& echo);

Report sweep_report(const lab::SweepResult& r, const std::string& echo, const std::string& success_line);

/// Spec text of the 512-dimensional example quotient with a random octic.
std::string gegen_spec_text(std::uint64_t seed);
Report reproduce_gegen(std::uint64_t seed, std::size_t trials, const std::string& echo);

/// Runs the tool on arguments without the program name; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slp::cli
