#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cstq/gadgets.hpp"
#include "cstq/predecessor.hpp"
#include "cstq/text.hpp"

namespace cstq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kSchemaVersion = 1;

enum class InputFormat { ascii, ints };
enum class OutputFormat { human, structured, json };

struct RunConfig {
  std::string subcommand;
  std::string input_path;
  InputFormat input_format = InputFormat::ascii;
  std::string queries_path;  // empty: every position / range / pair
  bool show_phrases = false;
  std::uint64_t seed = 1;
  Index trials = 100;
  bool exhaustive = false;
  GadgetKind kind = GadgetKind::lcp_select;
  Index size = 4;
  unsigned workers = 1;
  double epsilon = 0.5;
  PredecessorFlavor flavor = PredecessorFlavor::yfast;
  OutputFormat output = OutputFormat::human;
  bool bench = false;
  int repetitions = 5;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ascii: bytes as code points with one trailing newline dropped, sigma 256.
// ints: whitespace-separated non-negative integers, sigma = max + 1.
Text read_text(const std::string& path, InputFormat format);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);
// Parses argv and runs; returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cstq::cli
