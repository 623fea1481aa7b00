#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace orbk::cli {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::vector<int> witness;  // empty when passing
  std::string replay;        // flags that re-run the failing tuple
};

struct Report {
  std::string command;
  std::vector<CheckResult> checks;
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
  std::vector<std::string> table_lines;
  std::vector<std::pair<std::string, double>> timings;

  bool passed() const;
};

std::string render_text(const Report& r, bool with_timing);
std::string render_json(const Report& r, bool with_timing);

/// Input errors (bad group spec, unreadable file, non-cocycle input) are
/// raised as InputError and map to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupSource {
  std::string spec;  // inline group spec
  std::string file;  // or a file holding one
  int order_cap = 64;
};

struct TwistSource {
  std::string poly;      // poly-spec, e.g. "x2yz|xy2z|xyz2"
  bool bockstein = false;
  std::string cocycle_file;
};

struct VerifyOptions {
  GroupSource group;
  int degree = 3;
  int trials = 10;
  std::uint64_t seed = 1;
  int workers = 1;
  /// Replay: evaluate one check of one trial at one tuple.
  std::string only_check;
  int only_trial = 0;
  std::vector<int> check_tuple;
  /// Test fixture: multiplies θ by this sign inside the homotopy check.
  int theta_sign = 1;
};
Report cmd_verify(const VerifyOptions& o);

struct TransgressOptions {
  GroupSource group;
  TwistSource twist;
  std::string out_dir;
};
Report cmd_transgress(const TransgressOptions& o);

struct FusionOptions {
  GroupSource group;
  TwistSource twist;
  int workers = 1;
  bool skip_axioms = false;
};
Report cmd_fusion_table(const FusionOptions& o);

/// Full command-line entry point; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbk::cli
