#pragma once

// Command-line surface: argument handling, text rendering and the JSON
// output envelope. Kept in a library so the test suites can drive commands
// in-process.

#include "schubert/chow.hpp"
#include "schubert/cone.hpp"
#include "schubert/pfaffian.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace schubert::cli {

inline constexpr const char* kEngineVersion = "1.0.0";

/// Exit codes are a stable contract.
enum ExitCode : int { kAffirmative = 0, kNegative = 1, kUsage = 2 };

using nlohmann::json;

json rational_json(const Rational& q);
Rational rational_from_json(const json& j);
json partition_json(const Partition& lambda);
Partition partition_from_json(const json& j);
/// Terms in basis order: [{"partition": [...], "coeff": {"num", "den"}}].
json class_json(const ChowElement& a);
ChowElement class_from_json(const ChowRingPtr& ring, const json& j);
json report_json(const RobertsReport& report);

json envelope(const std::vector<std::string>& command, json parameters, json result);

/// "2,1", "[2,1]", "2 1" inside brackets, "[]" or "()" for the empty partition.
Partition parse_partition(std::string_view text);

/// Whitespace-separated terms "P" or "P:q", e.g. "[2]:1 [1,1]:-1/2".
/// Throws std::invalid_argument on malformed input or partitions outside the box.
ChowElement parse_class(const ChowRingPtr& ring, std::string_view text);

/// One row of cells per part.
std::string young_diagram(const Partition& lambda);

/// First line k, then k lines of k rationals.
MatrixX<Rational> read_matrix(std::istream& in);

/// Reduces every positive-degree component modulo h; degree 0 is kept.
ChowElement reduce_each_degree(const ChowElement& a);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
