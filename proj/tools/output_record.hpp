#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "annular/arith.hpp"

namespace annular::cli {

/// One computed table: parameters, the method that produced it, counts keyed
/// by k, and the genus view of the same counts.
struct OutputRecord {
  std::map<std::string, int> parameters;
  std::string method;
  /// 1 for the single-cycle series, 2 for the two-cycle series.
  int vertices = 2;
  std::map<int, BigInt> distribution;
  std::map<int, BigInt> genus;
  /// Values of k with a nonzero count but no admissible genus.
  std::vector<int> invalid_k;
  std::optional<double> seconds;

  /// Fills `genus` and `invalid_k` from `distribution`.
  void derive_genus();
  int edges() const;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

std::string to_json(const OutputRecord& record);
OutputRecord from_json(const std::string& text);

/// Header "p,q,s,method,vertices,k,genus,count,seconds" and one row per k.
/// Absent parameters and an absent timing are empty fields; an impossible
/// genus is written as "invalid".
std::string to_csv(const OutputRecord& record);
OutputRecord from_csv(const std::string& text);

std::string to_table(const OutputRecord& record);

}  // namespace annular::cli
