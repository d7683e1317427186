#ifndef DTSURV_DATA_HPP
#define DTSURV_DATA_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dtsurv/missingness.hpp"
#include "dtsurv/model.hpp"

namespace dtsurv {

// One individual's observed person-time series. All per-interval vectors
// run over the observation window {entry_time .. exit_time()} and share
// length(). outcome has at most one 1, at the final index.
struct PersonRecord {
  std::string id;
  int entry_time = 1;               // s_i, 1-based calendar index
  std::vector<std::int8_t> sex;     // per interval, 0/1
  std::vector<double> age;          // per interval, raw years
  std::vector<std::int8_t> outcome; // y
  TestHistory history;
  KnownStatus known;                // derived from history

  int length() const { return static_cast<int>(outcome.size()); }
  int exit_time() const { return entry_time + length() - 1; }
  bool died() const { return !outcome.empty() && outcome.back() == 1; }

  CovariateRow covariate_row(const ModelSpec& spec, int r) const;

  // Checks structural invariants and recomputes `known`.
  // Throws DataError with the record id on violation.
  void finalize(int max_interval);
};

struct Dataset {
  std::vector<PersonRecord> records;

  std::size_t size() const { return records.size(); }
  long person_years() const;
  long deaths() const;
  long tests() const;
  // Counts of test-history groups 1..4.
  std::array<long, 4> group_counts() const;
};

}  // namespace dtsurv

#endif
