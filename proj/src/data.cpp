#include "dtsurv/data.hpp"

#include "dtsurv/errors.hpp"

namespace dtsurv {

CovariateRow PersonRecord::covariate_row(const ModelSpec& spec, int r) const {
  CovariateRow row;
  row.z = spec.make_z(sex[r], age[r]);
  row.j = entry_time + r;
  row.is_entry = (r == 0);
  return row;
}

void PersonRecord::finalize(int max_interval) {
  const auto fail = [this](const std::string& what) {
    throw DataError("record '" + id + "': " + what);
  };
  const std::size_t k = outcome.size();
  if (k == 0) fail("empty series");
  if (sex.size() != k || age.size() != k || history.tested.size() != k ||
      history.result.size() != k)
    fail("per-interval vectors have unequal lengths");
  if (entry_time < 1 || exit_time() > max_interval)
    fail("window outside the time grid {1.." + std::to_string(max_interval) + "}");
  for (std::size_t r = 0; r < k; ++r) {
    if (sex[r] != 0 && sex[r] != 1) fail("sex must be 0 or 1");
    if (outcome[r] != 0 && outcome[r] != 1) fail("died must be 0 or 1");
    if (outcome[r] == 1 && r + 1 != k) fail("died=1 before the final interval");
    if (history.tested[r] != 0 && history.tested[r] != 1) fail("tested must be 0 or 1");
    if (history.tested[r] && history.result[r] != 0 && history.result[r] != 1)
      fail("test_result must be 0 or 1 where tested");
  }
  try {
    known = derive_observed(history);
  } catch (const InvalidInputError& e) {
    fail(e.what());
  }
}

long Dataset::person_years() const {
  long n = 0;
  for (const auto& rec : records) n += rec.length();
  return n;
}

long Dataset::deaths() const {
  long n = 0;
  for (const auto& rec : records) n += rec.died() ? 1 : 0;
  return n;
}

long Dataset::tests() const {
  long n = 0;
  for (const auto& rec : records)
    for (auto t : rec.history.tested) n += t;
  return n;
}

std::array<long, 4> Dataset::group_counts() const {
  std::array<long, 4> counts{0, 0, 0, 0};
  for (const auto& rec : records)
    counts[classify_results(rec.history).group - 1] += 1;
  return counts;
}

}  // namespace dtsurv
