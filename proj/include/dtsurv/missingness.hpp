#ifndef DTSURV_MISSINGNESS_HPP
#define DTSURV_MISSINGNESS_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace dtsurv {

// Observed testing data over one person's window, indexed relative to the
// window (0-based internally, reported 1-based in GroupLabel).
// result[r] is meaningful only where tested[r] == 1. A valid history has
// no negative result at or after a positive one; positive results may
// repeat (the process is monotone, so later tests of a positive person
// are positive).
struct TestHistory {
  std::vector<std::int8_t> tested;  // delta*
  std::vector<std::int8_t> result;  // observed status at tested indices

  int length() const { return static_cast<int>(tested.size()); }
};

// known[r] = 1 where the secondary-event status is logically determined
// by the test results; status[r] = known[r] * x[r] (0 where unknown).
struct KnownStatus {
  std::vector<std::int8_t> known;   // delta-circle
  std::vector<std::int8_t> status;  // u

  int length() const { return static_cast<int>(known.size()); }
};

// Test-history group:
//   1  no tests
//   2  tests, all negative
//   3  negative test(s) followed by positive test(s)
//   4  positive test(s) only
// t_minus: 1-based index of the last negative test (groups 2, 3).
// t_plus:  1-based index of the first positive test (groups 3, 4).
struct GroupLabel {
  int group = 1;
  std::optional<int> t_minus;
  std::optional<int> t_plus;
};

// Classify a true status vector against a testing-indicator vector.
// x must be monotone non-decreasing; vectors must have equal length.
GroupLabel classify(const std::vector<std::int8_t>& x,
                    const std::vector<std::int8_t>& tested);

// Classify from recorded test results (validates their consistency).
GroupLabel classify_results(const TestHistory& history);

// Known-status indicator implied by a group label:
//   group 1: all unknown; group 2: known through t-, unknown after;
//   group 3: known through t-, unknown strictly between t- and t+,
//            known from t+; group 4: unknown before t+, known from t+.
std::vector<std::int8_t> known_mask(const GroupLabel& label, int length);

// Full observed-status derivation: negative results carry back, positive
// results carry forward, everything else is unknown.
KnownStatus derive_observed(const TestHistory& history);

}  // namespace dtsurv

#endif
