#include "dtsurv/missingness.hpp"

#include <string>

#include "dtsurv/errors.hpp"

namespace dtsurv {

namespace {

// Shared core: classify from the status observed at tested indices.
// `status_at` must be valid wherever tested[r] == 1.
GroupLabel classify_tested(const std::vector<std::int8_t>& tested,
                           const std::vector<std::int8_t>& status_at) {
  GroupLabel label;
  int last_negative = -1;
  int first_positive = -1;
  for (std::size_t r = 0; r < tested.size(); ++r) {
    if (!tested[r]) continue;
    if (status_at[r]) {
      if (first_positive < 0) first_positive = static_cast<int>(r);
    } else {
      last_negative = static_cast<int>(r);
    }
  }
  if (last_negative >= 0 && first_positive >= 0 && last_negative > first_positive)
    throw InvalidInputError("test history: negative result after a positive one");
  if (last_negative < 0 && first_positive < 0) {
    label.group = 1;
  } else if (first_positive < 0) {
    label.group = 2;
    label.t_minus = last_negative + 1;
  } else if (last_negative < 0) {
    label.group = 4;
    label.t_plus = first_positive + 1;
  } else {
    label.group = 3;
    label.t_minus = last_negative + 1;
    label.t_plus = first_positive + 1;
  }
  return label;
}

}  // namespace

GroupLabel classify(const std::vector<std::int8_t>& x,
                    const std::vector<std::int8_t>& tested) {
  if (x.size() != tested.size())
    throw InvalidInputError("classify: x and tested must have equal length");
  for (std::size_t r = 0; r < x.size(); ++r) {
    if (x[r] != 0 && x[r] != 1)
      throw InvalidInputError("classify: x must be binary");
    if (r > 0 && x[r] < x[r - 1])
      throw InvalidInputError("classify: x must be monotone non-decreasing");
  }
  return classify_tested(tested, x);
}

GroupLabel classify_results(const TestHistory& history) {
  if (history.result.size() != history.tested.size())
    throw InvalidInputError("test history: tested/result length mismatch");
  return classify_tested(history.tested, history.result);
}

std::vector<std::int8_t> known_mask(const GroupLabel& label, int length) {
  if (length < 1) throw InvalidInputError("known_mask: length must be >= 1");
  auto in_range = [&](const std::optional<int>& t) {
    return t.has_value() && (*t < 1 || *t > length);
  };
  if (in_range(label.t_minus) || in_range(label.t_plus))
    throw InvalidInputError("known_mask: test index outside the series");

  std::vector<std::int8_t> mask(length, 0);
  switch (label.group) {
    case 1:
      break;
    case 2: {
      if (!label.t_minus) throw InvalidInputError("known_mask: group 2 needs t_minus");
      for (int r = 0; r < *label.t_minus; ++r) mask[r] = 1;
      break;
    }
    case 3: {
      if (!label.t_minus || !label.t_plus)
        throw InvalidInputError("known_mask: group 3 needs t_minus and t_plus");
      if (!(*label.t_minus < *label.t_plus))
        throw InvalidInputError("known_mask: group 3 requires t_minus < t_plus");
      for (int r = 0; r < *label.t_minus; ++r) mask[r] = 1;
      for (int r = *label.t_plus - 1; r < length; ++r) mask[r] = 1;
      break;
    }
    case 4: {
      if (!label.t_plus) throw InvalidInputError("known_mask: group 4 needs t_plus");
      for (int r = *label.t_plus - 1; r < length; ++r) mask[r] = 1;
      break;
    }
    default:
      throw InvalidInputError("known_mask: group must be in {1,2,3,4}");
  }
  return mask;
}

KnownStatus derive_observed(const TestHistory& history) {
  const GroupLabel label = classify_results(history);
  KnownStatus ks;
  ks.known = known_mask(label, history.length());
  ks.status.assign(history.tested.size(), 0);
  if (label.t_plus) {
    for (int r = *label.t_plus - 1; r < history.length(); ++r)
      ks.status[r] = ks.known[r];
  }
  return ks;
}

}  // namespace dtsurv
