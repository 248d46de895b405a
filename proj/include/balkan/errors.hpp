#pragma once

#include <stdexcept>
#include <string>

namespace balkan {

/// Input outside an operation's documented domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A convergent denominator q_n vanished at the requested depth.
class ZeroConvergentDenominator : public std::runtime_error {
 public:
  explicit ZeroConvergentDenominator(long depth)
      : std::runtime_error("convergent denominator vanishes at depth " + std::to_string(depth)),
        depth_(depth) {}
  long depth() const noexcept { return depth_; }

 private:
  long depth_;
};

/// Depth doubling did not reach agreement before the depth cap.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(long max_depth)
      : std::runtime_error("no agreement of successive convergents up to depth " +
                           std::to_string(max_depth)),
        max_depth_(max_depth) {}
  long max_depth() const noexcept { return max_depth_; }

 private:
  long max_depth_;
};

/// The integer relation search found no candidate that survives validation.
class NoRelation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace balkan
