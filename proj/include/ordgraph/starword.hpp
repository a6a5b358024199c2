#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ordgraph/path.hpp"

namespace ordgraph {

// 0, or T_e T_f* with s(e) = s(f).
class StarWord {
 public:
  static StarWord zero() { return StarWord(); }
  // throws PreconditionError unless s(e) = s(f)
  static StarWord make(Path e, Path f);

  bool is_zero() const { return !w_.has_value(); }
  const Path& left() const { return w_->first; }
  const Path& right() const { return w_->second; }

 private:
  StarWord() = default;
  std::optional<std::pair<Path, Path>> w_;
};

StarWord adjoint(const StarWord& w);
StarWord multiply(const StarWord& a, const StarWord& b);
// true when both are zero or both sides agree as paths
bool equals(const StarWord& a, const StarWord& b);
// "L * R" with words as printed by to_word, or "0"
std::string to_string(const StarWord& w);

}  // namespace ordgraph
