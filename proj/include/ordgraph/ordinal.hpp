#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordgraph {

struct OrdinalTerm;

// Ordinal below epsilon_0 in Cantor normal form. The empty term list is 0.
class Ordinal {
 public:
  Ordinal();
  static Ordinal natural(std::uint64_t n);
  static Ordinal omega();
  // w^exponent * coefficient; coefficient 0 gives 0.
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);
  // Throws std::invalid_argument unless exponents strictly decrease and coefficients are >= 1.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  bool is_successor() const;
  std::optional<std::uint64_t> as_natural() const;
  // Exponent of the leading term. Throws on 0.
  const Ordinal& leading_exponent() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

enum class Comparison { Less, Equal, Greater };

// Raised for operations outside their domain (left_sub with a > b, bad divmod, ...).
class UndefinedOrdinal : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OrdinalSyntaxError : public std::invalid_argument {
 public:
  OrdinalSyntaxError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Ordinal add(const Ordinal& a, const Ordinal& b);
// The unique g with a + g = b.
Ordinal left_sub(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
// pow(0, 0) is 1.
Ordinal pow(const Ordinal& a, const Ordinal& b);
// (b1, a1) with g = a*b1 + a1, b1 < b, a1 < a.
std::pair<Ordinal, Ordinal> divmod(const Ordinal& g, const Ordinal& a, const Ordinal& b);
Comparison compare(const Ordinal& a, const Ordinal& b);
std::optional<Ordinal> omega_power_exponent(const Ordinal& a);

Ordinal parse_ordinal(std::string_view text);
std::string to_string(const Ordinal& a);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

}  // namespace ordgraph
