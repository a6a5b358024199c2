#include "ordgraph/ordinal.hpp"

#include <cctype>
#include <limits>

namespace ordgraph {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw std::overflow_error("ordinal coefficient overflow");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("ordinal coefficient overflow");
  return a * b;
}


const Ordinal& one_ordinal() {
  static const Ordinal o = Ordinal::natural(1);
  return o;
}

}  // namespace

Ordinal::Ordinal() = default;

Ordinal Ordinal::natural(std::uint64_t n) {
  Ordinal r;
  if (n > 0) r.terms_.push_back({Ordinal(), n});
  return r;
}

Ordinal Ordinal::omega() { return omega_power(natural(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
  Ordinal r;
  if (coefficient > 0) r.terms_.push_back({exponent, coefficient});
  return r;
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw std::invalid_argument("CNF coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw std::invalid_argument("CNF exponents must strictly decrease");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool Ordinal::is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

std::optional<std::uint64_t> Ordinal::as_natural() const {
  if (terms_.empty()) return 0;
  if (is_finite()) return terms_[0].coefficient;
  return std::nullopt;
}

const Ordinal& Ordinal::leading_exponent() const {
  if (terms_.empty()) throw UndefinedOrdinal("leading exponent of 0");
  return terms_.front().exponent;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

Comparison compare(const Ordinal& a, const Ordinal& b) {
  auto c = a <=> b;
  if (c < 0) return Comparison::Less;
  if (c > 0) return Comparison::Greater;
  return Comparison::Equal;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.leading_exponent();
  std::vector<OrdinalTerm> out;
  for (const auto& t : a.terms()) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else {
      if (t.exponent == lead) {
        // merge coefficients; the rest of a is absorbed
        out.push_back({lead, checked_add(t.coefficient, b.terms()[0].coefficient)});
        out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
        return Ordinal::from_terms(std::move(out));
      }
      break;
    }
  }
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal left_sub(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0;
  while (i < x.size() && i < y.size() && x[i] == y[i]) ++i;
  if (i == x.size()) return Ordinal::from_terms({y.begin() + i, y.end()});
  if (i == y.size()) throw UndefinedOrdinal("left_sub: a > b");
  auto c = x[i].exponent <=> y[i].exponent;
  if (c > 0) throw UndefinedOrdinal("left_sub: a > b");
  if (c < 0) return Ordinal::from_terms({y.begin() + i, y.end()});
  if (x[i].coefficient > y[i].coefficient) throw UndefinedOrdinal("left_sub: a > b");
  std::vector<OrdinalTerm> out{{y[i].exponent, y[i].coefficient - x[i].coefficient}};
  out.insert(out.end(), y.begin() + i + 1, y.end());
  return Ordinal::from_terms(std::move(out));
}

namespace {

// a * n for finite n >= 1, a != 0
Ordinal mul_natural(const Ordinal& a, std::uint64_t n) {
  std::vector<OrdinalTerm> out = a.terms();
  out[0].coefficient = checked_mul(out[0].coefficient, n);
  return Ordinal::from_terms(std::move(out));
}

}  // namespace

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Ordinal& lead = a.leading_exponent();
  Ordinal result;
  // right distributivity over the CNF of b; a * w^c = w^(lead + c) for c > 0
  for (const auto& t : b.terms()) {
    if (t.exponent.is_zero()) {
      result = add(result, mul_natural(a, t.coefficient));
    } else {
      result = add(result, Ordinal::omega_power(add(lead, t.exponent), t.coefficient));
    }
  }
  return result;
}

namespace {

Ordinal pow_natural(const Ordinal& a, std::uint64_t n) {
  Ordinal r = one_ordinal();
  Ordinal base = a;
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return r;
}

// -1 + c for c >= 1
Ordinal pred_left(const Ordinal& c) { return left_sub(one_ordinal(), c); }

}  // namespace

Ordinal pow(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return one_ordinal();
  if (a.is_zero()) return Ordinal();
  if (a == one_ordinal()) return a;

  // b = infinite part + m
  std::vector<OrdinalTerm> inf;
  std::uint64_t m = 0;
  for (const auto& t : b.terms()) {
    if (t.exponent.is_zero()) m = t.coefficient;
    else inf.push_back(t);
  }

  Ordinal limit_part = one_ordinal();
  if (!inf.empty()) {
    Ordinal exponent;
    if (a.is_finite()) {
      // n^(w^c) = w^(w^(-1+c))
      for (const auto& t : inf) exponent = add(exponent, Ordinal::omega_power(pred_left(t.exponent), t.coefficient));
    } else {
      // a^(w^c) = w^(lead(a) * w^c)
      exponent = mul(a.leading_exponent(), Ordinal::from_terms(inf));
    }
    limit_part = Ordinal::omega_power(exponent);
  }
  if (m == 0) return limit_part;
  if (a.is_finite() && inf.empty()) {
    std::uint64_t base = *a.as_natural(), r = 1;
    for (std::uint64_t i = 0; i < m; ++i) r = checked_mul(r, base);
    return Ordinal::natural(r);
  }
  return mul(limit_part, pow_natural(a, m));
}

std::pair<Ordinal, Ordinal> divmod(const Ordinal& g, const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) throw UndefinedOrdinal("divmod: divisor and bound must be >= 1");
  if (!(g < mul(a, b))) throw UndefinedOrdinal("divmod: g must be below a*b");
  if (g < a) return {Ordinal(), g};

  const Ordinal& lead = a.leading_exponent();
  const std::uint64_t c1 = a.terms()[0].coefficient;
  std::vector<OrdinalTerm> q_terms;
  std::vector<OrdinalTerm> low;
  for (const auto& t : g.terms()) {
    if (t.exponent > lead) q_terms.push_back({left_sub(lead, t.exponent), t.coefficient});
    else low.push_back(t);
  }
  Ordinal rest = Ordinal::from_terms(low);
  std::uint64_t m = 0;
  if (!low.empty() && low[0].exponent == lead) m = low[0].coefficient / c1;
  if (m > 0 && mul_natural(a, m) > rest) --m;
  Ordinal r = m > 0 ? left_sub(mul_natural(a, m), rest) : rest;
  if (m > 0) q_terms.push_back({Ordinal(), m});
  Ordinal q = Ordinal::from_terms(std::move(q_terms));
  if (!(q < b) || !(r < a)) throw UndefinedOrdinal("divmod: no decomposition within bounds");
  return {q, r};
}

std::optional<Ordinal> omega_power_exponent(const Ordinal& a) {
  if (a.terms().size() == 1 && a.terms()[0].coefficient == 1) return a.terms()[0].exponent;
  return std::nullopt;
}

// ---- text form ----

namespace {

void print_into(const Ordinal& a, std::string& out);

void print_exponent(const Ordinal& e, std::string& out) {
  if (e.is_finite()) {
    out += std::to_string(*e.as_natural());
  } else if (e == Ordinal::omega()) {
    out += 'w';
  } else {
    out += '(';
    print_into(e, out);
    out += ')';
  }
}

void print_into(const Ordinal& a, std::string& out) {
  if (a.is_zero()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent != one_ordinal()) {
      out += '^';
      print_exponent(t.exponent, out);
    }
    if (t.coefficient != 1) out += '*' + std::to_string(t.coefficient);
  }
}

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view s) : s_(s) {}

  Ordinal parse_all() {
    Ordinal r = ord();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw OrdinalSyntaxError(msg + " at position " + std::to_string(pos_), pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::uint64_t nat() {
    if (!at_digit()) fail("expected a natural number");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = checked_add(checked_mul(v, 10), static_cast<std::uint64_t>(s_[pos_] - '0'));
      ++pos_;
    }
    return v;
  }

  Ordinal ord() {
    Ordinal r = term();
    while (eat('+')) r = add(r, term());
    return r;
  }

  Ordinal term() {
    if (at_digit()) return Ordinal::natural(nat());
    if (!eat('w')) fail("expected 'w' or a natural number");
    Ordinal exponent = one_ordinal();
    if (eat('^')) exponent = atom();
    std::uint64_t coefficient = 1;
    if (eat('*')) {
      std::size_t at = pos_;
      coefficient = nat();
      if (coefficient == 0) {
        pos_ = at;
        skip();
        fail("coefficient 0 is not allowed");
      }
    }
    return Ordinal::omega_power(exponent, coefficient);
  }

  Ordinal atom() {
    if (at_digit()) return Ordinal::natural(nat());
    if (eat('w')) return Ordinal::omega();
    if (eat('(')) {
      Ordinal r = ord();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    fail("expected exponent");
  }
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse_all(); }

std::string to_string(const Ordinal& a) {
  std::string out;
  print_into(a, out);
  return out;
}

}  // namespace ordgraph
