#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toricarc/integer.hpp"

namespace toricarc {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

enum class OrderKind { degrevlex, lex, deglex };

/// Monomial order over a fixed number of variables. Variables are ranked by
/// `ranking` (most significant first) and optionally split into consecutive
/// blocks of that ranking; blocks are compared in turn, each with `kind`.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::size_t nvars);
  MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking, std::vector<std::size_t> block_sizes = {});

  /// Identity ranking split into blocks of the given sizes.
  static MonomialOrder blocked(OrderKind kind, std::vector<std::size_t> block_sizes);

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return ranking_.size(); }
  const std::vector<std::size_t>& ranking() const { return ranking_; }
  const std::vector<std::size_t>& block_sizes() const { return blocks_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  OrderKind kind_ = OrderKind::degrevlex;
  std::vector<std::size_t> ranking_;
  std::vector<std::size_t> blocks_;
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Polynomial with rational coefficients. Terms are kept in a canonical,
/// order-independent layout (descending lexicographic exponent vectors) with no
/// zero coefficients, so == is structural equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly monomial(Monomial m, const Rational& c = 1);
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  long degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;
  Term leading_term(const class MonomialOrder& order) const;

  /// Terms sorted descending by the given order.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;

  /// Replaces variable i by images[i]; all images share one ring.
  Poly substitute(const std::vector<Poly>& images) const;

  Poly pow(unsigned e) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  Poly operator-() const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  bool operator==(const Poly& other) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Names for printing and parsing. `inverses` pairs a parameter variable with
/// the variable standing for its inverse; products q^a w^b print as q^(a-b).
struct VariableNames {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> inverses;

  static VariableNames indexed(const std::string& prefix, std::size_t count, std::size_t first = 1);
  std::size_t size() const { return names.size(); }
  /// Index of a name, or size() if absent.
  std::size_t find(std::string_view name) const;
};

/// Canonical text: terms in descending order, coefficients as exact fractions,
/// e.g. "x1*x2*x3 - q1", "3/2*x1^2 - q1^-1*q2".
std::string format_poly(const Poly& p, const VariableNames& names, const MonomialOrder& order);

/// Parses the canonical text format (also accepts parentheses and integer
/// powers of parenthesized expressions). Throws ParseError.
Poly parse_poly(std::string_view text, const VariableNames& names);

/// Identifiers appearing in the given lines, sorted by alphabetic prefix then
/// numeric suffix (so x2 < x10).
VariableNames discover_variables(const std::vector<std::string>& lines);

}  // namespace toricarc
