#include "toricarc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "toricarc/errors.hpp"

namespace toricarc {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = other.exps_[i] - exps_[i];
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// ---------------------------------------------------------------------------

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), ranking_(nvars) {
  std::iota(ranking_.begin(), ranking_.end(), std::size_t{0});
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking,
                             std::vector<std::size_t> block_sizes)
    : kind_(kind), ranking_(std::move(ranking)), blocks_(std::move(block_sizes)) {
  std::vector<std::size_t> sorted = ranking_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw InvariantError("monomial order ranking is not a permutation");
  std::size_t total = std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0});
  if (!blocks_.empty() && total != ranking_.size())
    throw InvariantError("monomial order blocks do not cover all variables");
}

MonomialOrder MonomialOrder::blocked(OrderKind kind, std::vector<std::size_t> block_sizes) {
  std::size_t n = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
  std::vector<std::size_t> ranking(n);
  std::iota(ranking.begin(), ranking.end(), std::size_t{0});
  return MonomialOrder(kind, std::move(ranking), std::move(block_sizes));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  auto compare_block = [&](std::size_t begin, std::size_t end) -> std::strong_ordering {
    if (kind_ != OrderKind::lex) {
      std::uint64_t da = 0, db = 0;
      for (std::size_t k = begin; k < end; ++k) {
        da += a[ranking_[k]];
        db += b[ranking_[k]];
      }
      if (da != db) return da <=> db;
    }
    if (kind_ == OrderKind::degrevlex) {
      for (std::size_t k = end; k-- > begin;) {
        std::uint32_t ea = a[ranking_[k]], eb = b[ranking_[k]];
        if (ea != eb) return eb <=> ea;
      }
      return std::strong_ordering::equal;
    }
    for (std::size_t k = begin; k < end; ++k) {
      std::uint32_t ea = a[ranking_[k]], eb = b[ranking_[k]];
      if (ea != eb) return ea <=> eb;
    }
    return std::strong_ordering::equal;
  };

  if (blocks_.empty()) return compare_block(0, ranking_.size());
  std::size_t begin = 0;
  for (std::size_t size : blocks_) {
    auto c = compare_block(begin, begin + size);
    if (c != 0) return c;
    begin += size;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

namespace {

bool canonical_greater(const Term& a, const Term& b) { return a.monomial > b.monomial; }

// Sorts, merges equal monomials and drops zeros.
std::vector<Term> normalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), canonical_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

void check_same_ring(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw InvariantError("polynomials live in different rings");
}

}  // namespace

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  Poly p(nvars);
  p.terms_.push_back({Monomial::variable(nvars, index), Rational(1)});
  return p;
}

Poly Poly::monomial(Monomial m, const Rational& c) {
  Poly p(m.size());
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.size() != nvars) throw InvariantError("monomial length does not match ring");
  Poly p(nvars);
  p.terms_ = normalize(std::move(terms));
  return p;
}

long Poly::degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.monomial.degree()));
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.monomial.degree() == d; });
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Term Poly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw InvariantError("zero polynomial has no leading term");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

std::vector<Term> Poly::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != nvars_) throw InvariantError("substitution needs one image per variable");
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != target) throw InvariantError("substitution images live in different rings");

  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<Poly>> powers(nvars_);
  auto power = [&](std::size_t i, std::uint32_t e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Poly out(target);
  for (const auto& t : terms_) {
    Poly prod = Poly::constant(target, t.coeff);
    for (std::size_t i = 0; i < nvars_ && !prod.is_zero(); ++i)
      if (t.monomial[i] != 0) prod = prod * power(i, t.monomial[i]);
    out += prod;
  }
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(nvars_, 1);
  Poly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  Poly out(a.nvars_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->monomial > j->monomial)) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->monomial > i->monomial) {
      out.terms_.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) out.terms_.push_back({i->monomial, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  std::map<Monomial, Rational, std::greater<>> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  Poly out(a.nvars_);
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, c});
  return out;
}

Poly operator*(const Rational& c, const Poly& a) {
  if (c == 0) return Poly(a.nvars_);
  Poly out = a;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

bool Poly::operator==(const Poly& other) const {
  if (nvars_ != other.nvars_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].monomial != other.terms_[i].monomial || terms_[i].coeff != other.terms_[i].coeff) return false;
  return true;
}

// ---------------------------------------------------------------------------

VariableNames VariableNames::indexed(const std::string& prefix, std::size_t count, std::size_t first) {
  VariableNames v;
  for (std::size_t i = 0; i < count; ++i) v.names.push_back(prefix + std::to_string(first + i));
  return v;
}

std::size_t VariableNames::find(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return names.size();
}

namespace {

std::string format_monomial(const Monomial& m, const VariableNames& names) {
  std::vector<long> exps(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) exps[i] = m[i];
  // Fold w_j into q_j when only one of the pair occurs; q*w stays literal.
  for (auto [base, inv] : names.inverses) {
    if (exps[base] == 0 && exps[inv] != 0) {
      exps[base] = -exps[inv];
      exps[inv] = 0;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.names.at(i);
    if (exps[i] != 1) out += '^' + std::to_string(exps[i]);
  }
  return out;
}

}  // namespace

std::string format_poly(const Poly& p, const VariableNames& names, const MonomialOrder& order) {
  if (names.size() != p.nvars()) throw InvariantError("variable names do not match ring");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.sorted_terms(order)) {
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = format_monomial(t.monomial, names);
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableNames& names) : text_(text), names_(names) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t nvars() const { return names_.size(); }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Poly d = unary();
        if (d.is_zero()) fail("division by zero");
        if (d.size() != 1 || !d.terms().front().monomial.is_one()) fail("only division by constants is supported");
        acc = Rational(1 / d.terms().front().coeff) * acc;
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  long exponent() {
    skip_space();
    bool negative = accept('-');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    return negative ? -e : e;
  }

  Poly power() {
    skip_space();
    if (pos_ < text_.size() && ident_start(text_[pos_])) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      std::size_t idx = names_.find(name);
      if (idx == names_.size()) fail("unknown variable '" + std::string(name) + "'");
      long e = accept('^') ? exponent() : 1;
      if (e < 0) {
        auto it = std::find_if(names_.inverses.begin(), names_.inverses.end(),
                               [idx](const auto& p) { return p.first == idx; });
        if (it == names_.inverses.end()) fail("negative power of non-invertible '" + std::string(name) + "'");
        idx = it->second;
        e = -e;
      }
      return Poly::monomial(Monomial::variable(nvars(), idx, static_cast<std::uint32_t>(e)));
    }

    Poly base;
    if (accept('(')) {
      base = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      base = Poly::constant(nvars(), Rational(Int(std::string(text_.substr(start, pos_ - start)))));
    } else {
      fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of input");
    }
    if (!accept('^')) return base;
    long e = exponent();
    if (e >= 0) return base.pow(static_cast<unsigned>(e));
    if (base.size() != 1 || !base.terms().front().monomial.is_one())
      fail("negative power of a non-constant expression");
    return Poly::constant(nvars(), Rational(1 / base.terms().front().coeff)).pow(static_cast<unsigned>(-e));
  }

  std::string_view text_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VariableNames& names) {
  return PolyParser(text, names).parse();
}

VariableNames discover_variables(const std::vector<std::string>& lines) {
  std::vector<std::string> found;
  for (const auto& line : lines) {
    for (std::size_t i = 0; i < line.size();) {
      if (ident_start(line[i]) && (i == 0 || !ident_char(line[i - 1]))) {
        std::size_t start = i;
        while (i < line.size() && ident_char(line[i])) ++i;
        found.push_back(line.substr(start, i - start));
      } else {
        ++i;
      }
    }
  }
  auto key = [](const std::string& s) {
    std::size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
    std::string prefix = s.substr(0, cut);
    std::string digits = s.substr(cut);
    // Numeric comparison of the suffix without overflow: shorter first, then lexicographic.
    return std::make_tuple(prefix, digits.size(), digits);
  };
  std::sort(found.begin(), found.end(), [&](const std::string& a, const std::string& b) { return key(a) < key(b); });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  VariableNames v;
  v.names = std::move(found);
  return v;
}

}  // namespace toricarc
