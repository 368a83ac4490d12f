#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricarc/poly.hpp"

namespace toricarc {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

struct GroebnerBasis {
  std::size_t nvars = 0;
  std::vector<Poly> generators;  ///< monic, sorted by leading monomial, largest first
  MonomialOrder order;
  bool reduced = false;

  std::vector<Monomial> leading_monomials() const;
  bool is_unit_ideal() const;
};

/// Leading-term division reduction counts against `budget`; exhausting it
/// throws BudgetExceeded. Output is the reduced basis and does not depend on
/// the order in which equal-lcm pairs become available.
GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& order,
                         std::size_t budget = kDefaultBudget);

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);

/// Full reduction of f modulo the basis (every term, not only the leading one).
Poly normal_form(const Poly& f, const GroebnerBasis& g);

/// Remainder of f on division by an arbitrary list (not necessarily a basis).
Poly reduce_by(const Poly& f, const std::vector<Poly>& divisors, const MonomialOrder& order);

bool quotient_is_finite(const GroebnerBasis& g);

/// Monomials outside the initial ideal, ascending in the basis order. With no
/// cap the quotient must be finite-dimensional (else InfiniteDimension); with a
/// cap an infinite quotient is listed up to that total degree.
std::vector<Monomial> standard_monomials(const GroebnerBasis& g, std::optional<std::size_t> degree_cap = {});

/// Vector-space dimension of the quotient. Throws InfiniteDimension.
std::size_t quotient_dimension(const GroebnerBasis& g);

/// Entry k is the dimension of the degree-k part of the quotient, k <= cutoff.
/// Throws NotHomogeneous unless every basis element is homogeneous.
std::vector<std::size_t> graded_dimensions(const GroebnerBasis& g, std::size_t cutoff);

}  // namespace toricarc
