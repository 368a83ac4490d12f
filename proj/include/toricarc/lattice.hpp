#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "toricarc/integer.hpp"
#include "toricarc/series.hpp"

namespace toricarc {

/// Dense matrix of arbitrary precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;

  /// this * v
  IntVector apply(const IntVector& v) const;

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Bareiss fraction-free elimination. Square matrices only; the 0x0 determinant is 1.
Int determinant(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Solves a * x = b over Q by Cramer's rule. a must be square and nonsingular.
std::vector<Rational> solve(const IntMatrix& a, const IntVector& b);

struct HermiteResult {
  IntMatrix h;  ///< row Hermite normal form
  IntMatrix u;  ///< unimodular, h == u * m
};

/// Row-style Hermite normal form: pivots are positive and strictly move right,
/// entries above a pivot lie in [0, pivot), zero rows come last.
///
/// Elimination picks, in each column, the remaining row with the smallest
/// nonzero absolute value (lowest index on ties). That rule fixes which rows of
/// u span the left kernel, and so fixes the lattice bases reported everywhere.
HermiteResult hermite_normal_form(const IntMatrix& m);

/// Basis of the integer left kernel {v : v^T m = 0}, i.e. of the kernel of the
/// map Z^rows -> Z^cols sending e_i to row i. Always saturated.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

struct DivisorClasses {
  std::size_t rank = 0;            ///< rank of B = N - d
  std::vector<IntVector> classes;  ///< coordinates of [Z_i] in the chosen basis of B
};

/// B = Z^N / image of the dual lattice, for a ray matrix with the N rays as rows.
/// The basis of B is dual to kernel_basis(ray_matrix), so classes[i][j] is the
/// i-th coordinate of the j-th kernel vector.
/// Throws InvariantError if the rays do not span Q^d, TorsionCokernel on torsion.
DivisorClasses divisor_classes(const IntMatrix& ray_matrix);

/// Homomorphism Z^domain -> Z^codomain given by a codomain x domain matrix.
class LatticeMap {
 public:
  LatticeMap() = default;
  explicit LatticeMap(IntMatrix matrix);

  std::size_t domain_rank() const { return matrix_.cols(); }
  std::size_t codomain_rank() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }
  IntMatrix& mutable_matrix() { return matrix_; }

  IntVector operator()(const IntVector& a) const;

 private:
  IntMatrix matrix_;
};

/// A_+ = beta^{-1}(Z^N_+) together with its Hilbert basis and grading
/// d(a) = sum_i beta_i(a).
class SemigroupAPlus {
 public:
  SemigroupAPlus() = default;
  SemigroupAPlus(LatticeMap beta, std::vector<IntVector> hilbert_basis);

  std::size_t ambient_rank() const { return beta_.domain_rank(); }
  const LatticeMap& beta() const { return beta_; }
  const std::vector<IntVector>& hilbert_basis() const { return hilbert_basis_; }

  bool contains(const IntVector& a) const;
  Int degree(const IntVector& a) const;

 private:
  LatticeMap beta_;
  std::vector<IntVector> hilbert_basis_;
};

bool a_plus_contains(const SemigroupAPlus& s, const IntVector& a);

/// All a with beta(a) in [0, bound]^N, ordered by degree, then coordinates
/// descending lexicographically. Requires beta injective.
std::vector<IntVector> enumerate_box(const LatticeMap& beta, long bound);

/// Minimal generating set of {a : beta(a) >= 0}, found by enumerating boxes
/// [0,K]^N with K doubling until the minimal elements of the 2K box agree with
/// those of the K box. Throws NonPointed when beta is not injective.
SemigroupAPlus hilbert_basis(const LatticeMap& beta);

/// sum_{a in A_+} s^{d(a)} mod s^(cutoff+1).
Series semigroup_series(const SemigroupAPlus& s, std::size_t cutoff);

}  // namespace toricarc
