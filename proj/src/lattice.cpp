#include "toricarc/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "toricarc/errors.hpp"

namespace toricarc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product size mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j));
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Rational> solve(const IntMatrix& a, const IntVector& b) {
  Int det = determinant(a);
  if (det == 0) throw std::invalid_argument("solve: singular matrix");
  std::vector<Rational> x(a.cols());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    IntMatrix replaced = a;
    for (std::size_t r = 0; r < a.rows(); ++r) replaced(r, k) = b[r];
    x[k] = Rational(determinant(replaced), det);
    x[k].canonicalize();
  }
  return x;
}

namespace {

// row[target] -= factor * row[source] in both matrices
void row_axpy(IntMatrix& h, IntMatrix& u, std::size_t target, std::size_t source, const Int& factor) {
  for (std::size_t c = 0; c < h.cols(); ++c) h(target, c) -= factor * h(source, c);
  for (std::size_t c = 0; c < u.cols(); ++c) u(target, c) -= factor * u(source, c);
}

void row_swap(IntMatrix& h, IntMatrix& u, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < h.cols(); ++c) std::swap(h(a, c), h(b, c));
  for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(a, c), u(b, c));
}

void row_negate(IntMatrix& h, IntMatrix& u, std::size_t r) {
  for (std::size_t c = 0; c < h.cols(); ++c) h(r, c) = -h(r, c);
  for (std::size_t c = 0; c < u.cols(); ++c) u(r, c) = -u(r, c);
}

std::size_t nonzero_rows(const IntMatrix& h) {
  std::size_t count = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t c = 0; c < h.cols(); ++c) {
      if (h(r, c) != 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace

std::size_t rank(const IntMatrix& m) { return nonzero_rows(hermite_normal_form(m).h); }

HermiteResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < h.cols() && pivot < h.rows(); ++col) {
    bool found = false;
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t r = pivot; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        if (best == h.rows() || mpz_cmpabs(h(r, col).get_mpz_t(), h(best, col).get_mpz_t()) < 0) best = r;
      }
      if (best == h.rows()) break;
      found = true;
      row_swap(h, u, pivot, best);
      bool cleared = true;
      for (std::size_t r = pivot + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(pivot, col).get_mpz_t());
        row_axpy(h, u, r, pivot, q);
        if (h(r, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!found) continue;
    if (sgn(h(pivot, col)) < 0) row_negate(h, u, pivot);
    for (std::size_t r = 0; r < pivot; ++r) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(pivot, col).get_mpz_t());
      if (q != 0) row_axpy(h, u, r, pivot, q);
    }
    ++pivot;
  }
  return {std::move(h), std::move(u)};
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  auto [h, u] = hermite_normal_form(m);
  std::vector<IntVector> basis;
  for (std::size_t r = nonzero_rows(h); r < h.rows(); ++r) basis.push_back(u.row(r));
  return basis;
}

DivisorClasses divisor_classes(const IntMatrix& ray_matrix) {
  auto h = hermite_normal_form(ray_matrix).h;
  std::size_t d = ray_matrix.cols();
  if (nonzero_rows(h) < d) throw InvariantError("rays do not span the ambient lattice over Q");
  Int index = 1;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < h.cols(); ++c) {
      if (h(r, c) != 0) {
        index *= h(r, c);
        break;
      }
    }
  }
  if (index != 1) {
    throw TorsionCokernel("class group has torsion of order " + index.get_str() +
                          " (rays do not generate the lattice)");
  }
  auto kernel = kernel_basis(ray_matrix);
  DivisorClasses out;
  out.rank = kernel.size();
  out.classes.assign(ray_matrix.rows(), IntVector(out.rank));
  for (std::size_t i = 0; i < ray_matrix.rows(); ++i)
    for (std::size_t j = 0; j < out.rank; ++j) out.classes[i][j] = kernel[j][i];
  return out;
}

LatticeMap::LatticeMap(IntMatrix matrix) : matrix_(std::move(matrix)) {}

IntVector LatticeMap::operator()(const IntVector& a) const {
  if (a.size() != domain_rank()) {
    throw InvariantError("lattice point has " + std::to_string(a.size()) + " coordinates, expected " +
                         std::to_string(domain_rank()));
  }
  return matrix_.apply(a);
}

SemigroupAPlus::SemigroupAPlus(LatticeMap beta, std::vector<IntVector> hilbert_basis)
    : beta_(std::move(beta)), hilbert_basis_(std::move(hilbert_basis)) {}

bool SemigroupAPlus::contains(const IntVector& a) const { return is_nonnegative(beta_(a)); }

Int SemigroupAPlus::degree(const IntVector& a) const {
  Int d = 0;
  for (const auto& x : beta_(a)) d += x;
  return d;
}

bool a_plus_contains(const SemigroupAPlus& s, const IntVector& a) { return s.contains(a); }

namespace {

Int degree_of(const IntVector& image) {
  Int d = 0;
  for (const auto& x : image) d += x;
  return d;
}

// Rows of beta forming an invertible square block, chosen greedily by index.
std::vector<std::size_t> independent_rows(const IntMatrix& beta) {
  std::vector<std::size_t> chosen;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < beta.rows() && chosen.size() < beta.cols(); ++i) {
    rows.push_back(beta.row(i));
    if (rank(IntMatrix::from_rows(rows, beta.cols())) == rows.size()) {
      chosen.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

IntMatrix adjugate(const IntMatrix& m) {
  std::size_t n = m.rows();
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Int cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : Int(-cof);
    }
  }
  return adj;
}

bool coordinates_greater(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

void require_injective(const LatticeMap& beta) {
  if (rank(beta.matrix()) != beta.domain_rank()) {
    throw NonPointed("beta is not injective: some nonzero a has beta(a) = 0");
  }
}

std::vector<IntVector> minimal_elements(const LatticeMap& beta, const std::vector<IntVector>& box) {
  std::vector<IntVector> images;
  images.reserve(box.size());
  for (const auto& a : box) images.push_back(beta(a));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (degree_of(images[i]) == 0) continue;
    bool reducible = false;
    for (std::size_t j = 0; j < box.size() && !reducible; ++j) {
      if (j == i || degree_of(images[j]) == 0) continue;
      bool below = true;
      for (std::size_t k = 0; k < images[i].size() && below; ++k) below = images[j][k] <= images[i][k];
      reducible = below;
    }
    if (!reducible) out.push_back(box[i]);
  }
  return out;
}

}  // namespace

std::vector<IntVector> enumerate_box(const LatticeMap& beta, long bound) {
  require_injective(beta);
  const IntMatrix& m = beta.matrix();
  std::size_t r = m.cols();
  auto chosen = independent_rows(m);
  IntMatrix block(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) block(i, j) = m(chosen[i], j);
  Int det = determinant(block);
  IntMatrix adj = adjugate(block);

  std::vector<IntVector> out;
  std::vector<long> y(r, 0);
  while (true) {
    IntVector a(r);
    bool integral = true;
    for (std::size_t i = 0; i < r && integral; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc += adj(i, j) * y[j];
      if (!mpz_divisible_p(acc.get_mpz_t(), det.get_mpz_t())) integral = false;
      mpz_divexact(a[i].get_mpz_t(), acc.get_mpz_t(), det.get_mpz_t());
    }
    if (integral) {
      auto image = m.apply(a);
      bool inside = std::all_of(image.begin(), image.end(),
                                [bound](const Int& x) { return sgn(x) >= 0 && x <= bound; });
      if (inside) out.push_back(std::move(a));
    }
    std::size_t k = 0;
    while (k < r && y[k] == bound) y[k++] = 0;
    if (k == r) break;
    ++y[k];
  }
  std::vector<std::pair<Int, IntVector>> keyed;
  keyed.reserve(out.size());
  for (auto& a : out) keyed.emplace_back(degree_of(m.apply(a)), std::move(a));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return coordinates_greater(a.second, b.second);
  });
  out.clear();
  for (auto& [d, a] : keyed) out.push_back(std::move(a));
  return out;
}

SemigroupAPlus hilbert_basis(const LatticeMap& beta) {
  require_injective(beta);
  constexpr long kMaxBound = 256;
  long bound = 1;
  auto current = minimal_elements(beta, enumerate_box(beta, bound));
  while (true) {
    if (bound > kMaxBound) throw Error("Hilbert basis search did not stabilize below box size 256");
    auto wider = minimal_elements(beta, enumerate_box(beta, 2 * bound));
    if (wider == current) break;
    current = std::move(wider);
    bound *= 2;
  }
  return SemigroupAPlus(beta, std::move(current));
}

Series semigroup_series(const SemigroupAPlus& s, std::size_t cutoff) {
  Series out(cutoff);
  std::vector<Int> coeffs(cutoff + 1);
  for (const auto& a : enumerate_box(s.beta(), static_cast<long>(cutoff))) {
    Int d = s.degree(a);
    if (d <= static_cast<unsigned long>(cutoff)) coeffs[d.get_ui()] += 1;
  }
  return Series(std::move(coeffs), cutoff);
}

}  // namespace toricarc
