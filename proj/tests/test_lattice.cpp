#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "toricarc/errors.hpp"
#include "toricarc/fan.hpp"
#include "toricarc/lattice.hpp"

using namespace toricarc;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long range) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = oracle::uniform(rng, -range, range);
  return m;
}

std::vector<IntVector> rows_of(const IntMatrix& m) {
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

void check_hnf_shape(const IntMatrix& h) {
  std::size_t last_pivot_col = 0;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    REQUIRE_FALSE(seen_zero_row);
    if (r > 0) REQUIRE(c > last_pivot_col);
    last_pivot_col = c;
    REQUIRE(h(r, c) > 0);
    for (std::size_t above = 0; above < r; ++above) {
      REQUIRE(h(above, c) >= 0);
      REQUIRE(h(above, c) < h(r, c));
    }
  }
}

std::vector<IntVector> beta_rows(const LatticeMap& beta) { return rows_of(beta.matrix()); }

}  // namespace

TEST_CASE("integer helpers parse and print") {
  CHECK(to_string(parse_int_vector("1,-2,0")) == "(1,-2,0)");
  CHECK(parse_int_vector("(3, 4)") == make_int_vector({3, 4}));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_int_vector("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_int_vector("x"), ParseError);
}

TEST_CASE("hermite normal form of the identity and zero matrices") {
  auto id = hermite_normal_form(IntMatrix::identity(2));
  CHECK(id.h == IntMatrix::identity(2));
  CHECK(id.u == IntMatrix::identity(2));

  IntMatrix zero(2, 3);
  auto z = hermite_normal_form(zero);
  CHECK(z.h == zero);
  CHECK(z.u == IntMatrix::identity(2));
}

TEST_CASE("hermite normal form of a 2x2 example") {
  IntMatrix m{{2, 4}, {1, 3}};
  auto res = hermite_normal_form(m);
  CHECK(res.h == IntMatrix{{1, 1}, {0, 2}});
  CHECK(res.h == res.u * m);
  CHECK(abs(oracle::det_cofactor(rows_of(res.u))) == 1);
  // [[1,3],[0,2]] generates the same row lattice: it reduces to the same form.
  CHECK(hermite_normal_form(IntMatrix{{1, 3}, {0, 2}}).h == res.h);
}

TEST_CASE("hermite normal form round trip on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    std::size_t cols = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    IntMatrix m = random_matrix(rng, rows, cols, 6);
    auto res = hermite_normal_form(m);
    REQUIRE(res.h == res.u * m);
    REQUIRE(abs(oracle::det_cofactor(rows_of(res.u))) == 1);
    check_hnf_shape(res.h);
  }
}

TEST_CASE("determinant and rank agree with the oracles") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    IntMatrix m = random_matrix(rng, n, n, 5);
    REQUIRE(determinant(m) == oracle::det_cofactor(rows_of(m)));
    std::vector<oracle::QRow> q;
    for (std::size_t r = 0; r < n; ++r) {
      oracle::QRow row;
      for (std::size_t c = 0; c < n; ++c) row.push_back(Rational(m(r, c)));
      q.push_back(row);
    }
    REQUIRE(rank(m) == oracle::rank_q(q));
  }
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("solve returns the exact rational solution") {
  auto x = solve(IntMatrix{{2, 1}, {1, 3}}, make_int_vector({1, 2}));
  CHECK(x[0] == Rational(1, 5));
  CHECK(x[1] == Rational(3, 5));
}

TEST_CASE("kernel bases of ray matrices") {
  CHECK(kernel_basis(IntMatrix{{1, 0}, {0, 1}, {-1, -1}}) == std::vector<IntVector>{make_int_vector({1, 1, 1})});
  CHECK(kernel_basis(IntMatrix{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}) ==
        std::vector<IntVector>{make_int_vector({1, 0, 1, 0}), make_int_vector({0, 1, 0, 1})});
  CHECK(kernel_basis(IntMatrix{{1, 0}, {0, 1}, {-1, 1}, {0, -1}}) ==
        std::vector<IntVector>{make_int_vector({1, -1, 1, 0}), make_int_vector({0, 1, 0, 1})});
  CHECK(kernel_basis(IntMatrix::identity(3)).empty());
}

TEST_CASE("kernel bases are kernels, of full dimension, and saturated") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t rows = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
    std::size_t cols = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    IntMatrix m = random_matrix(rng, rows, cols, 4);
    auto ker = kernel_basis(m);
    for (const auto& v : ker) REQUIRE(m.transpose().apply(v) == IntVector(cols, Int(0)));
    REQUIRE(ker.size() == rows - rank(m));
    if (!ker.empty()) REQUIRE(oracle::maximal_minor_gcd(ker) == 1);
  }
}

TEST_CASE("divisor classes") {
  auto p2 = divisor_classes(IntMatrix{{1, 0}, {0, 1}, {-1, -1}});
  CHECK(p2.rank == 1);
  CHECK(p2.classes == std::vector<IntVector>{make_int_vector({1}), make_int_vector({1}), make_int_vector({1})});

  auto p1xp1 = divisor_classes(IntMatrix{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  CHECK(p1xp1.rank == 2);
  CHECK(p1xp1.classes == std::vector<IntVector>{make_int_vector({1, 0}), make_int_vector({0, 1}),
                                                make_int_vector({1, 0}), make_int_vector({0, 1})});

  CHECK(divisor_classes(IntMatrix{{1, 0}, {0, 1}, {-1, 1}, {0, -1}}).rank == 2);

  CHECK_THROWS_AS(divisor_classes(IntMatrix{{2, 1}, {0, 1}, {-2, -1}}), TorsionCokernel);
  CHECK_THROWS_AS(divisor_classes(IntMatrix{{1, 0}, {-1, 0}}), InvariantError);
}

TEST_CASE("divisor classes of bundled fans are saturated and annihilate the rays") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    IntMatrix rays = ray_matrix(load_fan(oracle::fixture(name)));
    auto dc = divisor_classes(rays);
    std::vector<IntVector> columns(dc.rank);
    for (const auto& cls : dc.classes)
      for (std::size_t j = 0; j < dc.rank; ++j) columns[j].push_back(cls[j]);
    for (const auto& col : columns) CHECK(rays.transpose().apply(col) == IntVector(rays.cols(), Int(0)));
    CHECK(oracle::maximal_minor_gcd(columns) == 1);
  }
}

TEST_CASE("A_+ membership") {
  SemigroupAPlus p2 = hilbert_basis(LatticeMap(IntMatrix{{1}, {1}, {1}}));
  CHECK(a_plus_contains(p2, make_int_vector({1})));
  CHECK_FALSE(a_plus_contains(p2, make_int_vector({-1})));

  SemigroupAPlus f1 = hilbert_basis(LatticeMap(IntMatrix{{1, 0}, {-1, 1}, {1, 0}, {0, 1}}));
  CHECK_FALSE(a_plus_contains(f1, make_int_vector({1, 0})));
  CHECK(a_plus_contains(f1, make_int_vector({1, 1})));
  CHECK(f1.degree(make_int_vector({1, 1})) == 3);
  CHECK_THROWS_AS(f1.beta()(make_int_vector({1})), InvariantError);
}

TEST_CASE("Hilbert bases of small semigroups") {
  CHECK(hilbert_basis(LatticeMap(IntMatrix{{1}, {1}, {1}})).hilbert_basis() ==
        std::vector<IntVector>{make_int_vector({1})});
  CHECK(hilbert_basis(LatticeMap(IntMatrix{{1, 0}, {0, 1}, {1, 0}, {0, 1}})).hilbert_basis() ==
        std::vector<IntVector>{make_int_vector({1, 0}), make_int_vector({0, 1})});
  CHECK(hilbert_basis(LatticeMap(IntMatrix{{1, 0}, {-1, 1}, {1, 0}, {0, 1}})).hilbert_basis() ==
        std::vector<IntVector>{make_int_vector({0, 1}), make_int_vector({1, 1})});
  CHECK_THROWS_AS(hilbert_basis(LatticeMap(IntMatrix{{1, 1}, {1, 1}})), NonPointed);
}

TEST_CASE("Hilbert bases agree with brute-force irreducibles") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    auto dc = divisor_classes(ray_matrix(load_fan(oracle::fixture(name))));
    LatticeMap beta(IntMatrix::from_rows(dc.classes, dc.rank));
    auto hb = hilbert_basis(beta).hilbert_basis();
    std::set<IntVector> got(hb.begin(), hb.end());
    CHECK(got.size() == hb.size());
    CHECK(got == oracle::brute_hilbert_basis(beta_rows(beta), dc.rank, 5));
    for (const auto& a : hb) CHECK(is_nonnegative(beta(a)));
  }
}

TEST_CASE("Hilbert basis elements are irreducible: dropping one shrinks the semigroup") {
  LatticeMap beta(IntMatrix{{1, 0}, {-2, 1}, {1, 0}, {0, 1}});
  auto s = hilbert_basis(beta);
  auto box = enumerate_box(beta, 6);
  for (std::size_t drop = 0; drop < s.hilbert_basis().size(); ++drop) {
    std::vector<IntVector> gens;
    for (std::size_t k = 0; k < s.hilbert_basis().size(); ++k)
      if (k != drop) gens.push_back(s.hilbert_basis()[k]);
    // Closure of the remaining generators inside the box.
    std::set<IntVector> reach{IntVector(2, Int(0))};
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto a : std::vector<IntVector>(reach.begin(), reach.end()))
        for (const auto& g : gens) {
          IntVector b = a + g;
          auto img = beta(b);
          if (std::all_of(img.begin(), img.end(), [](const Int& x) { return x <= 6; }) && reach.insert(b).second)
            grew = true;
        }
    }
    CHECK(reach.size() < box.size());
  }
}

TEST_CASE("semigroup series") {
  auto p2 = hilbert_basis(LatticeMap(IntMatrix{{1}, {1}, {1}}));
  CHECK(semigroup_series(p2, 7).to_string() == "1 + s^3 + s^6");
  auto p1xp1 = hilbert_basis(LatticeMap(IntMatrix{{1, 0}, {0, 1}, {1, 0}, {0, 1}}));
  CHECK(semigroup_series(p1xp1, 4).to_string() == "1 + 2*s^2 + 3*s^4");
  CHECK(semigroup_series(p2, 0).to_string() == "1");
}

TEST_CASE("semigroup series agree with brute-force counting") {
  for (const auto& name : oracle::all_fixtures()) {
    CAPTURE(name);
    auto dc = divisor_classes(ray_matrix(load_fan(oracle::fixture(name))));
    LatticeMap beta(IntMatrix::from_rows(dc.classes, dc.rank));
    auto s = semigroup_series(hilbert_basis(beta), 12);
    CHECK(s.coefficients() == oracle::brute_series(beta_rows(beta), dc.rank, 13, 12));
    CHECK(s.coefficient(0) == 1);
  }
}

TEST_CASE("series arithmetic") {
  Series a = Series::inverse_power_of_one_minus_s(2, 4);
  CHECK(a.to_string() == "1 + 2*s + 3*s^2 + 4*s^3 + 5*s^4");
  Series one_minus_s({Int(1), Int(-1)}, 4);
  CHECK((a * one_minus_s * one_minus_s).to_string() == "1");
}
