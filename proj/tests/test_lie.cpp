#include <doctest.h>

#include <random>

#include "congr/lie.hpp"
#include "congr/linalg.hpp"
#include "oracles.hpp"

using namespace congr;

namespace {

MatR ints(const std::vector<std::vector<Coeff>>& rows, Modulus m) {
  return MatR::from_integers(rows, RingSpec::integers(), m);
}

std::vector<std::vector<Coeff>> to_rows(const MatR& m) {
  std::vector<std::vector<Coeff>> rows(m.n(), std::vector<Coeff>(m.n()));
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) rows[i][j] = m.entry(i, j)[0];
  return rows;
}

SlElem random_sl(std::size_t n, Coeff p, std::mt19937_64& rng) {
  std::vector<std::vector<Coeff>> rows(n, std::vector<Coeff>(n));
  Coeff trace = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = static_cast<Coeff>(rng() % static_cast<std::uint64_t>(p));
      if (i == j && i + 1 < n) trace += rows[i][j];
    }
  rows[n - 1][n - 1] = oracle::mod(-trace, p);
  return SlElem(p, ints(rows, Modulus::of(p)));
}

}  // namespace

TEST_CASE("sl elements must be traceless mod p") {
  CHECK_NOTHROW(SlElem(3, ints({{1, 0}, {0, 2}}, Modulus::of(3))));
  CHECK_THROWS_AS(SlElem(3, ints({{1, 0}, {0, 1}}, Modulus::of(3))), Error);
  CHECK_THROWS_AS(SlElem(3, ints({{1, 0}, {0, 2}}, Modulus::of(9))), Error);
}

TEST_CASE("sl bracket matches the integer commutator oracle") {
  std::mt19937_64 rng(8);
  for (Coeff p : {2, 3, 5})
    for (std::size_t n : {2, 3, 4})
      for (int t = 0; t < 50; ++t) {
        auto a = random_sl(n, p, rng), b = random_sl(n, p, rng);
        auto ab = oracle::matmul(to_rows(a.mat()), to_rows(b.mat()));
        auto ba = oracle::matmul(to_rows(b.mat()), to_rows(a.mat()));
        auto c = sl_bracket(a, b);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) REQUIRE(c.mat().entry(i, j)[0] == oracle::mod(ab[i][j] - ba[i][j], p));
        REQUIRE(sl_bracket(a, b) == SlElem::zero(n, p, RingSpec::integers()) - sl_bracket(b, a));
      }
}

TEST_CASE("sl bracket satisfies the Jacobi identity over Z[i]") {
  auto zi = RingSpec::gaussian();
  std::mt19937_64 rng(9);
  const std::size_t dim = sl_dimension(3, *zi);
  auto rand_elem = [&] {
    std::vector<Coeff> c(dim);
    for (auto& x : c) x = static_cast<Coeff>(rng() % 3);
    return sl_from_coords(c, 3, 3, zi);
  };
  for (int t = 0; t < 100; ++t) {
    auto x = rand_elem(), y = rand_elem(), z = rand_elem();
    auto j = sl_bracket(x, sl_bracket(y, z)) + sl_bracket(y, sl_bracket(z, x)) + sl_bracket(z, sl_bracket(x, y));
    REQUIRE(j.is_zero());
  }
}

TEST_CASE("sl coordinates round-trip and basis elements are unit vectors") {
  auto zi = RingSpec::gaussian();
  const std::size_t dim = sl_dimension(3, *zi);
  CHECK(dim == 16);
  for (std::size_t slot = 0; slot < 8; ++slot)
    for (std::size_t k = 0; k < 2; ++k) {
      auto coords = sl_coords(sl_basis(3, 5, zi, slot, k));
      std::vector<Coeff> expect(dim, 0);
      expect[slot * 2 + k] = 1;
      REQUIRE(coords == expect);
    }
  std::vector<Coeff> c(dim);
  for (std::size_t i = 0; i < dim; ++i) c[i] = static_cast<Coeff>(i % 5);
  CHECK(sl_coords(sl_from_coords(c, 3, 5, zi)) == c);
}

TEST_CASE("graded bracket adds degrees and drops zero components") {
  auto Z = RingSpec::integers();
  auto e12 = SlElem(3, ints({{0, 1}, {0, 0}}, Modulus::of(3)));
  auto e21 = SlElem(3, ints({{0, 0}, {1, 0}}, Modulus::of(3)));
  auto x = GrElem::homogeneous(1, e12), y = GrElem::homogeneous(2, e21);
  auto z = gr_bracket(x, y);
  REQUIRE(z.components().size() == 1);
  CHECK(z.components().at(3) == SlElem(3, ints({{1, 0}, {0, 2}}, Modulus::of(3))));
  CHECK(gr_bracket(x, x).is_zero());
  CHECK((x + y).components().size() == 2);
  GrElem w(2, 3, Z);
  w.accumulate(1, e12);
  w.accumulate(1, e12 + e12 + e12 - e12 - e12 - e12);
  CHECK(w == x);
  CHECK_THROWS_AS(w.accumulate(0, e12), Error);
}

TEST_CASE("varphi reads off the leading coefficient") {
  QuotientContext c{2, 3, 1, 1, RingSpec::integers()};
  auto x = QuotientElem::from_matrix(c, ints({{4, 6}, {0, 7}}, Modulus::of(9)));
  CHECK(varphi_r(x) == SlElem(3, ints({{1, 2}, {0, 2}}, Modulus::of(3))));
  CHECK(varphi_r(QuotientElem::identity(c)).is_zero());
  QuotientContext c2{2, 3, 1, 2, RingSpec::integers()};
  CHECK_THROWS_AS(varphi_r(QuotientElem::identity(c2)), Error);
  QuotientContext c3{2, 3, 2, 1, RingSpec::integers()};
  auto g = varphi_total({x, generator(c3, {2, 1, 1})});
  CHECK(g.components().size() == 2);
  CHECK(g.components().at(2) == SlElem(3, ints({{0, 0}, {1, 0}}, Modulus::of(3))));
}

TEST_CASE("varphi turns commutators into brackets") {
  QuotientContext c{3, 3, 1, 2, RingSpec::gaussian()};
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    auto x = random_quotient_elem(c, rng), y = random_quotient_elem(c, rng);
    auto lhs = varphi_r(graded_commutator(q_project(x, 1), q_project(y, 1)));
    auto rhs = sl_bracket(varphi_r(q_project(x, 1)), varphi_r(q_project(y, 1)));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("frobenius maps generators up one level") {
  for (Coeff p : {2, 3, 5})
    for (int r : {1, 2}) {
      QuotientContext c{2, p, r, 1, RingSpec::gaussian()};
      QuotientContext up{2, p, r + 1, 1, RingSpec::gaussian()};
      for (const auto& g : all_generators(2, *c.spec)) {
        if (p == 2 && r == 1) {
          CHECK_THROWS_AS(frobenius(generator(c, g)), Error);
          continue;
        }
        REQUIRE(frobenius(generator(c, g)) == generator(up, g));
      }
    }
}

TEST_CASE("the squaring map fails to be additive at p = 2, r = 1") {
  QuotientContext c{2, 2, 1, 1, RingSpec::integers()};
  auto x = QuotientElem::from_matrix(c, ints({{1, 2}, {2, 1}}, Modulus::of(4)));
  QuotientContext up{2, 2, 2, 1, RingSpec::integers()};
  CHECK(naive_pth_power(x) == QuotientElem::from_matrix(up, ints({{5, 4}, {4, 5}}, Modulus::of(8))));
  CHECK_FALSE(naive_pth_power(x) == QuotientElem::from_matrix(up, ints({{1, 4}, {4, 1}}, Modulus::of(8))));
  auto u = QuotientElem::from_matrix(c, ints({{1, 2}, {0, 1}}, Modulus::of(4)));
  auto l = QuotientElem::from_matrix(c, ints({{1, 0}, {2, 1}}, Modulus::of(4)));
  CHECK_FALSE(naive_pth_power(q_mul(u, l)) == q_mul(naive_pth_power(u), naive_pth_power(l)));
  try {
    frobenius(x);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ExcludedCase);
  }
}

TEST_CASE("bracket table row selection") {
  auto Z = RingSpec::integers();
  CHECK(bracket_table(3, *Z, {1, 2, 1}, 1, {2, 1, 1}, 1).row == 2);
  auto w = bracket_table(3, *Z, {1, 2, 1}, 1, {2, 3, 1}, 1);
  CHECK(w.row == 3);
  REQUIRE(w.letters.size() == 1);
  CHECK(w.letters[0] == TableLetter{1, 3, 1, 1, 2, 1});
  CHECK(w.to_string() == "A_{13,1*1,2}");
  CHECK(bracket_table(3, *Z, {1, 2, 1}, 1, {1, 3, 1}, 1).row == 16);
  CHECK(bracket_table(3, *Z, {1, 2, 1}, 1, {1, 3, 1}, 1).to_string() == "1");
  CHECK(bracket_table(3, *Z, {3, 1, 1}, 1, {1, 3, 1}, 2).row == 2);
  CHECK(bracket_table(3, *Z, {1, 3, 1}, 1, {1, 1, 1}, 1).row == 4);
  CHECK(bracket_table(3, *Z, {1, 3, 1}, 1, {1, 1, 1}, 1).to_string() == "A_{13,1*1,2}^-2");
  CHECK_THROWS_AS(bracket_table(3, *Z, {3, 3, 1}, 1, {1, 2, 1}, 1), Error);
}

TEST_CASE("table words evaluate left to right in the abelian target") {
  auto zi = RingSpec::gaussian();
  TableWord w{3, {{1, 3, 2, 2, 2, 1}}};
  // v_2 * v_2 = i^2 = -1
  QuotientContext c{3, 3, 2, 1, zi};
  CHECK(evaluate_word(w, 3, 3, zi, 2) == q_inv(generator(c, {1, 3, 1})));
  TableWord nn{2, {{3, 3, 1, 1, 2, -1}}};
  CHECK(evaluate_word(nn, 3, 3, zi, 2).is_identity());
  CHECK_THROWS_AS(evaluate_word(w, 3, 3, zi, 3), Error);
}

TEST_CASE("rank mod p matches the span-size oracle") {
  std::mt19937_64 rng(12);
  for (Coeff p : {2, 3, 5})
    for (int t = 0; t < 40; ++t) {
      const std::size_t dim = 1 + rng() % 4, count = rng() % 5;
      std::vector<std::vector<Coeff>> rows(count, std::vector<Coeff>(dim));
      for (auto& row : rows)
        for (auto& x : row) x = static_cast<Coeff>(rng() % 7) - 3;
      REQUIRE(rank_mod_p(rows, p) == oracle::log_p(oracle::span_size(rows, p, dim), p));
    }
  CHECK(rank_mod_p({}, 3) == 0);
}

TEST_CASE("H1 dimensions match the bracket-span oracle") {
  auto Z = RingSpec::integers();
  CHECK(lie_h1_degree(2, 5, Z, 1) == 3);
  CHECK(lie_h1_degree(2, 5, Z, 2) == 0);
  CHECK(lie_h1_degree(2, 5, Z, 3) == 0);
  for (Coeff p : {2, 3, 5}) {
    // Span of [x, y] over basis pairs of sl_2(F_p), built from integer matrices.
    std::vector<std::vector<std::vector<Coeff>>> basis{{{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}, {{1, 0}, {0, -1}}};
    std::vector<std::vector<Coeff>> vs;
    for (const auto& a : basis)
      for (const auto& b : basis) {
        auto ab = oracle::matmul(a, b), ba = oracle::matmul(b, a);
        // coordinates in the basis order (1,1), (1,2), (2,1) of the slots
        vs.push_back({oracle::mod(ab[0][0] - ba[0][0], p), oracle::mod(ab[0][1] - ba[0][1], p),
                      oracle::mod(ab[1][0] - ba[1][0], p)});
      }
    const std::size_t expected = 3 - oracle::log_p(oracle::span_size(vs, p, 3), p);
    CHECK(lie_h1_degree(2, p, Z, 2) == expected);
    CHECK(lie_h1_degree(2, p, Z, 3) == expected);
  }
  CHECK(lie_h1_degree(2, 2, Z, 2) == 2);
  CHECK(lie_h1_degree(3, 3, RingSpec::gaussian(), 1) == 16);
  CHECK(lie_h1_degree(3, 3, RingSpec::gaussian(), 2) == 0);
  CHECK_THROWS_AS(lie_h1_degree(2, 3, Z, 0), Error);
}
