#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "congr/quotient.hpp"
#include "oracles.hpp"

using namespace congr;

namespace {

const Modulus kZ = Modulus::integers();

MatR ints(const std::vector<std::vector<Coeff>>& rows, Modulus m) {
  return MatR::from_integers(rows, RingSpec::integers(), m);
}

QuotientContext ctx(std::size_t n, Coeff p, int r, int s, RingPtr spec = RingSpec::integers()) {
  return {n, p, r, s, std::move(spec)};
}

// Independent count of Gamma_r/Gamma_{r+s}: every matrix 1 + p^r A with all n^2
// entries of A over R (x) Z/p^s, filtered by the full determinant.
std::size_t brute_count(const QuotientContext& c) {
  const std::size_t n = c.n, k = c.spec->rank();
  const Modulus m = c.modulus();
  const Coeff ps = checked::pow(c.p, c.s), pr = checked::pow(c.p, c.r);
  std::size_t count = 0;
  for_each_digit_vector(n * n * k, ps, [&](const std::vector<Coeff>& d) {
    MatR x = MatR::identity(n, c.spec, m);
    for (std::size_t e = 0; e < n * n; ++e) {
      std::vector<Coeff> v(d.begin() + e * k, d.begin() + (e + 1) * k);
      for (Coeff& z : v) z *= pr;
      x.set(e / n, e % n, x.at(e / n, e % n) + RingElem(c.spec, v, m));
    }
    if (mat_det(x) == RingElem::one(c.spec, m)) ++count;
  });
  return count;
}

}  // namespace

TEST_CASE("gamma membership") {
  auto Z = RingSpec::integers();
  CHECK(gamma_member(MatR::identity(3, Z, kZ), 5, 3));
  CHECK(gamma_member(ints({{1, 3}, {0, 1}}, kZ), 3, 1));
  CHECK_FALSE(gamma_member(ints({{1, 3}, {0, 1}}, kZ), 3, 2));
  try {
    gamma_member(ints({{2, 0}, {0, 1}}, kZ), 3, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSpecialLinear);
  }
}

TEST_CASE("generator examples") {
  auto c = ctx(2, 3, 1, 1);
  CHECK(generator(c, {1, 2, 1}).mat() == ints({{1, 3}, {0, 1}}, Modulus::of(9)));
  CHECK(generator(c, {1, 1, 1}).mat() == ints({{4, 0}, {0, 7}}, Modulus::of(9)));
  try {
    generator(c, {2, 2, 1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
  CHECK_THROWS_AS(generator(c, {1, 2, 2}), Error);
  CHECK_THROWS_AS(generator(c, {3, 1, 1}), Error);
}

TEST_CASE("diagonal generators have determinant one at every depth") {
  for (int r : {1, 2})
    for (int s : {1, 2, 3}) {
      auto c = ctx(3, 2, r, s, RingSpec::gaussian());
      for (const auto& g : all_generators(3, *c.spec))
        CHECK(mat_det(generator(c, g).mat()) == RingElem::one(c.spec, c.modulus()));
    }
}

TEST_CASE("from_matrix rejects non-members") {
  auto c = ctx(2, 3, 1, 1);
  CHECK_THROWS_AS(QuotientElem::from_matrix(c, ints({{2, 0}, {0, 5}}, kZ)), Error);
  try {
    QuotientElem::from_matrix(c, ints({{4, 0}, {0, 1}}, kZ));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSpecialLinear);
  }
  CHECK_THROWS_AS(validate_context(ctx(2, 4, 1, 1)), Error);
}

TEST_CASE("group operations") {
  auto c = ctx(2, 3, 1, 2);
  auto a = generator(c, {1, 2, 1}), b = generator(c, {2, 1, 1});
  CHECK(q_mul(a, q_inv(a)).is_identity());
  CHECK(q_commutator(a, b).mat() == ints({{10, 0}, {0, 19}}, Modulus::of(27)));
  CHECK(q_commutator(a, b) == generator_at_level(c, {1, 1, 1}, 2));
  CHECK_THROWS_AS(q_mul(a, generator(ctx(2, 3, 1, 1), {1, 2, 1})), Error);
}

TEST_CASE("commutators vanish in s = 1 quotients") {
  auto c = ctx(2, 3, 1, 1);
  auto all = enumerate_quotient(c);
  for (const auto& x : all)
    for (const auto& y : all) REQUIRE(q_commutator(x, y).is_identity());
}

TEST_CASE("group axioms by exhaustion") {
  for (auto c : {ctx(2, 2, 1, 2), ctx(2, 3, 1, 1, RingSpec::gaussian())}) {
    auto all = enumerate_quotient(c);
    std::set<QuotientElem> members(all.begin(), all.end());
    auto e = QuotientElem::identity(c);
    for (const auto& x : all) {
      REQUIRE(q_mul(x, e) == x);
      REQUIRE(q_mul(e, x) == x);
      REQUIRE(q_mul(x, q_inv(x)).is_identity());
      for (const auto& y : all) REQUIRE(members.count(q_mul(x, y)) == 1);
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 2000; ++t) {
      const auto& x = all[rng() % all.size()];
      const auto& y = all[rng() % all.size()];
      const auto& z = all[rng() % all.size()];
      REQUIRE(q_mul(q_mul(x, y), z) == q_mul(x, q_mul(y, z)));
    }
  }
}

TEST_CASE("phi_iso examples") {
  auto c = ctx(2, 3, 1, 1);
  auto Z = RingSpec::integers();
  const Modulus m3 = Modulus::of(3);
  auto x = phi_iso({RingElem::integer(Z, 1, m3), RingElem::integer(Z, 2, m3), RingElem::zero(Z, m3)}, c);
  CHECK(x.mat() == ints({{4, 6}, {0, 7}}, Modulus::of(9)));
  CHECK(phi_iso({RingElem::zero(Z, m3), RingElem::zero(Z, m3), RingElem::zero(Z, m3)}, c).is_identity());
  auto zi = RingSpec::gaussian();
  auto ci = ctx(2, 3, 2, 1, zi);
  auto coords = phi_iso_inv(generator(ci, {1, 2, 2}));
  CHECK(coords[0].is_zero());
  CHECK(coords[1] == RingElem::basis(zi, 1, m3));
  CHECK(coords[2].is_zero());
  CHECK_THROWS_AS(phi_iso(coords, ctx(2, 3, 2, 2, zi)), Error);
}

TEST_CASE("phi_iso is a bijective homomorphism by exhaustion") {
  for (auto c : {ctx(2, 2, 1, 1), ctx(2, 3, 1, 1), ctx(2, 2, 1, 1, RingSpec::gaussian()), ctx(2, 3, 2, 1, RingSpec::gaussian()),
                 ctx(3, 2, 1, 1)}) {
    const Modulus mp = Modulus::of(c.p);
    const std::size_t len = (c.n * c.n - 1) * c.spec->rank();
    std::set<QuotientElem> images;
    std::vector<std::vector<Coeff>> all_digits;
    for_each_digit_vector(len, c.p, [&](const std::vector<Coeff>& d) { all_digits.push_back(d); });
    for (const auto& d : all_digits) {
      auto x = phi_iso(coords_from_digits(d, c.n, c.spec, mp), c);
      images.insert(x);
      auto back = phi_iso_inv(x);
      REQUIRE(back == coords_from_digits(d, c.n, c.spec, mp));
    }
    auto all = enumerate_quotient(c);
    REQUIRE(images == std::set<QuotientElem>(all.begin(), all.end()));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
      const auto& d1 = all_digits[rng() % all_digits.size()];
      const auto& d2 = all_digits[rng() % all_digits.size()];
      std::vector<Coeff> sum(len);
      for (std::size_t i = 0; i < len; ++i) sum[i] = (d1[i] + d2[i]) % c.p;
      REQUIRE(phi_iso(coords_from_digits(sum, c.n, c.spec, mp), c) ==
              q_mul(phi_iso(coords_from_digits(d1, c.n, c.spec, mp), c),
                    phi_iso(coords_from_digits(d2, c.n, c.spec, mp), c)));
    }
  }
}

TEST_CASE("phi_rs agrees with phi_iso at s = 1 and scales generators") {
  auto c = ctx(2, 3, 1, 1);
  const Modulus m3 = Modulus::of(3);
  for_each_digit_vector(3, 3, [&](const std::vector<Coeff>& d) {
    auto coords = coords_from_digits(d, 2, c.spec, m3);
    REQUIRE(phi_rs(coords, c) == phi_iso(coords, c));
  });
  auto c2 = ctx(2, 3, 2, 2);
  const Modulus m9 = Modulus::of(9);
  auto Z = c2.spec;
  auto img = phi_rs({RingElem::zero(Z, m9), RingElem::integer(Z, 5, m9), RingElem::zero(Z, m9)}, c2);
  CHECK(img == q_pow(generator(c2, {1, 2, 1}), 5));
  CHECK_THROWS_AS(phi_rs({RingElem::zero(Z, m9), RingElem::zero(Z, m9), RingElem::zero(Z, m9)}, ctx(2, 3, 1, 2)),
                  Error);
}

TEST_CASE("phi_rs image of the diagonal unit vector has order 9 at r = s = 2") {
  auto c = ctx(2, 3, 2, 2);
  const Modulus m9 = Modulus::of(9);
  auto Z = c.spec;
  auto x = phi_rs({RingElem::one(Z, m9), RingElem::zero(Z, m9), RingElem::zero(Z, m9)}, c);
  auto cube = q_pow(x, 3);
  CHECK_FALSE(cube.is_identity());
  CHECK(cube == generator_at_level(c, {1, 1, 1}, 3));
  CHECK(q_pow(x, 9).is_identity());
}

TEST_CASE("phi_rs is a bijective homomorphism onto an abelian group for r >= s >= 2") {
  for (auto c : {ctx(2, 2, 2, 2), ctx(2, 2, 3, 2), ctx(2, 3, 2, 2)}) {
    const Modulus mps = Modulus::prime_power(c.p, c.s);
    const Coeff ps = mps.value();
    std::set<QuotientElem> images;
    std::vector<std::vector<Coeff>> digits;
    for_each_digit_vector(3, ps, [&](const std::vector<Coeff>& d) { digits.push_back(d); });
    for (const auto& d : digits) images.insert(phi_rs(coords_from_digits(d, 2, c.spec, mps), c));
    auto all = enumerate_quotient(c);
    REQUIRE(images.size() == all.size());
    REQUIRE(images == std::set<QuotientElem>(all.begin(), all.end()));
    std::mt19937_64 rng(4);
    for (int t = 0; t < 300; ++t) {
      const auto& d1 = digits[rng() % digits.size()];
      const auto& d2 = digits[rng() % digits.size()];
      std::vector<Coeff> sum(3);
      for (int i = 0; i < 3; ++i) sum[i] = (d1[i] + d2[i]) % ps;
      auto x = phi_rs(coords_from_digits(d1, 2, c.spec, mps), c);
      auto y = phi_rs(coords_from_digits(d2, 2, c.spec, mps), c);
      REQUIRE(phi_rs(coords_from_digits(sum, 2, c.spec, mps), c) == q_mul(x, y));
      REQUIRE(q_mul(x, y) == q_mul(y, x));
    }
  }
}

TEST_CASE("quotient order formula") {
  CHECK(quotient_order(2, 2, 1, 1) == 8);
  CHECK(quotient_order(2, 3, 1, 2) == 729);
  CHECK(quotient_order(3, 2, 2, 1) == 65536);
}

TEST_CASE("enumeration matches the order formula and an independent brute force") {
  for (auto c : {ctx(2, 2, 1, 1), ctx(2, 3, 1, 1), ctx(2, 2, 1, 1, RingSpec::gaussian()), ctx(2, 2, 1, 2),
                 ctx(2, 2, 2, 1, RingSpec::truncated_poly(2)), ctx(3, 2, 1, 1)}) {
    auto all = enumerate_quotient(c);
    const auto order = static_cast<std::size_t>(quotient_order(c.n, c.p, c.s, c.spec->rank()));
    REQUIRE(all.size() == order);
    REQUIRE(std::set<QuotientElem>(all.begin(), all.end()).size() == order);
    REQUIRE(std::is_sorted(all.begin(), all.end()));
    if (c.n == 2 && order <= 4096) REQUIRE(brute_count(c) == order);
  }
  CHECK(enumerate_quotient(ctx(2, 2, 1, 1)).size() == 8);
  CHECK(enumerate_quotient(ctx(2, 3, 1, 1)).size() == 27);
  CHECK(enumerate_quotient(ctx(2, 2, 1, 1, RingSpec::gaussian())).size() == 64);
}

TEST_CASE("enumeration refuses quotients above the cap") {
  try {
    enumerate_quotient(ctx(3, 5, 1, 2));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  CHECK_THROWS_AS(enumerate_quotient(ctx(2, 3, 1, 1), 26), Error);
}

TEST_CASE("random elements are members and cover small quotients uniformly") {
  auto c = ctx(2, 2, 1, 1);
  std::mt19937_64 rng(21);
  std::map<QuotientElem, int> hits;
  const int draws = 8000;
  for (int t = 0; t < draws; ++t) hits[random_quotient_elem(c, rng)]++;
  REQUIRE(hits.size() == 8);
  for (const auto& [x, h] : hits) CHECK(std::abs(h - draws / 8) < draws / 8 / 5);
  auto c2 = ctx(3, 3, 1, 2, RingSpec::gaussian());
  for (int t = 0; t < 50; ++t) CHECK_NOTHROW(random_quotient_elem(c2, rng));
}

TEST_CASE("p^{s-1} powers of generators climb s - 1 levels") {
  for (Coeff p : {2, 3})
    for (int r : {1, 2})
      for (int s : {2, 3}) {
        if (p == 2 && r == 1) continue;
        auto c = ctx(3, p, r, s, RingSpec::gaussian());
        for (const auto& g : all_generators(3, *c.spec))
          REQUIRE(q_pow(generator(c, g), checked::pow(p, s - 1)) == generator_at_level(c, g, r + s - 1));
      }
}

TEST_CASE("centrality criterion examples") {
  auto Z = RingSpec::integers();
  auto central = is_central_extension(2, 3, 2, 2, 1, Z);
  CHECK(central.central);
  CHECK(central.scan_all_trivial);
  CHECK_FALSE(central.witness);
  auto boundary = is_central_extension(2, 3, 2, 2, 2, Z);
  CHECK(boundary.central);
  CHECK(boundary.scan_all_trivial);
  auto non = is_central_extension(2, 3, 1, 2, 2, Z);
  CHECK_FALSE(non.central);
  CHECK_FALSE(non.scan_all_trivial);
  REQUIRE(non.witness);
  CHECK(non.witness->kernel_gen == GenIndex{1, 2, 1});
  CHECK(non.witness->group_gen == GenIndex{2, 1, 1});
  CHECK(non.witness->commutator.mat() == ints({{10, 0}, {0, 19}}, Modulus::of(27)));
  CHECK_THROWS_AS(is_central_extension(2, 3, 1, 2, 3, Z), Error);
}

TEST_CASE("centrality flag matches the exhaustive scan") {
  for (auto spec : {RingSpec::integers(), RingSpec::gaussian()})
    for (int r : {1, 2, 3})
      for (int s : {1, 2, 3})
        for (int l = 1; l <= s; ++l) {
          auto res = is_central_extension(2, 3, r, s, l, spec);
          REQUIRE(res.central == res.scan_all_trivial);
          REQUIRE(res.central == !res.witness.has_value());
        }
}

TEST_CASE("projection and restriction") {
  auto c = ctx(2, 3, 1, 2);
  auto x = generator(c, {1, 2, 1});
  CHECK(q_project(x, 1) == generator(ctx(2, 3, 1, 1), {1, 2, 1}));
  auto comm = q_commutator(x, generator(c, {2, 1, 1}));
  CHECK(q_restrict(comm, 2) == generator(ctx(2, 3, 2, 1), {1, 1, 1}));
  CHECK_THROWS_AS(q_restrict(x, 2), Error);
}
