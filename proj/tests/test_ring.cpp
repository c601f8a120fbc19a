#include <doctest.h>

#include <random>

#include "congr/ring.hpp"
#include "oracles.hpp"

using namespace congr;

namespace {

RingElem elem(const RingPtr& s, std::vector<Coeff> v, Modulus m = Modulus::integers()) {
  return RingElem(s, std::move(v), m);
}

std::vector<Coeff> coeffs(const RingElem& a) { return {a.coeffs().begin(), a.coeffs().end()}; }

RingElem random_elem(const RingPtr& s, std::mt19937_64& rng, Modulus m) {
  std::vector<Coeff> v(s->rank());
  for (Coeff& c : v) c = static_cast<Coeff>(rng() % 41) - 20;
  return RingElem(s, v, m);
}

}  // namespace

TEST_CASE("gaussian table with i*i = -1 validates") {
  auto zi = RingSpec::make("Zi", 2, {"1", "i"}, 0, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}});
  CHECK(zi->rank() == 2);
}

TEST_CASE("i*i = +1 is still a ring") {
  CHECK_NOTHROW(RingSpec::make("Zi", 2, {"1", "i"}, 0, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}));
}

TEST_CASE("ring axioms are enforced with the matching error kind") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  CHECK(kind_of([] { RingSpec::make("bad", 2, {"1", "x"}, 0, {{{1, 0}, {0, 1}}, {{0, 0}, {1, 0}}}); }) ==
        ErrorKind::CommutativityViolation);
  CHECK(kind_of([] { RingSpec::make("bad", 2, {"1", "x"}, 0, {{{1, 0}, {0, 2}}, {{0, 2}, {0, 1}}}); }) ==
        ErrorKind::UnitViolation);
  // Commutative and unital, but (x x) y = x while x (x y) = y.
  CHECK(kind_of([] {
          RingSpec::make("bad", 3, {"1", "x", "y"}, 0,
                         {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                          {{0, 1, 0}, {0, 0, 1}, {0, 1, 0}},
                          {{0, 0, 1}, {0, 1, 0}, {0, 1, 0}}});
        }) == ErrorKind::AssociativityViolation);
  CHECK(kind_of([] { RingSpec::make("bad", 1, {"1"}, 0, {{{1, 0}}}); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("elem_add examples") {
  auto zi = RingSpec::gaussian();
  CHECK(coeffs(elem_add(elem(zi, {1, 1}, Modulus::of(9)), elem(zi, {8, 8}, Modulus::of(9)))) ==
        std::vector<Coeff>{0, 0});
  CHECK(coeffs(elem_add(elem(zi, {2, 3}), elem(zi, {0, 0}))) == std::vector<Coeff>{2, 3});
  auto zt = RingSpec::truncated_poly(4);
  CHECK(coeffs(elem_add(elem(zt, {1, 2, 3, 4}, Modulus::of(5)), elem(zt, {4, 3, 2, 1}, Modulus::of(5)))) ==
        std::vector<Coeff>{0, 0, 0, 0});
}

TEST_CASE("elem_mul examples") {
  auto zi = RingSpec::gaussian();
  CHECK(coeffs(elem_mul(elem(zi, {1, 1}), elem(zi, {1, 1}))) == std::vector<Coeff>{0, 2});
  auto zt = RingSpec::truncated_poly(4);
  CHECK(coeffs(elem_mul(elem(zt, {0, 1, 0, 0}), elem(zt, {0, 0, 1, 0}))) == std::vector<Coeff>{0, 0, 0, 1});
  CHECK(elem_mul(elem(zt, {0, 0, 1, 0}), elem(zt, {0, 0, 0, 1})).is_zero());
}

TEST_CASE("elements from different contexts do not mix") {
  auto zi = RingSpec::gaussian();
  CHECK_THROWS_AS(elem_add(elem(zi, {1, 0}), elem(zi, {1, 0}, Modulus::of(3))), Error);
  CHECK_THROWS_AS(elem_mul(elem(zi, {1, 0}), elem(RingSpec::integers(), {1})), Error);
}

TEST_CASE("elem_reduce examples") {
  CHECK(coeffs(elem_reduce(elem(RingSpec::integers(), {28}), 3, 2)) == std::vector<Coeff>{28 % 9});
  CHECK(coeffs(elem_reduce(elem(RingSpec::gaussian(), {10, -8}), 3, 3)) ==
        std::vector<Coeff>{oracle::mod(10, 27), oracle::mod(-8, 27)});
  auto once = elem_reduce(elem(RingSpec::gaussian(), {7, -3}), 2, 1);
  CHECK(elem_reduce(once, 2, 1) == once);
  CHECK_THROWS_AS(elem_reduce(elem(RingSpec::integers(), {1}, Modulus::of(9)), 2, 1), Error);
  CHECK_THROWS_AS(elem_reduce(elem(RingSpec::integers(), {1}, Modulus::of(9)), 3, 3), Error);
}

TEST_CASE("modular coefficients stay in the canonical range") {
  auto e = elem(RingSpec::gaussian(), {-1, -28}, Modulus::of(27));
  CHECK(coeffs(e) == std::vector<Coeff>{26, 26});
}

TEST_CASE("checked arithmetic reports overflow") {
  CHECK_THROWS_AS(checked::pow(10, 19), Error);
  CHECK(checked::pow(3, 4) == 81);
  CHECK_THROWS_AS(checked::mul(INT64_MAX, 2), Error);
}

TEST_CASE("distributivity and commutativity on random triples") {
  std::mt19937_64 rng(7);
  for (auto spec : {RingSpec::integers(), RingSpec::gaussian(), RingSpec::truncated_poly(5)})
    for (Modulus m : {Modulus::integers(), Modulus::of(27), Modulus::of(25)})
      for (int t = 0; t < 1000; ++t) {
        auto a = random_elem(spec, rng, m), b = random_elem(spec, rng, m), c = random_elem(spec, rng, m);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
      }
}

TEST_CASE("reduction is a ring homomorphism") {
  std::mt19937_64 rng(8);
  for (auto spec : {RingSpec::integers(), RingSpec::gaussian(), RingSpec::truncated_poly(5)})
    for (int t = 0; t < 1000; ++t) {
      auto a = random_elem(spec, rng, Modulus::integers()), b = random_elem(spec, rng, Modulus::integers());
      REQUIRE(elem_reduce(a + b, 3, 2) == elem_reduce(a, 3, 2) + elem_reduce(b, 3, 2));
      REQUIRE(elem_reduce(a * b, 3, 2) == elem_reduce(a, 3, 2) * elem_reduce(b, 3, 2));
    }
}

TEST_CASE("truncated polynomial product matches convolution") {
  std::mt19937_64 rng(9);
  const std::size_t D = 7;
  auto zt = RingSpec::truncated_poly(D);
  for (int t = 0; t < 500; ++t) {
    std::vector<Coeff> a(D, 0), b(D, 0);
    const std::size_t da = rng() % D, db = rng() % (D - da);
    for (std::size_t i = 0; i <= da; ++i) a[i] = static_cast<Coeff>(rng() % 21) - 10;
    for (std::size_t i = 0; i <= db; ++i) b[i] = static_cast<Coeff>(rng() % 21) - 10;
    REQUIRE(coeffs(elem(zt, a) * elem(zt, b)) == oracle::convolve(a, b, D));
  }
}
