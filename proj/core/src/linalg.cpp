#include "congr/linalg.hpp"

#include <tuple>
#include <utility>

namespace congr {

namespace {

Coeff inverse_mod(Coeff a, Coeff p) {
  // Extended Euclid on (a, p), p prime and a != 0 mod p.
  Coeff r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Coeff q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  return ((t0 % p) + p) % p;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::vector<Coeff>> rows, Coeff p) {
  CONGR_REQUIRE(is_prime(p), ErrorKind::PreconditionViolated, "rank_mod_p needs a prime");
  const Modulus m = Modulus::of(p);
  for (auto& row : rows)
    for (Coeff& x : row) x = m.reduce(x);
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Coeff inv = inverse_mod(rows[rank][c], p);
    for (Coeff& x : rows[rank]) x = m.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Coeff f = rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = m.sub(rows[r][j], m.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace congr
