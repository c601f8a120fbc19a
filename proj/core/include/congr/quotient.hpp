#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "congr/matrix.hpp"

namespace congr {

/// Parameters of the finite quotient Gamma_r / Gamma_{r+s} of SL_n(R), where
/// Gamma_e is the kernel of reduction mod p^e.
struct QuotientContext {
  std::size_t n;
  Coeff p;
  int r;
  int s;
  RingPtr spec;

  /// Coefficients of canonical forms live mod p^{r+s}.
  Modulus modulus() const { return Modulus::prime_power(p, r + s); }
  std::string describe() const;

  friend bool operator==(const QuotientContext& a, const QuotientContext& b) noexcept {
    return a.n == b.n && a.p == b.p && a.r == b.r && a.s == b.s && same_ring(a.spec, b.spec);
  }
};

/// Throws PreconditionViolated unless p is prime, n >= 2 and r, s >= 1.
void validate_context(const QuotientContext& ctx);

/// Canonical-form coset of Gamma_{r+s} inside Gamma_r: the matrix reduced mod p^{r+s}.
class QuotientElem {
 public:
  /// Reduces m into the context and checks m == 1 mod p^r and det(m) == 1 mod p^{r+s}.
  static QuotientElem from_matrix(const QuotientContext& ctx, const MatR& m);
  static QuotientElem identity(const QuotientContext& ctx);

  const QuotientContext& context() const noexcept { return ctx_; }
  const MatR& mat() const noexcept { return mat_; }
  bool is_identity() const noexcept { return mat_.is_identity(); }

  friend bool operator==(const QuotientElem& a, const QuotientElem& b) noexcept {
    return a.ctx_ == b.ctx_ && a.mat_ == b.mat_;
  }
  friend bool operator<(const QuotientElem& a, const QuotientElem& b) noexcept { return a.mat_ < b.mat_; }

 private:
  QuotientElem(QuotientContext ctx, MatR mat) : ctx_(std::move(ctx)), mat_(std::move(mat)) {}

  friend QuotientElem q_mul(const QuotientElem&, const QuotientElem&);
  friend QuotientElem q_inv(const QuotientElem&);
  friend QuotientElem q_pow(const QuotientElem&, Coeff);

  QuotientContext ctx_;
  MatR mat_;
};

void require_same_context(const QuotientElem& a, const QuotientElem& b);

QuotientElem q_mul(const QuotientElem& a, const QuotientElem& b);
QuotientElem q_inv(const QuotientElem& a);
QuotientElem q_commutator(const QuotientElem& a, const QuotientElem& b);
/// Integer power; negative exponents go through the inverse.
QuotientElem q_pow(const QuotientElem& a, Coeff e);

/// Membership of an integral matrix in Gamma_r; throws NotSpecialLinear unless det(x) == 1.
bool gamma_member(const MatR& x, Coeff p, int r);

/// Gamma_r/Gamma_{r+s} -> Gamma_r/Gamma_{r+s'} for s' <= s.
QuotientElem q_project(const QuotientElem& a, int new_s);
/// View an element of Gamma_r/Gamma_{r+s} lying in Gamma_{r'} (r' >= r) as an
/// element of Gamma_{r'}/Gamma_{r+s}.
QuotientElem q_restrict(const QuotientElem& a, int new_r);

/// Bracket on the associated graded object: classes in Gamma_a/Gamma_{a+1} and
/// Gamma_b/Gamma_{b+1} map to the commutator class in Gamma_{a+b}/Gamma_{a+b+1}.
QuotientElem graded_commutator(const QuotientElem& x, const QuotientElem& y);

// ---------------------------------------------------------------------------
// Generators A_{ij,k,r}; i, j, k are 1-based as in the usual notation.

struct GenIndex {
  std::size_t i;
  std::size_t j;
  std::size_t k;

  friend bool operator==(const GenIndex&, const GenIndex&) = default;
};

std::string to_string(const GenIndex& g);

/// Slots (i, j) with i + j < 2n in row-major order; the coordinate order of Phi.
std::vector<std::pair<std::size_t, std::size_t>> generator_slots(std::size_t n);

/// e_{ij} for i != j, e_{ii} - e_{nn} for i == j (1-based), with ring values in m.
MatR slot_direction(std::size_t n, std::size_t i, std::size_t j, const RingPtr& spec, Modulus m);

void check_generator_index(std::size_t n, const RingSpec& spec, const GenIndex& g);

/// Class of A_{ij,k,level} in ctx, level >= ctx.r. Off-diagonal: 1 + p^level v_k e_ij.
/// Diagonal: 1 + p^level v_k e_ii with the (n,n) entry set to (1 + p^level v_k)^{-1},
/// which agrees with 1 + p^level v_k (e_ii - e_nn) whenever that matrix has
/// determinant 1 mod p^{r+s} (in particular for s = 1 and for r >= s).
QuotientElem generator_at_level(const QuotientContext& ctx, const GenIndex& g, int level);
inline QuotientElem generator(const QuotientContext& ctx, const GenIndex& g) {
  return generator_at_level(ctx, g, ctx.r);
}

/// Class of 1 + p^level c E_{ij} with an arbitrary ring coefficient c, using the
/// same diagonal convention as generator_at_level.
QuotientElem scaled_generator(const QuotientContext& ctx, std::size_t i, std::size_t j, const RingElem& c,
                              int level);

std::vector<GenIndex> all_generators(std::size_t n, const RingSpec& spec);

// ---------------------------------------------------------------------------
// Isomorphisms with coefficient modules.

/// Phi: (+)_{n^2-1} F_p[V] -> Gamma_r/Gamma_{r+1}. coords are mod-p ring
/// elements in generator_slots order; a_nn = -(a_11 + ... + a_{n-1,n-1}).
QuotientElem phi_iso(const std::vector<RingElem>& coords, const QuotientContext& ctx);
std::vector<RingElem> phi_iso_inv(const QuotientElem& x);

/// Phi_{r,s}: (+)_{n^2-1} Z/p^s[V] -> Gamma_r/Gamma_{r+s}, v_k delta_ij |-> A_{ij,k,r}.
/// Requires r >= s.
QuotientElem phi_rs(const std::vector<RingElem>& coords, const QuotientContext& ctx);

/// p^{s (n^2-1) k}.
Coeff quotient_order(std::size_t n, Coeff p, int s, std::size_t k);

inline constexpr Coeff kDefaultEnumerationCap = 1'000'000;

/// Exhaustive list of Gamma_r/Gamma_{r+s} in sorted canonical form: all
/// 1 + p^r A, A over R (x) Z/p^s, passing the determinant condition.
std::vector<QuotientElem> enumerate_quotient(const QuotientContext& ctx, Coeff cap = kDefaultEnumerationCap);

/// Calls f for every vector of `len` digits in [0, base), in lexicographic order.
template <typename F>
void for_each_digit_vector(std::size_t len, Coeff base, F&& f) {
  std::vector<Coeff> digits(len, 0);
  while (true) {
    f(static_cast<const std::vector<Coeff>&>(digits));
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < base) break;
      digits[pos] = 0;
      if (pos == 0) return;
    }
    if (len == 0) return;
  }
}

/// Coordinate vector with (n^2-1) ring elements built from flat digits.
std::vector<RingElem> coords_from_digits(const std::vector<Coeff>& digits, std::size_t n, const RingPtr& spec,
                                         Modulus m);

/// Uniform random element of Gamma_r/Gamma_{r+s}: random entries off (n,n), with
/// the (n,n) entry solved from the determinant condition.
QuotientElem random_quotient_elem(const QuotientContext& ctx, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Centrality of 1 -> Gamma_{r+s-l}/Gamma_{r+s} -> Gamma_r/Gamma_{r+s} -> Gamma_r/Gamma_{r+s-l} -> 1.

struct CentralityWitness {
  GenIndex kernel_gen;  // at level r + s - l
  GenIndex group_gen;   // at level r
  QuotientElem commutator;
};

struct CentralityResult {
  bool central;          // the criterion r >= l
  bool scan_all_trivial; // brute-force scan of all generator-pair commutators
  std::size_t pairs_scanned;
  std::optional<CentralityWitness> witness;
};

CentralityResult is_central_extension(std::size_t n, Coeff p, int r, int s, int l, const RingPtr& spec);

/// Generators ordered off-diagonal first (row-major), then diagonal; the scan order
/// used when searching for centrality witnesses.
std::vector<GenIndex> scan_order_generators(std::size_t n, const RingSpec& spec);

}  // namespace congr
