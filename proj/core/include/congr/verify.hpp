#pragma once

#include <cstdint>
#include <vector>

#include "congr/lie.hpp"
#include "congr/quotient.hpp"
#include "congr/report.hpp"

namespace congr {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Class of [A_{a, ra}, A_{b, rb}] in Gamma_{ra+rb}/Gamma_{ra+rb+1}, computed from
/// explicit matrices mod p^{ra+rb+1}.
QuotientElem generator_bracket(std::size_t n, Coeff p, const RingPtr& spec, const GenIndex& a, int ra,
                               const GenIndex& b, int rb);

/// Every ordered generator pair and basis pair: the table word against the
/// brute-force commutator, and the brute-force commutator against the matrix
/// expansion 1 + p^{r+s} v v' [E, E'].
VerifyReport verify_bracket_table(std::size_t n, Coeff p, int r, int s, const RingPtr& spec);

/// The four SL_2(Z) relations, plus the worked instance at p = 3, r = s = 1.
VerifyReport verify_sl2z_relations(Coeff p, int r, int s);

struct FrobeniusOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 50;
  Coeff enumeration_cap = 200'000;
};

/// Generator mapping, homomorphism on random pairs, bijectivity by exhaustion,
/// and the p^{s-1}-power composition law for s in {2, 3}. Throws ExcludedCase
/// for p = 2, r = 1.
VerifyReport verify_frobenius(std::size_t n, Coeff p, int r, const RingPtr& spec, const FrobeniusOptions& opt = {});

/// p = 2, r = 1: exhibits X = 1 + 2(e12 + e21) with X^2 != 1 + 4A and a pair
/// violating the homomorphism property.
VerifyReport verify_frobenius_counterexample(std::size_t n, const RingPtr& spec);

struct DetLemmaOptions {
  std::vector<std::size_t> ns{2, 3, 4};
  std::vector<Coeff> ps{2, 3, 5};
  std::vector<int> rs{1, 2};
  std::size_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  Coeff entry_bound = 10;
};

/// det(1 + p^r A) == 1 + p^r tr(A) mod p^{r+1} on random integral A, with the
/// contrapositive "det == 1 implies tr(A) == 0 mod p".
VerifyReport verify_det_lemma(const RingPtr& spec, const DetLemmaOptions& opt = {});

/// The commutator of two classes of Gamma_r/Gamma_{r+s}, viewed in
/// Gamma_{r+s-1}/Gamma_{r+s}. Requires r >= s - 1.
QuotientElem compute_d2(const QuotientElem& theta_x, const QuotientElem& theta_y);

/// Pairwise commuting family 1 + p^r t^i e12 over Z[t]/(t^D), its images t^i and
/// their independence over F_p.
VerifyReport witness_zt(int i_max, Coeff p, int r, std::size_t degree_bound);

/// The four matrices 1 + p^r i^eps e_ij over Z[i].
VerifyReport witness_zi(Coeff p, int r);

struct H1GroupOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 200;
};

/// [Gamma_1, Gamma_1] lies in Gamma_2 on random commutators, and every generator
/// of Gamma_2/Gamma_3 is realized by an explicit commutator. n >= 3.
VerifyReport verify_h1_group(std::size_t n, Coeff p, const RingPtr& spec, const H1GroupOptions& opt = {});

struct GradedOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 200;
};

/// Degreewise bijectivity of varphi_r o Phi, bracket preservation on random
/// homogeneous pairs with a + b <= maxdeg, and the H_1 dimensions.
VerifyReport verify_graded_iso(std::size_t n, Coeff p, const RingPtr& spec, int maxdeg,
                               const GradedOptions& opt = {});

/// The centrality criterion against the exhaustive generator scan, plus the
/// commutator form 1 + p^{2r+s-l} v v' [E, E'] on every generator pair.
VerifyReport verify_centrality(std::size_t n, Coeff p, int r, int s, int l, const RingPtr& spec);

/// Rendering of a class of Gamma_r/Gamma_{r+1} by its sl-coordinates.
std::string graded_string(const QuotientElem& x);

}  // namespace congr
