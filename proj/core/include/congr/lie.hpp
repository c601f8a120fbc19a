#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "congr/quotient.hpp"

namespace congr {

/// Traceless n x n matrix over R (x) Z/p.
class SlElem {
 public:
  /// Throws PreconditionViolated when mat is not traceless or not a mod-p matrix.
  SlElem(Coeff p, MatR mat);

  static SlElem zero(std::size_t n, Coeff p, const RingPtr& spec);

  std::size_t n() const noexcept { return mat_.n(); }
  Coeff p() const noexcept { return p_; }
  const RingPtr& spec_ptr() const noexcept { return mat_.spec_ptr(); }
  const MatR& mat() const noexcept { return mat_; }
  bool is_zero() const noexcept { return mat_.is_zero(); }

  friend SlElem operator+(const SlElem& a, const SlElem& b);
  friend SlElem operator-(const SlElem& a, const SlElem& b);
  friend bool operator==(const SlElem& a, const SlElem& b) noexcept { return a.mat_ == b.mat_; }

 private:
  Coeff p_;
  MatR mat_;
};

void require_same_context(const SlElem& a, const SlElem& b);

/// AB - BA.
SlElem sl_bracket(const SlElem& a, const SlElem& b);

/// Coordinates in the basis v_k e_ij (i != j), v_k (e_ii - e_nn): slot-major,
/// basis index minor, slots in generator_slots order.
std::vector<Coeff> sl_coords(const SlElem& a);
SlElem sl_from_coords(const std::vector<Coeff>& coords, std::size_t n, Coeff p, const RingPtr& spec);
/// The basis element v_k E_slot as an SlElem (slot, basis 0-based).
SlElem sl_basis(std::size_t n, Coeff p, const RingPtr& spec, std::size_t slot, std::size_t basis);
inline std::size_t sl_dimension(std::size_t n, const RingSpec& spec) { return (n * n - 1) * spec.rank(); }

/// Finitely supported family degree -> SlElem; zero components are never stored.
class GrElem {
 public:
  GrElem(std::size_t n, Coeff p, RingPtr spec);
  static GrElem homogeneous(int degree, const SlElem& x);

  std::size_t n() const noexcept { return n_; }
  Coeff p() const noexcept { return p_; }
  const RingPtr& spec_ptr() const noexcept { return spec_; }
  const std::map<int, SlElem>& components() const noexcept { return comps_; }
  bool is_zero() const noexcept { return comps_.empty(); }

  /// Adds x into degree d (d >= 1).
  void accumulate(int degree, const SlElem& x);

  friend GrElem operator+(const GrElem& a, const GrElem& b);
  friend bool operator==(const GrElem& a, const GrElem& b) noexcept { return a.comps_ == b.comps_; }

 private:
  std::size_t n_;
  Coeff p_;
  RingPtr spec_;
  std::map<int, SlElem> comps_;
};

void require_same_context(const GrElem& a, const GrElem& b);

/// [A t^i, B t^j] = [A, B] t^{i+j}, extended bilinearly.
GrElem gr_bracket(const GrElem& x, const GrElem& y);

/// X = 1 + p^r A in Gamma_r/Gamma_{r+1} maps to A mod p.
SlElem varphi_r(const QuotientElem& x);
/// Sum over components of varphi_r(X_r) t^r; each component is an s = 1 class.
GrElem varphi_total(const std::vector<QuotientElem>& xs);

/// The p-th power map Gamma_r/Gamma_{r+1} -> Gamma_{r+1}/Gamma_{r+2}. Throws
/// ExcludedCase for p = 2, r = 1 where it is not a homomorphism.
QuotientElem frobenius(const QuotientElem& x);
/// The same p-th power without the exclusion; used to exhibit the failing case.
QuotientElem naive_pth_power(const QuotientElem& x);

// ---------------------------------------------------------------------------
// Symbolic bracket table on generators.

/// Factor A_{xy, q1 q2, level}^exp = (1 + p^level v_q1 v_q2 E_xy)^exp. (x, y) = (n, n)
/// denotes the identity.
struct TableLetter {
  std::size_t x;
  std::size_t y;
  std::size_t q1;
  std::size_t q2;
  int level;
  int exp;

  friend bool operator==(const TableLetter&, const TableLetter&) = default;
};

struct TableWord {
  int row;  // 1..16, 16 being the identity case
  std::vector<TableLetter> letters;

  std::string to_string() const;
};

inline constexpr int kBracketTableRows = 16;

/// The table's prediction for [A_{a, r}, A_{b, s}], first matching row wins.
TableWord bracket_table(std::size_t n, const RingSpec& spec, const GenIndex& a, int r, const GenIndex& b, int s);

/// Left-to-right product of the letters in Gamma_level/Gamma_{level+1}.
QuotientElem evaluate_word(const TableWord& w, std::size_t n, Coeff p, const RingPtr& spec, int level);

/// Dimension of the degree-d part of gr/[gr, gr] for gr = sl_n(R (x) Z/p) (x) I,
/// by rank over F_p of the brackets from all degree pairs (a, d - a).
std::size_t lie_h1_degree(std::size_t n, Coeff p, const RingPtr& spec, int degree);

}  // namespace congr
