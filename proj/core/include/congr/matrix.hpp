#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "congr/ring.hpp"

namespace congr {

inline constexpr std::size_t kMaxMatrixDim = 6;

/// Square matrix over a ring context (spec, modulus). Entries are stored as one
/// flat coefficient array; indices are 0-based.
class MatR {
 public:
  /// Zero matrix. Throws DimensionTooLarge when n > kMaxMatrixDim.
  MatR(std::size_t n, RingPtr spec, Modulus m);

  static MatR identity(std::size_t n, RingPtr spec, Modulus m);
  /// c * e_{ij}.
  static MatR unit(std::size_t n, std::size_t i, std::size_t j, const RingElem& c);
  /// Integer matrix over Z (rows given row-major).
  static MatR from_integers(const std::vector<std::vector<Coeff>>& rows, RingPtr spec, Modulus m);

  std::size_t n() const noexcept { return n_; }
  std::size_t rank() const noexcept { return spec_->rank(); }
  const RingSpec& spec() const noexcept { return *spec_; }
  const RingPtr& spec_ptr() const noexcept { return spec_; }
  Modulus modulus() const noexcept { return modulus_; }

  RingElem at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const RingElem& value);
  std::span<const Coeff> entry(std::size_t i, std::size_t j) const;
  std::span<const Coeff> data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  MatR scaled(Coeff c) const;
  MatR scaled(const RingElem& c) const;
  /// Reduce coefficients into a coarser modulus.
  MatR reduced(Modulus target) const;
  /// Reinterpret canonical representatives in a finer modulus (or over Z).
  MatR lifted(Modulus target) const;

  friend MatR operator+(const MatR& a, const MatR& b);
  friend MatR operator-(const MatR& a, const MatR& b);
  friend MatR operator*(const MatR& a, const MatR& b);
  friend bool operator==(const MatR& a, const MatR& b) noexcept;

  /// Lexicographic order on the coefficient array (contexts assumed equal).
  friend bool operator<(const MatR& a, const MatR& b) noexcept { return a.data_ < b.data_; }

 private:
  std::span<Coeff> entry_mut(std::size_t i, std::size_t j);

  std::size_t n_;
  RingPtr spec_;
  Modulus modulus_;
  std::vector<Coeff> data_;
};

void require_same_context(const MatR& a, const MatR& b);

MatR mat_mul(const MatR& x, const MatR& y);
/// Division-free cofactor expansion (memoised over column subsets).
RingElem mat_det(const MatR& x);
RingElem mat_trace(const MatR& x);

/// Largest e <= cap with X == 1 mod p^e coefficientwise (0 if X is not even 1 mod p).
int unipotent_level(const MatR& x, Coeff p, int cap);

/// Exponent m with modulus == p^m; throws IncompatibleModulus otherwise.
int prime_power_exponent(Modulus m, Coeff p);

/// (X - 1) / p^e, computed coefficientwise on canonical representatives and
/// reduced into target. Requires X == 1 mod p^e.
MatR unipotent_part(const MatR& x, Coeff p, int e, Modulus target);

/// Inverse of X = 1 + p^r A in context p^m via the truncated Neumann series
/// sum_{i r < m} (-p^r A)^i.
MatR mat_inverse_unipotent(const MatR& x, Coeff p, int r, int m);

/// Group commutator X^{-1} Y^{-1} X Y for matrices congruent to 1 mod p in a
/// context p^m.
MatR mat_commutator(const MatR& x, const MatR& y, Coeff p);

MatR mat_pow(const MatR& x, Coeff e);

struct DetCongruence {
  RingElem lhs;
  RingElem rhs;
  bool pass;
};

/// det(1 + p^r A) against 1 + p^r tr(A), both mod p^{r+1}; A integral.
DetCongruence det_congruence_check(const MatR& a, Coeff p, int r);

}  // namespace congr
