#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "congr/error.hpp"

namespace congr {

using Coeff = std::int64_t;

namespace checked {
Coeff add(Coeff a, Coeff b);
Coeff sub(Coeff a, Coeff b);
Coeff mul(Coeff a, Coeff b);
/// base^exp with overflow detection; exp >= 0.
Coeff pow(Coeff base, int exp);
}  // namespace checked

bool is_prime(Coeff p) noexcept;

/// Coefficient context: either the integers or Z/m with canonical range [0, m).
class Modulus {
 public:
  static constexpr Modulus integers() noexcept { return Modulus{}; }
  static Modulus of(Coeff m);
  static Modulus prime_power(Coeff p, int e) { return of(checked::pow(p, e)); }

  bool is_integers() const noexcept { return m_ == 0; }
  /// Only meaningful when !is_integers().
  Coeff value() const noexcept { return m_; }

  Coeff reduce(Coeff x) const noexcept;
  Coeff add(Coeff a, Coeff b) const;
  Coeff sub(Coeff a, Coeff b) const;
  Coeff mul(Coeff a, Coeff b) const;

  /// True when reduction from *this to target is a well-defined ring map.
  bool reduces_to(Modulus target) const noexcept;

  std::string describe() const;

  friend bool operator==(Modulus a, Modulus b) noexcept { return a.m_ == b.m_; }

 private:
  constexpr Modulus() noexcept = default;
  explicit constexpr Modulus(Coeff m) noexcept : m_(m) {}
  Coeff m_ = 0;
};

/// A commutative ring that is a free Z-module of finite rank k, given by the
/// products of its basis elements.
class RingSpec {
 public:
  using Table = std::vector<std::vector<std::vector<Coeff>>>;

  /// Validates commutativity, associativity and the unit law exhaustively over
  /// basis triples and throws an Error naming the offending indices otherwise.
  static std::shared_ptr<const RingSpec> make(std::string name, std::size_t k,
                                              std::vector<std::string> basis_names,
                                              std::size_t unit_index, const Table& structure_constants);

  static std::shared_ptr<const RingSpec> integers();
  static std::shared_ptr<const RingSpec> gaussian();
  /// Z[t]/(t^D): basis 1, t, ..., t^{D-1}.
  static std::shared_ptr<const RingSpec> truncated_poly(std::size_t degree_bound);

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return k_; }
  const std::vector<std::string>& basis_names() const noexcept { return basis_names_; }
  std::size_t unit_index() const noexcept { return unit_index_; }
  std::span<const Coeff> product(std::size_t i, std::size_t j) const;
  Table table() const;

  /// out = a * b, reduced in m. out must not alias a or b.
  void multiply(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out, Modulus m) const;

  /// Structural equality (name, basis and table).
  bool same_as(const RingSpec& other) const noexcept;

 private:
  struct Term {
    std::size_t index;
    Coeff coeff;
  };

  RingSpec() = default;
  void build_terms();

  std::string name_;
  std::size_t k_ = 0;
  std::vector<std::string> basis_names_;
  std::size_t unit_index_ = 0;
  std::vector<Coeff> table_;               // flat (i * k + j) * k + l
  std::vector<std::vector<Term>> terms_;   // nonzero entries per (i, j)
};

using RingPtr = std::shared_ptr<const RingSpec>;

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

class RingElem {
 public:
  /// Coefficients are reduced into the canonical range of m.
  RingElem(RingPtr spec, std::vector<Coeff> coeffs, Modulus m);

  static RingElem zero(RingPtr spec, Modulus m);
  static RingElem one(RingPtr spec, Modulus m);
  static RingElem integer(RingPtr spec, Coeff c, Modulus m);
  /// The basis element v_index (0-based).
  static RingElem basis(RingPtr spec, std::size_t index, Modulus m);

  const RingSpec& spec() const noexcept { return *spec_; }
  const RingPtr& spec_ptr() const noexcept { return spec_; }
  Modulus modulus() const noexcept { return modulus_; }
  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  Coeff coeff(std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const noexcept;
  RingElem scaled(Coeff c) const;

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem operator-() const;

  friend bool operator==(const RingElem& a, const RingElem& b) noexcept;

 private:
  RingPtr spec_;
  std::vector<Coeff> coeffs_;
  Modulus modulus_;
};

void require_same_context(const RingElem& a, const RingElem& b);

RingElem elem_add(const RingElem& a, const RingElem& b);
RingElem elem_mul(const RingElem& a, const RingElem& b);
/// Coefficientwise reduction R -> R (x) Z/p^m.
RingElem elem_reduce(const RingElem& a, Coeff p, int m);
/// Reduction into an arbitrary target modulus (must be implied by a's modulus).
RingElem reduce_to(const RingElem& a, Modulus target);

}  // namespace congr
