#include "congr/ring.hpp"

#include <sstream>

namespace congr {

namespace {
__extension__ using Wide = __int128;
}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ContextMismatch: return "context-mismatch";
    case ErrorKind::CommutativityViolation: return "commutativity-violation";
    case ErrorKind::AssociativityViolation: return "associativity-violation";
    case ErrorKind::UnitViolation: return "unit-violation";
    case ErrorKind::IncompatibleModulus: return "incompatible-modulus";
    case ErrorKind::DimensionTooLarge: return "dimension-too-large";
    case ErrorKind::NotUnipotent: return "not-unipotent";
    case ErrorKind::NotSpecialLinear: return "not-special-linear";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::PreconditionViolated: return "precondition-violated";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::ExcludedCase: return "excluded-case";
    case ErrorKind::TruncationTooSmall: return "truncation-too-small";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Parse: return "parse-error";
  }
  return "error";
}

namespace checked {

Coeff add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer addition overflow");
  return r;
}

Coeff sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer subtraction overflow");
  return r;
}

Coeff mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer multiplication overflow");
  return r;
}

Coeff pow(Coeff base, int exp) {
  CONGR_REQUIRE(exp >= 0, ErrorKind::PreconditionViolated, "negative exponent");
  Coeff r = 1;
  for (int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

}  // namespace checked

bool is_prime(Coeff p) noexcept {
  if (p < 2) return false;
  for (Coeff d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Modulus

Modulus Modulus::of(Coeff m) {
  CONGR_REQUIRE(m >= 1, ErrorKind::PreconditionViolated, "modulus must be positive");
  return Modulus{m};
}

Coeff Modulus::reduce(Coeff x) const noexcept {
  if (m_ == 0) return x;
  Coeff r = x % m_;
  return r < 0 ? r + m_ : r;
}

Coeff Modulus::add(Coeff a, Coeff b) const {
  if (m_ == 0) return checked::add(a, b);
  Coeff r = reduce(a) + reduce(b);  // no overflow: m < 2^62
  return r >= m_ ? r - m_ : r;
}

Coeff Modulus::sub(Coeff a, Coeff b) const {
  if (m_ == 0) return checked::sub(a, b);
  return reduce(static_cast<Coeff>((static_cast<Wide>(a) - b) % m_));
}

Coeff Modulus::mul(Coeff a, Coeff b) const {
  if (m_ == 0) return checked::mul(a, b);
  return reduce(static_cast<Coeff>((static_cast<Wide>(a) * b) % m_));
}

bool Modulus::reduces_to(Modulus target) const noexcept {
  if (target.is_integers()) return is_integers();
  if (is_integers()) return true;
  return m_ % target.m_ == 0;
}

std::string Modulus::describe() const {
  return m_ == 0 ? std::string("integers") : "mod " + std::to_string(m_);
}

// ---------------------------------------------------------------------------
// RingSpec

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t l) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << l << ")";
  return os.str();
}

}  // namespace

std::shared_ptr<const RingSpec> RingSpec::make(std::string name, std::size_t k,
                                               std::vector<std::string> basis_names,
                                               std::size_t unit_index, const Table& sc) {
  CONGR_REQUIRE(k >= 1, ErrorKind::PreconditionViolated, "ring rank k must be at least 1");
  CONGR_REQUIRE(basis_names.size() == k, ErrorKind::PreconditionViolated, "basis_names must have k entries");
  CONGR_REQUIRE(unit_index < k, ErrorKind::IndexOutOfRange, "unit_index out of range");
  CONGR_REQUIRE(sc.size() == k, ErrorKind::PreconditionViolated, "structure_constants must have k rows");
  for (std::size_t i = 0; i < k; ++i) {
    CONGR_REQUIRE(sc[i].size() == k, ErrorKind::PreconditionViolated,
            "structure_constants row " + std::to_string(i) + " must have k entries");
    for (std::size_t j = 0; j < k; ++j)
      CONGR_REQUIRE(sc[i][j].size() == k, ErrorKind::PreconditionViolated,
              "structure_constants entry (" + std::to_string(i) + "," + std::to_string(j) +
                  ") must have length k");
  }

  std::shared_ptr<RingSpec> spec(new RingSpec());
  spec->name_ = std::move(name);
  spec->k_ = k;
  spec->basis_names_ = std::move(basis_names);
  spec->unit_index_ = unit_index;
  spec->table_.resize(k * k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) spec->table_[(i * k + j) * k + l] = sc[i][j][l];
  spec->build_terms();

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        if (sc[i][j][l] != sc[j][i][l])
          fail(ErrorKind::CommutativityViolation,
               "v_" + std::to_string(i) + " v_" + std::to_string(j) + " != v_" + std::to_string(j) + " v_" +
                   std::to_string(i));

  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l < k; ++l) {
      Coeff expect = (l == j) ? 1 : 0;
      if (sc[unit_index][j][l] != expect)
        fail(ErrorKind::UnitViolation, "v_" + std::to_string(unit_index) + " v_" + std::to_string(j) +
                                           " != v_" + std::to_string(j));
    }

  // (v_i v_j) v_l versus v_i (v_j v_l), expanded over the integers.
  std::vector<Coeff> left(k), right(k), vi(k), vl(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        std::fill(vi.begin(), vi.end(), 0);
        std::fill(vl.begin(), vl.end(), 0);
        vi[i] = 1;
        vl[l] = 1;
        spec->multiply(spec->product(i, j), vl, left, Modulus::integers());
        spec->multiply(vi, spec->product(j, l), right, Modulus::integers());
        if (left != right) fail(ErrorKind::AssociativityViolation, "basis triple " + triple(i, j, l));
      }
  return spec;
}

void RingSpec::build_terms() {
  terms_.assign(k_ * k_, {});
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j)
      for (std::size_t l = 0; l < k_; ++l) {
        Coeff c = table_[(i * k_ + j) * k_ + l];
        if (c != 0) terms_[i * k_ + j].push_back({l, c});
      }
}

std::shared_ptr<const RingSpec> RingSpec::integers() {
  static const auto spec = make("Z", 1, {"1"}, 0, {{{1}}});
  return spec;
}

std::shared_ptr<const RingSpec> RingSpec::gaussian() {
  static const auto spec = make("Zi", 2, {"1", "i"}, 0, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}});
  return spec;
}

std::shared_ptr<const RingSpec> RingSpec::truncated_poly(std::size_t degree_bound) {
  CONGR_REQUIRE(degree_bound >= 1, ErrorKind::PreconditionViolated, "truncation degree D must be at least 1");
  Table sc(degree_bound, std::vector<std::vector<Coeff>>(degree_bound, std::vector<Coeff>(degree_bound, 0)));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < degree_bound; ++a) {
    names.push_back(a == 0 ? "1" : (a == 1 ? "t" : "t^" + std::to_string(a)));
    for (std::size_t b = 0; b < degree_bound; ++b)
      if (a + b < degree_bound) sc[a][b][a + b] = 1;
  }
  return make("Zt:" + std::to_string(degree_bound), degree_bound, std::move(names), 0, sc);
}

std::span<const Coeff> RingSpec::product(std::size_t i, std::size_t j) const {
  CONGR_REQUIRE(i < k_ && j < k_, ErrorKind::IndexOutOfRange, "basis index out of range");
  return std::span<const Coeff>(table_).subspan((i * k_ + j) * k_, k_);
}

RingSpec::Table RingSpec::table() const {
  Table t(k_, std::vector<std::vector<Coeff>>(k_));
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j) {
      auto p = product(i, j);
      t[i][j].assign(p.begin(), p.end());
    }
  return t;
}

void RingSpec::multiply(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out,
                        Modulus m) const {
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k_; ++j) {
      if (b[j] == 0) continue;
      Coeff ab = m.mul(a[i], b[j]);
      for (const Term& t : terms_[i * k_ + j]) out[t.index] = m.add(out[t.index], m.mul(ab, m.reduce(t.coeff)));
    }
  }
}

bool RingSpec::same_as(const RingSpec& other) const noexcept {
  return name_ == other.name_ && k_ == other.k_ && unit_index_ == other.unit_index_ &&
         basis_names_ == other.basis_names_ && table_ == other.table_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  return a == b || (a && b && a->same_as(*b));
}

// ---------------------------------------------------------------------------
// RingElem

RingElem::RingElem(RingPtr spec, std::vector<Coeff> coeffs, Modulus m)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)), modulus_(m) {
  CONGR_REQUIRE(spec_ != nullptr, ErrorKind::PreconditionViolated, "null ring spec");
  CONGR_REQUIRE(coeffs_.size() == spec_->rank(), ErrorKind::PreconditionViolated,
          "coefficient vector length does not match ring rank");
  for (Coeff& c : coeffs_) c = modulus_.reduce(c);
}

RingElem RingElem::zero(RingPtr spec, Modulus m) {
  std::size_t k = spec->rank();
  return RingElem(std::move(spec), std::vector<Coeff>(k, 0), m);
}

RingElem RingElem::one(RingPtr spec, Modulus m) { return integer(std::move(spec), 1, m); }

RingElem RingElem::integer(RingPtr spec, Coeff c, Modulus m) {
  std::vector<Coeff> v(spec->rank(), 0);
  v[spec->unit_index()] = c;
  return RingElem(std::move(spec), std::move(v), m);
}

RingElem RingElem::basis(RingPtr spec, std::size_t index, Modulus m) {
  CONGR_REQUIRE(index < spec->rank(), ErrorKind::IndexOutOfRange, "basis index out of range");
  std::vector<Coeff> v(spec->rank(), 0);
  v[index] = 1;
  return RingElem(std::move(spec), std::move(v), m);
}

bool RingElem::is_zero() const noexcept {
  for (Coeff c : coeffs_)
    if (c != 0) return false;
  return true;
}

RingElem RingElem::scaled(Coeff c) const {
  RingElem r = *this;
  Coeff cr = modulus_.reduce(c);
  for (Coeff& x : r.coeffs_) x = modulus_.mul(x, cr);
  return r;
}

void require_same_context(const RingElem& a, const RingElem& b) {
  CONGR_REQUIRE(a.modulus() == b.modulus() && same_ring(a.spec_ptr(), b.spec_ptr()), ErrorKind::ContextMismatch,
          "ring elements live in different contexts (" + a.spec().name() + " " + a.modulus().describe() +
              " vs " + b.spec().name() + " " + b.modulus().describe() + ")");
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_context(a, b);
  RingElem r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.modulus_.add(a.coeffs_[i], b.coeffs_[i]);
  return r;
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  require_same_context(a, b);
  RingElem r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.modulus_.sub(a.coeffs_[i], b.coeffs_[i]);
  return r;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_context(a, b);
  RingElem r = RingElem::zero(a.spec_, a.modulus_);
  a.spec_->multiply(a.coeffs_, b.coeffs_, r.coeffs_, a.modulus_);
  return r;
}

RingElem RingElem::operator-() const { return zero(spec_, modulus_) - *this; }

bool operator==(const RingElem& a, const RingElem& b) noexcept {
  return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_ && same_ring(a.spec_, b.spec_);
}

RingElem elem_add(const RingElem& a, const RingElem& b) { return a + b; }
RingElem elem_mul(const RingElem& a, const RingElem& b) { return a * b; }

RingElem reduce_to(const RingElem& a, Modulus target) {
  CONGR_REQUIRE(a.modulus().reduces_to(target), ErrorKind::IncompatibleModulus,
          "cannot reduce from " + a.modulus().describe() + " to " + target.describe());
  std::vector<Coeff> v(a.coeffs().begin(), a.coeffs().end());
  return RingElem(a.spec_ptr(), std::move(v), target);
}

RingElem elem_reduce(const RingElem& a, Coeff p, int m) {
  CONGR_REQUIRE(is_prime(p), ErrorKind::PreconditionViolated, "p must be prime");
  CONGR_REQUIRE(m >= 1, ErrorKind::PreconditionViolated, "exponent m must be positive");
  return reduce_to(a, Modulus::prime_power(p, m));
}

}  // namespace congr
