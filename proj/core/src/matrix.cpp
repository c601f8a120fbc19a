#include "congr/matrix.hpp"

#include <algorithm>
#include <unordered_map>

namespace congr {

MatR::MatR(std::size_t n, RingPtr spec, Modulus m) : n_(n), spec_(std::move(spec)), modulus_(m) {
  CONGR_REQUIRE(spec_ != nullptr, ErrorKind::PreconditionViolated, "null ring spec");
  CONGR_REQUIRE(n_ >= 1, ErrorKind::PreconditionViolated, "matrix dimension must be positive");
  CONGR_REQUIRE(n_ <= kMaxMatrixDim, ErrorKind::DimensionTooLarge,
          "n = " + std::to_string(n_) + " exceeds the cofactor guard " + std::to_string(kMaxMatrixDim));
  data_.assign(n_ * n_ * spec_->rank(), 0);
}

MatR MatR::identity(std::size_t n, RingPtr spec, Modulus m) {
  MatR r(n, spec, m);
  std::size_t k = spec->rank();
  Coeff one = m.reduce(1);
  for (std::size_t i = 0; i < n; ++i) r.data_[(i * n + i) * k + spec->unit_index()] = one;
  return r;
}

MatR MatR::unit(std::size_t n, std::size_t i, std::size_t j, const RingElem& c) {
  MatR r(n, c.spec_ptr(), c.modulus());
  r.set(i, j, c);
  return r;
}

MatR MatR::from_integers(const std::vector<std::vector<Coeff>>& rows, RingPtr spec, Modulus m) {
  MatR r(rows.size(), spec, m);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CONGR_REQUIRE(rows[i].size() == rows.size(), ErrorKind::PreconditionViolated, "matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) r.set(i, j, RingElem::integer(spec, rows[i][j], m));
  }
  return r;
}

std::span<const Coeff> MatR::entry(std::size_t i, std::size_t j) const {
  CONGR_REQUIRE(i < n_ && j < n_, ErrorKind::IndexOutOfRange, "matrix index out of range");
  std::size_t k = spec_->rank();
  return std::span<const Coeff>(data_).subspan((i * n_ + j) * k, k);
}

std::span<Coeff> MatR::entry_mut(std::size_t i, std::size_t j) {
  std::size_t k = spec_->rank();
  return std::span<Coeff>(data_).subspan((i * n_ + j) * k, k);
}

RingElem MatR::at(std::size_t i, std::size_t j) const {
  auto e = entry(i, j);
  return RingElem(spec_, std::vector<Coeff>(e.begin(), e.end()), modulus_);
}

void MatR::set(std::size_t i, std::size_t j, const RingElem& value) {
  CONGR_REQUIRE(i < n_ && j < n_, ErrorKind::IndexOutOfRange, "matrix index out of range");
  CONGR_REQUIRE(value.modulus() == modulus_ && same_ring(value.spec_ptr(), spec_), ErrorKind::ContextMismatch,
          "entry context differs from matrix context");
  auto dst = entry_mut(i, j);
  std::copy(value.coeffs().begin(), value.coeffs().end(), dst.begin());
}

bool MatR::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Coeff c) { return c == 0; });
}

bool MatR::is_identity() const noexcept { return *this == identity(n_, spec_, modulus_); }

MatR MatR::scaled(Coeff c) const {
  MatR r = *this;
  Coeff cr = modulus_.reduce(c);
  for (Coeff& x : r.data_) x = modulus_.mul(x, cr);
  return r;
}

MatR MatR::scaled(const RingElem& c) const {
  CONGR_REQUIRE(c.modulus() == modulus_ && same_ring(c.spec_ptr(), spec_), ErrorKind::ContextMismatch,
          "scalar context differs from matrix context");
  MatR r(n_, spec_, modulus_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) spec_->multiply(c.coeffs(), entry(i, j), r.entry_mut(i, j), modulus_);
  return r;
}

MatR MatR::reduced(Modulus target) const {
  CONGR_REQUIRE(modulus_.reduces_to(target), ErrorKind::IncompatibleModulus,
          "cannot reduce from " + modulus_.describe() + " to " + target.describe());
  MatR r = *this;
  r.modulus_ = target;
  for (Coeff& x : r.data_) x = target.reduce(x);
  return r;
}

MatR MatR::lifted(Modulus target) const {
  CONGR_REQUIRE(target.reduces_to(modulus_), ErrorKind::IncompatibleModulus,
          "cannot lift from " + modulus_.describe() + " to " + target.describe());
  MatR r = *this;
  r.modulus_ = target;
  return r;
}

void require_same_context(const MatR& a, const MatR& b) {
  CONGR_REQUIRE(a.n() == b.n() && a.modulus() == b.modulus() && same_ring(a.spec_ptr(), b.spec_ptr()),
          ErrorKind::ContextMismatch, "matrices live in different contexts");
}

MatR operator+(const MatR& a, const MatR& b) {
  require_same_context(a, b);
  MatR r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.modulus_.add(a.data_[i], b.data_[i]);
  return r;
}

MatR operator-(const MatR& a, const MatR& b) {
  require_same_context(a, b);
  MatR r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.modulus_.sub(a.data_[i], b.data_[i]);
  return r;
}

MatR operator*(const MatR& a, const MatR& b) {
  require_same_context(a, b);
  const std::size_t n = a.n_, k = a.rank();
  MatR r(n, a.spec_, a.modulus_);
  std::vector<Coeff> prod(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      auto lhs = a.entry(i, l);
      if (std::all_of(lhs.begin(), lhs.end(), [](Coeff c) { return c == 0; })) continue;
      for (std::size_t j = 0; j < n; ++j) {
        auto rhs = b.entry(l, j);
        a.spec_->multiply(lhs, rhs, prod, a.modulus_);
        auto dst = r.entry_mut(i, j);
        for (std::size_t c = 0; c < k; ++c) dst[c] = a.modulus_.add(dst[c], prod[c]);
      }
    }
  return r;
}

bool operator==(const MatR& a, const MatR& b) noexcept {
  return a.n_ == b.n_ && a.modulus_ == b.modulus_ && a.data_ == b.data_ && same_ring(a.spec_, b.spec_);
}

MatR mat_mul(const MatR& x, const MatR& y) { return x * y; }

RingElem mat_det(const MatR& x) {
  const std::size_t n = x.n();
  CONGR_REQUIRE(n <= kMaxMatrixDim, ErrorKind::DimensionTooLarge, "determinant guard exceeded");
  const RingPtr& spec = x.spec_ptr();
  const Modulus m = x.modulus();

  // minor[mask] = determinant of the rows (n - popcount(mask))..n-1 restricted to
  // the columns in mask, expanded along its first row.
  std::unordered_map<unsigned, RingElem> memo;
  auto det_rec = [&](auto&& self, unsigned mask) -> RingElem {
    int cols = __builtin_popcount(mask);
    if (cols == 0) return RingElem::one(spec, m);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::size_t row = n - static_cast<std::size_t>(cols);
    RingElem acc = RingElem::zero(spec, m);
    int sign_pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      RingElem a = x.at(row, c);
      if (!a.is_zero()) {
        RingElem term = a * self(self, mask & ~(1u << c));
        acc = (sign_pos % 2 == 0) ? acc + term : acc - term;
      }
      ++sign_pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return det_rec(det_rec, (1u << n) - 1);
}

RingElem mat_trace(const MatR& x) {
  RingElem acc = RingElem::zero(x.spec_ptr(), x.modulus());
  for (std::size_t i = 0; i < x.n(); ++i) acc = acc + x.at(i, i);
  return acc;
}

int prime_power_exponent(Modulus m, Coeff p) {
  CONGR_REQUIRE(!m.is_integers(), ErrorKind::IncompatibleModulus, "expected a modular context p^m");
  Coeff v = m.value();
  int e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  CONGR_REQUIRE(v == 1 && e >= 1, ErrorKind::IncompatibleModulus,
          "modulus " + std::to_string(m.value()) + " is not a power of " + std::to_string(p));
  return e;
}

int unipotent_level(const MatR& x, Coeff p, int cap) {
  const std::size_t n = x.n(), k = x.rank(), unit = x.spec().unit_index();
  int level = 0;
  Coeff pe = 1;
  while (level < cap) {
    Coeff next = checked::mul(pe, p);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        auto e = x.entry(i, j);
        for (std::size_t c = 0; c < k; ++c) {
          Coeff v = e[c] - ((i == j && c == unit) ? 1 : 0);
          if (v % next != 0) {
            ok = false;
            break;
          }
        }
      }
    if (!ok) break;
    pe = next;
    ++level;
  }
  return level;
}

MatR unipotent_part(const MatR& x, Coeff p, int e, Modulus target) {
  const std::size_t n = x.n(), k = x.rank(), unit = x.spec().unit_index();
  const Coeff pe = checked::pow(p, e);
  MatR r(n, x.spec_ptr(), target);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto src = x.entry(i, j);
      std::vector<Coeff> v(k);
      for (std::size_t c = 0; c < k; ++c) {
        Coeff d = src[c] - ((i == j && c == unit) ? 1 : 0);
        CONGR_REQUIRE(d % pe == 0, ErrorKind::NotUnipotent, "matrix is not congruent to 1 mod p^" + std::to_string(e));
        v[c] = d / pe;
      }
      r.set(i, j, RingElem(x.spec_ptr(), std::move(v), target));
    }
  return r;
}

MatR mat_inverse_unipotent(const MatR& x, Coeff p, int r, int m) {
  CONGR_REQUIRE(r >= 1, ErrorKind::PreconditionViolated, "level r must be at least 1");
  CONGR_REQUIRE(prime_power_exponent(x.modulus(), p) == m, ErrorKind::IncompatibleModulus,
          "matrix context is not p^" + std::to_string(m));
  CONGR_REQUIRE(unipotent_level(x, p, r) >= r, ErrorKind::NotUnipotent,
          "matrix is not congruent to 1 mod p^" + std::to_string(r));
  const MatR one = MatR::identity(x.n(), x.spec_ptr(), x.modulus());
  const MatR nil = one - x;  // = -p^r A
  MatR sum = one;
  MatR term = one;
  for (int i = 1; i * r < m; ++i) {
    term = term * nil;
    sum = sum + term;
  }
  return sum;
}

MatR mat_commutator(const MatR& x, const MatR& y, Coeff p) {
  require_same_context(x, y);
  const int m = prime_power_exponent(x.modulus(), p);
  const int rx = std::max(1, unipotent_level(x, p, m));
  const int ry = std::max(1, unipotent_level(y, p, m));
  MatR xi = mat_inverse_unipotent(x, p, rx, m);
  MatR yi = mat_inverse_unipotent(y, p, ry, m);
  return xi * yi * x * y;
}

MatR mat_pow(const MatR& x, Coeff e) {
  CONGR_REQUIRE(e >= 0, ErrorKind::PreconditionViolated, "negative matrix power");
  MatR result = MatR::identity(x.n(), x.spec_ptr(), x.modulus());
  MatR base = x;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

DetCongruence det_congruence_check(const MatR& a, Coeff p, int r) {
  CONGR_REQUIRE(a.modulus().is_integers(), ErrorKind::IncompatibleModulus, "A must be integral");
  const Modulus target = Modulus::prime_power(p, r + 1);
  const Coeff pr = checked::pow(p, r);
  const MatR one = MatR::identity(a.n(), a.spec_ptr(), a.modulus());
  RingElem lhs = reduce_to(mat_det(one + a.scaled(pr)), target);
  RingElem rhs = reduce_to(RingElem::one(a.spec_ptr(), a.modulus()) + mat_trace(a).scaled(pr), target);
  bool pass = lhs == rhs;
  return {std::move(lhs), std::move(rhs), pass};
}

}  // namespace congr
