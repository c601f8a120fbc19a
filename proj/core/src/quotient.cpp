#include "congr/quotient.hpp"

#include <algorithm>
#include <sstream>

namespace congr {

namespace {

// Inverse of u == 1 mod p in a context p^m: sum_{i < m} (1 - u)^i.
RingElem unipotent_scalar_inverse(const RingElem& u, int m) {
  RingElem one = RingElem::one(u.spec_ptr(), u.modulus());
  RingElem nil = one - u;
  RingElem sum = one, term = one;
  for (int i = 1; i < m; ++i) {
    term = term * nil;
    sum = sum + term;
  }
  return sum;
}

MatR minor_without_last(const MatR& x) {
  const std::size_t n = x.n();
  MatR m(n - 1, x.spec_ptr(), x.modulus());
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) m.set(i, j, x.at(i, j));
  return m;
}

// Coefficientwise (c / p^e) on canonical representatives, reinterpreted in target.
RingElem divide_by_prime_power(const RingElem& c, Coeff pe, Modulus target) {
  std::vector<Coeff> v(c.coeffs().begin(), c.coeffs().end());
  for (Coeff& x : v) {
    CONGR_REQUIRE(x % pe == 0, ErrorKind::PreconditionViolated, "value not divisible by p^e");
    x /= pe;
  }
  return RingElem(c.spec_ptr(), std::move(v), target);
}

RingElem lift_coeffs(const RingElem& c, Modulus target) {
  std::vector<Coeff> v(c.coeffs().begin(), c.coeffs().end());
  return RingElem(c.spec_ptr(), std::move(v), target);
}

}  // namespace

std::string QuotientContext::describe() const {
  std::ostringstream os;
  os << "n=" << n << " p=" << p << " r=" << r << " s=" << s << " ring=" << (spec ? spec->name() : "?");
  return os.str();
}

void validate_context(const QuotientContext& ctx) {
  CONGR_REQUIRE(ctx.spec != nullptr, ErrorKind::PreconditionViolated, "missing ring");
  CONGR_REQUIRE(is_prime(ctx.p), ErrorKind::PreconditionViolated, "p = " + std::to_string(ctx.p) + " is not prime");
  CONGR_REQUIRE(ctx.n >= 2, ErrorKind::PreconditionViolated, "n must be at least 2");
  CONGR_REQUIRE(ctx.n <= kMaxMatrixDim, ErrorKind::DimensionTooLarge, "n exceeds the cofactor guard");
  CONGR_REQUIRE(ctx.r >= 1 && ctx.s >= 1, ErrorKind::PreconditionViolated, "levels r, s must be at least 1");
}

QuotientElem QuotientElem::from_matrix(const QuotientContext& ctx, const MatR& m) {
  validate_context(ctx);
  CONGR_REQUIRE(m.n() == ctx.n && same_ring(m.spec_ptr(), ctx.spec), ErrorKind::ContextMismatch,
          "matrix does not match quotient context " + ctx.describe());
  MatR canon = m.reduced(ctx.modulus());
  CONGR_REQUIRE(unipotent_level(canon, ctx.p, ctx.r) >= ctx.r, ErrorKind::NotUnipotent,
          "matrix is not congruent to 1 mod p^" + std::to_string(ctx.r));
  CONGR_REQUIRE(mat_det(canon) == RingElem::one(ctx.spec, ctx.modulus()), ErrorKind::NotSpecialLinear,
          "determinant is not 1 mod p^" + std::to_string(ctx.r + ctx.s));
  return QuotientElem(ctx, std::move(canon));
}

QuotientElem QuotientElem::identity(const QuotientContext& ctx) {
  validate_context(ctx);
  return QuotientElem(ctx, MatR::identity(ctx.n, ctx.spec, ctx.modulus()));
}

void require_same_context(const QuotientElem& a, const QuotientElem& b) {
  CONGR_REQUIRE(a.context() == b.context(), ErrorKind::ContextMismatch,
          "quotient contexts differ: " + a.context().describe() + " vs " + b.context().describe());
}

QuotientElem q_mul(const QuotientElem& a, const QuotientElem& b) {
  require_same_context(a, b);
  return QuotientElem(a.ctx_, a.mat_ * b.mat_);
}

QuotientElem q_inv(const QuotientElem& a) {
  const auto& c = a.ctx_;
  return QuotientElem(c, mat_inverse_unipotent(a.mat_, c.p, c.r, c.r + c.s));
}

QuotientElem q_commutator(const QuotientElem& a, const QuotientElem& b) {
  require_same_context(a, b);
  return q_mul(q_mul(q_inv(a), q_inv(b)), q_mul(a, b));
}

QuotientElem q_pow(const QuotientElem& a, Coeff e) {
  if (e < 0) return q_pow(q_inv(a), -e);
  return QuotientElem(a.ctx_, mat_pow(a.mat_, e));
}

bool gamma_member(const MatR& x, Coeff p, int r) {
  CONGR_REQUIRE(x.modulus().is_integers(), ErrorKind::ContextMismatch, "gamma_member expects an integral matrix");
  CONGR_REQUIRE(mat_det(x) == RingElem::one(x.spec_ptr(), x.modulus()), ErrorKind::NotSpecialLinear,
          "matrix does not have determinant 1");
  return unipotent_level(x, p, r) >= r;
}

QuotientElem q_project(const QuotientElem& a, int new_s) {
  const auto& c = a.context();
  CONGR_REQUIRE(new_s >= 1 && new_s <= c.s, ErrorKind::PreconditionViolated, "projection depth out of range");
  QuotientContext target = c;
  target.s = new_s;
  return QuotientElem::from_matrix(target, a.mat());
}

QuotientElem q_restrict(const QuotientElem& a, int new_r) {
  const auto& c = a.context();
  CONGR_REQUIRE(new_r >= c.r && new_r < c.r + c.s, ErrorKind::PreconditionViolated, "restriction level out of range");
  QuotientContext target = c;
  target.r = new_r;
  target.s = c.r + c.s - new_r;
  CONGR_REQUIRE(unipotent_level(a.mat(), c.p, new_r) >= new_r, ErrorKind::PreconditionViolated,
          "element does not lie in Gamma_" + std::to_string(new_r));
  return QuotientElem::from_matrix(target, a.mat());
}

QuotientElem graded_commutator(const QuotientElem& x, const QuotientElem& y) {
  const auto& cx = x.context();
  const auto& cy = y.context();
  CONGR_REQUIRE(cx.s == 1 && cy.s == 1, ErrorKind::ContextMismatch, "graded bracket needs s = 1 quotients");
  CONGR_REQUIRE(cx.n == cy.n && cx.p == cy.p && same_ring(cx.spec, cy.spec), ErrorKind::ContextMismatch,
          "graded bracket operands have different (n, p, ring)");
  QuotientContext target{cx.n, cx.p, cx.r + cy.r, 1, cx.spec};
  const Modulus wide = target.modulus();
  MatR comm = mat_commutator(x.mat().lifted(wide), y.mat().lifted(wide), cx.p);
  return QuotientElem::from_matrix(target, comm);
}

// ---------------------------------------------------------------------------

std::string to_string(const GenIndex& g) {
  std::ostringstream os;
  os << "(" << g.i << "," << g.j << ";" << g.k << ")";
  return os.str();
}

std::vector<std::pair<std::size_t, std::size_t>> generator_slots(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i + j < 2 * n) out.emplace_back(i, j);
  return out;
}

MatR slot_direction(std::size_t n, std::size_t i, std::size_t j, const RingPtr& spec, Modulus m) {
  MatR d(n, spec, m);
  d.set(i - 1, j - 1, RingElem::one(spec, m));
  if (i == j) d.set(n - 1, n - 1, RingElem::integer(spec, -1, m));
  return d;
}

void check_generator_index(std::size_t n, const RingSpec& spec, const GenIndex& g) {
  CONGR_REQUIRE(g.i >= 1 && g.i <= n && g.j >= 1 && g.j <= n, ErrorKind::IndexOutOfRange,
          "generator position " + to_string(g) + " outside 1..n");
  CONGR_REQUIRE(g.i + g.j < 2 * n, ErrorKind::IndexOutOfRange, "generator position (n,n) is excluded");
  CONGR_REQUIRE(g.k >= 1 && g.k <= spec.rank(), ErrorKind::IndexOutOfRange,
          "basis index " + std::to_string(g.k) + " outside 1..k");
}

QuotientElem scaled_generator(const QuotientContext& ctx, std::size_t i, std::size_t j, const RingElem& c,
                              int level) {
  validate_context(ctx);
  CONGR_REQUIRE(level >= ctx.r, ErrorKind::PreconditionViolated,
          "generator level " + std::to_string(level) + " below quotient level " + std::to_string(ctx.r));
  CONGR_REQUIRE(i >= 1 && j >= 1 && i <= ctx.n && j <= ctx.n && i + j < 2 * ctx.n, ErrorKind::IndexOutOfRange,
          "generator position outside the allowed range");
  const Modulus m = ctx.modulus();
  const std::size_t n = ctx.n;
  const Coeff pe = m.reduce(checked::pow(ctx.p, std::min(level, ctx.r + ctx.s)));
  RingElem x = lift_coeffs(c, m).scaled(pe);  // p^level c
  MatR g = MatR::identity(n, ctx.spec, m);
  RingElem one = RingElem::one(ctx.spec, m);
  if (i != j) {
    g.set(i - 1, j - 1, x);
  } else {
    g.set(i - 1, i - 1, one + x);
    g.set(n - 1, n - 1, unipotent_scalar_inverse(one + x, ctx.r + ctx.s));
  }
  return QuotientElem::from_matrix(ctx, g);
}

QuotientElem generator_at_level(const QuotientContext& ctx, const GenIndex& g, int level) {
  validate_context(ctx);
  check_generator_index(ctx.n, *ctx.spec, g);
  return scaled_generator(ctx, g.i, g.j, RingElem::basis(ctx.spec, g.k - 1, ctx.modulus()), level);
}

std::vector<GenIndex> all_generators(std::size_t n, const RingSpec& spec) {
  std::vector<GenIndex> out;
  for (auto [i, j] : generator_slots(n))
    for (std::size_t k = 1; k <= spec.rank(); ++k) out.push_back({i, j, k});
  return out;
}

std::vector<GenIndex> scan_order_generators(std::size_t n, const RingSpec& spec) {
  std::vector<GenIndex> out;
  for (auto [i, j] : generator_slots(n))
    if (i != j)
      for (std::size_t k = 1; k <= spec.rank(); ++k) out.push_back({i, j, k});
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t k = 1; k <= spec.rank(); ++k) out.push_back({i, i, k});
  return out;
}

// ---------------------------------------------------------------------------

QuotientElem phi_iso(const std::vector<RingElem>& coords, const QuotientContext& ctx) {
  validate_context(ctx);
  CONGR_REQUIRE(ctx.s == 1, ErrorKind::ContextMismatch, "Phi is defined on s = 1 quotients");
  const std::size_t n = ctx.n;
  const auto slots = generator_slots(n);
  CONGR_REQUIRE(coords.size() == slots.size(), ErrorKind::PreconditionViolated, "expected n^2 - 1 coordinates");
  const Modulus mod_p = Modulus::of(ctx.p);
  const Modulus m = ctx.modulus();
  MatR a(n, ctx.spec, m);
  RingElem diag_sum = RingElem::zero(ctx.spec, m);
  for (std::size_t idx = 0; idx < slots.size(); ++idx) {
    const auto& c = coords[idx];
    CONGR_REQUIRE(same_ring(c.spec_ptr(), ctx.spec) && c.modulus() == mod_p, ErrorKind::ContextMismatch,
            "Phi coordinates must be mod-p elements of the context ring");
    auto [i, j] = slots[idx];
    RingElem v = lift_coeffs(c, m);
    a.set(i - 1, j - 1, v);
    if (i == j) diag_sum = diag_sum + v;
  }
  a.set(n - 1, n - 1, -diag_sum);
  MatR x = MatR::identity(n, ctx.spec, m) + a.scaled(checked::pow(ctx.p, ctx.r));
  return QuotientElem::from_matrix(ctx, x);
}

std::vector<RingElem> phi_iso_inv(const QuotientElem& x) {
  const auto& ctx = x.context();
  CONGR_REQUIRE(ctx.s == 1, ErrorKind::ContextMismatch, "Phi^{-1} is defined on s = 1 quotients");
  MatR a = unipotent_part(x.mat(), ctx.p, ctx.r, Modulus::of(ctx.p));
  std::vector<RingElem> out;
  for (auto [i, j] : generator_slots(ctx.n)) out.push_back(a.at(i - 1, j - 1));
  return out;
}

QuotientElem phi_rs(const std::vector<RingElem>& coords, const QuotientContext& ctx) {
  validate_context(ctx);
  CONGR_REQUIRE(ctx.r >= ctx.s, ErrorKind::PreconditionViolated,
          "Phi_{r,s} needs r >= s (got r=" + std::to_string(ctx.r) + ", s=" + std::to_string(ctx.s) + ")");
  const auto slots = generator_slots(ctx.n);
  CONGR_REQUIRE(coords.size() == slots.size(), ErrorKind::PreconditionViolated, "expected n^2 - 1 coordinates");
  const Modulus mod_ps = Modulus::prime_power(ctx.p, ctx.s);
  QuotientElem acc = QuotientElem::identity(ctx);
  for (std::size_t idx = 0; idx < slots.size(); ++idx) {
    const auto& c = coords[idx];
    CONGR_REQUIRE(same_ring(c.spec_ptr(), ctx.spec) && c.modulus() == mod_ps, ErrorKind::ContextMismatch,
            "Phi_{r,s} coordinates must be mod-p^s elements of the context ring");
    auto [i, j] = slots[idx];
    for (std::size_t k = 0; k < ctx.spec->rank(); ++k) {
      Coeff e = c.coeff(k);
      if (e == 0) continue;
      acc = q_mul(acc, q_pow(generator(ctx, {i, j, k + 1}), e));
    }
  }
  return acc;
}

Coeff quotient_order(std::size_t n, Coeff p, int s, std::size_t k) {
  CONGR_REQUIRE(is_prime(p), ErrorKind::PreconditionViolated, "p must be prime");
  CONGR_REQUIRE(s >= 1 && n >= 2 && k >= 1, ErrorKind::PreconditionViolated, "need n >= 2, s >= 1, k >= 1");
  return checked::pow(p, static_cast<int>(static_cast<std::size_t>(s) * (n * n - 1) * k));
}

std::vector<RingElem> coords_from_digits(const std::vector<Coeff>& digits, std::size_t n, const RingPtr& spec,
                                         Modulus m) {
  const std::size_t k = spec->rank();
  const std::size_t count = n * n - 1;
  CONGR_REQUIRE(digits.size() == count * k, ErrorKind::PreconditionViolated, "digit vector has the wrong length");
  std::vector<RingElem> out;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx)
    out.emplace_back(spec, std::vector<Coeff>(digits.begin() + idx * k, digits.begin() + (idx + 1) * k), m);
  return out;
}

namespace {

// 1 + p^r A with A given by the free slot coordinates and a_nn = 0, all mod p^{r+s}.
MatR base_matrix(const QuotientContext& ctx, const std::vector<RingElem>& free) {
  const Modulus m = ctx.modulus();
  const auto slots = generator_slots(ctx.n);
  MatR a(ctx.n, ctx.spec, m);
  for (std::size_t idx = 0; idx < slots.size(); ++idx)
    a.set(slots[idx].first - 1, slots[idx].second - 1, lift_coeffs(free[idx], m));
  return MatR::identity(ctx.n, ctx.spec, m) + a.scaled(checked::pow(ctx.p, ctx.r));
}

}  // namespace

std::vector<QuotientElem> enumerate_quotient(const QuotientContext& ctx, Coeff cap) {
  validate_context(ctx);
  const std::size_t n = ctx.n, k = ctx.spec->rank();
  const Coeff order = quotient_order(n, ctx.p, ctx.s, k);
  CONGR_REQUIRE(order <= cap, ErrorKind::TooLarge,
          "quotient has " + std::to_string(order) + " elements, above the cap " + std::to_string(cap));
  const Modulus m = ctx.modulus();
  const Modulus mod_ps = Modulus::prime_power(ctx.p, ctx.s);
  const Coeff ps = mod_ps.value();
  const RingElem one = RingElem::one(ctx.spec, m);
  const Coeff pr = checked::pow(ctx.p, ctx.r);

  std::vector<QuotientElem> out;
  out.reserve(static_cast<std::size_t>(order));
  for_each_digit_vector((n * n - 1) * k, ps, [&](const std::vector<Coeff>& digits) {
    MatR base = base_matrix(ctx, coords_from_digits(digits, n, ctx.spec, mod_ps));
    // det is affine in the (n,n) entry: det = det0 + (p^r a_nn) * cofactor_nn.
    const RingElem det0 = mat_det(base);
    const RingElem cof = mat_det(minor_without_last(base));
    for_each_digit_vector(k, ps, [&](const std::vector<Coeff>& last) {
      RingElem shift = RingElem(ctx.spec, last, m).scaled(pr);
      if (det0 + shift * cof == one) {
        MatR x = base;
        x.set(n - 1, n - 1, base.at(n - 1, n - 1) + shift);
        out.push_back(QuotientElem::from_matrix(ctx, x));
      }
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

QuotientElem random_quotient_elem(const QuotientContext& ctx, std::mt19937_64& rng) {
  validate_context(ctx);
  const std::size_t n = ctx.n, k = ctx.spec->rank();
  const Modulus m = ctx.modulus();
  const Modulus mod_ps = Modulus::prime_power(ctx.p, ctx.s);
  std::vector<Coeff> digits((n * n - 1) * k);
  for (Coeff& d : digits) d = static_cast<Coeff>(rng() % static_cast<std::uint64_t>(mod_ps.value()));
  MatR base = base_matrix(ctx, coords_from_digits(digits, n, ctx.spec, mod_ps));
  // Solve p^r a_nn * cof = 1 - det0 for the unique a_nn mod p^s.
  const RingElem det0 = mat_det(base);
  const RingElem cof = mat_det(minor_without_last(base));
  const Coeff pr = checked::pow(ctx.p, ctx.r);
  RingElem rhs = divide_by_prime_power(RingElem::one(ctx.spec, m) - det0, pr, mod_ps);
  RingElem cof_inv = unipotent_scalar_inverse(reduce_to(cof, mod_ps), ctx.s);
  RingElem a_nn = lift_coeffs(rhs * cof_inv, m);
  MatR x = base;
  x.set(n - 1, n - 1, base.at(n - 1, n - 1) + a_nn.scaled(pr));
  return QuotientElem::from_matrix(ctx, x);
}

// ---------------------------------------------------------------------------

CentralityResult is_central_extension(std::size_t n, Coeff p, int r, int s, int l, const RingPtr& spec) {
  CONGR_REQUIRE(r >= 1 && s >= 1 && l >= 1, ErrorKind::PreconditionViolated, "need r, s, l >= 1");
  CONGR_REQUIRE(l <= s, ErrorKind::PreconditionViolated, "need l <= s");
  QuotientContext ctx{n, p, r, s, spec};
  validate_context(ctx);
  const int kernel_level = r + s - l;
  CentralityResult res{r >= l, true, 0, std::nullopt};
  const auto gens = scan_order_generators(n, *spec);
  for (const auto& kg : gens) {
    QuotientElem a = generator_at_level(ctx, kg, kernel_level);
    for (const auto& gg : gens) {
      QuotientElem b = generator(ctx, gg);
      QuotientElem c = q_commutator(a, b);
      ++res.pairs_scanned;
      if (!c.is_identity()) {
        res.scan_all_trivial = false;
        if (!res.witness) res.witness = CentralityWitness{kg, gg, c};
      }
    }
  }
  return res;
}

}  // namespace congr
