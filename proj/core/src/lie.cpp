#include "congr/lie.hpp"

#include <sstream>

#include "congr/linalg.hpp"

namespace congr {

SlElem::SlElem(Coeff p, MatR mat) : p_(p), mat_(std::move(mat)) {
  CONGR_REQUIRE(mat_.modulus() == Modulus::of(p), ErrorKind::ContextMismatch, "SlElem entries must live mod p");
  CONGR_REQUIRE(mat_trace(mat_).is_zero(), ErrorKind::PreconditionViolated, "matrix is not traceless");
}

SlElem SlElem::zero(std::size_t n, Coeff p, const RingPtr& spec) {
  return SlElem(p, MatR(n, spec, Modulus::of(p)));
}

SlElem operator+(const SlElem& a, const SlElem& b) {
  require_same_context(a, b);
  return SlElem(a.p_, a.mat_ + b.mat_);
}

SlElem operator-(const SlElem& a, const SlElem& b) {
  require_same_context(a, b);
  return SlElem(a.p_, a.mat_ - b.mat_);
}

void require_same_context(const SlElem& a, const SlElem& b) {
  CONGR_REQUIRE(a.p() == b.p() && a.n() == b.n() && same_ring(a.spec_ptr(), b.spec_ptr()), ErrorKind::ContextMismatch,
          "sl_n elements live in different contexts");
}

SlElem sl_bracket(const SlElem& a, const SlElem& b) {
  require_same_context(a, b);
  return SlElem(a.p(), a.mat() * b.mat() - b.mat() * a.mat());
}

std::vector<Coeff> sl_coords(const SlElem& a) {
  std::vector<Coeff> out;
  out.reserve(sl_dimension(a.n(), *a.spec_ptr()));
  for (auto [i, j] : generator_slots(a.n())) {
    auto e = a.mat().entry(i - 1, j - 1);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

SlElem sl_from_coords(const std::vector<Coeff>& coords, std::size_t n, Coeff p, const RingPtr& spec) {
  const std::size_t k = spec->rank();
  CONGR_REQUIRE(coords.size() == sl_dimension(n, *spec), ErrorKind::PreconditionViolated,
          "coordinate vector has the wrong length");
  const Modulus m = Modulus::of(p);
  MatR mat(n, spec, m);
  const auto slots = generator_slots(n);
  for (std::size_t idx = 0; idx < slots.size(); ++idx) {
    RingElem c(spec, std::vector<Coeff>(coords.begin() + idx * k, coords.begin() + (idx + 1) * k), m);
    mat = mat + slot_direction(n, slots[idx].first, slots[idx].second, spec, m).scaled(c);
  }
  return SlElem(p, std::move(mat));
}

SlElem sl_basis(std::size_t n, Coeff p, const RingPtr& spec, std::size_t slot, std::size_t basis) {
  std::vector<Coeff> coords(sl_dimension(n, *spec), 0);
  coords.at(slot * spec->rank() + basis) = 1;
  return sl_from_coords(coords, n, p, spec);
}

// ---------------------------------------------------------------------------

GrElem::GrElem(std::size_t n, Coeff p, RingPtr spec) : n_(n), p_(p), spec_(std::move(spec)) {}

GrElem GrElem::homogeneous(int degree, const SlElem& x) {
  GrElem g(x.n(), x.p(), x.spec_ptr());
  g.accumulate(degree, x);
  return g;
}

void GrElem::accumulate(int degree, const SlElem& x) {
  CONGR_REQUIRE(degree >= 1, ErrorKind::PreconditionViolated, "graded degrees start at 1");
  CONGR_REQUIRE(x.n() == n_ && x.p() == p_ && same_ring(x.spec_ptr(), spec_), ErrorKind::ContextMismatch,
          "component does not match the graded context");
  auto it = comps_.find(degree);
  if (it == comps_.end()) {
    if (!x.is_zero()) comps_.emplace(degree, x);
    return;
  }
  it->second = it->second + x;
  if (it->second.is_zero()) comps_.erase(it);
}

GrElem operator+(const GrElem& a, const GrElem& b) {
  require_same_context(a, b);
  GrElem out = a;
  for (const auto& [d, x] : b.comps_) out.accumulate(d, x);
  return out;
}

void require_same_context(const GrElem& a, const GrElem& b) {
  CONGR_REQUIRE(a.n() == b.n() && a.p() == b.p() && same_ring(a.spec_ptr(), b.spec_ptr()), ErrorKind::ContextMismatch,
          "graded elements live in different contexts");
}

GrElem gr_bracket(const GrElem& x, const GrElem& y) {
  require_same_context(x, y);
  GrElem out(x.n(), x.p(), x.spec_ptr());
  for (const auto& [a, xa] : x.components())
    for (const auto& [b, yb] : y.components()) out.accumulate(a + b, sl_bracket(xa, yb));
  return out;
}

SlElem varphi_r(const QuotientElem& x) {
  const auto& c = x.context();
  CONGR_REQUIRE(c.s == 1, ErrorKind::ContextMismatch, "varphi_r is defined on s = 1 quotients");
  return SlElem(c.p, unipotent_part(x.mat(), c.p, c.r, Modulus::of(c.p)));
}

GrElem varphi_total(const std::vector<QuotientElem>& xs) {
  CONGR_REQUIRE(!xs.empty(), ErrorKind::PreconditionViolated, "varphi_total needs at least one component");
  const auto& c0 = xs.front().context();
  GrElem out(c0.n, c0.p, c0.spec);
  for (const auto& x : xs) {
    const auto& c = x.context();
    CONGR_REQUIRE(c.n == c0.n && c.p == c0.p && same_ring(c.spec, c0.spec), ErrorKind::ContextMismatch,
            "components of varphi_total must share (n, p, ring)");
    out.accumulate(c.r, varphi_r(x));
  }
  return out;
}

QuotientElem naive_pth_power(const QuotientElem& x) {
  const auto& c = x.context();
  CONGR_REQUIRE(c.s == 1, ErrorKind::ContextMismatch, "the p-th power map is defined on s = 1 quotients");
  QuotientContext target{c.n, c.p, c.r + 1, 1, c.spec};
  MatR lifted = x.mat().lifted(target.modulus());
  return QuotientElem::from_matrix(target, mat_pow(lifted, c.p));
}

QuotientElem frobenius(const QuotientElem& x) {
  const auto& c = x.context();
  CONGR_REQUIRE(!(c.p == 2 && c.r == 1), ErrorKind::ExcludedCase,
          "the p-th power map Gamma_1/Gamma_2 -> Gamma_2/Gamma_3 is not a homomorphism for p = 2, r = 1");
  return naive_pth_power(x);
}

// ---------------------------------------------------------------------------

std::string TableWord::to_string() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (std::size_t idx = 0; idx < letters.size(); ++idx) {
    const auto& l = letters[idx];
    if (idx) os << " ";
    os << "A_{" << l.x << l.y << "," << l.q1 << "*" << l.q2 << "," << l.level << "}";
    if (l.exp != 1) os << "^" << l.exp;
  }
  return os.str();
}

TableWord bracket_table(std::size_t n, const RingSpec& spec, const GenIndex& a, int r, const GenIndex& b, int s) {
  check_generator_index(n, spec, a);
  check_generator_index(n, spec, b);
  const std::size_t i = a.i, j = a.j, k = b.i, l = b.j;
  const int level = r + s;
  auto word = [&](int row, std::vector<std::pair<std::pair<std::size_t, std::size_t>, int>> fs) {
    TableWord w{row, {}};
    for (auto [xy, e] : fs) w.letters.push_back({xy.first, xy.second, a.k, b.k, level, e});
    return w;
  };
  using P = std::pair<std::size_t, std::size_t>;
  if (i == l && j != k && i != j && k != l) return word(1, {{P{k, j}, -1}});
  if (i == l && j == k && i != j && k != l) return word(2, {{P{i, i}, -1}, {P{j, j}, -1}});
  if (i != l && j == k && i != j && k != l) return word(3, {{P{i, l}, 1}});
  if (i == k && k == l && i != j && j == n) return word(4, {{P{i, n}, -2}});
  if (i == k && k == l && i != j && j != n && i != n) return word(5, {{P{i, j}, -1}});
  if (j == k && k == l && i != j && i == n) return word(6, {{P{n, j}, 2}});
  if (j == k && k == l && i != j && i != n && j != n) return word(7, {{P{i, n}, -1}});
  if (k == l && i != k && j != k && i != j && j == n) return word(8, {{P{i, n}, -1}});
  if (k == l && i != k && j != k && i != j && i == n) return word(9, {{P{n, j}, 1}});
  if (i == j && j == l && k != l && k == n) return word(10, {{P{i, n}, -2}});
  if (i == j && j == l && k != l && k != n && l != n) return word(11, {{P{k, i}, -1}});
  if (i == j && j == k && k != l && l == n) return word(12, {{P{i, n}, 2}});
  if (i == j && j == k && k != l && k != n && l != n) return word(13, {{P{i, l}, 1}});
  if (i == j && k != l && i != l && i != k && k == n) return word(14, {{P{n, l}, -1}});
  if (i == j && k != l && i != l && i != k && l == n) return word(15, {{P{k, n}, 1}});
  return TableWord{16, {}};
}

QuotientElem evaluate_word(const TableWord& w, std::size_t n, Coeff p, const RingPtr& spec, int level) {
  QuotientContext ctx{n, p, level, 1, spec};
  const Modulus m = ctx.modulus();
  QuotientElem acc = QuotientElem::identity(ctx);
  for (const auto& l : w.letters) {
    CONGR_REQUIRE(l.level == level, ErrorKind::ContextMismatch, "table letter level differs from the target level");
    if (l.x == n && l.y == n) continue;
    RingElem c = RingElem::basis(spec, l.q1 - 1, m) * RingElem::basis(spec, l.q2 - 1, m);
    acc = q_mul(acc, q_pow(scaled_generator(ctx, l.x, l.y, c, level), l.exp));
  }
  return acc;
}

std::size_t lie_h1_degree(std::size_t n, Coeff p, const RingPtr& spec, int degree) {
  CONGR_REQUIRE(degree >= 1, ErrorKind::PreconditionViolated, "degree must be at least 1");
  const std::size_t dim = sl_dimension(n, *spec);
  const std::size_t slots = n * n - 1;
  std::vector<std::vector<Coeff>> rows;
  for (int a = 1; a < degree; ++a) {
    const int b = degree - a;
    for (std::size_t s1 = 0; s1 < slots; ++s1)
      for (std::size_t k1 = 0; k1 < spec->rank(); ++k1) {
        GrElem x = GrElem::homogeneous(a, sl_basis(n, p, spec, s1, k1));
        for (std::size_t s2 = 0; s2 < slots; ++s2)
          for (std::size_t k2 = 0; k2 < spec->rank(); ++k2) {
            GrElem y = GrElem::homogeneous(b, sl_basis(n, p, spec, s2, k2));
            GrElem z = gr_bracket(x, y);
            auto it = z.components().find(degree);
            if (it != z.components().end()) rows.push_back(sl_coords(it->second));
          }
      }
  }
  return dim - rank_mod_p(std::move(rows), p);
}

}  // namespace congr
