#include "congr/serialize.hpp"

#include <charconv>
#include <fstream>

namespace congr {

using nlohmann::json;

namespace {

template <typename F>
auto parsing(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

json entries_json(const MatR& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.n(); ++j) {
      auto e = m.entry(i, j);
      row.push_back(std::vector<Coeff>(e.begin(), e.end()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

MatR entries_from_json(const json& rows, std::size_t n, const RingPtr& spec, Modulus m) {
  CONGR_REQUIRE(rows.is_array() && rows.size() == n, ErrorKind::Parse, "entries must have n rows");
  MatR out(n, spec, m);
  for (std::size_t i = 0; i < n; ++i) {
    CONGR_REQUIRE(rows[i].is_array() && rows[i].size() == n, ErrorKind::Parse, "entries must have n columns");
    for (std::size_t j = 0; j < n; ++j) {
      auto v = rows[i][j].get<std::vector<Coeff>>();
      CONGR_REQUIRE(v.size() == spec->rank(), ErrorKind::Parse, "entry has the wrong number of coefficients");
      for (Coeff c : v)
        CONGR_REQUIRE(m.is_integers() || (c >= 0 && c < m.value()), ErrorKind::Parse,
                      "entry coefficient outside the canonical range");
      out.set(i, j, RingElem(spec, std::move(v), m));
    }
  }
  return out;
}

}  // namespace

json ring_to_json(const RingSpec& spec) {
  return {{"name", spec.name()},
          {"k", spec.rank()},
          {"basis_names", spec.basis_names()},
          {"unit_index", spec.unit_index()},
          {"structure_constants", spec.table()}};
}

RingPtr ring_from_json(const json& j) {
  return parsing([&] {
    const std::string name = j.contains("name") ? j.at("name").get<std::string>() : "custom";
    return RingSpec::make(name, j.at("k").get<std::size_t>(), j.at("basis_names").get<std::vector<std::string>>(),
                          j.at("unit_index").get<std::size_t>(), j.at("structure_constants").get<RingSpec::Table>());
  });
}

std::optional<std::string> builtin_selector(const RingSpec& spec) {
  if (spec.same_as(*RingSpec::integers())) return "Z";
  if (spec.same_as(*RingSpec::gaussian())) return "Zi";
  if (spec.name().rfind("Zt:", 0) == 0 && spec.same_as(*RingSpec::truncated_poly(spec.rank()))) return spec.name();
  return std::nullopt;
}

RingPtr ring_from_selector(const std::string& selector) {
  if (selector == "Z") return RingSpec::integers();
  if (selector == "Zi") return RingSpec::gaussian();
  if (selector.rfind("Zt:", 0) == 0) {
    std::size_t d = 0;
    const char* first = selector.data() + 3;
    const char* last = selector.data() + selector.size();
    auto [ptr, ec] = std::from_chars(first, last, d);
    CONGR_REQUIRE(ec == std::errc() && ptr == last && d >= 1, ErrorKind::Parse,
                  "bad truncated polynomial selector '" + selector + "'");
    return RingSpec::truncated_poly(d);
  }
  std::ifstream in(selector);
  CONGR_REQUIRE(in.good(), ErrorKind::Parse, "unknown ring '" + selector + "' (not a built-in or a readable file)");
  return parsing([&] { return ring_from_json(json::parse(in)); });
}

json ring_ref(const RingPtr& spec) {
  if (auto sel = builtin_selector(*spec)) return *sel;
  return ring_to_json(*spec);
}

RingPtr ring_from_ref(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    CONGR_REQUIRE(s == "Z" || s == "Zi" || s.rfind("Zt:", 0) == 0, ErrorKind::Parse,
                  "ring reference '" + s + "' is not a built-in");
    return ring_from_selector(s);
  }
  return ring_from_json(j);
}

json quotient_to_json(const QuotientElem& x) {
  const auto& c = x.context();
  return {{"n", c.n}, {"p", c.p}, {"r", c.r}, {"s", c.s}, {"ring", ring_ref(c.spec)}, {"entries", entries_json(x.mat())}};
}

QuotientElem quotient_from_json(const json& j) {
  return parsing([&] {
    QuotientContext ctx{j.at("n").get<std::size_t>(), j.at("p").get<Coeff>(), j.at("r").get<int>(),
                        j.at("s").get<int>(), ring_from_ref(j.at("ring"))};
    validate_context(ctx);
    return QuotientElem::from_matrix(ctx, entries_from_json(j.at("entries"), ctx.n, ctx.spec, ctx.modulus()));
  });
}

json sl_to_json(const SlElem& x) {
  return {{"n", x.n()}, {"p", x.p()}, {"ring", ring_ref(x.spec_ptr())}, {"components", {{"0", entries_json(x.mat())}}}};
}

SlElem sl_from_json(const json& j) {
  return parsing([&] {
    const auto n = j.at("n").get<std::size_t>();
    const auto p = j.at("p").get<Coeff>();
    auto spec = ring_from_ref(j.at("ring"));
    const auto& comps = j.at("components");
    CONGR_REQUIRE(comps.size() == 1 && comps.contains("0"), ErrorKind::Parse, "sl element has one component");
    return SlElem(p, entries_from_json(comps.at("0"), n, spec, Modulus::of(p)));
  });
}

json gr_to_json(const GrElem& x) {
  json comps = json::object();
  for (const auto& [d, c] : x.components()) comps[std::to_string(d)] = entries_json(c.mat());
  return {{"n", x.n()}, {"p", x.p()}, {"ring", ring_ref(x.spec_ptr())}, {"components", std::move(comps)}};
}

GrElem gr_from_json(const json& j) {
  return parsing([&] {
    const auto n = j.at("n").get<std::size_t>();
    const auto p = j.at("p").get<Coeff>();
    auto spec = ring_from_ref(j.at("ring"));
    GrElem out(n, p, spec);
    for (const auto& [key, val] : j.at("components").items()) {
      int d = 0;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), d);
      CONGR_REQUIRE(ec == std::errc() && ptr == key.data() + key.size() && d >= 1, ErrorKind::Parse,
                    "bad graded degree '" + key + "'");
      SlElem c(p, entries_from_json(val, n, spec, Modulus::of(p)));
      CONGR_REQUIRE(!c.is_zero(), ErrorKind::Parse, "graded components must be nonzero");
      out.accumulate(d, c);
    }
    return out;
  });
}

std::string matrix_string(const MatR& m) { return entries_json(m).dump(); }

}  // namespace congr
