#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "congr/serialize.hpp"
#include "congr/verify.hpp"

namespace congr::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string ring = "Z";
  std::string zt_ring = "Zt:10";
  std::size_t n = 2;
  Coeff p = 3;
  int r = 1;
  int s = 1;
  int l = 1;
  std::size_t k = 0;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 0;
  int maxdeg = 3;
  int imax = 8;
  Coeff cap = kDefaultEnumerationCap;
  std::string format = "text";
  std::string output;
  std::string x = "1,2,1";
  std::string y = "2,1,1";
  bool counterexample = false;
  std::vector<std::size_t> ns{2, 3, 4};
  std::vector<Coeff> ps{2, 3, 5};
  std::vector<int> rs{1, 2};
};

// What a command produced: a report, or a single serialized value.
struct Outcome {
  std::optional<VerifyReport> report;
  json value;
  std::string text;
};

GenIndex parse_generator(const std::string& spec) {
  GenIndex g{0, 0, 0};
  char c1 = 0, c2 = 0;
  std::istringstream is(spec);
  is >> g.i >> c1 >> g.j >> c2 >> g.k;
  CONGR_REQUIRE(is && c1 == ',' && c2 == ',' && is.peek() == std::char_traits<char>::eof(), ErrorKind::Parse,
                "generator must be given as i,j,k (got '" + spec + "')");
  return g;
}

std::string quotient_text(const QuotientElem& x) {
  return x.context().describe() + "\n" + matrix_string(x.mat()) + "\n";
}

void add_ring(CLI::App* sub, Config& c) {
  sub->add_option("--ring", c.ring, "Ring: Z, Zi, Zt:<D>, or a ring-spec JSON file")->capture_default_str();
}
void add_n(CLI::App* sub, Config& c) { sub->add_option("--n", c.n, "Matrix dimension")->capture_default_str(); }
void add_p(CLI::App* sub, Config& c) { sub->add_option("--p", c.p, "Prime")->capture_default_str(); }
void add_r(CLI::App* sub, Config& c) { sub->add_option("--r", c.r, "Level r >= 1")->capture_default_str(); }
void add_s(CLI::App* sub, Config& c) { sub->add_option("--s", c.s, "Depth s >= 1")->capture_default_str(); }
void add_seed(CLI::App* sub, Config& c) { sub->add_option("--seed", c.seed, "Random seed")->capture_default_str(); }
void add_samples(CLI::App* sub, Config& c, std::size_t def) {
  c.samples = def;
  sub->add_option("--samples", c.samples, "Number of random samples")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the congruence filtration of SL_n(R)", "congr"};
  app.require_subcommand(1);
  Config c;
  std::map<std::string, std::function<Outcome()>> commands;
  std::map<std::string, std::size_t> default_samples;

  auto command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
    sub->add_option("--output", c.output, "Write output to this file instead of stdout");
    return sub;
  };

  {
    auto* sub = command("verify-bracket-table",
                        "Compare the symbolic bracket table on generators A_{ij,k,r} against brute-force commutators "
                        "in Gamma_{r+s}/Gamma_{r+s+1}");
    add_ring(sub, c), add_n(sub, c), add_p(sub, c), add_r(sub, c), add_s(sub, c);
    commands[sub->get_name()] = [&] {
      return Outcome{verify_bracket_table(c.n, c.p, c.r, c.s, ring_from_selector(c.ring)), {}, {}};
    };
  }
  {
    auto* sub = command("verify-sl2z",
                        "Check the SL_2(Z) relations [A11,A12] = A12^2, [A11,A21] = A21^-2, [A12,A21] = A11 and "
                        "A_ij^p = A_ij at the next level");
    add_p(sub, c), add_r(sub, c), add_s(sub, c);
    commands[sub->get_name()] = [&] { return Outcome{verify_sl2z_relations(c.p, c.r, c.s), {}, {}}; };
  }
  {
    auto* sub = command("verify-frobenius",
                        "Check that the p-th power map Gamma_r/Gamma_{r+1} -> Gamma_{r+1}/Gamma_{r+2} is an isomorphism "
                        "sending A_{ij,k,r} to A_{ij,k,r+1} (excluded: p = 2, r = 1)");
    add_ring(sub, c), add_n(sub, c), add_p(sub, c), add_r(sub, c), add_seed(sub, c);
    add_samples(sub, c, 50);
    sub->add_flag("--counterexample", c.counterexample,
                  "For p = 2, r = 1: exhibit the failure of the p-th power map instead");
    commands[sub->get_name()] = [&] {
      auto spec = ring_from_selector(c.ring);
      if (c.counterexample) {
        CONGR_REQUIRE(c.p == 2 && c.r == 1, ErrorKind::PreconditionViolated,
                      "--counterexample applies to p = 2, r = 1 only");
        return Outcome{verify_frobenius_counterexample(c.n, spec), {}, {}};
      }
      FrobeniusOptions opt;
      opt.seed = c.seed;
      opt.samples = c.samples;
      return Outcome{verify_frobenius(c.n, c.p, c.r, spec, opt), {}, {}};
    };
  }
  {
    auto* sub = command("verify-det-lemma",
                        "Check det(1 + p^r A) = 1 + p^r tr(A) mod p^{r+1} on random integral A, and that "
                        "det = 1 forces tr(A) = 0 mod p");
    add_ring(sub, c), add_seed(sub, c);
    add_samples(sub, c, 1000);
    sub->add_option("--n", c.ns, "Matrix dimensions")->delimiter(',')->capture_default_str();
    sub->add_option("--p", c.ps, "Primes")->delimiter(',')->capture_default_str();
    sub->add_option("--r", c.rs, "Levels")->delimiter(',')->capture_default_str();
    commands[sub->get_name()] = [&] {
      DetLemmaOptions opt;
      opt.ns = c.ns;
      opt.ps = c.ps;
      opt.rs = c.rs;
      opt.samples = c.samples;
      opt.seed = c.seed;
      return Outcome{verify_det_lemma(ring_from_selector(c.ring), opt), {}, {}};
    };
  }
  {
    auto* sub = command("verify-h1",
                        "Check [Gamma_1, Gamma_1] in Gamma_2 and realize every generator of Gamma_2/Gamma_3 as a "
                        "commutator of Gamma_1 elements (n >= 3; partial check of Gamma_2 = [Gamma_1, Gamma_1])");
    add_ring(sub, c), add_n(sub, c), add_p(sub, c), add_seed(sub, c);
    add_samples(sub, c, 200);
    commands[sub->get_name()] = [&] {
      H1GroupOptions opt;
      opt.seed = c.seed;
      opt.samples = c.samples;
      return Outcome{verify_h1_group(c.n, c.p, ring_from_selector(c.ring), opt), {}, {}};
    };
  }
  {
    auto* sub = command("verify-thm24",
                        "Check that gr_*(Gamma) is isomorphic to sl_n(F_p[V]) (x) I: degreewise bijectivity, bracket "
                        "preservation, and dim H_1 per degree");
    add_ring(sub, c), add_n(sub, c), add_p(sub, c), add_seed(sub, c);
    add_samples(sub, c, 200);
    sub->add_option("--maxdeg", c.maxdeg, "Largest degree")->capture_default_str();
    commands[sub->get_name()] = [&] {
      GradedOptions opt;
      opt.seed = c.seed;
      opt.samples = c.samples;
      return Outcome{verify_graded_iso(c.n, c.p, ring_from_selector(c.ring), c.maxdeg, opt), {}, {}};
    };
  }
  {
    auto* sub = command("compute-d2",
                        "The second differential on the fundamental class of Z + Z for the central extension "
                        "Gamma_{r+s-1}/Gamma_{r+s} -> Gamma_r/Gamma_{r+s}: the commutator [A_x, A_y] (needs r >= s - 1)");
    add_ring(sub, c), add_n(sub, c), add_p(sub, c), add_r(sub, c), add_s(sub, c);
    sub->add_option("--x", c.x, "First generator i,j,k at level r")->capture_default_str();
    sub->add_option("--y", c.y, "Second generator i,j,k at level r")->capture_default_str();
    commands[sub->get_name()] = [&] {
      QuotientContext ctx{c.n, c.p, c.r, c.s, ring_from_selector(c.ring)};
      validate_context(ctx);
      QuotientElem d2 = compute_d2(generator(ctx, parse_generator(c.x)), generator(ctx, parse_generator(c.y)));
      return Outcome{std::nullopt, quotient_to_json(d2), quotient_text(d2)};
    };
  }
  {
    auto* sub = command("quotient-order", "The order p^{s (n^2-1) k} of Gamma_r/Gamma_{r+s}");
    add_ring(sub, c), add_n(sub, c), add_p(sub, c), add_s(sub, c);
    sub->add_option("--k", c.k, "Rank of R over Z (defaults to the rank of --ring)");
    commands[sub->get_name()] = [&] {
      const std::size_t k = c.k ? c.k : ring_from_selector(c.ring)->rank();
      const Coeff order = quotient_order(c.n, c.p, c.s, k);
      return Outcome{std::nullopt, json(order), std::to_string(order) + "\n"};
    };
  }
  {
    auto* sub = command("enumerate-quotient", "List every element of Gamma_r/Gamma_{r+s} in canonical form");
    add_ring(sub, c), add_n(sub, c), add_p(sub, c), add_r(sub, c), add_s(sub, c);
    sub->add_option("--cap", c.cap, "Refuse quotients with more elements than this")->capture_default_str();
    commands[sub->get_name()] = [&] {
      QuotientContext ctx{c.n, c.p, c.r, c.s, ring_from_selector(c.ring)};
      auto elems = enumerate_quotient(ctx, c.cap);
      json arr = json::array();
      std::string text = "count: " + std::to_string(elems.size()) + "\n";
      for (const auto& e : elems) {
        arr.push_back(quotient_to_json(e));
        text += matrix_string(e.mat()) + "\n";
      }
      return Outcome{std::nullopt, json{{"count", elems.size()}, {"elements", std::move(arr)}}, text};
    };
  }
  {
    auto* sub = command("centrality",
                        "Decide whether Gamma_{r+s-l}/Gamma_{r+s} is central in Gamma_r/Gamma_{r+s} (iff r >= l) and "
                        "compare with an exhaustive generator scan");
    add_ring(sub, c), add_n(sub, c), add_p(sub, c), add_r(sub, c), add_s(sub, c);
    sub->add_option("--l", c.l, "Kernel depth l, 1 <= l <= s")->capture_default_str();
    commands[sub->get_name()] = [&] {
      return Outcome{verify_centrality(c.n, c.p, c.r, c.s, c.l, ring_from_selector(c.ring)), {}, {}};
    };
  }
  {
    auto* sub = command("witness-zt",
                        "The pairwise commuting family 1 + p^r t^i e12 over Z[t] and its independent images t^i");
    sub->add_option("--ring", c.zt_ring, "Truncated polynomial ring Zt:<D>, D > imax")->capture_default_str();
    add_p(sub, c), add_r(sub, c);
    sub->add_option("--imax", c.imax, "Largest exponent i")->capture_default_str();
    commands[sub->get_name()] = [&] {
      CONGR_REQUIRE(c.zt_ring.rfind("Zt:", 0) == 0, ErrorKind::PreconditionViolated, "witness-zt needs --ring Zt:<D>");
      auto spec = ring_from_selector(c.zt_ring);
      return Outcome{witness_zt(c.imax, c.p, c.r, spec->rank()), {}, {}};
    };
  }
  {
    auto* sub = command("witness-zi",
                        "The commuting pairs 1 + p^r i^eps e12 and 1 + p^r i^eps e21 over Z[i] and their images "
                        "in (+)_6 F_p");
    add_p(sub, c), add_r(sub, c);
    commands[sub->get_name()] = [&] { return Outcome{witness_zi(c.p, c.r), {}, {}}; };
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  const auto subs = app.get_subcommands();
  const std::string name = subs.front()->get_name();
  Outcome result;
  try {
    result = commands.at(name)();
  } catch (const Error& e) {
    err << "congr " << name << ": " << e.what() << "\n";
    return kPreconditionError;
  }

  const bool structured = c.format == "structured";
  std::string text;
  if (result.report)
    text = structured ? result.report->to_json().dump(2) + "\n" : result.report->to_text();
  else
    text = structured ? result.value.dump(2) + "\n" : result.text;

  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream f(c.output, std::ios::binary);
    if (!f) {
      err << "congr: cannot write " << c.output << "\n";
      return kUsageError;
    }
    f << text;
  }
  if (result.report && !result.report->all_passed()) return kCaseFailures;
  return kAllPassed;
}

}  // namespace congr::cli
