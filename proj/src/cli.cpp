#include "flopcalc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "flopcalc/claims.hpp"
#include "flopcalc/invariants.hpp"
#include "flopcalc/render.hpp"
#include "flopcalc/resolutions.hpp"
#include "flopcalc/windows.hpp"

namespace flopcalc {

using nlohmann::json;

IntRange parse_range(const std::string& s) {
  const auto dots = s.find("..");
  IntRange r;
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s, &used);
      if (used != s.size()) throw Error("");
    } else {
      const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw Error("");
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw Error("");
    }
  } catch (const std::exception&) {
    throw Error("malformed range: " + s);
  }
  if (r.lo > r.hi) throw Error("empty range: " + s);
  return r;
}

namespace {

struct RunConfig {
  std::string format;
  std::string family = "W";
  int k = 2;
  std::string n;
  std::string golden;
  std::string claim;
  std::string which;
  std::string layout = "flattened";
  std::string rcharge_unit = "auto";
  int max_deg = 6;
  bool without_det = false;
};

struct Outcome {
  json report;
  std::vector<std::string> lines;
  bool pass = false;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
}

void emit(const Outcome& o, bool as_json, std::ostream& out) {
  if (as_json) {
    out << o.report.dump(2) << "\n";
    return;
  }
  out << o.report["claim"].get<std::string>() << ": " << (o.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& l : o.lines) out << "  " << l << "\n";
}

json weights_json(const std::set<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(w);
  return a;
}

std::string weights_text(const std::set<Weight>& ws) {
  std::string s = "{";
  bool first = true;
  for (const auto& w : ws) {
    s += (first ? "" : ", ") + to_string(w);
    first = false;
  }
  return s + "}";
}

void check_k_range(int k, const IntRange& r) {
  if (k < 1) throw Error("k must be positive");
  if (r.lo <= k) throw Error("every n in the range must exceed k");
}

int unit_value(const std::string& s) {
  if (s == "1") return 1;
  if (s == "2") return 2;
  throw Error("R-charge unit must be auto, 1 or 2");
}

std::optional<std::vector<std::string>> golden_diff(const json& got, const std::string& path) {
  if (path.empty()) return std::nullopt;
  const json want = read_json(path);
  if (got == want) return std::vector<std::string>{};
  return std::vector<std::string>{"differs from golden file " + path};
}

// -- verify --

Outcome verify_lemma31(const RunConfig& c) {
  const IntRange r = parse_range(c.n.empty() ? "3..8" : c.n);
  check_k_range(c.k, r);
  Outcome o;
  o.pass = true;
  json per_n = json::array();
  for (int n = r.lo; n <= r.hi; ++n) {
    const auto kr = koszul_restriction_weights(c.k, n);
    const auto win = generate_window(WindowFamily::GflopW, c.k, n);
    o.pass = o.pass && kr.matches_window;
    per_n.push_back({{"n", n}, {"matches", kr.matches_window}, {"convention", kr.convention},
                     {"weights", kr.weights.size()}, {"window", win.members.size()}});
    o.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(kr.weights.size()) + " weights, window " +
                      std::to_string(win.members.size()) + (kr.matches_window ? ", equal" : ", DIFFERENT"));
    if (n == r.lo) o.lines.push_back("convention: " + kr.convention);
  }
  o.report = make_report("lemma31", {{"k", c.k}, {"n", {r.lo, r.hi}}}, o.pass, {{"per_n", per_n}});
  return o;
}

Outcome verify_prop44(const RunConfig& c) {
  const IntRange r = parse_range(c.n.empty() ? "3..10" : c.n);
  if (c.k != 2) throw Error("prop44 is a k = 2 statement");
  check_k_range(2, r);
  Outcome o;
  const auto oc = oc_weights();
  const std::set<Weight> expected = {{0, 0}, {1, 0}, {1, 1}};
  o.pass = oc == expected;
  o.lines.push_back("S2 content of the O_C resolution: " + weights_text(oc));
  json per_n = json::array();
  for (int n = r.lo; n <= r.hi; ++n) {
    const auto tc = oc_tensor_check(n);
    o.pass = o.pass && tc.equal;
    per_n.push_back({{"n", n}, {"equal", tc.equal}, {"produced", tc.produced.size()}, {"target", tc.target.size()}});
    o.lines.push_back("n=" + std::to_string(n) + ": tensor products give " + std::to_string(tc.produced.size()) +
                      " of " + std::to_string(tc.target.size()) + (tc.equal ? ", equal" : ", DIFFERENT"));
  }
  o.report = make_report("prop44", {{"k", 2}, {"n", {r.lo, r.hi}}}, o.pass,
                         {{"oc_weights", weights_json(oc)}, {"per_n", per_n}});
  return o;
}

Outcome verify_resolve_oc(const RunConfig& c) {
  const int unit = c.rcharge_unit == "auto" ? kDefaultPRCharge : unit_value(c.rcharge_unit);
  const auto oc = build_complex(ComplexId::OC, unit);
  const auto d1 = table_diff(rendered(oc, Layout::Homological), claimed_oc_homological());
  const auto d2 = table_diff(rendered(oc, Layout::Flattened), claimed_oc_flattened());
  Outcome o;
  o.pass = d1.empty() && d2.empty();
  for (const auto& l : d1) o.lines.push_back("homological " + l);
  for (const auto& l : d2) o.lines.push_back("flattened " + l);
  json gold = nullptr;
  if (!c.golden.empty()) {
    const json want = read_json(c.golden);
    const Layout layout = parse_layout(want.value("layout", "homological"));
    const bool same = to_json(oc, layout) == want;
    o.pass = o.pass && same;
    gold = same;
    o.lines.push_back(std::string("golden ") + (same ? "matches" : "DIFFERS"));
  }
  o.lines.insert(o.lines.begin(), "flattened:\n" + render(oc, Layout::Flattened));
  o.report = make_report("resolveOC", {{"rcharge_unit", unit}}, o.pass,
                         {{"complex", to_json(oc, Layout::Homological)},
                          {"flattened", to_json(oc, Layout::Flattened)},
                          {"homological_diff", d1},
                          {"flattened_diff", d2},
                          {"golden_match", gold}});
  return o;
}

Outcome verify_weyman(const RunConfig& c) {
  const int unit = c.rcharge_unit == "auto" ? kDefaultPRCharge : unit_value(c.rcharge_unit);
  const auto w = weyman_resolution(plucker_springer_datum(), unit);
  const auto diff = table_diff(rendered(w), claimed_weyman());
  const auto ranks = w.ranks();
  Outcome o;
  o.pass = diff.empty() && ranks == std::vector<std::int64_t>{1, 5, 5, 1};
  o.lines.push_back(render(w));
  std::string rk;
  for (auto x : ranks) rk += (rk.empty() ? "" : ",") + std::to_string(x);
  o.lines.push_back("ranks (" + rk + ")");
  for (const auto& l : diff) o.lines.push_back(l);
  if (auto g = golden_diff(to_json(w), c.golden)) {
    o.pass = o.pass && g->empty();
    o.lines.push_back(g->empty() ? "golden matches" : g->front());
  }
  o.report = make_report("weyman", {{"rcharge_unit", unit}}, o.pass,
                         {{"resolution", to_json(w)}, {"ranks", ranks}, {"diff", diff}});
  return o;
}

json pairs_json(const std::vector<CancelledPair>& pairs) {
  json a = json::array();
  for (const auto& p : pairs)
    a.push_back({{"row", p.source_row}, {"column", p.column}, {"term", render(p.key)}});
  return a;
}

Outcome verify_cancellation(const RunConfig& c) {
  std::vector<int> units;
  if (c.rcharge_unit == "auto")
    units = {1, 2};
  else
    units = {unit_value(c.rcharge_unit)};
  Outcome o;
  json per_unit = json::array();
  std::optional<int> found;
  for (int u : units) {
    const auto rep = cancellation_for_unit(u);
    json closing = json::array();
    std::string closing_text;
    for (const auto& off : rep.search.closing_offsets) {
      closing.push_back(off);
      closing_text += " " + to_string(off);
    }
    per_unit.push_back({{"p_rcharge", u},
                        {"shifts", {-6, -2, 0}},
                        {"offsets", rep.predicted_offsets},
                        {"closes", rep.closes_at_predicted},
                        {"kclass_conserved", rep.at_predicted.kclass_conserved},
                        {"cancelled_pairs", pairs_json(rep.at_predicted.pairs)},
                        {"closing_offsets_in_search", closing}});
    o.lines.push_back("p R-charge " + std::to_string(u) + ": offsets " + to_string(rep.predicted_offsets) +
                      (rep.closes_at_predicted ? " close" : " do not close") + ", " +
                      std::to_string(rep.at_predicted.pairs.size()) + " pairs, K-class " +
                      (rep.at_predicted.kclass_conserved ? "conserved" : "NOT conserved") +
                      "; offsets closing in search:" + (closing_text.empty() ? " none" : closing_text));
    if (rep.closes_at_predicted && rep.at_predicted.kclass_conserved && !found) {
      found = u;
      for (const auto& p : rep.at_predicted.pairs)
        o.lines.push_back("  row " + std::to_string(p.source_row) + " col " + std::to_string(p.column) + " -> row " +
                          std::to_string(p.source_row + 1) + " col " + std::to_string(p.column + 1) + ": " +
                          render(p.key));
    }
  }
  o.pass = found.has_value();
  o.lines.insert(o.lines.begin(), "rows I2[-6], I1[-2], I0 against DELTA_BAR");
  if (found) o.lines.push_back("normalization: p has R-charge " + std::to_string(*found));
  o.report = make_report("cancellation", {{"rcharge_unit", c.rcharge_unit}}, o.pass,
                         {{"normalization", found ? json(*found) : json(nullptr)}, {"per_unit", per_unit}});
  return o;
}

Outcome verify_invariants(const RunConfig& c) {
  const IntRange r = parse_range(c.n.empty() ? "1" : c.n);
  if (r.lo < 1 || r.hi > 3) throw Error("invariants: n must lie in 1..3");
  if (c.max_deg < 0 || c.max_deg > 8) throw Error("invariants: --max-deg must lie in 0..8");
  Outcome o;
  o.pass = true;
  json per_n = json::array();
  for (int n = r.lo; n <= r.hi; ++n) {
    const GeneratorSet gens = c.without_det ? generators_without_det(n) : standard_generators(n);
    const auto rep = verify_generators(gens, c.max_deg);
    o.pass = o.pass && rep.passed();
    json disc = json::array();
    for (const auto& d : rep.discrepancies)
      disc.push_back({{"degree", to_json(d.degree)}, {"invariant", d.invariant}, {"generated", d.generated}});
    per_n.push_back({{"n", n},
                     {"generators", gens.generators.size()},
                     {"generators_invariant", rep.generators_invariant},
                     {"multidegrees", rep.checks.size()},
                     {"discrepancies", disc}});
    o.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(rep.checks.size()) + " multidegrees, " +
                      std::to_string(rep.discrepancies.size()) + " discrepancies");
    for (const auto& d : rep.discrepancies)
      o.lines.push_back("  " + to_string(d.degree) + ": invariants " + std::to_string(d.invariant) +
                        ", generated " + std::to_string(d.generated));
  }
  o.lines.push_back("bounded verification up to total degree " + std::to_string(c.max_deg));
  o.report = make_report("invariants", {{"n", {r.lo, r.hi}}, {"max_deg", c.max_deg}, {"without_det", c.without_det}},
                         o.pass, {{"per_n", per_n}});
  return o;
}

Outcome verify_tseu_eq(const RunConfig& c) {
  const IntRange r = parse_range(c.n.empty() ? "3..12" : c.n);
  if (c.k != 2) throw Error("tseu-eq compares k = 2 windows");
  check_k_range(2, r);
  Outcome o;
  o.pass = true;
  json per_n = json::array();
  for (int n = r.lo; n <= r.hi; ++n) {
    std::set<Weight> w_closed, wp_closed;
    for (int a = 0; a <= n - 1; ++a)
      for (int b = 0; b <= a; ++b) {
        wp_closed.insert({a, b});
        if (a <= n - 2) w_closed.insert({a, b});
      }
    const auto w = generate_window(WindowFamily::GflopW, 2, n).members;
    const auto wp = generate_window(WindowFamily::MukaiWPrime, 2, n).members;
    const auto ts = generate_window(WindowFamily::Tseu, 2, n).members;
    const bool ok = w == w_closed && wp == wp_closed && ts == wp;
    o.pass = o.pass && ok;
    per_n.push_back({{"n", n}, {"w_closed_form", w == w_closed}, {"wprime_closed_form", wp == wp_closed},
                     {"tseu_equals_wprime", ts == wp}});
    o.lines.push_back("n=" + std::to_string(n) + (ok ? ": equal" : ": DIFFERENT"));
  }
  o.report = make_report("tseu-eq", {{"k", 2}, {"n", {r.lo, r.hi}}}, o.pass, {{"per_n", per_n}});
  return o;
}

// -- window --

int cmd_window(const std::string& mode, const RunConfig& c, bool as_json, std::ostream& out) {
  const IntRange r = parse_range(c.n.empty() ? "3" : c.n);
  if (r.lo != r.hi) throw Error("window takes a single n");
  const auto ws = generate_window(parse_window_family(c.family), c.k, r.lo);
  if (mode == "generate") {
    if (as_json) {
      out << to_json(ws).dump(2) << "\n";
    } else {
      for (const auto& w : serialize(ws)) out << to_string(w) << "\n";
    }
    return kPass;
  }
  if (c.golden.empty()) throw Error("window compare needs --golden");
  const json g = read_json(c.golden);
  const json members = g.is_object() ? g.at("members") : g;
  std::set<Weight> want;
  for (const auto& w : members) want.insert(w.get<Weight>());
  std::set<Weight> missing, extra;
  for (const auto& w : want)
    if (!ws.contains(w)) missing.insert(w);
  for (const auto& w : ws.members)
    if (!want.count(w)) extra.insert(w);
  const bool same = missing.empty() && extra.empty();
  Outcome o;
  o.pass = same;
  o.lines = {"missing " + weights_text(missing), "extra " + weights_text(extra)};
  o.report = make_report("window-compare", {{"family", to_string(ws.family)}, {"k", ws.k}, {"n", ws.n}}, same,
                         {{"missing", weights_json(missing)}, {"extra", weights_json(extra)}});
  emit(o, as_json, out);
  return same ? kPass : kFail;
}

// -- complex --

int cmd_complex(const RunConfig& c, bool as_json, std::ostream& out) {
  const int unit = c.rcharge_unit == "auto" ? kDefaultPRCharge : unit_value(c.rcharge_unit);
  std::string which = c.which;
  for (auto& ch : which) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (which == "WEYMAN") {
    const auto w = weyman_resolution(plucker_springer_datum(), unit);
    out << (as_json ? to_json(w).dump(2) + "\n" : render(w));
    return kPass;
  }
  const auto cx = build_complex(parse_complex_id(c.which), unit);
  const Layout layout = parse_layout(c.layout);
  out << (as_json ? to_json(cx, layout).dump(2) + "\n" : render(cx, layout));
  return kPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact checks of window, Bott, resolution and invariant computations", "flopcalc"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "text or json (default: $FLOPCALC_FORMAT, else text)");

  auto* window = app.add_subcommand("window", "generate or compare a window");
  std::string window_mode;
  window->add_option("mode", window_mode, "generate | compare")->required()->check(CLI::IsMember({"generate", "compare"}));
  window->add_option("--family", c.family, "W | Wprime | Tseu");
  window->add_option("--k", c.k, "rank of S");
  window->add_option("--n", c.n, "dimension of V")->required();
  window->add_option("--golden", c.golden, "golden file for compare");
  window->add_option("--format", c.format, "text or json");

  auto* verify = app.add_subcommand("verify", "check one claim");
  verify->add_option("claim", c.claim, "lemma31 | prop44 | resolveOC | weyman | cancellation | invariants | tseu-eq")
      ->required()
      ->check(CLI::IsMember({"lemma31", "prop44", "resolveOC", "weyman", "cancellation", "invariants", "tseu-eq"}));
  verify->add_option("--k", c.k, "rank of S");
  verify->add_option("--n", c.n, "n or a range a..b");
  verify->add_option("--max-deg", c.max_deg, "total degree bound for invariants");
  verify->add_option("--rcharge-unit", c.rcharge_unit, "auto | 1 | 2: R-charge of p");
  verify->add_option("--golden", c.golden, "golden JSON to compare against");
  verify->add_flag("--without-det", c.without_det, "drop det p from the generators");
  verify->add_option("--format", c.format, "text or json");

  auto* complex = app.add_subcommand("complex", "print a resolution");
  complex->add_option("--which", c.which, "I0 | I1 | I2 | DELTA_BAR | OC | WEYMAN")->required();
  complex->add_option("--layout", c.layout, "flattened | homological");
  complex->add_option("--rcharge-unit", c.rcharge_unit, "1 | 2: R-charge of p");
  complex->add_option("--format", c.format, "text or json");

  std::vector<std::string> argv_store{"flopcalc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  if (c.format.empty()) {
    const char* env = std::getenv("FLOPCALC_FORMAT");
    c.format = env ? env : "text";
  }
  if (c.format != "text" && c.format != "json") {
    err << "unknown format: " << c.format << "\n";
    return kUsage;
  }
  const bool as_json = c.format == "json";

  try {
    if (window->parsed()) return cmd_window(window_mode, c, as_json, out);
    if (complex->parsed()) return cmd_complex(c, as_json, out);
    Outcome o;
    if (c.claim == "lemma31") o = verify_lemma31(c);
    else if (c.claim == "prop44") o = verify_prop44(c);
    else if (c.claim == "resolveOC") o = verify_resolve_oc(c);
    else if (c.claim == "weyman") o = verify_weyman(c);
    else if (c.claim == "cancellation") o = verify_cancellation(c);
    else if (c.claim == "invariants") o = verify_invariants(c);
    else o = verify_tseu_eq(c);
    emit(o, as_json, out);
    return o.pass ? kPass : kFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace flopcalc
