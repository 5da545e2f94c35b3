#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>

#include "flopcalc/claims.hpp"
#include "flopcalc/invariants.hpp"
#include "flopcalc/render.hpp"
#include "flopcalc/resolutions.hpp"
#include "flopcalc/windows.hpp"
#include "json.hpp"
#include "properties.hpp"

using namespace flopcalc;

namespace {

struct Criterion {
  std::string name;
  double limit_s;
  std::function<std::string()> run;  // empty string on success, else the reason
};

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(FLOPCALC_GOLDEN_DIR) + "/" + name);
  if (!in) throw Error("missing golden file " + name);
  return nlohmann::json::parse(in);
}

std::set<Weight> triangle(int top) {
  std::set<Weight> out;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= a; ++b) out.insert({a, b});
  return out;
}

std::string window_closed_forms() {
  for (int n = 3; n <= 12; ++n) {
    const auto w = generate_window(WindowFamily::GflopW, 2, n).members;
    const auto wp = generate_window(WindowFamily::MukaiWPrime, 2, n).members;
    const auto t = generate_window(WindowFamily::Tseu, 2, n).members;
    if (w != triangle(n - 2)) return "GflopW(2," + std::to_string(n) + ")";
    if (wp != triangle(n - 1)) return "MukaiWPrime(2," + std::to_string(n) + ")";
    if (t != wp) return "Tseu(2," + std::to_string(n) + ")";
  }
  return "";
}

std::string koszul_restriction() {
  std::vector<std::pair<int, int>> cases;
  for (int n = 3; n <= 10; ++n) cases.push_back({2, n});
  for (int n = 4; n <= 7; ++n) cases.push_back({3, n});
  for (int n = 2; n <= 10; ++n) cases.push_back({1, n});
  for (const auto& [k, n] : cases) {
    const auto kr = koszul_restriction_weights(k, n);
    if (kr.weights != generate_window(WindowFamily::GflopW, k, n).members)
      return "k=" + std::to_string(k) + " n=" + std::to_string(n);
  }
  return "";
}

std::string oc_window() {
  if (oc_weights() != std::set<Weight>{{0, 0}, {1, 0}, {1, 1}}) return "oc_weights";
  for (int n = 3; n <= 10; ++n)
    if (!oc_tensor_check(n).equal) return "oc_tensor_check(" + std::to_string(n) + ")";
  return "";
}

std::string weyman() {
  const auto w = weyman_resolution(plucker_springer_datum());
  if (!table_diff(rendered(w), claimed_weyman()).empty()) return "term list differs from the reference table";
  if (to_json(w) != golden("weyman.json")) return "weyman golden";
  const auto oc = specialize_h(w);
  if (!table_diff(rendered(oc, Layout::Homological), claimed_oc_homological()).empty()) return "O_C homological";
  if (!table_diff(rendered(oc, Layout::Flattened), claimed_oc_flattened()).empty()) return "O_C flattened";
  if (to_json(oc, Layout::Homological) != golden("oc_homological.json")) return "oc_homological golden";
  if (to_json(oc, Layout::Flattened) != golden("oc_flattened.json")) return "oc_flattened golden";
  return "";
}

std::string complexes() {
  for (const auto& [id, file] : std::vector<std::pair<ComplexId, std::string>>{{ComplexId::I2, "i2.json"},
                                                                                {ComplexId::I0, "i0.json"},
                                                                                {ComplexId::I1, "i1.json"},
                                                                                {ComplexId::DeltaBar, "delta_bar.json"}}) {
    const auto c = build_complex(id);
    const auto d = table_diff(rendered(c, Layout::Flattened), claimed_complex(id));
    if (!d.empty()) return to_string(id) + ": " + d.front();
    if (to_json(c, Layout::Flattened) != golden(file)) return to_string(id) + " golden";
  }
  return "";
}

std::string cancellation() {
  std::string found;
  for (int unit : {1, 2}) {
    const auto r = cancellation_for_unit(unit);
    std::printf("  p R-charge %d: predicted offsets %s, %zu pairs\n", unit,
                r.closes_at_predicted ? "close" : "do not close", r.at_predicted.pairs.size());
    if (!r.at_predicted.kclass_conserved) return "K-class changed for unit " + std::to_string(unit);
    if (r.closes_at_predicted) {
      std::string offs;
      for (int o : r.predicted_offsets) offs += (offs.empty() ? "" : ",") + std::to_string(o);
      found = "R-charge of p = " + std::to_string(unit) + ", offsets (" + offs + ")";
    }
  }
  if (found.empty()) return "no normalization closes";
  const auto two = cancellation_for_unit(2);
  if (two.at_predicted.residual != build_complex(ComplexId::DeltaBar).columns(Layout::Flattened))
    return "residual differs from the diagonal closure";
  std::printf("  %s\n", found.c_str());
  return "";
}

std::string invariants() {
  if (!verify_generators(1, 6).passed()) return "n=1 degree 6";
  if (!verify_generators(2, 4).passed()) return "n=2 degree 4";
  const auto neg = verify_generators(generators_without_det(1), 4);
  if (neg.passed()) return "negative control passed";
  if (neg.discrepancies.front().degree != Multidegree{{0}, {0}, 2})
    return "negative control failed at " + to_string(neg.discrepancies.front().degree);
  return "";
}

std::string properties() {
  const std::vector<std::pair<std::string, props::Tally>> suites = {
      {"round trip", props::round_trip(300, 101)},
      {"tensor laws", props::tensor_laws(200, 102)},
      {"cauchy", props::cauchy_cases(200, 103)},
      {"exterior dimensions", props::exterior_dimensions(200, 104)},
      {"P^1 table", props::p1_table()},
      {"zero iff repeat", props::zero_iff_repeat()},
  };
  for (const auto& [name, t] : suites) {
    if (!t.ok()) return name + ": " + t.first_failure;
    if (name != "P^1 table" && t.cases < 200) return name + ": too few cases";
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"window closed forms", 1, window_closed_forms},
      {"Koszul restriction equals the window", 5, koszul_restriction},
      {"O_C weights and tensor check", 5, oc_window},
      {"Weyman resolution and O_C", 1, weyman},
      {"I2, I0, I1 and the diagonal closure", 1, complexes},
      {"term-level cancellation", 5, cancellation},
      {"bounded invariant verification", 600, invariants},
      {"property suites", 60, properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && s > c.limit_s) why = "over the time limit";
    std::printf("criterion %zu %s: %s (%.3f s, limit %.0f s)%s%s\n", i + 1, c.name.c_str(),
                why.empty() ? "PASS" : "FAIL", s, c.limit_s, why.empty() ? "" : " ", why.c_str());
    failed += !why.empty();
  }
  return failed == 0 ? 0 : 1;
}
