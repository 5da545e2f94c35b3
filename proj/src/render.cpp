#include "flopcalc/render.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace flopcalc {

namespace {

std::string superscript(int k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = k < 0 ? "⁻" : "";
  for (char c : std::to_string(k < 0 ? -k : k)) out += digits[c - '0'];
  return out;
}

std::string pair_string(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string schur_h(const Weight& pi) {
  const int len = static_cast<int>(pi.size());
  int nonzero = 0;
  for (int x : pi) nonzero += x != 0;
  if (nonzero == 0) return "";
  if (pi[0] == 1) return nonzero == 1 ? "H^∨" : "Λ" + superscript(nonzero) + "H^∨";
  if (nonzero == 1) return "Sym" + superscript(pi[0]) + "H^∨";
  std::string out = "𝕊^(";
  for (int i = 0; i < len; ++i) out += (i ? "," : "") + std::to_string(pi[i]);
  return out + ")H^∨";
}

}  // namespace

std::string render_weight(const Weight& w) { return to_string(w); }

std::string render(const BundleKey& key) {
  const Weight u = key.s1_weight();
  const Weight v = key.s2_weight();
  if (u.size() != 2 || v.size() != 2) throw Error("text rendering expects rank-2 S_1 and S_2");
  // S^(a, a - m) S_1 = Sym^m S_1^dual (x) det^a ; S^(m + b, b) S_2 = Sym^m S_2 (x) det^b.
  const int a = u[0], m1 = u[0] - u[1];
  const int b = v[1], m2 = v[0] - v[1];
  std::vector<std::string> parts;
  if (m1 > 0) parts.push_back(m1 == 1 ? "S₁^∨" : "Sym" + superscript(m1) + "S₁^∨");
  if (m2 > 0) parts.push_back(m2 == 1 ? "S₂" : "Sym" + superscript(m2) + "S₂");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "⊗" : "") + parts[i];
  if (out.empty()) out = "𝒪";
  if (a != 0 || b != 0) out += pair_string(a, b);
  return out;
}

std::string render_h(const Weight& w) {
  Weight nu(w.rbegin(), w.rend());
  for (int& x : nu) x = -x;
  const int t = nu.back();
  for (int& x : nu) x -= t;
  std::string out = schur_h(nu);
  const int e = -t;
  if (e != 0) out += e == 1 ? "(det H)" : "(det H)^" + std::to_string(e);
  return out.empty() ? "𝒪" : out;
}

std::vector<std::string> render_column(const std::map<BundleKey, int>& column) {
  std::vector<std::string> out;
  for (const auto& [key, c] : column)
    for (int i = 0; i < c; ++i) out.push_back(render(key));
  return out;
}

std::string join_sum(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ⊕ " : "") + parts[i];
  return out;
}

std::string render(const GradedTermList& c, Layout layout) {
  std::ostringstream os;
  os << c.label << " [" << to_string(layout) << "]\n";
  for (const auto& [col, terms] : c.columns(layout)) os << "  " << col << ": " << join_sum(render_column(terms)) << "\n";
  return os.str();
}

std::string render(const EquivariantResolution& r) {
  std::ostringstream os;
  os << r.label << " [homological]\n";
  std::map<int, std::vector<std::string>> cols;
  for (const auto& t : r.terms) cols[t.hdeg].push_back(render_h(t.weight) + " {R " + std::to_string(t.rcharge) + "}");
  for (const auto& [h, parts] : cols) os << "  " << h << ": " << join_sum(parts) << "\n";
  return os.str();
}

nlohmann::json to_json(const Weight& w) { return nlohmann::json(w); }

nlohmann::json to_json(const BundleTerm& t) {
  return {{"s1", t.key.s1},
          {"s2", t.key.s2},
          {"twist", {t.key.twist[0], t.key.twist[1]}},
          {"hdeg", t.hdeg},
          {"rcharge", t.rcharge}};
}

nlohmann::json to_json(const GradedTermList& c, Layout layout) {
  std::map<int, std::vector<BundleTerm>> cols;
  for (const auto& t : c.terms) cols[layout == Layout::Homological ? t.hdeg : t.position()].push_back(t);
  nlohmann::json columns = nlohmann::json::array();
  for (auto& [col, terms] : cols) {
    std::sort(terms.begin(), terms.end());
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : terms) ts.push_back(to_json(t));
    columns.push_back({{"hdeg", col}, {"terms", ts}});
  }
  return {{"label", c.label}, {"layout", to_string(layout)}, {"columns", columns}};
}

nlohmann::json to_json(const EquivariantResolution& r) {
  std::map<int, std::vector<HTerm>> cols;
  for (const auto& t : r.terms) cols[t.hdeg].push_back(t);
  nlohmann::json columns = nlohmann::json::array();
  for (auto& [h, terms] : cols) {
    std::sort(terms.begin(), terms.end());
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : terms) ts.push_back({{"h", t.weight}, {"hdeg", t.hdeg}, {"rcharge", t.rcharge}});
    columns.push_back({{"hdeg", h}, {"terms", ts}});
  }
  return {{"label", r.label}, {"layout", "homological"}, {"columns", columns}};
}

nlohmann::json to_json(const WindowSet& ws) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& w : serialize(ws)) members.push_back(w);
  return {{"family", to_string(ws.family)}, {"k", ws.k}, {"n", ws.n}, {"members", members}};
}

nlohmann::json to_json(const Multidegree& d) { return {{"rows", d.rows}, {"cols", d.cols}, {"pdeg", d.pdeg}}; }

nlohmann::json make_report(const std::string& claim, nlohmann::json params, bool pass, nlohmann::json witnesses) {
  return {{"claim", claim}, {"params", std::move(params)}, {"verdict", pass ? "pass" : "fail"},
          {"witnesses", std::move(witnesses)}};
}

std::string to_string(Layout layout) { return layout == Layout::Homological ? "homological" : "flattened"; }

Layout parse_layout(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "homological" || t == "hdeg") return Layout::Homological;
  if (t == "flattened" || t == "flat" || t == "mf") return Layout::Flattened;
  throw Error("unknown layout: " + s);
}

}  // namespace flopcalc
