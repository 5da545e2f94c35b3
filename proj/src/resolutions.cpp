#include "flopcalc/resolutions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <tuple>

#include <Eigen/Core>

#include "flopcalc/bott.hpp"

namespace flopcalc {

namespace {

Weight shifted_weight(Weight w, int by) {
  for (int& x : w) x += by;
  return w;
}

std::pair<Weight, Weight> split2(const Weight& w, const Shape& shape) {
  return {block(w, shape, 0), block(w, shape, 1)};
}

}  // namespace

// ---------------------------------------------------------------- terms

Weight BundleKey::s1_weight() const { return shifted_weight(s1, twist[0]); }
Weight BundleKey::s2_weight() const { return shifted_weight(s2, twist[1]); }

BundleKey BundleKey::from_weights(const Weight& w1, const Weight& w2) {
  if (w1.empty() || w2.empty() || !is_dominant(w1) || !is_dominant(w2))
    throw Error("bundle term needs dominant weights on both factors");
  const int a = w1.back(), b = w2.back();
  return BundleKey{shifted_weight(w1, -a), shifted_weight(w2, -b), {a, b}};
}

ColumnMultiset GradedTermList::columns(Layout layout) const {
  ColumnMultiset out;
  for (const auto& t : terms) {
    const int col = layout == Layout::Homological ? t.hdeg : t.position();
    ++out[col][t.key];
  }
  return out;
}

GradedTermList GradedTermList::shifted(int s) const {
  GradedTermList out = *this;
  for (auto& t : out.terms) t.hdeg -= s;
  return out;
}

Character GradedTermList::alternating_character(Layout layout) const {
  Character out(Shape::product({rank1, rank2}));
  for (const auto& t : terms) {
    const int col = layout == Layout::Homological ? t.hdeg : t.position();
    out.add(concat(t.key.s1_weight(), t.key.s2_weight()), col % 2 == 0 ? 1 : -1);
  }
  return out;
}

void GradedTermList::sort() { std::sort(terms.begin(), terms.end()); }

Character hom_s2_s1() { return Character::irreducible(Shape::product({2, 2}), {1, 0, 0, -1}); }

GradedTermList koszul_terms(const Character& bundle, int section_rcharge, const std::string& label) {
  const Shape& shape = bundle.shape();
  if (shape.factors() != 2) throw Error("koszul_terms expects a GL(S_1) x GL(S_2) character");
  if (!bundle.is_genuine()) throw Error("koszul_terms: bundle must be a genuine representation");
  GradedTermList out{label, shape.ranks[0], shape.ranks[1], {}};
  const Character dual = dualize(bundle);
  const auto rank = bundle.dimension();
  for (int j = 0; j <= rank; ++j) {
    const Character piece = exterior_power(j, dual);
    for (const auto& [w, m] : piece.terms()) {
      auto [w1, w2] = split2(w, shape);
      for (std::int64_t c = 0; c < m; ++c)
        out.terms.push_back(BundleTerm::make(w1, w2, -j, -j * section_rcharge));
    }
  }
  out.sort();
  return out;
}

// ---------------------------------------------------------------- Weyman

void SpringerDatum::validate() const {
  if (!(0 < k && k < dim_h)) throw Error("Springer datum needs 0 < k < dim H");
  std::int64_t amb = 0, sub = 0;
  for (const auto& p : ambient) {
    if (static_cast<int>(p.weight.size()) != dim_h || !is_dominant(p.weight))
      throw Error("ambient piece is not a GL(H) weight");
    amb += schur_dim(p.weight);
  }
  for (const auto& p : subbundle) {
    if (static_cast<int>(p.weight.size()) != k || !is_dominant(p.weight))
      throw Error("subbundle piece is not a GL(U) weight");
    sub += schur_dim(p.weight);
  }
  if (sub > amb) throw Error("subbundle rank exceeds ambient dimension");
}

SpringerDatum plucker_springer_datum() {
  return SpringerDatum{4, 2, {{{1, 1, 0, 0}, 1}, {{1, 0, 0, 0}, 0}}, {{{1, 1}, 1}, {{1, 0}, 0}}};
}

std::map<int, Character> EquivariantResolution::by_hdeg() const {
  std::map<int, Character> out;
  for (const auto& t : terms) out.try_emplace(t.hdeg, Shape::gl(dim_h)).first->second.add(t.weight, 1);
  return out;
}

std::vector<std::int64_t> EquivariantResolution::ranks() const {
  std::vector<std::int64_t> out;
  for (const auto& t : terms) {
    const auto i = static_cast<std::size_t>(-t.hdeg);
    if (out.size() <= i) out.resize(i + 1, 0);
    out[i] += schur_dim(t.weight);
  }
  return out;
}

EquivariantResolution weyman_resolution(const SpringerDatum& d, int p_rcharge, bool collapse_extensions) {
  d.validate();
  const int n = d.dim_h, k = d.k;
  const Shape levi = Shape::product({k, n - k});

  // Quotient ambient / subbundle as a Levi character, graded by p-degree.
  std::map<int, Character> quotient;
  std::map<int, Character> sub;
  std::map<int, std::vector<Character>> ambient;
  for (const auto& p : d.ambient)
    ambient[p.pdeg].push_back(restrict_to(Character::irreducible(Shape::gl(n), p.weight), levi));
  for (const auto& p : d.subbundle)
    sub.try_emplace(p.pdeg, levi).first->second += Character::irreducible(levi, concat(p.weight, Weight(n - k, 0)));

  // A graded piece is a nonsplit extension when some ambient irreducible keeps
  // two or more Levi constituents after the subbundle is removed.
  std::map<int, bool> nonsplit;
  for (const auto& [g, pieces] : ambient) {
    Character remaining = sub.count(g) ? sub.at(g) : Character(levi);
    Character total(levi);
    for (const auto& c : pieces) {
      Character left = c;
      for (const auto& [w, m] : c.terms()) {
        const auto take = std::min(m, remaining.multiplicity(w));
        if (take > 0) {
          left.add(w, -take);
          remaining.add(w, -take);
        }
      }
      std::int64_t constituents = 0;
      for (const auto& [w, m] : left.terms()) constituents += m;
      if (constituents >= 2) nonsplit[g] = true;
      total += left;
    }
    if (!remaining.empty()) throw Error("subbundle is not contained in the ambient representation");
    quotient.emplace(g, total);
  }
  for (const auto& [g, c] : sub)
    if (!ambient.count(g)) throw Error("subbundle is not contained in the ambient representation");

  struct Piece {
    int pdeg;
    Character dual;
    bool nonsplit;
  };
  std::vector<Piece> xi;
  for (const auto& [g, c] : quotient)
    if (!c.empty()) xi.push_back({g, dualize(c), nonsplit[g]});

  EquivariantResolution out{"weyman", n, {}};
  std::vector<int> m(xi.size(), 0);
  // Enumerate multi-degrees (m_g) of Lambda^. xi = (x)_g Lambda^{m_g} xi_g.
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == xi.size()) {
      Character ch = Character::trivial(levi);
      int total = 0, rch = 0;
      bool filtered = false;
      for (std::size_t i = 0; i < xi.size(); ++i) {
        ch = tensor(ch, exterior_power(m[i], xi[i].dual));
        total += m[i];
        rch -= m[i] * xi[i].pdeg * p_rcharge;
        filtered = filtered || (m[i] > 0 && xi[i].nonsplit);
      }
      std::map<int, Character> coh = bott_push(ch);
      if (filtered && collapse_extensions) {
        // The filtration spectral sequence pairs off equal weights in
        // neighbouring cohomological degrees.
        for (auto it = coh.begin(); it != coh.end(); ++it) {
          auto next = std::next(it);
          if (next == coh.end() || next->first != it->first + 1) continue;
          const Character here = it->second;
          for (const auto& [w, a] : here.terms()) {
            const auto c = std::min(a, next->second.multiplicity(w));
            if (c > 0) {
              it->second.add(w, -c);
              next->second.add(w, -c);
            }
          }
        }
      }
      for (const auto& [deg, c] : coh) {
        const int hdeg = deg - total;
        for (const auto& [w, mult] : c.terms()) {
          if (hdeg > 0) throw Error("Weyman pushdown has cohomology in positive homological degree");
          for (std::int64_t r = 0; r < mult; ++r) out.terms.push_back(HTerm{w, hdeg, rch});
        }
      }
      return;
    }
    for (m[idx] = 0; m[idx] <= xi[idx].dual.dimension(); ++m[idx]) rec(idx + 1);
  };
  rec(0);
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

GradedTermList specialize_h(const EquivariantResolution& r, int p_rcharge) {
  if (r.dim_h != 4) throw Error("specialize_h expects dim H = 4");
  if (p_rcharge <= 0) throw Error("p R-charge must be positive");
  // h_(i,j) = e_i (x) f_j^dual, ordered (1,1), (1,2), (2,1), (2,2); rows give the
  // exponents of the S_1 and S_2 torus.
  Eigen::Matrix4i torus_map;
  torus_map << 1, 1, 0, 0,  //
      0, 0, 1, 1,           //
      -1, 0, -1, 0,         //
      0, -1, 0, -1;
  const Shape target = Shape::product({2, 2});

  GradedTermList out{"OC", 2, 2, {}};
  for (const auto& t : r.terms) {
    if (t.rcharge % p_rcharge != 0) throw Error("R-charge is not a multiple of the p R-charge");
    const int pdeg = -t.rcharge / p_rcharge;
    TorusMultiset tw{target, {}};
    for (const auto& [v, c] : torus_weights(t.weight).counts) {
      const Eigen::Vector4i image = torus_map * Eigen::Map<const Eigen::Vector4i>(v.data());
      tw.add(Weight(image.data(), image.data() + 4), c);
    }
    const Character ch = decompose(tw);
    for (const auto& [w, m] : ch.terms()) {
      auto [w1, w2] = split2(w, target);
      for (std::int64_t c = 0; c < m; ++c)
        out.terms.push_back(
            BundleTerm::make(shifted_weight(w1, pdeg), shifted_weight(w2, -pdeg), t.hdeg, t.rcharge));
    }
  }
  out.sort();
  return out;
}

std::set<Weight> s2_contents(const GradedTermList& c) {
  std::set<Weight> out;
  for (const auto& t : c.terms) out.insert(t.key.s2_weight());
  return out;
}

std::set<Weight> s1_contents(const GradedTermList& c) {
  std::set<Weight> out;
  for (const auto& t : c.terms) out.insert(t.key.s1_weight());
  return out;
}

std::set<Weight> oc_weights() { return s2_contents(build_complex(ComplexId::OC)); }

// ---------------------------------------------------------------- k = 2

std::string to_string(ComplexId id) {
  switch (id) {
    case ComplexId::I0: return "I0";
    case ComplexId::I1: return "I1";
    case ComplexId::I2: return "I2";
    case ComplexId::DeltaBar: return "DELTA_BAR";
    case ComplexId::OC: return "OC";
  }
  return "?";
}

ComplexId parse_complex_id(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (t == "I0") return ComplexId::I0;
  if (t == "I1") return ComplexId::I1;
  if (t == "I2") return ComplexId::I2;
  if (t == "DELTA_BAR" || t == "DELTABAR") return ComplexId::DeltaBar;
  if (t == "OC" || t == "RESOLVEOC") return ComplexId::OC;
  throw Error("unknown complex: " + s);
}

GradedTermList pushdown_i1(int p_rcharge) {
  // Factors S' (line), M = S_1/S' (line), S_2 on Fl(1, 2, V) x Gr(V, 2).
  const Shape shape = Shape::product({1, 1, 2});
  struct Factor {
    Character dual;
    int pdeg;
  };
  const Factor factors[] = {
      {dualize(Character::irreducible(shape, {0, 1, 0, -1})), 0},   // a_2 in Hom(S_2, M)
      {dualize(Character::irreducible(shape, {-1, 1, 0, 0})), 1},   // p_1 in Hom(S', M)
      {dualize(Character::irreducible(shape, {1, 0, 0, -1})), 1},   // a_2 p_2 - p' a_2 in Hom(S_2, S')
  };

  GradedTermList out{"I1", 2, 2, {}};
  const auto r0 = factors[0].dual.dimension();
  const auto r1 = factors[1].dual.dimension();
  const auto r2 = factors[2].dual.dimension();
  for (int i = 0; i <= r0; ++i)
    for (int j = 0; j <= r1; ++j)
      for (int l = 0; l <= r2; ++l) {
        const Character ch = tensor(tensor(exterior_power(i, factors[0].dual), exterior_power(j, factors[1].dual)),
                                    exterior_power(l, factors[2].dual));
        const int m = i + j + l;
        const int rch = -(i * factors[0].pdeg + j * factors[1].pdeg + l * factors[2].pdeg) * p_rcharge;
        for (const auto& [w, mult] : ch.terms()) {
          const FlagBundleWeight fw{{w[0]}, {w[1]}, {w[2], w[3]}};
          for (const auto& push : relative_bott_push(fw))
            for (std::int64_t c = 0; c < mult; ++c)
              out.terms.push_back(BundleTerm::make(push.s, push.spectator, push.degree - m, rch));
        }
      }
  out.sort();
  return out;
}

GradedTermList trace_cone(const GradedTermList& c, int p_rcharge) {
  GradedTermList out = c;
  for (auto t : c.terms) {
    t.hdeg -= 1;
    t.rcharge -= p_rcharge;
    out.terms.push_back(t);
  }
  out.sort();
  return out;
}

GradedTermList build_complex(ComplexId which, int p_rcharge) {
  GradedTermList out;
  switch (which) {
    case ComplexId::I2:
      out = koszul_terms(hom_s2_s1(), 0, "I2");
      break;
    case ComplexId::I0:
      out = koszul_terms(hom_s2_s1(), p_rcharge, "I0");
      break;
    case ComplexId::I1:
      out = pushdown_i1(p_rcharge);
      break;
    case ComplexId::OC:
      out = specialize_h(weyman_resolution(plucker_springer_datum(), p_rcharge), p_rcharge);
      break;
    case ComplexId::DeltaBar:
      out = trace_cone(build_complex(ComplexId::OC, p_rcharge), p_rcharge);
      break;
  }
  out.label = to_string(which);
  return out;
}

// ---------------------------------------------------------------- cancellation

namespace {

using Cell = std::pair<int, int>;  // (row, column)

struct KeySolution {
  std::map<Cell, int> pairs;  // source cell -> multiplicity
  std::map<Cell, int> left;
  bool ok = false;
};

// Chooses how many copies of one summand cancel along each (row, col) ->
// (row + 1, col + 1) slot. Larger counts are tried first and slots are
// visited in lexicographic order, so the first solution is the greedy one.
KeySolution solve_key(const std::map<Cell, int>& counts, const std::map<int, int>* target) {
  std::vector<Cell> slots;
  for (const auto& [cell, c] : counts) {
    const Cell next{cell.first + 1, cell.second + 1};
    if (counts.count(next)) slots.push_back(cell);
  }
  std::map<Cell, int> avail = counts;
  std::vector<int> x(slots.size(), 0);
  KeySolution best;
  int best_total = -1;

  auto residual_matches = [&] {
    std::map<int, int> per_col;
    for (const auto& [cell, c] : avail)
      if (c) per_col[cell.second] += c;
    std::map<int, int> want;
    for (const auto& [col, c] : *target)
      if (c) want[col] = c;
    return per_col == want;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
    if (idx == slots.size()) {
      if (target) {
        if (!residual_matches()) return false;
      } else {
        int total = 0;
        for (int v : x) total += v;
        if (total <= best_total) return false;
        best_total = total;
      }
      best.pairs.clear();
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (x[i]) best.pairs[slots[i]] = x[i];
      best.left = avail;
      best.ok = true;
      return target != nullptr;
    }
    const Cell src = slots[idx];
    const Cell dst{src.first + 1, src.second + 1};
    const int cap = std::min(avail[src], avail[dst]);
    for (int v = cap; v >= 0; --v) {
      avail[src] -= v;
      avail[dst] -= v;
      x[idx] = v;
      const bool done = rec(idx + 1);
      avail[src] += v;
      avail[dst] += v;
      x[idx] = 0;
      if (done) return true;
    }
    return false;
  };
  rec(0);
  return best;
}

Character alternating(const ColumnMultiset& cols, const Shape& shape) {
  Character out(shape);
  for (const auto& [col, terms] : cols)
    for (const auto& [key, c] : terms)
      out.add(concat(key.s1_weight(), key.s2_weight()), (col % 2 == 0 ? 1 : -1) * c);
  return out;
}

}  // namespace

CancellationResult convolve_and_cancel(const std::vector<ConvolutionRow>& rows,
                                       const std::optional<ColumnMultiset>& target) {
  std::map<BundleKey, std::map<Cell, int>> counts;
  ColumnMultiset before;
  Shape shape = Shape::product({2, 2});
  for (std::size_t r = 0; r < rows.size(); ++r) {
    shape = Shape::product({rows[r].complex.rank1, rows[r].complex.rank2});
    for (const auto& t : rows[r].complex.terms) {
      const int col = t.position() + rows[r].offset;
      ++counts[t.key][{static_cast<int>(r), col}];
      ++before[col][t.key];
    }
  }

  std::map<BundleKey, std::map<int, int>> wanted;
  if (target)
    for (const auto& [col, terms] : *target)
      for (const auto& [key, c] : terms) wanted[key][col] += c;

  CancellationResult out;
  out.matched = true;
  for (const auto& [key, cells] : counts) {
    std::map<int, int> none;
    const std::map<int, int>* want = nullptr;
    if (target) {
      auto it = wanted.find(key);
      want = it == wanted.end() ? &none : &it->second;
    }
    KeySolution sol = solve_key(cells, want);
    if (!sol.ok) {
      out.matched = false;
      sol = solve_key(cells, nullptr);
    }
    for (const auto& [cell, c] : sol.pairs)
      for (int i = 0; i < c; ++i) out.pairs.push_back(CancelledPair{cell.first, cell.second, key});
    for (const auto& [cell, c] : sol.left)
      if (c) out.residual[cell.second][key] += c;
  }
  if (target) {
    for (const auto& [key, cols] : wanted)
      if (!counts.count(key))
        for (const auto& [col, c] : cols)
          if (c) out.matched = false;
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.kclass_conserved = alternating(before, shape) == alternating(out.residual, shape);
  return out;
}

std::vector<int> tric_offsets(int k) {
  std::vector<int> out;
  for (int i = k; i >= 0; --i) out.push_back(i * i);
  return out;
}

AlignmentSearch search_alignments(const std::vector<GradedTermList>& rows, const ColumnMultiset& target,
                                  int range) {
  AlignmentSearch out;
  if (rows.empty()) return out;
  const Shape shape = Shape::product({rows.front().rank1, rows.front().rank2});
  const Character target_class = alternating(target, shape);
  std::vector<Character> row_class;
  for (const auto& r : rows) row_class.push_back(r.alternating_character(Layout::Flattened));

  std::vector<int> offsets(rows.size(), -range);
  while (true) {
    // Cancellation preserves the alternating class, so it must already agree.
    Character cls(shape);
    for (std::size_t i = 0; i < rows.size(); ++i)
      cls += offsets[i] % 2 == 0 ? row_class[i] : row_class[i] * -1;
    if (cls == target_class) {
      std::vector<ConvolutionRow> conv;
      for (std::size_t i = 0; i < rows.size(); ++i) conv.push_back({rows[i], offsets[i]});
      if (convolve_and_cancel(conv, target).matched) out.closing_offsets.push_back(offsets);
    }
    std::size_t i = 0;
    while (i < offsets.size() && offsets[i] == range) offsets[i++] = -range;
    if (i == offsets.size()) break;
    ++offsets[i];
  }
  return out;
}

NormalizationReport cancellation_for_unit(int p_rcharge, int range) {
  NormalizationReport rep;
  rep.p_rcharge = p_rcharge;
  rep.predicted_offsets = tric_offsets(2);
  const std::vector<GradedTermList> rows = {build_complex(ComplexId::I2, p_rcharge),
                                            build_complex(ComplexId::I1, p_rcharge),
                                            build_complex(ComplexId::I0, p_rcharge)};
  const ColumnMultiset target = build_complex(ComplexId::DeltaBar, p_rcharge).columns(Layout::Flattened);
  std::vector<ConvolutionRow> conv;
  for (std::size_t i = 0; i < rows.size(); ++i) conv.push_back({rows[i], rep.predicted_offsets[i]});
  rep.at_predicted = convolve_and_cancel(conv, target);
  rep.closes_at_predicted = rep.at_predicted.matched;
  rep.search = search_alignments(rows, target, range);
  return rep;
}

}  // namespace flopcalc
