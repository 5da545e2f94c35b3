#include "flopcalc/invariants.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "flopcalc/exact_rank.hpp"

namespace flopcalc {

std::string PolyRingSpec::variable_name(int v) const {
  std::ostringstream os;
  if (v < 2 * n)
    os << "x" << v / 2 + 1 << v % 2 + 1;
  else if (v < 4 * n)
    os << "y" << (v - 2 * n) % 2 + 1 << (v - 2 * n) / 2 + 1;
  else
    os << "p" << (v - 4 * n) / 2 + 1 << (v - 4 * n) % 2 + 1;
  return os.str();
}

int Multidegree::total() const {
  int t = pdeg;
  for (int r : rows) t += r;
  for (int c : cols) t += c;
  return t;
}

Multidegree Multidegree::operator+(const Multidegree& o) const {
  Multidegree out = *this;
  for (std::size_t i = 0; i < rows.size(); ++i) out.rows[i] += o.rows[i];
  for (std::size_t i = 0; i < cols.size(); ++i) out.cols[i] += o.cols[i];
  out.pdeg += o.pdeg;
  return out;
}

std::string to_string(const Multidegree& d) {
  return "rows" + to_string(d.rows) + " cols" + to_string(d.cols) + " p" + std::to_string(d.pdeg);
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Multidegree multidegree_of(const PolyRingSpec& spec, const Monomial& m) {
  Multidegree d{std::vector<int>(spec.n, 0), std::vector<int>(spec.n, 0), 0};
  for (int i = 0; i < spec.n; ++i)
    for (int a = 0; a < 2; ++a) {
      d.rows[i] += m[spec.x_index(i, a)];
      d.cols[i] += m[spec.y_index(a, i)];
    }
  for (int v = 4 * spec.n; v < spec.variable_count(); ++v) d.pdeg += m[v];
  return d;
}

namespace {

// Fills `slots` of m with every composition of `total` into them.
void compositions(Monomial& m, const std::vector<int>& slots, std::size_t idx, int total,
                  const std::function<void()>& emit) {
  if (idx + 1 == slots.size()) {
    m[slots[idx]] = static_cast<std::uint8_t>(total);
    emit();
    return;
  }
  for (int e = total; e >= 0; --e) {
    m[slots[idx]] = static_cast<std::uint8_t>(e);
    compositions(m, slots, idx + 1, total - e, emit);
  }
}

std::array<int, 2> torus_weight(const PolyRingSpec& spec, const Monomial& m) {
  std::array<int, 2> w{0, 0};
  for (int i = 0; i < spec.n; ++i)
    for (int a = 0; a < 2; ++a) {
      w[a] -= m[spec.x_index(i, a)];
      w[a] += m[spec.y_index(a, i)];
    }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      w[a] += m[spec.p_index(a, b)];
      w[b] -= m[spec.p_index(a, b)];
    }
  return w;
}

void check_degree(const PolyRingSpec& spec, const Multidegree& d) {
  if (static_cast<int>(d.rows.size()) != spec.n || static_cast<int>(d.cols.size()) != spec.n)
    throw Error("multidegree does not match n");
  if (d.pdeg < 0 || std::any_of(d.rows.begin(), d.rows.end(), [](int r) { return r < 0; }) ||
      std::any_of(d.cols.begin(), d.cols.end(), [](int c) { return c < 0; }))
    throw Error("multidegree entries must be nonnegative");
  if (d.total() > 255) throw Error("multidegree too large");
}

}  // namespace

std::vector<Monomial> monomials(const PolyRingSpec& spec, const Multidegree& d) {
  check_degree(spec, d);
  std::vector<std::vector<int>> groups;
  std::vector<int> totals;
  for (int i = 0; i < spec.n; ++i) {
    groups.push_back({spec.x_index(i, 0), spec.x_index(i, 1)});
    totals.push_back(d.rows[i]);
  }
  for (int i = 0; i < spec.n; ++i) {
    groups.push_back({spec.y_index(0, i), spec.y_index(1, i)});
    totals.push_back(d.cols[i]);
  }
  groups.push_back({spec.p_index(0, 0), spec.p_index(0, 1), spec.p_index(1, 0), spec.p_index(1, 1)});
  totals.push_back(d.pdeg);

  std::vector<Monomial> out;
  Monomial m(spec.variable_count(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == groups.size()) {
      out.push_back(m);
      return;
    }
    compositions(m, groups[g], 0, totals[g], [&] { rec(g + 1); });
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial apply_gl2(const PolyRingSpec& spec, int s, int t, const Polynomial& f) {
  // Images of the coordinate functions under E_st:
  //   x_{i,t} -> -x_{i,s},  y_{s,i} -> y_{t,i},  p_{ab} -> [a=s] p_{tb} - [b=t] p_{as}.
  std::vector<std::vector<std::pair<int, int>>> image(spec.variable_count());
  for (int i = 0; i < spec.n; ++i) {
    image[spec.x_index(i, t)].push_back({spec.x_index(i, s), -1});
    image[spec.y_index(s, i)].push_back({spec.y_index(t, i), 1});
  }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (a == s) image[spec.p_index(a, b)].push_back({spec.p_index(t, b), 1});
      if (b == t) image[spec.p_index(a, b)].push_back({spec.p_index(a, s), -1});
    }

  Polynomial out;
  for (const auto& [m, c] : f)
    for (int v = 0; v < spec.variable_count(); ++v) {
      if (m[v] == 0) continue;
      for (const auto& [u, sign] : image[v]) {
        Monomial r = m;
        --r[v];
        ++r[u];
        out[r] += c * m[v] * sign;
      }
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool is_invariant(const PolyRingSpec& spec, const Polynomial& f) {
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      if (!apply_gl2(spec, s, t, f).empty()) return false;
  return true;
}

GeneratorSet standard_generators(int n) {
  if (n < 1) throw Error("n must be positive");
  const PolyRingSpec spec{n};
  const int nv = spec.variable_count();
  auto var = [&](std::initializer_list<int> vars) {
    Monomial m(nv, 0);
    for (int v : vars) ++m[v];
    return m;
  };
  auto unit = [&](int i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    return e;
  };

  GeneratorSet out{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial xy, xpy;
      for (int a = 0; a < 2; ++a) {
        xy[var({spec.x_index(i, a), spec.y_index(a, j)})] += 1;
        for (int b = 0; b < 2; ++b) xpy[var({spec.x_index(i, a), spec.p_index(a, b), spec.y_index(b, j)})] += 1;
      }
      const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
      out.generators.push_back({"(xy)" + ij, xy, {unit(i), unit(j), 0}});
      out.generators.push_back({"(xpy)" + ij, xpy, {unit(i), unit(j), 1}});
    }
  const std::vector<int> zero(n, 0);
  Polynomial det, tr;
  det[var({spec.p_index(0, 0), spec.p_index(1, 1)})] += 1;
  det[var({spec.p_index(0, 1), spec.p_index(1, 0)})] -= 1;
  tr[var({spec.p_index(0, 0)})] += 1;
  tr[var({spec.p_index(1, 1)})] += 1;
  out.generators.push_back({"det p", det, {zero, zero, 2}});
  out.generators.push_back({"tr p", tr, {zero, zero, 1}});
  return out;
}

GeneratorSet generators_without_det(int n) {
  GeneratorSet g = standard_generators(n);
  std::erase_if(g.generators, [](const Generator& x) { return x.name == "det p"; });
  return g;
}

namespace {

std::int64_t span_rank(const std::vector<Polynomial>& polys) {
  std::map<Monomial, Eigen::Index> index;
  for (const auto& p : polys)
    for (const auto& [m, c] : p) index.emplace(m, 0);
  Eigen::Index next = 0;
  for (auto& [m, i] : index) i = next++;
  ExactMatrix<Rational> mat = ExactMatrix<Rational>::Zero(static_cast<Eigen::Index>(polys.size()), next);
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [m, c] : polys[r]) mat(static_cast<Eigen::Index>(r), index.at(m)) = c;
  return exact_rank<Rational>(mat);
}

}  // namespace

std::int64_t invariant_dimension(const PolyRingSpec& spec, const Multidegree& d) {
  std::vector<Monomial> basis;
  for (auto& m : monomials(spec, d))
    if (torus_weight(spec, m) == std::array<int, 2>{0, 0}) basis.push_back(std::move(m));
  if (basis.empty()) return 0;
  if (basis.size() > spec.max_block) throw Error("block too large; reduce the degree bound");

  // Columns: basis monomials. Rows: output monomials of E_12 and E_21.
  std::map<std::pair<int, Monomial>, Eigen::Index> row_index;
  std::vector<std::pair<Polynomial, Polynomial>> images;
  for (const auto& m : basis) {
    const Polynomial f{{m, Rational(1)}};
    images.emplace_back(apply_gl2(spec, 0, 1, f), apply_gl2(spec, 1, 0, f));
    for (const auto& [r, c] : images.back().first) row_index.emplace(std::make_pair(0, r), 0);
    for (const auto& [r, c] : images.back().second) row_index.emplace(std::make_pair(1, r), 0);
  }
  Eigen::Index next = 0;
  for (auto& [k, i] : row_index) i = next++;
  ExactMatrix<Rational> mat = ExactMatrix<Rational>::Zero(next, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto c = static_cast<Eigen::Index>(col);
    for (const auto& [r, v] : images[col].first) mat(row_index.at({0, r}), c) = v;
    for (const auto& [r, v] : images[col].second) mat(row_index.at({1, r}), c) = v;
  }
  return exact_nullity<Rational>(mat);
}

std::int64_t subalgebra_dimension(const PolyRingSpec& spec, const GeneratorSet& gens, const Multidegree& d) {
  check_degree(spec, d);
  if (gens.n != spec.n) throw Error("generator set built for a different n");
  const auto& g = gens.generators;
  std::vector<Polynomial> products;
  Multidegree zero{std::vector<int>(spec.n, 0), std::vector<int>(spec.n, 0), 0};

  auto fits = [&](const Multidegree& m) {
    if (m.pdeg > d.pdeg) return false;
    for (int i = 0; i < spec.n; ++i)
      if (m.rows[i] > d.rows[i] || m.cols[i] > d.cols[i]) return false;
    return true;
  };
  // Multisets of generators, indices nondecreasing.
  std::function<void(std::size_t, const Multidegree&, const Polynomial&)> rec =
      [&](std::size_t from, const Multidegree& have, const Polynomial& poly) {
        if (have == d) {
          products.push_back(poly);
          if (products.size() > spec.max_block) throw Error("block too large; reduce the degree bound");
          return;
        }
        for (std::size_t i = from; i < g.size(); ++i) {
          const Multidegree next = have + g[i].degree;
          if (fits(next)) rec(i, next, multiply(poly, g[i].poly));
        }
      };
  Polynomial one{{Monomial(spec.variable_count(), 0), Rational(1)}};
  rec(0, zero, one);
  if (products.empty()) return 0;
  return span_rank(products);
}

std::vector<Multidegree> multidegrees_up_to(int n, int max_total_degree) {
  std::vector<Multidegree> out;
  std::vector<int> parts(2 * n + 1, 0);
  // Every vector of 2n + 1 nonnegative entries with sum <= max.
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx == parts.size()) {
      out.push_back({std::vector<int>(parts.begin(), parts.begin() + n),
                     std::vector<int>(parts.begin() + n, parts.begin() + 2 * n), parts[2 * n]});
      return;
    }
    for (int e = 0; e <= left; ++e) {
      parts[idx] = e;
      rec(idx + 1, left - e);
    }
    parts[idx] = 0;
  };
  rec(0, max_total_degree);
  std::stable_sort(out.begin(), out.end(), [](const Multidegree& a, const Multidegree& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  return out;
}

GeneratorReport verify_generators(const GeneratorSet& gens, int max_total_degree) {
  const PolyRingSpec spec{gens.n};
  GeneratorReport rep;
  rep.n = gens.n;
  rep.max_total_degree = max_total_degree;
  rep.generators_invariant = std::all_of(gens.generators.begin(), gens.generators.end(),
                                         [&](const Generator& g) { return is_invariant(spec, g.poly); });
  for (const auto& d : multidegrees_up_to(gens.n, max_total_degree)) {
    MultidegreeCheck c{d, invariant_dimension(spec, d), 0};
    c.generated = subalgebra_dimension(spec, gens, d);
    rep.checks.push_back(c);
    if (c.invariant != c.generated) rep.discrepancies.push_back(c);
  }
  return rep;
}

GeneratorReport verify_generators(int n, int max_total_degree) {
  if (n < 1 || n > 3) throw Error("verify_generators supports 1 <= n <= 3");
  if (max_total_degree < 0 || max_total_degree > 8) throw Error("max total degree must be in [0, 8]");
  return verify_generators(standard_generators(n), max_total_degree);
}

}  // namespace flopcalc
