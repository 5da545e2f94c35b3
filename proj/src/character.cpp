#include "flopcalc/character.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace flopcalc {

namespace {

using BigInt = boost::multiprecision::cpp_int;

void check_shape(const Weight& w, const Shape& shape) {
  if (static_cast<int>(w.size()) != shape.total())
    throw Error("weight " + to_string(w) + " does not match group shape");
}

// Gelfand-Tsetlin branching GL(r) -> GL(r-1): the torus weight's r-th
// coordinate is |lambda| - |mu| for every mu interlacing lambda.
void branch(const Weight& lambda, Weight& expo, std::map<Weight, std::int64_t>& out) {
  const int r = static_cast<int>(lambda.size());
  if (r == 1) {
    expo[0] = lambda[0];
    out[expo] += 1;
    return;
  }
  const int total = std::accumulate(lambda.begin(), lambda.end(), 0);
  Weight mu(r - 1);
  auto choose = [&](auto&& self, int i) -> void {
    if (i == r - 1) {
      expo[r - 1] = total - std::accumulate(mu.begin(), mu.end(), 0);
      branch(mu, expo, out);
      return;
    }
    for (int v = lambda[i + 1]; v <= lambda[i]; ++v) {
      mu[i] = v;
      self(self, i + 1);
    }
  };
  choose(choose, 0);
}

std::map<Weight, std::int64_t> gl_torus_weights(const Weight& w) {
  std::map<Weight, std::int64_t> out;
  if (w.empty()) {
    out[{}] = 1;
    return out;
  }
  // det-power normalization: enumerate for a partition, then untwist.
  const int shift = w.back();
  Weight lambda = w;
  for (int& x : lambda) x -= shift;
  Weight expo(w.size(), 0);
  std::map<Weight, std::int64_t> raw;
  branch(lambda, expo, raw);
  for (const auto& [v, c] : raw) {
    Weight u = v;
    for (int& x : u) x += shift;
    out[u] += c;
  }
  return out;
}

std::map<Weight, std::int64_t> convolve(const std::map<Weight, std::int64_t>& a,
                                        const std::map<Weight, std::int64_t>& b) {
  std::map<Weight, std::int64_t> out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      Weight s(wa.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = wa[i] + wb[i];
      out[s] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Basis of torus weights (with repetition) of a genuine character.
std::vector<Weight> basis_weights(const Character& c) {
  if (!c.is_genuine()) throw Error("operation requires a genuine representation");
  std::vector<Weight> basis;
  for (const auto& [w, cnt] : torus_weights(c).counts)
    for (std::int64_t i = 0; i < cnt; ++i) basis.push_back(w);
  return basis;
}

}  // namespace

int Shape::total() const { return std::accumulate(ranks.begin(), ranks.end(), 0); }

int Shape::offset(int factor) const {
  return std::accumulate(ranks.begin(), ranks.begin() + factor, 0);
}

bool is_dominant(const Weight& w) { return std::is_sorted(w.rbegin(), w.rend()); }

bool is_dominant(const Weight& w, const Shape& shape) {
  if (static_cast<int>(w.size()) != shape.total()) return false;
  for (int f = 0; f < shape.factors(); ++f)
    if (!is_dominant(block(w, shape, f))) return false;
  return true;
}

Weight block(const Weight& w, const Shape& shape, int factor) {
  const auto begin = w.begin() + shape.offset(factor);
  return Weight(begin, begin + shape.ranks[factor]);
}

Weight concat(const Weight& a, const Weight& b) {
  Weight out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::int64_t TorusMultiset::cardinality() const {
  std::int64_t n = 0;
  for (const auto& [w, c] : counts) n += c;
  return n;
}

void TorusMultiset::add(const Weight& w, std::int64_t c) {
  check_shape(w, shape);
  auto& slot = counts[w];
  slot += c;
  if (slot == 0) counts.erase(w);
}

Character::Character(Shape shape) : shape_(std::move(shape)) {
  for (int r : shape_.ranks)
    if (r <= 0) throw Error("group ranks must be positive");
}

Character Character::trivial(const Shape& shape) {
  return irreducible(shape, Weight(shape.total(), 0));
}

Character Character::irreducible(const Shape& shape, Weight w) {
  Character c(shape);
  c.add(w, 1);
  return c;
}

std::int64_t Character::multiplicity(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void Character::add(const Weight& w, std::int64_t m) {
  if (!is_dominant(w, shape_)) throw Error("not a dominant weight: " + to_string(w));
  auto& slot = terms_[w];
  slot += m;
  if (slot == 0) terms_.erase(w);
}

Character& Character::operator+=(const Character& o) {
  if (!(o.shape_ == shape_)) throw Error("character shape mismatch");
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  if (!(o.shape_ == shape_)) throw Error("character shape mismatch");
  for (const auto& [w, m] : o.terms_) add(w, -m);
  return *this;
}

Character Character::operator+(const Character& o) const {
  Character r = *this;
  r += o;
  return r;
}

Character Character::operator-(const Character& o) const {
  Character r = *this;
  r -= o;
  return r;
}

Character Character::operator*(std::int64_t s) const {
  Character r(shape_);
  if (s == 0) return r;
  for (const auto& [w, m] : terms_) r.terms_[w] = m * s;
  return r;
}

bool Character::is_genuine() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::int64_t Character::dimension() const {
  std::int64_t d = 0;
  for (const auto& [w, m] : terms_) d += m * schur_dim(w, shape_);
  return d;
}

std::int64_t schur_dim(const Weight& w) {
  BigInt num = 1, den = 1;
  const int k = static_cast<int>(w.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      num *= (w[i] - w[j] + j - i);
      den *= (j - i);
    }
  return static_cast<std::int64_t>(num / den);
}

std::int64_t schur_dim(const Weight& w, const Shape& shape) {
  check_shape(w, shape);
  std::int64_t d = 1;
  for (int f = 0; f < shape.factors(); ++f) d *= schur_dim(block(w, shape, f));
  return d;
}

TorusMultiset torus_weights(const Weight& w) {
  return torus_weights(w, Shape::gl(static_cast<int>(w.size())));
}

TorusMultiset torus_weights(const Weight& w, const Shape& shape) {
  if (!is_dominant(w, shape)) throw Error("not a dominant weight: " + to_string(w));
  std::map<Weight, std::int64_t> acc{{Weight{}, 1}};
  for (int f = 0; f < shape.factors(); ++f) {
    std::map<Weight, std::int64_t> next;
    const auto factor = gl_torus_weights(block(w, shape, f));
    for (const auto& [a, ca] : acc)
      for (const auto& [b, cb] : factor) next[concat(a, b)] += ca * cb;
    acc = std::move(next);
  }
  return TorusMultiset{shape, std::move(acc)};
}

TorusMultiset torus_weights(const Character& c) {
  TorusMultiset out{c.shape(), {}};
  for (const auto& [w, m] : c.terms())
    for (const auto& [v, cnt] : torus_weights(w, c.shape()).counts) out.add(v, m * cnt);
  return out;
}

Character decompose(const TorusMultiset& tw) {
  Character out(tw.shape);
  auto rest = tw.counts;
  std::erase_if(rest, [](const auto& kv) { return kv.second == 0; });
  while (!rest.empty()) {
    // The lexicographically greatest weight is the highest weight of some
    // constituent.
    const auto [top, mult] = *rest.rbegin();
    if (!is_dominant(top, tw.shape))
      throw Error("torus multiset is not symmetric: maximal weight " + to_string(top) +
                  " is not dominant");
    out.add(top, mult);
    for (const auto& [v, c] : torus_weights(top, tw.shape).counts) {
      auto& slot = rest[v];
      slot -= mult * c;
      if (slot == 0) rest.erase(v);
    }
  }
  return out;
}

Character tensor(const Character& a, const Character& b) {
  if (!(a.shape() == b.shape())) throw Error("tensor: rank mismatch");
  return decompose(
      TorusMultiset{a.shape(), convolve(torus_weights(a).counts, torus_weights(b).counts)});
}

Character outer(const Character& a, const Character& b) {
  Shape shape = a.shape();
  shape.ranks.insert(shape.ranks.end(), b.shape().ranks.begin(), b.shape().ranks.end());
  Character out(shape);
  for (const auto& [wa, ma] : a.terms())
    for (const auto& [wb, mb] : b.terms()) out.add(concat(wa, wb), ma * mb);
  return out;
}

Character dualize(const Character& c) {
  Character out(c.shape());
  const Shape& shape = c.shape();
  for (const auto& [w, m] : c.terms()) {
    Weight d(w.size());
    for (int f = 0; f < shape.factors(); ++f) {
      const int off = shape.offset(f), r = shape.ranks[f];
      for (int i = 0; i < r; ++i) d[off + i] = -w[off + r - 1 - i];
    }
    out.add(d, m);
  }
  return out;
}

Character exterior_power(int m, const Character& c) {
  if (m < 0) throw Error("exterior power degree must be nonnegative");
  const auto basis = basis_weights(c);
  const Weight zero(c.shape().total(), 0);
  // dp[j] = weights of j-element subsets of the basis seen so far.
  std::vector<std::map<Weight, std::int64_t>> dp(m + 1);
  dp[0][zero] = 1;
  for (const auto& v : basis) {
    for (int j = m; j >= 1; --j) {
      for (const auto& [w, cnt] : dp[j - 1]) {
        Weight s(w.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = w[i] + v[i];
        dp[j][s] += cnt;
      }
    }
  }
  return decompose(TorusMultiset{c.shape(), dp[m]});
}

Character symmetric_power(int m, const Character& c) {
  if (m < 0) throw Error("symmetric power degree must be nonnegative");
  const auto basis = basis_weights(c);
  const Weight zero(c.shape().total(), 0);
  std::vector<std::map<Weight, std::int64_t>> dp(m + 1);
  dp[0][zero] = 1;
  for (const auto& v : basis) {
    for (int j = 1; j <= m; ++j) {
      for (const auto& [w, cnt] : dp[j - 1]) {
        Weight s(w.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = w[i] + v[i];
        dp[j][s] += cnt;
      }
    }
  }
  return decompose(TorusMultiset{c.shape(), dp[m]});
}

Character restrict_to(const Character& c, const Shape& finer) {
  if (finer.total() != c.shape().total()) throw Error("restrict_to: total rank mismatch");
  // Each coarse block must be a union of consecutive fine blocks.
  int fine = 0;
  for (int r : c.shape().ranks) {
    int acc = 0;
    while (acc < r && fine < finer.factors()) acc += finer.ranks[fine++];
    if (acc != r) throw Error("restrict_to: shape does not refine");
  }
  TorusMultiset tw = torus_weights(c);
  tw.shape = finer;
  return decompose(tw);
}

Weight conjugate_partition(const Weight& lambda, int length) {
  Weight out(length, 0);
  for (int part : lambda) {
    if (part > length) throw Error("conjugate partition does not fit");
    for (int j = 0; j < part; ++j) ++out[j];
  }
  return out;
}

std::vector<Weight> partitions_in_box(int m, int max_rows, int max_part) {
  std::vector<Weight> out;
  Weight cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      Weight w = cur;
      w.resize(max_rows, 0);
      out.push_back(std::move(w));
      return;
    }
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  if (m >= 0) rec(rec, m, max_part);
  return out;
}

std::vector<std::pair<Weight, Weight>> cauchy_exterior(int m, int k, int d) {
  std::vector<std::pair<Weight, Weight>> out;
  for (auto& lambda : partitions_in_box(m, k, d))
    out.emplace_back(lambda, conjugate_partition(lambda, d));
  return out;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

}  // namespace flopcalc
