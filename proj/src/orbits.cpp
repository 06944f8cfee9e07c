#include "bclab/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "bclab/curves.hpp"
#include "bclab/factor.hpp"

namespace bclab {

int OrbitGraph::out_degree(int v) const {
  int d = 0;
  for (const auto& e : edges)
    if (e.from == v) ++d;
  return d;
}

OrbitGraph finite_orbit(const FieldElement& x, const OrbitOptions& opts) {
  auto fld = x.field();
  const AlgebraicNumber& beta_alg = fld->generator();
  if (beta_alg.compare(BigRat(1)) <= 0 || beta_alg.compare(BigRat(2)) >= 0)
    throw std::invalid_argument("finite_orbit requires beta in (1,2)");
  if (x.compare(BigRat(0)) < 0 || x.compare(BigRat(1)) > 0)
    throw std::invalid_argument("finite_orbit requires x in [0,1]");

  FieldElement beta = fld->beta();
  FieldElement one = fld->one();
  FieldElement t = fld->beta_inv();
  FieldElement one_minus_t = one - t;

  OrbitGraph g;
  g.field = fld;
  std::map<std::vector<BigRat>, int> index;
  std::vector<FieldElement> verts;
  std::deque<int> queue;
  auto intern = [&](const FieldElement& v) {
    auto it = index.find(v.coords());
    if (it != index.end()) return it->second;
    if (v.height_bits() > opts.coeff_height_bits)
      throw resource_error("orbit coefficient height cap exceeded");
    int id = int(verts.size());
    index.emplace(v.coords(), id);
    verts.push_back(v);
    queue.push_back(id);
    return id;
  };
  intern(x);
  bool complete = true;
  std::vector<std::tuple<int, int, uint8_t>> raw_edges;
  while (!queue.empty()) {
    if (int(verts.size()) > opts.max_vertices) {
      complete = false;
      break;
    }
    int id = queue.front();
    queue.pop_front();
    FieldElement v = verts[id];
    if (v.compare(t) <= 0) {
      int to = intern(beta * v);
      raw_edges.emplace_back(id, to, 0);
    }
    if (v.compare(one_minus_t) >= 0) {
      int to = intern(beta * v + one - beta);
      raw_edges.emplace_back(id, to, 1);
    }
  }
  g.closed = complete && queue.empty();

  // sort ascending, remap
  std::vector<int> order(verts.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return verts[a].compare(verts[b]) < 0; });
  std::vector<int> rank(verts.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = int(i);
  g.vertices.reserve(verts.size());
  for (int id : order) g.vertices.push_back(verts[id]);
  for (auto& [f, to, lbl] : raw_edges) g.edges.push_back({rank[f], rank[to], lbl});
  std::sort(g.edges.begin(), g.edges.end(), [](const OrbitGraph::Edge& a, const OrbitGraph::Edge& b) {
    return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
  });
  g.root = rank[0];
  return g;
}

IntMatrix successor_matrix(const OrbitGraph& g) {
  if (!g.closed) throw std::invalid_argument("successor matrix requires a closed orbit");
  size_t n = g.vertices.size();
  IntMatrix s(n, std::vector<BigInt>(n, BigInt(0)));
  for (const auto& e : g.edges) s[e.from][e.to] += 1;
  return s;
}

std::vector<BigInt> generation_counts(const IntMatrix& s, int q) {
  size_t n = s.size();
  std::vector<BigInt> v(n, BigInt(1));
  for (int step = 0; step < q; ++step) {
    std::vector<BigInt> next(n, BigInt(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (s[i][j] != 0) next[i] += s[i][j] * v[j];
    v = std::move(next);
  }
  return v;
}

IntPoly characteristic_polynomial(const IntMatrix& a) {
  const int n = int(a.size());
  // Berkowitz: division-free, exact over Z.
  std::vector<BigInt> c{BigInt(1)};  // descending coefficients, starts as poly "1"
  for (int r = 1; r <= n; ++r) {
    // principal r x r block; q = (1, -a_rr, -R C, -R A C, ..., -R A^{r-2} C)
    std::vector<BigInt> q(r + 1, BigInt(0));
    q[0] = 1;
    q[1] = -a[r - 1][r - 1];
    if (r >= 2) {
      std::vector<BigInt> u(r - 1);
      for (int i = 0; i < r - 1; ++i) u[i] = a[i][r - 1];  // column C
      for (int k = 2; k <= r; ++k) {
        BigInt dot = 0;
        for (int i = 0; i < r - 1; ++i) dot += a[r - 1][i] * u[i];  // R . u
        q[k] = -dot;
        if (k < r) {
          std::vector<BigInt> nu(r - 1, BigInt(0));
          for (int i = 0; i < r - 1; ++i) {
            if (u[i] == 0) continue;
            for (int j = 0; j < r - 1; ++j) nu[j] += a[j][i] * u[i];
          }
          u = std::move(nu);
        }
      }
    }
    std::vector<BigInt> nc(r + 1, BigInt(0));
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j < int(c.size()); ++j)
        if (i - j >= 0 && i - j <= r) nc[i] += q[i - j] * c[j];
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());  // ascending
  return IntPoly(std::move(c));
}

RatInterval spectral_radius(const IntMatrix& a, const BigRat& width) {
  const size_t n = a.size();
  BigInt max_row_sum = 0;
  for (const auto& row : a) {
    BigInt s = 0;
    for (const auto& v : row) s += v;
    max_row_sum = std::max(max_row_sum, s);
  }
  IntPoly chi = characteristic_polynomial(a);
  BigRat hi(max_row_sum + 1);
  auto roots = isolate_real_roots(chi, BigRat(-hi), hi);
  if (roots.empty()) throw std::logic_error("characteristic polynomial without real roots");
  RatInterval top = roots.back();
  (void)n;
  if (top.lo == top.hi) return top;
  // chi is monic, so a rational spectral radius is an integer; pin it exactly
  for (BigInt k = BigInt(boost::multiprecision::numerator(top.lo) /
                         boost::multiprecision::denominator(top.lo));
       BigRat(k) <= top.hi + 1; ++k) {
    if (BigRat(k) >= top.lo && BigRat(k) <= top.hi && chi.sign_at(BigRat(k)) == 0)
      return RatInterval(BigRat(k), BigRat(k));
  }
  return refine_root(chi.squarefree_part(), top, width);
}

namespace {
DimBounds dim_from_bounds(int m, double beta_lo, double beta_hi, double rho_lo, double rho_hi) {
  // numerator log m - log rho in [log m - log rho_hi, log m - log rho_lo]
  double num_lo = std::log(double(m)) - std::log(rho_hi);
  double num_hi = std::log(double(m)) - std::log(rho_lo);
  double den_lo = std::log(beta_lo), den_hi = std::log(beta_hi);
  DimBounds d;
  double pad = 1e-12;
  d.lo = num_lo / den_hi - pad;
  d.hi = num_hi / den_lo + pad;
  return d;
}
}  // namespace

DimBounds local_dimension(int m, const RatInterval& beta, const RatInterval& rho) {
  if (rho.lo < 1 || BigRat(m) < rho.hi)
    throw std::invalid_argument("local_dimension requires 1 <= rho <= m");
  return dim_from_bounds(m, to_double(beta.lo), to_double(beta.hi), to_double(rho.lo),
                         to_double(rho.hi));
}

DimBounds local_dimension(int m, const AlgebraicNumber& beta, const RatInterval& rho) {
  return local_dimension(m, beta.refined_interval(BigRat(1, BigInt(1) << 40)), rho);
}

MarkovPartition markov_partition(const OrbitGraph& g, const std::vector<BigRat>& probs) {
  if (!g.closed) throw std::invalid_argument("markov_partition requires a closed orbit");
  if (probs.size() != 2 || probs[0] <= 0 || probs[1] <= 0 || probs[0] + probs[1] != 1)
    throw std::invalid_argument("probs must be two positive rationals summing to 1");
  auto fld = g.field;
  FieldElement zero = fld->zero();
  FieldElement one = fld->one();
  FieldElement beta = fld->beta();
  FieldElement t = fld->beta_inv();
  FieldElement one_minus_t = one - t;

  MarkovPartition mp;
  std::vector<FieldElement> cuts = g.vertices;
  bool has0 = false, has1 = false;
  for (const auto& v : cuts) {
    if (v == zero) has0 = true;
    if (v == one) has1 = true;
  }
  if (!has0) cuts.push_back(zero);
  if (!has1) cuts.push_back(one);
  std::sort(cuts.begin(), cuts.end(), [](const FieldElement& a, const FieldElement& b) {
    return a.compare(b) < 0;
  });
  mp.cut_points = cuts;
  const size_t n = cuts.size() - 1;  // intervals J_1..J_n

  // m_{kl} = sum { p_i : J_l inside g_i(J_k) }, images clipped to branch domains
  mp.matrix.assign(n, std::vector<BigRat>(n, BigRat(0)));
  for (size_t k = 0; k < n; ++k) {
    const FieldElement& a = cuts[k];
    const FieldElement& b = cuts[k + 1];
    // g0 on [a, min(b,t)] if a < t
    if (a.compare(t) < 0) {
      FieldElement ub = b.compare(t) <= 0 ? b : t;
      FieldElement img_lo = beta * a;
      FieldElement img_hi = beta * ub;
      for (size_t l = 0; l < n; ++l)
        if (cuts[l].compare(img_lo) >= 0 && cuts[l + 1].compare(img_hi) <= 0)
          mp.matrix[k][l] += probs[0];
    }
    // g1 on [max(a,1-t), b] if b > 1-t
    if (b.compare(one_minus_t) > 0) {
      FieldElement lb = a.compare(one_minus_t) >= 0 ? a : one_minus_t;
      FieldElement img_lo = beta * lb + one - beta;
      FieldElement img_hi = beta * b + one - beta;
      for (size_t l = 0; l < n; ++l)
        if (cuts[l].compare(img_lo) >= 0 && cuts[l + 1].compare(img_hi) <= 0)
          mp.matrix[k][l] += probs[1];
    }
  }
  // column sums must be 1 (left eigenvector (1,...,1))
  for (size_t l = 0; l < n; ++l) {
    BigRat s = 0;
    for (size_t k = 0; k < n; ++k) s += mp.matrix[k][l];
    if (s != 1)
      throw std::logic_error("markov_partition: column sum != 1 (partition not Markov)");
  }
  // irreducibility via reachability on the nonzero pattern
  {
    auto reach = [&](bool forward) {
      std::vector<bool> vis(n, false);
      std::deque<size_t> q{0};
      vis[0] = true;
      while (!q.empty()) {
        size_t u = q.front();
        q.pop_front();
        for (size_t v = 0; v < n; ++v) {
          bool edge = forward ? mp.matrix[u][v] != 0 : mp.matrix[v][u] != 0;
          if (edge && !vis[v]) {
            vis[v] = true;
            q.push_back(v);
          }
        }
      }
      return vis;
    };
    auto f = reach(true), r = reach(false);
    for (size_t i = 0; i < n; ++i)
      if (!f[i] || !r[i])
        throw std::logic_error("markov_partition: matrix not irreducible");
  }
  // Solve M w = w, sum w = 1 exactly: rows of (M - I) plus the sum row.
  {
    size_t rows = n + 1;
    std::vector<std::vector<BigRat>> aug(rows, std::vector<BigRat>(n + 1, BigRat(0)));
    for (size_t k = 0; k < n; ++k) {
      for (size_t l = 0; l < n; ++l) aug[k][l] = mp.matrix[k][l];
      aug[k][k] -= 1;
      aug[k][n] = 0;
    }
    for (size_t l = 0; l < n; ++l) aug[n][l] = 1;
    aug[n][n] = 1;
    // Gaussian elimination
    size_t row = 0;
    std::vector<int> pivot_of_col(n, -1);
    for (size_t col = 0; col < n && row < rows; ++col) {
      size_t sel = row;
      while (sel < rows && aug[sel][col] == 0) ++sel;
      if (sel == rows) continue;
      std::swap(aug[sel], aug[row]);
      BigRat inv = BigRat(1) / aug[row][col];
      for (size_t j = col; j <= n; ++j) aug[row][j] *= inv;
      for (size_t r2 = 0; r2 < rows; ++r2) {
        if (r2 == row || aug[r2][col] == 0) continue;
        BigRat f = aug[r2][col];
        for (size_t j = col; j <= n; ++j) aug[r2][j] -= f * aug[row][j];
      }
      pivot_of_col[col] = int(row);
      ++row;
    }
    mp.stationary.assign(n, BigRat(0));
    for (size_t col = 0; col < n; ++col) {
      if (pivot_of_col[col] < 0) throw std::logic_error("stationary vector not unique");
      mp.stationary[col] = aug[pivot_of_col[col]][n];
    }
    for (const auto& w : mp.stationary)
      if (w < 0) throw std::logic_error("negative stationary entry");
  }
  return mp;
}

FibonacciMixture fibonacci_mixture(int k, int max_vertices) {
  if (k < 2) throw std::invalid_argument("fibonacci_mixture requires k >= 2");
  if (4 * k - 3 > max_vertices) throw resource_error("fibonacci_mixture vertex cap exceeded");
  std::vector<BitWord> words{word_from_string("100"), word_from_string("011")};
  for (int kk = 3; kk <= k; ++kk) {
    // alternate: to odd kk append 00 and replace terminal 1 by 011,
    //            to even kk append 11 and replace terminal 0 by 100
    bool odd = (kk % 2) == 1;
    uint8_t suffix_letter = odd ? 0 : 1;
    uint8_t replaced = odd ? 1 : 0;
    std::vector<BitWord> next;
    for (const auto& w : words) {
      BitWord ext = w;
      ext.push_back(suffix_letter);
      ext.push_back(suffix_letter);
      next.push_back(ext);
      if (w.back() == replaced) {
        BitWord rep(w.begin(), w.end() - 1);
        rep.push_back(replaced ? 0 : 1);
        rep.push_back(replaced);
        rep.push_back(replaced);
        next.push_back(rep);
      }
    }
    words = std::move(next);
  }
  auto tau = named_parameter(NamedKind::multinacci, 2);
  auto fld = NumberField::make(tau);
  FieldElement x = cycle_fixed_point(words[0], fld);
  OrbitOptions opts;
  opts.max_vertices = max_vertices;
  FibonacciMixture out{std::move(words), finite_orbit(x, opts)};
  return out;
}

MixtureInfo mixture_info(const OrbitGraph& g) {
  if (!g.closed) throw std::invalid_argument("mixture_info requires a closed orbit");
  if (g.root < 0) throw std::invalid_argument("rootless mixture");
  IntMatrix s = successor_matrix(g);
  const size_t n = s.size();
  // period = length of the shortest cycle through the root
  std::vector<BigInt> row(n, BigInt(0));
  row[g.root] = 1;
  int period = 0;
  for (int q = 1; q <= int(2 * n + 2); ++q) {
    std::vector<BigInt> next(n, BigInt(0));
    for (size_t i = 0; i < n; ++i) {
      if (row[i] == 0) continue;
      for (size_t j = 0; j < n; ++j) next[j] += row[i] * s[i][j];
    }
    row = std::move(next);
    if (row[g.root] != 0) {
      period = q;
      break;
    }
  }
  if (period == 0) throw std::invalid_argument("root does not lie on a cycle");
  MixtureInfo m;
  m.period = period;
  m.cycles = row[g.root];
  return m;
}

MixtureInfo concatenate_mixtures(const MixtureInfo& a, const MixtureInfo& b) {
  if (a.period <= 0 || b.period <= 0) throw std::invalid_argument("rootless mixture");
  return MixtureInfo{a.period + b.period, a.cycles * b.cycles};
}

RatInterval mixture_rate(const MixtureInfo& m, const BigRat& width) {
  // root > 0 of x^p - cycles
  std::vector<BigInt> c(m.period + 1, BigInt(0));
  c[0] = -m.cycles;
  c[m.period] = 1;
  IntPoly p(std::move(c));
  auto roots = isolate_real_roots(p, BigRat(0), BigRat(m.cycles + 1));
  if (roots.size() != 1) throw std::logic_error("mixture rate root not unique");
  return refine_root(p.squarefree_part(), roots[0], width);
}

AlgebraicNumber min_growth_bound(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("min_growth_bound requires m, n >= 1");
  // positive solution > 1 of x^{m+n} - x^n - x^m = 0
  std::vector<BigInt> c(m + n + 1, BigInt(0));
  c[m + n] = 1;
  c[n] -= 1;
  c[m] -= 1;
  IntPoly p(std::move(c));
  auto roots = isolate_real_roots(p, BigRat(1), BigRat(21, 10));
  if (roots.empty()) throw std::logic_error("min_growth_bound: no root in (1, 2.1)");
  return AlgebraicNumber::select_root(p, roots.back());
}

const char* to_string(CriticalVerdict v) {
  switch (v) {
    case CriticalVerdict::supercritical: return "supercritical";
    case CriticalVerdict::subcritical: return "subcritical";
    case CriticalVerdict::undecided: return "undecided";
  }
  return "?";
}

CriticalVerdict supercritical_test(const RatInterval& rho, const AlgebraicNumber& s) {
  BigRat w = std::max(rho.width(), BigRat(1, BigInt(1) << 20));
  for (int round = 0; round < 40; ++round) {
    RatInterval si = s.refined_interval(w);
    if (rho.lo > 2 * si.hi) return CriticalVerdict::supercritical;
    if (rho.hi < 2 * si.lo) return CriticalVerdict::subcritical;
    if (w < rho.width() / 4) break;  // rho enclosure itself straddles 2s
    w /= 16;
  }
  return CriticalVerdict::undecided;
}

}  // namespace bclab
