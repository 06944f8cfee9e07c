#include "bclab/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace bclab {
namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for small primes, dense int64 coefficient vectors.
// ---------------------------------------------------------------------------

using PPoly = std::vector<int64_t>;

PPoly pp_trim(PPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

PPoly pp_from(const IntPoly& f, int64_t p) {
  PPoly a(f.coeffs().size());
  for (size_t i = 0; i < a.size(); ++i) {
    BigInt r = f.coeffs()[i] % p;
    if (r < 0) r += p;
    a[i] = r.convert_to<int64_t>();
  }
  return pp_trim(std::move(a));
}

PPoly pp_mul(const PPoly& a, const PPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return pp_trim(std::move(c));
}

int64_t inv_mod(int64_t a, int64_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return (t % p + p) % p;
}

// a mod b, b nonzero
PPoly pp_rem(PPoly a, const PPoly& b, int64_t p) {
  int64_t binv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    int64_t f = a.back() * binv % p;
    size_t k = a.size() - b.size();
    if (f)
      for (size_t i = 0; i < b.size(); ++i) a[k + i] = ((a[k + i] - f * b[i]) % p + p) % p;
    a = pp_trim(std::move(a));
    if (!a.empty() && a.size() >= b.size() && a.back() == 0) a = pp_trim(std::move(a));
    if (a.size() >= b.size() && a.back() != 0) continue;
  }
  return a;
}

PPoly pp_monic(PPoly a, int64_t p) {
  if (a.empty()) return a;
  int64_t f = inv_mod(a.back(), p);
  for (auto& v : a) v = v * f % p;
  return a;
}

PPoly pp_gcd(PPoly a, PPoly b, int64_t p) {
  while (!b.empty()) {
    PPoly r = pp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return pp_monic(std::move(a), p);
}

PPoly pp_deriv(const PPoly& a, int64_t p) {
  if (a.size() <= 1) return {};
  PPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = int64_t(i) % p * a[i] % p;
  return pp_trim(std::move(d));
}

PPoly pp_powmod_x(int64_t e, const PPoly& mod, int64_t p) {
  // x^e mod `mod` by square and multiply
  PPoly result{1};
  PPoly base{0, 1};
  base = pp_rem(base, mod, p);
  while (e) {
    if (e & 1) result = pp_rem(pp_mul(result, base, p), mod, p);
    base = pp_rem(pp_mul(base, base, p), mod, p);
    e >>= 1;
  }
  return result;
}

// Berlekamp factorization of a monic squarefree polynomial mod a small prime.
std::vector<PPoly> berlekamp(const PPoly& f, int64_t p) {
  int n = int(f.size()) - 1;
  if (n <= 1) return {f};
  // rows of Q: x^{p i} mod f
  std::vector<PPoly> rows(n);
  rows[0] = {1};
  PPoly xp = pp_powmod_x(p, f, p);
  PPoly cur{1};
  for (int i = 1; i < n; ++i) {
    cur = pp_rem(pp_mul(cur, xp, p), f, p);
    rows[i] = cur;
  }
  // B = Q - I, stored column-major for elimination on (Q - I)^T v = 0; we
  // need the nullspace of (Q^T - I) acting on coefficient vectors: v Q = v.
  // Use standard Berlekamp: nullspace of (Q - I) transposed acting from the
  // left; equivalently solve v (Q - I) = 0 with v as row vectors.
  std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < int(rows[i].size()); ++j) m[i][j] = rows[i][j];
    m[i][i] = ((m[i][i] - 1) % p + p) % p;
  }
  // nullspace of m^T … we want row vectors v with v*M = 0 where M[i][j] as
  // built has row i = coeffs of x^{p i); transpose so it becomes M^T x = 0.
  std::vector<std::vector<int64_t>> a(n, std::vector<int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[j][i];
  // Gaussian elimination, track pivots
  std::vector<int> pivot_col(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int sel = -1;
    for (int row = rank; row < n; ++row)
      if (a[row][col]) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[sel], a[rank]);
    int64_t inv = inv_mod(a[rank][col], p);
    for (int j = 0; j < n; ++j) a[rank][j] = a[rank][j] * inv % p;
    for (int row = 0; row < n; ++row)
      if (row != rank && a[row][col]) {
        int64_t f2 = a[row][col];
        for (int j = 0; j < n; ++j) a[row][j] = ((a[row][j] - f2 * a[rank][j]) % p + p) % p;
      }
    pivot_col[rank] = col;
    ++rank;
  }
  int r = n - rank;  // number of irreducible factors
  if (r == 1) return {f};
  // basis of nullspace
  std::vector<PPoly> basis;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    std::vector<int64_t> v(n, 0);
    v[col] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = ((-a[i][col]) % p + p) % p;
    basis.push_back(pp_trim(std::move(v)));
  }
  std::vector<PPoly> factors{f};
  for (const auto& v : basis) {
    if (int(factors.size()) >= r) break;
    std::vector<PPoly> next;
    for (auto& g : factors) {
      if (int(g.size()) - 1 <= 1) {
        next.push_back(std::move(g));
        continue;
      }
      std::vector<PPoly> pieces;
      PPoly rest = g;
      for (int64_t s = 0; s < p && int(rest.size()) - 1 > 0; ++s) {
        PPoly vs = v;
        if (vs.empty()) vs = {0};
        vs[0] = ((vs[0] - s) % p + p) % p;
        PPoly d = pp_gcd(rest, pp_trim(std::move(vs)), p);
        if (int(d.size()) - 1 > 0 && d.size() < rest.size()) {
          pieces.push_back(d);
          // rest /= d
          PPoly q;
          {
            PPoly num = rest;
            q.assign(num.size() - d.size() + 1, 0);
            int64_t dinv = inv_mod(d.back(), p);
            while (num.size() >= d.size()) {
              int64_t fq = num.back() * dinv % p;
              size_t k = num.size() - d.size();
              q[k] = fq;
              for (size_t i = 0; i < d.size(); ++i)
                num[k + i] = ((num[k + i] - fq * d[i]) % p + p) % p;
              num = pp_trim(std::move(num));
            }
          }
          rest = pp_trim(std::move(q));
        }
      }
      if (int(rest.size()) - 1 > 0) pieces.push_back(rest);
      for (auto& piece : pieces) next.push_back(pp_monic(std::move(piece), p));
    }
    factors = std::move(next);
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting (linear, all factors at once) and recombination.
// ---------------------------------------------------------------------------

BigInt sym_mod(BigInt v, const BigInt& q) {
  v %= q;
  if (v < 0) v += q;
  if (2 * v > q) v -= q;
  return v;
}

IntPoly sym_poly(const IntPoly& f, const BigInt& q) {
  std::vector<BigInt> c(f.coeffs());
  for (auto& v : c) v = sym_mod(v, q);
  return IntPoly(std::move(c));
}

// Factor a primitive squarefree polynomial of degree >= 2.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const int n = f.degree();
  const BigInt b = f.lc();
  // pick a prime: f stays squarefree mod p and p does not divide lc
  static const int64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29,
                                   31, 37, 41, 43, 47, 53, 59, 61, 67};
  int64_t best_p = 0;
  std::vector<PPoly> best_factors;
  int tried = 0;
  for (int64_t p : primes) {
    if (b % p == 0) continue;
    PPoly fp = pp_monic(pp_from(f, p), p);
    PPoly d = pp_deriv(fp, p);
    if (d.empty()) continue;
    PPoly g = pp_gcd(fp, d, p);
    if (int(g.size()) - 1 != 0) continue;  // not squarefree mod p
    auto factors = berlekamp(fp, p);
    if (best_p == 0 || factors.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(factors);
    }
    if (++tried >= 3 || best_factors.size() == 1) break;
  }
  if (best_p == 0) throw std::logic_error("no usable small prime for factorization");
  if (best_factors.size() == 1) return {f.primitive_part()};
  const int64_t p = best_p;
  std::sort(best_factors.begin(), best_factors.end(),
            [](const PPoly& x, const PPoly& y) { return x.size() < y.size(); });

  // Mignotte-style bound on coefficients of lc-adjusted factors.
  BigInt bound = abs(b) * f.height() * BigInt(n + 1);
  bound <<= (n + 1);
  BigInt pk = p;
  int K = 1;
  while (pk <= 2 * bound) {
    pk *= p;
    ++K;
  }

  // Lift f = b * prod g_i from mod p to mod p^K, linear steps.
  const size_t s = best_factors.size();
  std::vector<IntPoly> g(s);
  for (size_t i = 0; i < s; ++i) {
    std::vector<BigInt> c(best_factors[i].size());
    for (size_t j = 0; j < c.size(); ++j) c[j] = best_factors[i][j];
    g[i] = IntPoly(std::move(c));
  }
  // precompute w_i = (b * prod_{j!=i} g_j)^{-1} mod g_i over F_p
  std::vector<PPoly> w(s);
  for (size_t i = 0; i < s; ++i) {
    PPoly prod{(b % p + p).convert_to<int64_t>() % p};
    for (size_t j = 0; j < s; ++j)
      if (j != i) prod = pp_rem(pp_mul(prod, best_factors[j], p), best_factors[i], p);
    // invert prod mod g_i via extended Euclid
    PPoly r0 = best_factors[i], r1 = prod, t0 = {}, t1 = {1};
    while (!r1.empty() && int(r1.size()) - 1 > 0) {
      // r0 = q r1 + r2
      PPoly q;
      {
        PPoly num = r0;
        int64_t dinv = inv_mod(r1.back(), p);
        q.assign(std::max<size_t>(1, num.size() - r1.size() + 1), 0);
        while (num.size() >= r1.size()) {
          int64_t fq = num.back() * dinv % p;
          size_t k = num.size() - r1.size();
          q[k] = fq;
          for (size_t ii = 0; ii < r1.size(); ++ii)
            num[k + ii] = ((num[k + ii] - fq * r1[ii]) % p + p) % p;
          num = pp_trim(std::move(num));
        }
        r0 = std::move(num);
      }
      q = pp_trim(std::move(q));
      PPoly t2 = t0;
      PPoly qt = pp_mul(q, t1, p);
      t2.resize(std::max(t2.size(), qt.size()), 0);
      for (size_t ii = 0; ii < qt.size(); ++ii) t2[ii] = ((t2[ii] - qt[ii]) % p + p) % p;
      t0 = std::move(t1);
      t1 = pp_trim(std::move(t2));
      std::swap(r0, r1);
    }
    if (r1.empty()) throw std::logic_error("hensel: factors not coprime");
    int64_t c = inv_mod(r1[0], p);
    for (auto& v : t1) v = v * c % p;
    w[i] = pp_rem(t1, best_factors[i], p);
  }
  BigInt q = p;
  for (int step = 1; step < K; ++step) {
    IntPoly prod = IntPoly::constant(b);
    for (const auto& gi : g) prod = prod * gi;
    IntPoly E = f - prod;
    // e = (E / q) mod p
    PPoly e(E.coeffs().size());
    for (size_t j = 0; j < e.size(); ++j) {
      BigInt v = (E.coeffs()[j] / q) % p;
      if (v < 0) v += p;
      e[j] = v.convert_to<int64_t>();
    }
    e = pp_trim(std::move(e));
    for (size_t i = 0; i < s; ++i) {
      PPoly di = pp_rem(pp_mul(e, w[i], p), best_factors[i], p);
      std::vector<BigInt> c(g[i].coeffs());
      c.resize(std::max(c.size(), di.size()), BigInt(0));
      for (size_t j = 0; j < di.size(); ++j) c[j] += q * di[j];
      g[i] = IntPoly(std::move(c));
    }
    q *= p;
  }

  // Recombination: try subsets of ascending cardinality.
  std::vector<IntPoly> out;
  std::vector<IntPoly> pool = std::move(g);
  IntPoly rest = f;
  size_t d = 1;
  while (2 * d <= pool.size()) {
    bool found = false;
    std::vector<size_t> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      IntPoly cand = IntPoly::constant(rest.lc());
      for (size_t i : idx) cand = cand * pool[i];
      cand = sym_poly(cand, pk).primitive_part();
      if (IntPoly::divides(cand, rest)) {
        out.push_back(cand);
        rest = IntPoly::divide_exact(rest, cand).primitive_part();
        std::vector<IntPoly> next_pool;
        for (size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end())
            next_pool.push_back(std::move(pool[i]));
        pool = std::move(next_pool);
        found = true;
        break;
      }
      // next subset
      int i = int(d) - 1;
      while (i >= 0 && idx[i] == pool.size() - d + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++d;
  }
  if (rest.degree() > 0) out.push_back(rest.primitive_part());
  return out;
}

}  // namespace

Factorization factor_full(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor of zero polynomial");
  if (p.degree() > kFactorDegreeCap)
    throw resource_error("factorization degree cap (" + std::to_string(kFactorDegreeCap) +
                         ") exceeded: degree " + std::to_string(p.degree()));
  Factorization out;
  BigInt c = p.content();
  if (p.lc() < 0) c = -c;
  out.content = c;
  if (p.degree() == 0) return out;
  IntPoly f = p.primitive_part();

  // Yun squarefree decomposition: f = prod a_i^i.
  std::vector<IntPoly> square_free;  // a_1, a_2, ...
  {
    IntPoly fp = f.derivative();
    IntPoly g = IntPoly::gcd(f, fp);
    IntPoly ci = IntPoly::divide_exact(f, g).primitive_part();
    IntPoly di = (IntPoly::divide_exact(fp, g) - ci.derivative());
    while (ci.degree() > 0) {
      IntPoly ai = IntPoly::gcd(ci, di);
      square_free.push_back(ai);
      ci = IntPoly::divide_exact(ci, ai).primitive_part();
      di = IntPoly::divide_exact(di, ai) - ci.derivative();
    }
  }
  for (size_t i = 0; i < square_free.size(); ++i) {
    const IntPoly& a = square_free[i];
    if (a.degree() < 1) continue;
    std::vector<IntPoly> irr =
        a.degree() == 1 ? std::vector<IntPoly>{a.primitive_part()} : zassenhaus(a);
    for (auto& fac : irr) out.factors.emplace_back(std::move(fac), int(i + 1));
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    if (x.first.coeffs() != y.first.coeffs()) return x.first.coeffs() < y.first.coeffs();
    return x.second < y.second;
  });
  return out;
}

std::vector<std::pair<IntPoly, int>> factor(const IntPoly& p) { return factor_full(p).factors; }

bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor(p);
  return f.size() == 1 && f[0].second == 1 && f[0].first.degree() == p.degree();
}

}  // namespace bclab
