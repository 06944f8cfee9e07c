#include "bclab/roots.hpp"

#include <algorithm>

#include "bclab/factor.hpp"

namespace bclab {

SturmChain::SturmChain(const IntPoly& p) {
  IntPoly p0 = p.squarefree_part();
  if (p0.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
  chain_.push_back(p0);
  if (p0.degree() == 0) return;
  chain_.push_back(p0.derivative().primitive_part());
  while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = IntPoly::pseudo_rem(a, b);
    if (r.is_zero()) break;
    // lc(b)^(delta+1) scales the true remainder; flip so the chain keeps the
    // sign sequence of the exact Sturm chain (-rem).
    int delta = a.degree() - b.degree();
    bool multiplier_neg = (b.lc() < 0) && ((delta + 1) % 2 == 1);
    IntPoly next = r.primitive_part();
    if (r.lc() < 0) next = -next;  // primitive_part flipped sign; restore
    // next now equals r scaled by a positive rational
    if (!multiplier_neg) next = -next;
    chain_.push_back(next);
  }
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}
}  // namespace

int SturmChain::variations_at(const BigRat& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(q.sign_at_pos_inf());
  return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(q.sign_at_neg_inf());
  return count_variations(signs);
}

int SturmChain::count_half_open(const BigRat& a, const BigRat& b) const {
  if (a >= b) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_open(const BigRat& a, const BigRat& b) const {
  if (a >= b) return 0;
  int n = count_half_open(a, b);
  if (chain_[0].sign_at(b) == 0) --n;
  return n;
}

std::vector<RatInterval> isolate_real_roots(const IntPoly& p, const BigRat& lo,
                                            const BigRat& hi) {
  if (p.is_zero()) throw std::invalid_argument("root isolation of zero polynomial");
  std::vector<RatInterval> out;
  if (p.degree() == 0 || lo >= hi) return out;
  SturmChain st(p);
  const IntPoly& sf = st.squarefree();

  struct Seg {
    BigRat a, b;
    int count;
  };
  std::vector<Seg> work;
  int total = st.count_open(lo, hi);
  if (total == 0) return out;
  work.push_back({lo, hi, total});
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      // Narrow until the endpoints are not roots and the interval carries a
      // sign change (or the root is hit exactly).
      BigRat a = s.a, b = s.b;
      while (true) {
        if (sf.sign_at(a) != 0 && sf.sign_at(b) != 0 && sf.sign_at(a) != sf.sign_at(b)) {
          out.emplace_back(a, b);
          break;
        }
        BigRat m = (a + b) / 2;
        if (sf.sign_at(m) == 0) {
          out.emplace_back(m, m);
          break;
        }
        if (st.count_open(a, m) == 1)
          b = m;
        else
          a = m;
      }
      continue;
    }
    BigRat m = (s.a + s.b) / 2;
    bool mid_root = sf.sign_at(m) == 0;
    if (mid_root) out.emplace_back(m, m);
    int left = st.count_open(s.a, m);
    int right = st.count_open(m, s.b);
    work.push_back({s.a, m, left});
    work.push_back({m, s.b, right});
  }
  std::sort(out.begin(), out.end(),
            [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
  return out;
}

std::vector<RatInterval> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root isolation of zero polynomial");
  if (p.degree() == 0) return {};
  // Cauchy bound: all roots have |x| < 1 + max|a_i|/|a_n|.
  BigRat bound = 1 + BigRat(p.height(), abs(p.lc()));
  return isolate_real_roots(p, -bound, bound);
}

RatInterval refine_root(const IntPoly& sf, RatInterval iv, const BigRat& width) {
  if (iv.lo == iv.hi) return iv;
  int slo = sf.sign_at(iv.lo);
  int shi = sf.sign_at(iv.hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::invalid_argument("refine_root: interval does not carry a sign change");
  while (iv.hi - iv.lo > width) {
    BigRat m = iv.mid();
    int sm = sf.sign_at(m);
    if (sm == 0) return RatInterval(m, m);
    if (sm == slo)
      iv.lo = m;
    else
      iv.hi = m;
  }
  return iv;
}

AlgebraicNumber::AlgebraicNumber()
    : minpoly_(IntPoly::x()), iv_(BigRat(0), BigRat(0)) {}

AlgebraicNumber::AlgebraicNumber(IntPoly minpoly, RatInterval iv)
    : minpoly_(minpoly.primitive_part()), iv_(std::move(iv)) {
  if (minpoly_.degree() < 1) throw std::invalid_argument("minimal polynomial must be nonconstant");
  SturmChain st(minpoly_);
  int n = st.count_half_open(iv_.lo, iv_.hi) + (minpoly_.sign_at(iv_.lo) == 0 ? 1 : 0);
  if (n != 1) throw std::invalid_argument("interval does not isolate exactly one root");
}

AlgebraicNumber AlgebraicNumber::from_rational(const BigRat& q) {
  std::vector<BigInt> c{-numerator(q), denominator(q)};
  return AlgebraicNumber(IntPoly(std::move(c)), RatInterval(q, q));
}

AlgebraicNumber AlgebraicNumber::select_root(const IntPoly& p, RatInterval iv) {
  auto factors = factor(p);
  // Refine within the squarefree part until exactly one irreducible factor
  // has a root in the interval.
  IntPoly sf = p.squarefree_part();
  if (iv.lo != iv.hi) {
    // ensure the interval carries a sign change of sf
    SturmChain st(sf);
    int cnt = st.count_open(iv.lo, iv.hi) + (sf.sign_at(iv.hi) == 0 ? 1 : 0) +
              (sf.sign_at(iv.lo) == 0 ? 1 : 0);
    if (cnt != 1) throw std::invalid_argument("select_root: interval not isolating");
    while (sf.sign_at(iv.lo) == 0 || sf.sign_at(iv.hi) == 0 ||
           sf.sign_at(iv.lo) == sf.sign_at(iv.hi)) {
      BigRat m = iv.mid();
      if (sf.sign_at(m) == 0) {
        iv = RatInterval(m, m);
        break;
      }
      if (st.count_open(iv.lo, m) == 1)
        iv.hi = m;
      else
        iv.lo = m;
    }
  }
  for (const auto& [f, mult] : factors) {
    (void)mult;
    if (iv.lo == iv.hi) {
      if (f.sign_at(iv.lo) == 0) return AlgebraicNumber(f, iv);
      continue;
    }
    SturmChain stf(f);
    if (stf.count_open(iv.lo, iv.hi) == 1 && f.sign_at(iv.lo) != 0 && f.sign_at(iv.hi) != 0)
      return AlgebraicNumber(f, iv);
  }
  // Interval endpoints may still touch roots of other factors; shrink harder.
  RatInterval cur = iv;
  for (int round = 0; round < 512; ++round) {
    cur = refine_root(sf, cur, cur.width() / 4);
    for (const auto& [f, mult] : factors) {
      (void)mult;
      SturmChain stf(f);
      if (cur.lo != cur.hi && stf.count_open(cur.lo, cur.hi) == 1 &&
          f.sign_at(cur.lo) != 0 && f.sign_at(cur.hi) != 0)
        return AlgebraicNumber(f, cur);
    }
  }
  throw precision_error("select_root: could not attribute root to an irreducible factor");
}

BigRat AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("not a rational algebraic number");
  return BigRat(-minpoly_[0], minpoly_[1]);
}

RatInterval AlgebraicNumber::refined_interval(const BigRat& w) const {
  if (is_rational()) {
    BigRat v = rational_value();
    return RatInterval(v, v);
  }
  return refine_root(minpoly_, iv_, w);
}

AlgebraicNumber AlgebraicNumber::refined(const BigRat& w) const {
  AlgebraicNumber a = *this;
  a.iv_ = refined_interval(w);
  return a;
}

double AlgebraicNumber::to_double() const {
  if (approx_valid_) return approx_;
  RatInterval iv = refined_interval(BigRat(1, BigInt(1) << 70));
  approx_ = bclab::to_double(iv.mid());
  approx_valid_ = true;
  return approx_;
}

int AlgebraicNumber::compare(const BigRat& q) const {
  if (is_rational()) {
    BigRat v = rational_value();
    return v < q ? -1 : (v > q ? 1 : 0);
  }
  if (minpoly_.sign_at(q) == 0) {
    // q is a root of the (irreducible, degree >= 2) minpoly -- impossible.
    throw std::logic_error("rational root of irreducible polynomial of degree >= 2");
  }
  RatInterval iv = iv_;
  while (iv.contains(q)) iv = refine_root(minpoly_, iv, iv.width() / 4);
  return iv.hi < q ? -1 : 1;
}

int AlgebraicNumber::compare(const AlgebraicNumber& o) const {
  if (o.is_rational()) return compare(o.rational_value());
  if (is_rational()) return -o.compare(rational_value());
  // Equal iff same minimal polynomial and same selected root.
  if (minpoly_ == o.minpoly_) {
    RatInterval a = iv_, b = o.iv_;
    BigRat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo <= hi) {
      SturmChain st(minpoly_);
      int inboth = st.count_half_open(lo, hi) + (minpoly_.sign_at(lo) == 0 ? 1 : 0);
      if (inboth == 1) {
        // the single root of the overlap is each side's root iff it lies in
        // both isolating intervals, which it does by construction
        return 0;
      }
    }
  }
  RatInterval a = iv_, b = o.iv_;
  while (!(a.hi < b.lo || b.hi < a.lo)) {
    a = refine_root(minpoly_, a, a.width() / 4);
    b = refine_root(o.minpoly_, b, b.width() / 4);
  }
  return a.hi < b.lo ? -1 : 1;
}

AlgebraicNumber AlgebraicNumber::reciprocal() const {
  if (is_rational()) return from_rational(BigRat(1) / rational_value());
  RatInterval iv = iv_;
  while (!(iv.lo > 0) && !(iv.hi < 0)) iv = refine_root(minpoly_, iv, iv.width() / 4);
  IntPoly rev = minpoly_.reversed().primitive_part();
  return AlgebraicNumber(rev, RatInterval(BigRat(1) / iv.hi, BigRat(1) / iv.lo));
}

AlgebraicNumber named_parameter(NamedKind kind, int n) {
  if (n < 2) throw std::invalid_argument("named parameter requires n >= 2");
  IntPoly p;
  if (kind == NamedKind::multinacci) {
    std::vector<BigInt> c(n + 1, BigInt(-1));
    c[n] = 1;
    p = IntPoly(std::move(c));
  } else {
    // x^{n+1} - 2 x^n + x - 1
    std::vector<BigInt> c(n + 2, BigInt(0));
    c[n + 1] = 1;
    c[n] = -2;
    c[1] = 1;
    c[0] = -1;
    p = IntPoly(std::move(c));
  }
  auto roots = isolate_real_roots(p, BigRat(1), BigRat(2));
  if (roots.size() != 1) throw std::logic_error("named parameter root not unique in (1,2)");
  return AlgebraicNumber::select_root(p, roots[0]);
}

}  // namespace bclab
