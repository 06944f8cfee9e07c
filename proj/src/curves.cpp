#include "bclab/curves.hpp"

#include <algorithm>
#include <sstream>

#include "bclab/factor.hpp"

namespace bclab {

namespace {

FieldElement eval_poly(const IntPoly& p, const FieldElement& x) {
  auto fld = x.field();
  FieldElement r = fld->zero();
  for (size_t i = p.coeffs().size(); i-- > 0;) r = r * x + BigRat(p.coeffs()[i]);
  return r;
}

}  // namespace

BigRat AddressCurve::eval(const BigRat& t) const { return num.eval(t) / den.eval(t); }

FieldElement AddressCurve::eval(const FieldElement& t) const {
  return eval_poly(num, t) * eval_poly(den, t).inverse();
}

AddressCurve rational_form(const BitSeq& b) {
  const BitWord& u = b.preperiod();
  const BitWord& w = b.period();
  const size_t q = u.size(), p = w.size();
  // y_b(t) = (1-t) * [U1(t) (1 - t^p) + t^q W1(t)] / (1 - t^p),
  // U1 = sum u_k t^{k-1}, W1 = sum w_j t^{j-1}
  std::vector<BigInt> u1(std::max<size_t>(q, 1), BigInt(0));
  for (size_t k = 0; k < q; ++k) u1[k] = int(u[k]);
  std::vector<BigInt> w1(p, BigInt(0));
  for (size_t j = 0; j < p; ++j) w1[j] = int(w[j]);
  IntPoly U1{std::vector<BigInt>(u1)};
  IntPoly W1{std::vector<BigInt>(w1)};
  IntPoly one_m_tp = IntPoly::constant(1) - IntPoly::monomial(unsigned(p));
  IntPoly one_m_t = IntPoly::constant(1) - IntPoly::x();
  IntPoly num = one_m_t * (U1 * one_m_tp + IntPoly::monomial(unsigned(q)) * W1);
  IntPoly den = one_m_tp;
  IntPoly g = IntPoly::gcd(num, den);
  if (g.degree() > 0 || g.lc() != 1) {
    num = IntPoly::divide_exact(num, g);
    den = IntPoly::divide_exact(den, g);
  }
  if (den.sign_at(BigRat(1, 2)) < 0) {
    num = -num;
    den = -den;
  }
  return AddressCurve{b, num, den};
}

BigRat curve_eval(const BitSeq& b, const BigRat& t) {
  if (t <= 0 || t >= 1) throw std::invalid_argument("curve_eval requires t in (0,1)");
  return rational_form(b).eval(t);
}

AlgebraicNumber t_star(const BitSeq& b) {
  if (!is_itinerary(b)) throw std::invalid_argument("t_star requires an itinerary");
  BitSeq kn = kneading_of(b);
  if (kn.value() > BigRat(1, 2)) kn = kn.complemented();
  // y_kn(t) = 1 - t on (1/2, 1)
  AddressCurve c = rational_form(kn);
  IntPoly P = c.num - (IntPoly::constant(1) - IntPoly::x()) * c.den;
  auto roots = isolate_real_roots(P, BigRat(1, 2), BigRat(1));
  if (roots.size() != 1)
    throw std::logic_error("t_star: expected exactly one root in (1/2,1), found " +
                           std::to_string(roots.size()));
  return AlgebraicNumber::select_root(P, roots[0]);
}

namespace {

// Certified fixed-point evaluation of S(t) = sum_{k>=1} b_{k+1} t^k at the
// dyadic point t = a / 2^E, scale 2^P, floor/ceil directed rounding.  The
// optional tail adds an upper/lower bound for t^N / (1-t).
struct TruncatedSeries {
  const BitWord& prefix;
  int E, P;

  std::pair<BigInt, BigInt> bounds(const BigInt& a, bool with_tail) const {
    const size_t N = prefix.size();
    const BigInt ceil_bias = (BigInt(1) << E) - 1;
    BigInt rlo = 0, rhi = 0;
    for (size_t k = N - 1; k >= 1; --k) {
      rlo = (rlo * a) >> E;
      rhi = (rhi * a + ceil_bias) >> E;
      if (prefix[k]) {
        rlo += BigInt(1) << P;
        rhi += BigInt(1) << P;
      }
    }
    rlo = (rlo * a) >> E;
    rhi = (rhi * a + ceil_bias) >> E;
    if (with_tail) {
      BigInt tn_lo = BigInt(1) << P, tn_hi = BigInt(1) << P;
      for (size_t i = 0; i < N; ++i) {
        tn_lo = (tn_lo * a) >> E;
        tn_hi = (tn_hi * a + ceil_bias) >> E;
      }
      BigInt denom = (BigInt(1) << E) - a;  // (1-t) * 2^E
      rlo += (tn_lo << E) / denom;
      rhi += ((tn_hi << E) + denom - 1) / denom;
    }
    return {rlo, rhi};
  }

  // -1: certainly < 1, +1: certainly >= 1, 0: undecided at this scale
  int compare_one(const BigInt& a, bool with_tail) const {
    auto [lo, hi] = bounds(a, with_tail);
    BigInt one = BigInt(1) << P;
    if (hi < one) return -1;
    if (lo >= one) return 1;
    return 0;
  }
};

}  // namespace

RatInterval t_star_interval(const BitWord& prefix, int precision_bits) {
  if (prefix.empty() || prefix[0] != 0)
    throw std::invalid_argument("kneading prefix must start with 0");
  if (precision_bits < 1 || precision_bits > 256)
    throw std::invalid_argument("precision must be between 1 and 256 bits");
  const int E = precision_bits + 6;
  const int P = precision_bits + 48;
  TruncatedSeries series{prefix, E, P};

  // integer bisection of a / 2^E over [2^{E-1}, 2^E - 2^{E-30}]
  const BigInt lo0 = BigInt(1) << (E - 1);
  const BigInt hi0 = (BigInt(1) << E) - (BigInt(1) << std::max(0, E - 30));
  if (series.compare_one(hi0, false) < 0 || series.compare_one(lo0, false) >= 0)
    throw std::invalid_argument("prefix too short to bracket the root");

  // upper root: S(t) = 1 without the tail (S <= full series).  When the
  // value sits within the 2^-P rounding slack of 1, the root is within far
  // less than one 2^-E step of m, so +-1 ulp keeps the bracket certified.
  BigInt ulo = lo0, uhi = hi0;
  while (uhi - ulo > 1) {
    BigInt m = (ulo + uhi) / 2;
    int c = series.compare_one(m, false);
    if (c == 0) {
      uhi = m + 1;
      break;
    }
    (c < 0 ? ulo : uhi) = m;
  }
  // lower root: S(t) + tail = 1 (an upper bound of the full series)
  BigInt llo = lo0, lhi = hi0;
  if (series.compare_one(lo0, true) >= 0) {
    llo = lo0 - 1;
  } else {
    while (lhi - llo > 1) {
      BigInt m = (llo + lhi) / 2;
      int c = series.compare_one(m, true);
      if (c == 0) {
        llo = m - 1;
        break;
      }
      (c < 0 ? llo : lhi) = m;
    }
  }
  RatInterval out(BigRat(llo, BigInt(1) << E), BigRat(uhi, BigInt(1) << E));
  if (out.width() > BigRat(1, BigInt(1) << precision_bits))
    throw std::invalid_argument(
        "requested precision beyond what this prefix certifies; supply a longer prefix");
  return out;
}

RatInterval komornik_loreti(int precision_bits) {
  if (precision_bits < 1 || precision_bits > 256)
    throw std::invalid_argument("precision must be between 1 and 256 bits");
  // tail t^N < (0.57)^N; pick N with headroom
  int N = int(precision_bits * 1.3) + 24;
  return t_star_interval(morse_thue_prefix(N), precision_bits);
}

namespace {

IntersectionReport build_report(std::string label_b, std::string label_c, AlgebraicNumber s,
                                const IntPoly& num_b, const IntPoly& den_b) {
  IntersectionReport r;
  r.label_b = std::move(label_b);
  r.label_c = std::move(label_c);
  r.beta = s.reciprocal();
  r.s = std::move(s);
  auto fld = NumberField::make(r.beta);
  FieldElement t = fld->beta_inv();
  r.z = eval_poly(num_b, t) * eval_poly(den_b, t).inverse();
  int lo_cmp = (r.z - (fld->one() - t)).sign();  // z - (1 - t)
  int hi_cmp = (t - r.z).sign();                 // t - z
  r.inside_overlap = lo_cmp >= 0 && hi_cmp >= 0;
  r.on_boundary = lo_cmp == 0 || hi_cmp == 0;
  r.number_class = classify(r.beta);
  return r;
}

}  // namespace

std::vector<IntersectionReport> curve_intersection(const BitSeq& b, const BitSeq& c,
                                                   const RatInterval& range) {
  if (b == c) throw std::invalid_argument("identical addresses have identical curves");
  AddressCurve cb = rational_form(b);
  AddressCurve cc = rational_form(c);
  IntPoly F = cb.num * cc.den - cc.num * cb.den;
  if (F.is_zero()) throw std::invalid_argument("identical curves");
  BigRat lo = std::max(range.lo, BigRat(1, 2));
  BigRat hi = std::min(range.hi, BigRat(1));
  std::vector<IntersectionReport> out;
  auto roots = isolate_real_roots(F, lo, hi);
  // closed upper endpoint (unless it is 1, which is discarded)
  if (hi < 1 && F.sign_at(hi) == 0) roots.push_back(RatInterval(hi, hi));
  for (const auto& iv : roots) {
    AlgebraicNumber s = AlgebraicNumber::select_root(F, iv);
    out.push_back(build_report(b.to_string(), c.to_string(), std::move(s), cb.num, cb.den));
  }
  std::sort(out.begin(), out.end(),
            [](const IntersectionReport& x, const IntersectionReport& y) {
              return x.s.compare(y.s) < 0;
            });
  return out;
}

FieldElement cycle_fixed_point(const BitWord& w, const std::shared_ptr<const NumberField>& fld) {
  if (w.empty()) throw std::invalid_argument("cycle word must be nonempty");
  const size_t n = w.size();
  FieldElement beta = fld->beta();
  FieldElement W = fld->zero();
  for (size_t i = 0; i < n; ++i) W = W * beta + fld->from_rational(BigRat(int(w[i])));
  FieldElement num = (beta + BigRat(-1)) * W;
  FieldElement den = fld->zero();
  {
    FieldElement bn = fld->one();
    for (size_t i = 0; i < n; ++i) bn = bn * beta;
    den = bn + BigRat(-1);
  }
  return num * den.inverse();
}

std::pair<IntPoly, IntPoly> cycle_fixed_point_symbolic(const BitWord& w) {
  AddressCurve c = rational_form(BitSeq::periodic(w));
  return {c.num, c.den};
}

std::string NetworkConstraint::to_string() const {
  std::string t = target == NetworkTarget::self ? "self" : "reflection";
  return word_to_string(path) + "," + word_to_string(cycle) + "," + t;
}

NetworkConstraint NetworkConstraint::parse(const std::string& s) {
  auto c1 = s.find(',');
  auto c2 = s.find(',', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("network constraint must be path,cycle,target");
  NetworkConstraint nc;
  nc.path = word_from_string(s.substr(0, c1));
  nc.cycle = word_from_string(s.substr(c1 + 1, c2 - c1 - 1));
  std::string t = s.substr(c2 + 1);
  if (t == "self")
    nc.target = NetworkTarget::self;
  else if (t == "reflection")
    nc.target = NetworkTarget::reflection;
  else
    throw std::invalid_argument("target must be self or reflection");
  if (nc.cycle.empty()) throw std::invalid_argument("cycle word must be nonempty");
  return nc;
}

namespace {

// Symbolic rational function of beta, numerator/denominator integer polys.
struct RatFunc {
  IntPoly num, den;
};

// x such that g_cycle(x) = x (self) or = 1 - x (reflection).
RatFunc constraint_return_point(const NetworkConstraint& c) {
  const size_t n = c.cycle.size();
  IntPoly W;  // sum beta^{n-i} w_i
  for (size_t i = 1; i <= n; ++i)
    if (c.cycle[i - 1]) W = W + IntPoly::monomial(unsigned(n - i));
  IntPoly bm1 = IntPoly::x() - IntPoly::constant(1);
  if (c.target == NetworkTarget::self)
    return {bm1 * W, IntPoly::monomial(unsigned(n)) - IntPoly::constant(1)};
  return {IntPoly::constant(1) + bm1 * W, IntPoly::monomial(unsigned(n)) + IntPoly::constant(1)};
}

// y = (x + (beta-1) * sum beta^{m-j} v_j) / beta^m
RatFunc constraint_y(const NetworkConstraint& c) {
  RatFunc x = constraint_return_point(c);
  const size_t m = c.path.size();
  IntPoly V;
  for (size_t j = 1; j <= m; ++j)
    if (c.path[j - 1]) V = V + IntPoly::monomial(unsigned(m - j));
  IntPoly bm1 = IntPoly::x() - IntPoly::constant(1);
  IntPoly num = x.num + x.den * bm1 * V;
  IntPoly den = x.den * IntPoly::monomial(unsigned(m));
  return {num, den};
}

uint8_t first_branch_letter(const NetworkConstraint& c) {
  return c.path.empty() ? c.cycle[0] : c.path[0];
}

FieldElement eval_ratfunc(const RatFunc& r, const FieldElement& beta) {
  return eval_poly(r.num, beta) * eval_poly(r.den, beta).inverse();
}

// Walk y through the constraint; returns false if some branch application is
// inadmissible (point outside the branch domain).  On success verifies the
// closing relation exactly.
bool walk_constraint(const NetworkConstraint& c, const FieldElement& y, const FieldElement& t,
                     bool* admissible) {
  auto fld = y.field();
  FieldElement beta = fld->beta();
  FieldElement one = fld->one();
  FieldElement point = y;
  *admissible = true;
  auto step = [&](uint8_t letter, const FieldElement& x) {
    if (letter == 0) {
      if (x.compare(t) > 0) *admissible = false;  // g0 needs x <= t
      return beta * x;
    }
    if ((x - (one - t)).sign() < 0) *admissible = false;  // g1 needs x >= 1-t
    return beta * x + one - beta;
  };
  for (uint8_t letter : c.path) point = step(letter, point);
  FieldElement x_entry = point;
  for (uint8_t letter : c.cycle) point = step(letter, point);
  FieldElement expect =
      c.target == NetworkTarget::self ? x_entry : one - x_entry;
  return point == expect;
}

}  // namespace

std::vector<IntersectionReport> network_parameter(const std::vector<NetworkConstraint>& cs) {
  if (cs.size() < 2)
    throw std::invalid_argument(
        "underdetermined: a single cycle fixes y given beta, not beta; give >= 2 constraints");
  bool differ = false;
  for (size_t i = 0; i < cs.size() && !differ; ++i)
    for (size_t j = i + 1; j < cs.size() && !differ; ++j)
      if (first_branch_letter(cs[i]) != first_branch_letter(cs[j])) differ = true;
  if (!differ)
    throw std::invalid_argument("inconsistent constraints: the two branch first letters must differ");

  std::vector<RatFunc> ys(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) ys[i] = constraint_y(cs[i]);
  IntPoly G = ys[0].num * ys[1].den - ys[1].num * ys[0].den;
  if (G.is_zero()) throw std::invalid_argument("inconsistent constraints: identical conditions");

  std::vector<IntersectionReport> out;
  auto roots = isolate_real_roots(G, BigRat(1), BigRat(2));
  for (const auto& iv : roots) {
    AlgebraicNumber beta_alg = AlgebraicNumber::select_root(G, iv);
    auto fld = NumberField::make(beta_alg);
    FieldElement beta = fld->beta();
    FieldElement y = eval_ratfunc(ys[0], beta);
    bool consistent = true;
    for (size_t i = 1; i < cs.size() && consistent; ++i)
      consistent = (eval_ratfunc(ys[i], beta) == y);
    if (!consistent) continue;
    FieldElement t = fld->beta_inv();
    bool realizable = true;
    for (const auto& c : cs) {
      bool admissible = true;
      if (!walk_constraint(c, y, t, &admissible)) {
        consistent = false;
        break;
      }
      realizable = realizable && admissible;
    }
    if (!consistent) continue;

    IntersectionReport r;
    r.label_b = cs[0].to_string();
    r.label_c = cs[1].to_string();
    r.beta = beta_alg;
    r.s = beta_alg.reciprocal();
    r.z = y;
    FieldElement one = fld->one();
    int lo_cmp = (y - (one - t)).sign();
    int hi_cmp = (t - y).sign();
    r.inside_overlap = lo_cmp >= 0 && hi_cmp >= 0;
    r.on_boundary = lo_cmp == 0 || hi_cmp == 0;
    r.realizable = realizable;
    r.number_class = classify(r.beta);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const IntersectionReport& a, const IntersectionReport& b) {
    return a.s.compare(b.s) < 0;
  });
  return out;
}

UnivoqueResult is_univoque(const BitSeq& b) {
  if (b.value() >= BigRat(1, 2)) throw std::invalid_argument("is_univoque requires b < 1/2");
  UnivoqueResult r;
  if (!is_itinerary(b) || !is_kneading(b) || b.purely_periodic()) return r;
  r.univoque = true;
  r.beta = t_star(b).reciprocal();
  return r;
}

}  // namespace bclab
