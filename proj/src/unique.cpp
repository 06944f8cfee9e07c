#include "bclab/unique.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <list>
#include <map>
#include <set>

namespace bclab {

HoleSystem holes(const BitSeq& b, int depth) {
  if (!is_kneading(b) || b.value() >= BigRat(1, 2))
    throw std::invalid_argument("holes requires a kneading sequence b < 1/2");
  if (depth < 0 || depth > 40) throw std::invalid_argument("holes depth must be in [0, 40]");
  HoleSystem hs{b, depth, {}, {}};
  const BigRat bv = b.value();
  const BigRat cv = 1 - bv;
  // word w (as integer value + length) is bad iff .overline{w} in [b, 1-b];
  // hole words are those with no bad suffix.  Prepending preserves suffix
  // goodness, so level m is built from level m-1 by prepending one letter and
  // testing only the full word.
  struct Node {
    BigInt val;  // integer value of the word
  };
  std::vector<Node> level;  // words of current length with no bad suffix
  level.push_back({BigInt(0)});
  level.push_back({BigInt(1)});
  auto bad = [&](const BigInt& val, int len) {
    BigInt den = (BigInt(1) << len) - 1;
    BigRat fp(val, den);
    return bv <= fp && fp <= cv;
  };
  std::vector<Node> keep;
  for (int m = 1; m <= depth; ++m) {
    keep.clear();
    size_t count = 0;
    for (const auto& node : level) {
      if (bad(node.val, m)) continue;
      ++count;
      keep.push_back(node);
      // emit the word
      BitWord w(m);
      for (int i = 0; i < m; ++i) w[m - 1 - i] = uint8_t((node.val >> i) & 1);
      hs.holes.push_back(std::move(w));
    }
    hs.counts.push_back(count);
    if (m == depth) break;
    // prepend letters for the next level
    level.clear();
    level.reserve(keep.size() * 2);
    BigInt top = BigInt(1) << m;
    for (const auto& node : keep) {
      level.push_back({node.val});        // prepend 0
      level.push_back({node.val + top});  // prepend 1
    }
  }
  return hs;
}

IntMatrix transfer_matrix(const BitSeq& b) {
  if (!is_kneading(b) || b.value() >= BigRat(1, 2))
    throw std::invalid_argument("transfer_matrix requires a kneading sequence b < 1/2");
  const BigRat bv = b.value();
  const BigRat cv = 1 - bv;
  std::set<BigRat> cutset{BigRat(0), BigRat(1, 2), BigRat(1)};
  for (const auto& s : doubling_orbit(b)) cutset.insert(s.value());
  for (const auto& s : doubling_orbit(b.complemented())) cutset.insert(s.value());
  std::vector<BigRat> cuts(cutset.begin(), cutset.end());
  // survivor intervals: not inside [b, 1-b]
  std::vector<std::pair<BigRat, BigRat>> iv;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] >= bv && cuts[i + 1] <= cv) continue;
    iv.emplace_back(cuts[i], cuts[i + 1]);
  }
  const size_t n = iv.size();
  IntMatrix a(n, std::vector<BigInt>(n, BigInt(0)));
  for (size_t i = 0; i < n; ++i) {
    BigRat lo = iv[i].first, hi = iv[i].second;
    BigRat img_lo, img_hi;
    if (hi <= BigRat(1, 2)) {
      img_lo = 2 * lo;
      img_hi = 2 * hi;
    } else {
      img_lo = 2 * lo - 1;
      img_hi = 2 * hi - 1;
    }
    for (size_t l = 0; l < n; ++l)
      if (iv[l].first >= img_lo && iv[l].second <= img_hi) a[i][l] = 1;
  }
  return a;
}

RatInterval hole_growth_rate(const BitSeq& b, const BigRat& width) {
  return spectral_radius(transfer_matrix(b), width);
}

namespace {
DimBounds log_ratio(const RatInterval& rho, const RatInterval& beta) {
  DimBounds d;
  double pad = 1e-12;
  d.lo = std::log(to_double(rho.lo)) / std::log(to_double(beta.hi)) - pad;
  d.hi = std::log(to_double(rho.hi)) / std::log(to_double(beta.lo)) + pad;
  return d;
}
}  // namespace

DimBounds dimension(const BitSeq& b, const AlgebraicNumber& t) {
  RatInterval rho = hole_growth_rate(b);
  AlgebraicNumber beta = t.reciprocal();
  return log_ratio(rho, beta.refined_interval(BigRat(1, BigInt(1) << 40)));
}

DimBounds dimension(const BitSeq& b, const BigRat& t) {
  RatInterval rho = hole_growth_rate(b);
  BigRat beta = 1 / t;
  return log_ratio(rho, RatInterval(beta, beta));
}

bool is_isolated(const BitSeq& b) {
  if (!is_kneading(b)) throw std::invalid_argument("is_isolated requires a kneading sequence");
  if (!b.purely_periodic()) return false;
  // the primitive period may be any rotation-completion: test every
  // even-length repetition w(1-w) that reproduces b
  const BitWord& p = b.period();
  // candidate full periods: p itself or p repeated twice (primitive period of
  // w(1-w) can be the half when w = (1-w) rotated; handle both)
  for (int rep = 1; rep <= 2; ++rep) {
    BitWord q;
    for (int r = 0; r < rep; ++r) q.insert(q.end(), p.begin(), p.end());
    if (q.size() % 2 != 0) continue;
    size_t half = q.size() / 2;
    bool match = true;
    for (size_t i = 0; i < half && match; ++i) match = (q[i] == uint8_t(1 - q[half + i]));
    if (match) return true;
  }
  return false;
}

bool membership_At(const BitSeq& c, const BigRat& t) {
  if (!is_itinerary(c)) throw std::invalid_argument("membership_At requires an itinerary");
  return t_star(c).compare(t) > 0;
}

bool membership_At(const BitSeq& c, const AlgebraicNumber& t) {
  if (!is_itinerary(c)) throw std::invalid_argument("membership_At requires an itinerary");
  return t_star(c).compare(t) > 0;
}

const char* to_string(AddressCardinality c) {
  return c == AddressCardinality::two ? "two" : "countable";
}

namespace {

FieldElement eval_poly_fe(const IntPoly& p, const FieldElement& x) {
  FieldElement r = x.field()->zero();
  for (size_t i = p.coeffs().size(); i-- > 0;) r = r * x + BigRat(p.coeffs()[i]);
  return r;
}

// Orbits of g0(y), g1(y) must stay clear of the open overlap; a return to y
// itself is admissible only in the countable case (y sits on the periodic
// cycle).  Returns false to drop the candidate; *certified reports whether
// both orbits closed within the cap.
bool no_return_check(const FieldElement& y, bool allow_y_return, int max_vertices,
                     bool* certified) {
  auto fld = y.field();
  FieldElement beta = fld->beta();
  FieldElement one = fld->one();
  FieldElement t = fld->beta_inv();
  FieldElement one_minus_t = one - t;
  *certified = true;
  std::map<std::vector<BigRat>, int> seen;
  std::deque<FieldElement> queue;
  auto push = [&](const FieldElement& v) {
    if (seen.emplace(v.coords(), 1).second) queue.push_back(v);
  };
  push(beta * y);             // g0(y)
  push(beta * y + one - beta);  // g1(y)
  while (!queue.empty()) {
    if (int(seen.size()) > max_vertices) {
      *certified = false;
      return true;  // no violation found within the horizon
    }
    FieldElement v = queue.front();
    queue.pop_front();
    bool is_y = (v == y);
    if (is_y && !allow_y_return) return false;
    if (!is_y) {
      bool inside = (v - one_minus_t).sign() > 0 && (t - v).sign() > 0;
      if (inside) return false;
    }
    if (v.compare(t) <= 0) push(beta * v);
    if ((v - one_minus_t).sign() >= 0) push(beta * v + one - beta);
  }
  return true;
}

struct ScanCandidate {
  std::string label_b, label_c;
  IntPoly poly;            // vanishing at the parameter
  RatInterval root;        // isolating interval
  const AddressCurve* yc;  // curve whose value enters the y formula
  bool direct;             // direct intersection (y on the curve) vs f0-image
  AddressCardinality card;
};

void emit_reports(std::vector<ScanCandidate>& cands, int max_vertices,
                  std::vector<TwoAddressReport>& out) {
  for (auto& cand : cands) {
    AlgebraicNumber t_alg = AlgebraicNumber::select_root(cand.poly, cand.root);
    AlgebraicNumber beta_alg = t_alg.reciprocal();
    auto fld = NumberField::make(beta_alg);
    FieldElement tf = fld->beta_inv();
    FieldElement x_on_curve = eval_poly_fe(cand.yc->num, tf) *
                              eval_poly_fe(cand.yc->den, tf).inverse();
    FieldElement y = cand.direct ? x_on_curve : tf * x_on_curve;
    FieldElement one = fld->one();
    // candidate point must lie in the closed overlap
    if ((y - (one - tf)).sign() < 0 || (tf - y).sign() < 0) continue;
    bool certified = false;
    bool allow_return = cand.card == AddressCardinality::countable;
    if (!no_return_check(y, allow_return, max_vertices, &certified)) continue;
    TwoAddressReport r;
    r.label_b = cand.label_b;
    r.label_c = cand.label_c;
    r.t = t_alg;
    r.beta = beta_alg;
    r.y = y;
    r.cardinality = cand.card;
    r.verified = certified;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const TwoAddressReport& a, const TwoAddressReport& b) {
    return a.t.compare(b.t) < 0;
  });
  // drop exact duplicates (same parameter and point)
  out.erase(std::unique(out.begin(), out.end(),
                        [](const TwoAddressReport& a, const TwoAddressReport& b) {
                          return a.t.compare(b.t) == 0 &&
                                 a.beta.minpoly() == b.beta.minpoly() && a.y == b.y;
                        }),
            out.end());
}

}  // namespace

std::vector<TwoAddressReport> two_address_scan(const RatInterval& range,
                                               const std::vector<BitSeq>& catalog,
                                               int max_vertices) {
  BigRat half(1, 2);
  BigRat lo = std::max(range.lo, half);
  BigRat hi = std::min(range.hi, BigRat(1));
  std::vector<AddressCurve> curves;
  curves.reserve(catalog.size());
  for (const auto& c : catalog) {
    if (!is_itinerary(c)) throw std::invalid_argument("catalog entries must be itineraries");
    curves.push_back(rational_form(c));
  }
  std::vector<ScanCandidate> cands;
  std::list<AddressCurve> owned;  // keep curve storage stable for pointers
  for (auto& c : curves) owned.push_back(std::move(c));
  std::vector<const AddressCurve*> cv;
  for (auto& c : owned) cv.push_back(&c);

  for (size_t i = 0; i < cv.size(); ++i) {
    for (size_t j = 0; j < cv.size(); ++j) {
      if (i == j) continue;
      const AddressCurve* low = cv[i];   // c' < 1/2
      const AddressCurve* high = cv[j];  // c > 1/2
      if (!(low->address.value() < half && high->address.value() > half)) continue;
      int periodic = int(low->address.purely_periodic()) + int(high->address.purely_periodic());
      // (a) two-address relation y_{c'} = y_c + 1 - 1/t, y = f0(y_c)
      if (periodic < 2) {
        IntPoly tN1D2 = IntPoly::x() * (low->num * high->den);
        IntPoly tN2D1 = IntPoly::x() * (high->num * low->den);
        IntPoly DD = low->den * high->den;
        IntPoly P = tN1D2 - tN2D1 + (IntPoly::constant(1) - IntPoly::x()) * DD;
        if (!P.is_zero()) {
          for (const auto& r : isolate_real_roots(P, lo, hi)) {
            ScanCandidate sc;
            sc.label_b = low->address.to_string();
            sc.label_c = high->address.to_string();
            sc.poly = P;
            sc.root = r;
            sc.yc = high;
            sc.direct = false;
            sc.card = periodic == 0 ? AddressCardinality::two : AddressCardinality::countable;
            cands.push_back(std::move(sc));
          }
        }
      }
      // (b) direct intersection with exactly one purely periodic address
      if (periodic == 1 && i < j) {
        IntPoly P = low->num * high->den - high->num * low->den;
        if (!P.is_zero()) {
          for (const auto& r : isolate_real_roots(P, lo, hi)) {
            ScanCandidate sc;
            sc.label_b = low->address.to_string();
            sc.label_c = high->address.to_string();
            sc.poly = P;
            sc.root = r;
            sc.yc = high;
            sc.direct = true;
            sc.card = AddressCardinality::countable;
            cands.push_back(std::move(sc));
          }
        }
      }
    }
  }
  std::vector<TwoAddressReport> out;
  emit_reports(cands, max_vertices, out);
  return out;
}

std::vector<TwoAddressReport> central_point_params(const RatInterval& range, int catalog_depth,
                                                   int max_vertices) {
  BigRat half(1, 2);
  BigRat lo = std::max(range.lo, half);
  BigRat hi = std::min(range.hi, BigRat(1));
  std::vector<BitSeq> catalog;
  catalog.push_back(BitSeq(word_from_string("00"), word_from_string("01")));  // .00overline{01}
  for (int n = 0; n <= catalog_depth; ++n) {
    BitWord pre = word_from_string("00");
    for (int r = 0; r < n; ++r) {
      pre.push_back(0);
      pre.push_back(1);
    }
    catalog.emplace_back(pre, word_from_string("0110"));
  }
  for (const auto& b : periodic_kneading_sequences(6)) {
    BitWord pre = word_from_string("000");
    catalog.emplace_back(pre, b.period());
  }
  std::vector<ScanCandidate> cands;
  std::list<AddressCurve> owned;
  for (const auto& c : catalog) {
    if (c.value() >= half) continue;
    owned.push_back(rational_form(c));
    const AddressCurve* ac = &owned.back();
    // y_c(t) = 1 - 1/(2t)  <=>  2 t num - (2t - 1) den = 0
    IntPoly two_t = IntPoly::monomial(1, BigInt(2));
    IntPoly P = two_t * ac->num - (two_t - IntPoly::constant(1)) * ac->den;
    if (P.is_zero()) continue;
    for (const auto& r : isolate_real_roots(P, lo, hi)) {
      ScanCandidate sc;
      sc.label_b = c.to_string();
      sc.label_c = "central";
      sc.poly = P;
      sc.root = r;
      sc.yc = ac;
      sc.direct = false;  // unused: y is 1/2, set below via special-case
      sc.card = AddressCardinality::two;
      cands.push_back(std::move(sc));
    }
  }
  // emit with y = 1/2 directly
  std::vector<TwoAddressReport> out;
  for (auto& cand : cands) {
    AlgebraicNumber t_alg = AlgebraicNumber::select_root(cand.poly, cand.root);
    AlgebraicNumber beta_alg = t_alg.reciprocal();
    auto fld = NumberField::make(beta_alg);
    FieldElement y = fld->from_rational(half);
    bool certified = false;
    if (!no_return_check(y, false, max_vertices, &certified)) continue;
    TwoAddressReport r;
    r.label_b = cand.label_b;
    r.label_c = cand.label_c;
    r.t = t_alg;
    r.beta = beta_alg;
    r.y = y;
    r.cardinality = AddressCardinality::two;
    r.verified = certified;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const TwoAddressReport& a, const TwoAddressReport& b) {
    return a.t.compare(b.t) < 0;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const TwoAddressReport& a, const TwoAddressReport& b) {
                          return a.t.compare(b.t) == 0 && a.beta.minpoly() == b.beta.minpoly();
                        }),
            out.end());
  return out;
}

}  // namespace bclab
