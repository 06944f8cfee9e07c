// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.  Exits nonzero on any failure.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <vector>

#include "bclab/classify.hpp"
#include "bclab/density.hpp"
#include "bclab/factor.hpp"
#include "bclab/io.hpp"
#include "bclab/unique.hpp"

using namespace bclab;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("[%s] %02d %s%s%s\n", ok ? "PASS" : "FAIL", num, name.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

template <class F>
void criterion(int num, const std::string& name, F&& body) {
  try {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail = body();
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << detail << (detail.empty() ? "" : ", ") << std::fixed;
    os.precision(2);
    os << dt << "s";
    report(num, name, true, os.str());
  } catch (const std::exception& e) {
    report(num, name, false, e.what());
  }
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

BigRat R(long n, long d) { return BigRat(n, d); }

std::shared_ptr<const NumberField> golden() {
  static auto fld = NumberField::make(named_parameter(NamedKind::multinacci, 2));
  return fld;
}

double mid(const RatInterval& iv) { return (to_double(iv.lo) + to_double(iv.hi)) / 2; }

AlgebraicNumber root_in_12(const std::string& poly) {
  IntPoly p = IntPoly::parse(poly);
  auto roots = isolate_real_roots(p, BigRat(1), BigRat(2));
  require(roots.size() == 1, "expected a unique root of " + poly + " in (1,2)");
  return AlgebraicNumber::select_root(p, roots[0]);
}

// ---------------------------------------------------------------------------

std::string c01_golden_orbit() {
  auto t0 = std::chrono::steady_clock::now();
  auto fld = golden();
  OrbitGraph g = finite_orbit(fld->from_rational(R(1, 2)));
  require(g.closed, "orbit not closed");
  require(g.vertices.size() == 5, "expected 5 vertices");
  RatInterval rho = growth_rate(successor_matrix(g));
  double c2 = std::cbrt(2.0);
  require(std::abs(to_double(rho.lo) - c2) < 1e-10 && std::abs(to_double(rho.hi) - c2) < 1e-10,
          "rho != cbrt 2 within 1e-10");
  DimBounds d = local_dimension(2, fld->generator(), rho);
  require(std::abs(d.mid() - 0.9603) <= 5e-4, "dimension off 0.9603");
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  require(dt < 1.0, "runtime >= 1s");
  std::ostringstream os;
  os << "rho=" << fmt_double(mid(rho)) << " dim=" << fmt_double(d.mid());
  return os.str();
}

std::string c02_period7() {
  auto fld = golden();
  FieldElement x = BigRat(1, 29) * (fld->from_rational(BigRat(18)) - BigRat(3) * fld->beta());
  OrbitGraph g = finite_orbit(x);
  require(g.closed, "orbit not closed");
  IntMatrix s = successor_matrix(g);
  auto counts = generation_counts(s, 7);
  require(counts[g.root] == 5, "generation-7 successor count != 5");
  RatInterval rho = growth_rate(s);
  double expect = std::pow(5.0, 1.0 / 7);
  require(std::abs(to_double(rho.lo) - expect) < 1e-10, "rho != 5^(1/7) within 1e-10");
  DimBounds d = local_dimension(2, fld->generator(), rho);
  require(std::abs(d.mid() - 0.9626) <= 5e-4, "dimension off 0.9626");
  return "gamma7=5 rho=" + fmt_double(mid(rho)) + " dim=" + fmt_double(d.mid());
}

std::string c03_extremes() {
  auto fld = golden();
  FieldElement x = BigRat(1, 5) * (BigRat(2) * fld->beta() - BigRat(1));  // 1/sqrt5
  RatInterval rho = growth_rate(successor_matrix(finite_orbit(x)));
  double st = std::sqrt((1 + std::sqrt(5.0)) / 2);
  require(std::abs(to_double(rho.lo) - st) < 1e-10, "rho != sqrt(tau) within 1e-10");

  FieldElement t = fld->beta_inv();
  FieldElement y = t * t + t * t * t * t;
  RatInterval rho2 = growth_rate(successor_matrix(finite_orbit(y)));
  require(rho2.lo == BigRat(1) && rho2.hi == BigRat(1), "rho != 1 exactly");
  DimBounds d = local_dimension(2, fld->generator(), rho2);
  require(std::abs(d.mid() - 1.4404) <= 5e-4, "dimension off log2/logtau");
  return "rho(1/sqrt5)=" + fmt_double(mid(rho)) + " dim(preperiodic)=" + fmt_double(d.mid());
}

std::string c04_mixtures() {
  auto fld = golden();
  long fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};  // F_1..F_11
  const std::vector<std::string> expect3 = {"10000", "01100", "01011"};
  const std::vector<std::string> expect4 = {"1000011", "1000100", "0110011", "0110100", "0101111"};
  double prev = 0, last = 0;
  for (int k = 2; k <= 10; ++k) {
    FibonacciMixture fm = fibonacci_mixture(k);
    require(long(fm.words.size()) == fib[k], "word count != F_{k+1}");
    for (const auto& w : fm.words)
      require(int(w.size()) == 2 * k - 1, "word length != 2k-1");
    require(int(fm.graph.vertices.size()) == 4 * k - 3, "vertex count != 4k-3");
    if (k == 3)
      for (int i = 0; i < 3; ++i)
        require(word_to_string(fm.words[i]) == expect3[i], "k=3 word list mismatch");
    if (k == 4)
      for (int i = 0; i < 5; ++i)
        require(word_to_string(fm.words[i]) == expect4[i], "k=4 word list mismatch");
    // equal f_w(0), exact
    FieldElement t = fld->beta_inv();
    FieldElement first = fld->zero();
    for (size_t wi = 0; wi < fm.words.size(); ++wi) {
      FieldElement v = fld->zero();
      FieldElement tk = fld->one();
      for (uint8_t bit : fm.words[wi]) {
        if (bit) v = v + tk * (fld->one() - t);
        tk = tk * t;
      }
      if (wi == 0)
        first = v;
      else
        require(v == first, "f_w(0) differs inside one mixture");
    }
    RatInterval rho = growth_rate(successor_matrix(fm.graph));
    double r = mid(rho);
    require(std::abs(r - std::pow(double(fib[k]), 1.0 / (2 * k - 1))) < 1e-9,
            "rate != F_{k+1}^{1/(2k-1)}");
    // increasing from k = 3 on; the k=2 -> 3 step dips (2^{1/3} > 3^{1/5})
    if (k >= 4) require(r > prev, "rates not increasing from k=3 on");
    prev = r;
    last = r;
  }
  double st = std::sqrt((1 + std::sqrt(5.0)) / 2);
  require(std::abs(last - st) < 0.01, "final rate not within 0.01 of sqrt(tau)");
  return "k=2..10, monotone from k=3, rates end at " + fmt_double(last);
}

std::string c05_classification() {
  struct Row {
    const char* poly;
    NumberTag tag;
  };
  const Row rows[] = {
      {"x^2-x-1", NumberTag::pisot},
      {"x^3-2x^2+x-1", NumberTag::pisot},
      {"x^5-x^4-x^2-x-1", NumberTag::perron_strict},
      {"x^5-x^4-x^3-1", NumberTag::pisot},
      {"x^3-2x-2", NumberTag::garsia},
      {"x^7-x^5+x^3-x^2-1", NumberTag::algebraic_integer_only},
      {"x^4-x^3-2x^2+1", NumberTag::pisot},
  };
  for (const auto& row : rows) {
    auto t0 = std::chrono::steady_clock::now();
    NumberClass nc = classify(root_in_12(row.poly));
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(nc.tag == row.tag, std::string(row.poly) + " classified as " + to_string(nc.tag));
    require(dt < 1.0, std::string(row.poly) + " took >= 1s");
  }
  NumberClass chi = classify(root_in_12("x^4-x^3-2x^2+1"));
  require(std::abs(root_in_12("x^4-x^3-2x^2+1").to_double() - 1.9052) < 1e-3, "chi root off");
  (void)chi;
  return "7 polynomials classified";
}

std::string c06_tstar() {
  AlgebraicNumber t2 = t_star(BitSeq::parse("1/3"));
  require(t2.minpoly() == IntPoly::parse("t^2+t-1"), "t*(1/3) minpoly");
  require(std::abs(t2.to_double() - 0.6180) < 1e-4, "t*(1/3) value");

  AlgebraicNumber s2 = t_star(BitSeq::parse("2/5"));
  require(s2.reciprocal().minpoly() == IntPoly::parse("x^3-2x^2+x-1"), "t*(2/5) = 1/phi2");
  require(std::abs(s2.to_double() - 0.5698) < 1e-4, "t*(2/5) value");

  AlgebraicNumber t3 = t_star(BitSeq::parse("3/7"));
  require(t3.reciprocal().minpoly() == IntPoly::parse("x^3-x^2-x-1"), "t*(3/7) = 1/tau3");
  require(std::abs(t3.to_double() - 0.5437) < 1e-4, "t*(3/7) value");

  RatInterval kl = komornik_loreti(20);
  // widen the certified bracket symmetrically to width 1e-4
  BigRat m = kl.mid(), w(1, 20000);
  RatInterval wide(m - w, m + w);
  require(wide.lo <= kl.lo && kl.hi <= wide.hi, "bracket not contained after widening");
  require(wide.contains(R(5595, 10000)), "KL enclosure misses 0.5595");
  require(wide.width() <= R(1, 10000), "KL enclosure wider than 1e-4");
  return "t2, s2, t3 minimal polynomials exact; t_KL ~ " + fmt_double(mid(kl));
}

std::string c07_intersections() {
  auto range = RatInterval(R(1, 2), R(63, 100));
  {
    auto rs = curve_intersection(BitSeq::parse("4/9"), BitSeq::parse("8/15"), range);
    require(!rs.empty(), "(4/9,8/15) no intersection");
    require(rs[0].beta.minpoly() == IntPoly::parse("x^3-2x^2+x-1"),
            "(4/9,8/15) minpoly not phi2");
    require(rs[0].number_class.tag == NumberTag::pisot, "(4/9,8/15) not pisot");
  }
  {
    auto rs = curve_intersection(BitSeq::parse("3/7"), BitSeq::parse("8/15"), range);
    bool ok = false;
    for (const auto& r : rs)
      if (std::abs(r.s.to_double() - 0.5765) <= 1e-4 && r.number_class.tag == NumberTag::pisot)
        ok = true;
    require(ok, "(3/7,8/15) missing pisot root at 0.5765");
  }
  {
    auto rs = curve_intersection(BitSeq::parse("55/127"), BitSeq::parse("16/31"), range);
    bool ok = false;
    for (const auto& r : rs)
      if (std::abs(r.s.to_double() - 0.5546) <= 1e-4 && r.beta.minpoly().degree() == 9 &&
          r.number_class.is_perron)
        ok = true;
    require(ok, "(55/127,16/31) missing degree-9 perron root at 0.5546");
  }
  {
    auto rs = curve_intersection(BitSeq::parse("56/129"), BitSeq::parse("16/31"), range);
    bool ok = false;
    for (const auto& r : rs)
      if (r.s.minpoly() == IntPoly::parse("t^8-t^7+t^5+t^4+t^2+t-1")) ok = true;
    require(ok, "(56/129,16/31) minimal polynomial mismatch");
  }
  {
    auto rs = curve_intersection(BitSeq::parse("5/12"), BitSeq::parse("8/15"), range);
    bool ok = false;
    for (const auto& r : rs)
      if (std::abs(r.s.to_double() - 0.5951) <= 1e-4 &&
          std::abs(r.z.to_double() - 0.463) <= 1e-3)
        ok = true;
    require(ok, "(5/12,8/15) root/ordinate mismatch");
  }
  return "5 certificates verified";
}

std::string c08_network() {
  auto rs = network_parameter(
      {NetworkConstraint::parse(",10000,self"), NetworkConstraint::parse(",01,reflection")});
  const IntersectionReport* hit = nullptr;
  for (const auto& r : rs)
    if (r.beta.minpoly() == IntPoly::parse("x^5-x^4-x^2-x-1")) hit = &r;
  require(hit != nullptr, "beta^5-beta^4-beta^2-beta-1 not reproduced");
  require(std::abs(hit->z.to_double() - 0.4389) <= 1e-4, "z off 0.4389");
  AlgebraicNumber rho = min_growth_bound(5, 2);
  require(std::abs(rho.to_double() - 1.2365) <= 1e-3, "rho(5,2) off 1.2365");
  RatInterval rho_iv = rho.refined_interval(BigRat(1, BigInt(1) << 40));
  DimBounds d = local_dimension(2, hit->beta, rho_iv);
  require(std::abs(d.mid() - 0.9215) <= 5e-4, "dimension off 0.9215");
  CriticalVerdict v = supercritical_test(rho_iv, hit->s);
  require(v == CriticalVerdict::supercritical, "not supercritical");
  double two_s = 2 * hit->s.to_double();
  require(std::abs(two_s - 1.1868) < 1e-3, "2s off 1.1868");
  return "z=" + fmt_double(hit->z.to_double()) + " dim=" + fmt_double(d.mid()) +
         " verdict=supercritical";
}

std::string c09_example2() {
  AlgebraicNumber beta = root_in_12("x^5-x^4-x^3-1");
  auto fld = NumberField::make(beta);
  BitWord v = word_from_string("100100000");  // 1 0^2 1 0^5
  BitWord w = word_from_string("011101000");  // 0 1^2 1 0 1 0^3
  FieldElement z = cycle_fixed_point(v, fld);
  require(z == cycle_fixed_point(w, fld), "z not fixed by both cycles");
  require(std::abs(z.to_double() - 0.501) < 1e-3, "z off 0.501");
  OrbitGraph g = finite_orbit(z);
  require(g.closed, "orbit not closed");
  RatInterval rho = growth_rate(successor_matrix(g));
  require(std::abs(mid(rho) - 1.2125) <= 1e-3, "rho off 1.2125");
  DimBounds d = local_dimension(2, beta, rho);
  require(std::abs(d.mid() - 0.9380) <= 1e-3, "dimension off 0.9380");
  return "orbit " + std::to_string(g.vertices.size()) + " points, rho=" + fmt_double(mid(rho)) +
         " dim=" + fmt_double(d.mid());
}

std::string c10_example4() {
  AlgebraicNumber beta = root_in_12("x^5-x^4-x^3-x^2+x-1");
  auto fld = NumberField::make(beta);
  FieldElement half = cycle_fixed_point(word_from_string("100010"), fld);
  require(half.rational_value() == R(1, 2), "1/2 not fixed by g_100010");
  OrbitGraph g = finite_orbit(fld->from_rational(R(1, 2)));
  require(g.closed, "orbit of 1/2 not closed");
  RatInterval rho = growth_rate(successor_matrix(g));
  double expect = std::pow(2.0, 1.0 / 6);
  require(std::abs(to_double(rho.lo) - expect) < 1e-9 &&
              std::abs(to_double(rho.hi) - expect) < 1e-9,
          "rho != 2^{1/6} within 1e-9");
  DimBounds d = local_dimension(2, beta, rho);
  require(std::abs(d.mid() - 0.9898) <= 5e-4, "dimension off 0.9898");
  // Eq.-(last) relations, exact in Q(beta): the histogram-peak point 0.46737
  // is y = g_1000(z) = fix(g_10000), with z the g_01110 cycle point
  FieldElement z = cycle_fixed_point(word_from_string("01110"), fld);
  FieldElement bb = fld->beta();
  FieldElement one = fld->one();
  auto g_apply = [&](const BitWord& word, FieldElement x) {
    for (uint8_t bit : word) x = bit ? bb * x + one - bb : bb * x;
    return x;
  };
  require(g_apply(word_from_string("01110"), z) == z, "g_01110(z) != z");
  FieldElement y = g_apply(word_from_string("1000"), z);
  require(g_apply(word_from_string("10000"), y) == y, "g_10000(y) != y");
  require(y == cycle_fixed_point(word_from_string("10000"), fld), "y != fix(g_10000)");
  require(std::abs(y.to_double() - 0.46737) < 1e-4, "peak point off 0.46737");
  return "rho=2^(1/6), dim=" + fmt_double(d.mid()) + ", Eq-last relations exact, peak at " +
         fmt_double(y.to_double());
}

std::string c11_mn_solver() {
  struct Row {
    int m, n;
    double v;
  };
  for (const Row& r : {Row{5, 2, 1.2365}, Row{3, 4, 1.221}, Row{9, 9, std::pow(2.0, 1.0 / 9)},
                       Row{7, 5, 1.1237}}) {
    double got = min_growth_bound(r.m, r.n).to_double();
    require(std::abs(got - r.v) <= 1e-3,
            "(" + std::to_string(r.m) + "," + std::to_string(r.n) + ") off: " + fmt_double(got));
  }
  return "4 bounds within 1e-3";
}

std::string c12_quantiles() {
  auto t0 = std::chrono::steady_clock::now();
  const int bins = 8000;
  const double tol = 2.0 / bins + 5e-3;
  int curves = 0;
  for (const auto& b : periodic_kneading_sequences(6)) {
    AlgebraicNumber ts = t_star(b);
    BigRat hi = ts.refined_interval(R(1, 1 << 24)).lo;
    for (int i = 1; i <= 10; ++i) {
      BigRat t = R(1, 2) + (hi - R(1, 2)) * i / 11;
      Histogram h = approximate(to_double(t), bins, default_iters(to_double(t), bins));
      double r = quantile_residual(b, t, h);
      require(r <= tol, "residual " + fmt_double(r) + " for b=" + b.to_string() +
                            " t=" + fmt_double(to_double(t)));
    }
    ++curves;
  }
  // mid-curves: t/2 is the 1/4-quantile for t <= 2/3, t - t^2/2 the 3/8-quantile
  // for t <= 2 - sqrt 2
  for (int i = 1; i <= 10; ++i) {
    double t = 0.5 + 0.0085 * i;  // stays below 2 - sqrt(2) ~ 0.5858
    Histogram h = approximate(t, bins, default_iters(t, bins));
    require(std::abs(h.cdf(t / 2) - 0.25) <= tol, "1/4-quantile off at t=" + fmt_double(t));
    require(std::abs(h.cdf(t - t * t / 2) - 0.375) <= tol,
            "3/8-quantile off at t=" + fmt_double(t));
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  require(dt < 120.0, "runtime >= 2 min");
  return std::to_string(curves) + " kneading curves x 10 parameters";
}

std::string c13_markov_crosscheck() {
  auto phi2 = named_parameter(NamedKind::doubling, 2);
  auto fld = NumberField::make(phi2);
  OrbitGraph g = finite_orbit(fld->beta_inv());
  require(g.closed, "orbit of t not closed");
  MarkovPartition mp = markov_partition(g, {R(1, 2), R(1, 2)});
  const int bins = 8000;
  double t = phi2.reciprocal().to_double();
  Histogram h = approximate(t, bins, default_iters(t, bins));
  double tol = 2.0 / bins + 1e-3;
  for (size_t k = 0; k + 1 < mp.cut_points.size(); ++k) {
    double lo = mp.cut_points[k].to_double();
    double hi = mp.cut_points[k + 1].to_double();
    double measured = h.cdf(hi) - h.cdf(lo);
    double exact = to_double(mp.stationary[k]);
    require(std::abs(measured - exact) <= tol,
            "interval " + std::to_string(k) + " off by " + fmt_double(measured - exact));
  }
  return std::to_string(mp.stationary.size()) + " interval masses within tolerance";
}

std::string c14_conjugacy() {
  const int bins = 8000;
  for (double t : {0.55, 0.58, 0.61}) {
    Histogram h = approximate(t, bins, default_iters(t, bins));
    std::vector<double> samples;
    for (int i = 1; i <= 25; ++i) samples.push_back((1 - t) * i / 26.0);
    for (int i = 1; i <= 25; ++i) samples.push_back(t + (1 - t) * i / 26.0);
    double r = conjugacy_residual(h, samples);
    require(r <= 2.0 / bins + 5e-3, "residual " + fmt_double(r) + " at t=" + fmt_double(t));
  }
  return "3 parameters x 50 samples";
}

std::string c15_central() {
  auto rs = central_point_params(RatInterval(R(1, 2), R(618, 1000)), 6);
  bool garsia_ok = false, isolated_ok = false;
  for (const auto& r : rs) {
    double t = r.t.to_double();
    if (r.t.minpoly() == IntPoly::parse("2t^3+2t^2-1")) {
      require(std::abs(t - 0.5652) < 1e-3, "garsia root off 0.5652");
      require(classify(r.beta).tag == NumberTag::garsia, "beta not garsia");
      garsia_ok = true;
    }
    if (std::abs(t - 0.5674) <= 1e-3) isolated_ok = true;
  }
  require(garsia_ok, "2t^3+2t^2-1 root missing");
  require(isolated_ok, "isolated parameter 0.5674 missing");

  std::vector<BitSeq> catalog;
  for (int k = 0; k <= 6; ++k) {
    BitWord pre(k, 0);
    catalog.emplace_back(pre, word_from_string("01"));
    catalog.push_back(catalog.back().complemented());
  }
  auto scan = two_address_scan(RatInterval(R(5698, 10000), R(618, 1000)), catalog);
  require(!scan.empty(), "Sidorov scan empty");
  double largest = scan.back().t.to_double();
  require(std::abs(largest - 0.5846) <= 1e-3, "largest two-address parameter off 0.5846");
  return "central 0.5652 (garsia), 0.5674; Sidorov largest " + fmt_double(largest);
}

std::string c16_holes() {
  for (const char* s : {"1/3", "3/7", "7/15"}) {
    BitSeq b = BitSeq::parse(s);
    HoleSystem hs = holes(b, 16);
    // independent brute force with 64-bit arithmetic
    long p = long(numerator(b.value()).convert_to<long>());
    long q = long(denominator(b.value()).convert_to<long>());
    for (int m = 1; m <= 16; ++m) {
      size_t a_m = 0;
      for (uint64_t bits = 0; bits < (uint64_t(1) << m); ++bits) {
        bool hole = true;
        for (int k = 0; k < m && hole; ++k) {
          int len = m - k;
          long long suffix = (long long)(bits & ((uint64_t(1) << len) - 1));
          // f_u(b) >= b  <=>  q*suffix >= p*(2^len - 1);  f_u(1-b) <= 1-b
          long long pw = (1LL << len) - 1;
          bool lo_in = (long long)q * suffix >= (long long)p * pw;
          bool hi_in = (long long)q * suffix <= (long long)(q - p) * pw;
          if (lo_in && hi_in) hole = false;
        }
        if (hole) ++a_m;
      }
      require(hs.counts[m - 1] == a_m,
              std::string("a_") + std::to_string(m) + " mismatch for b=" + s);
    }
  }
  RatInterval rho = hole_growth_rate(BitSeq::parse("3/7"), BigRat(1, BigInt(1) << 40));
  double tau = (1 + std::sqrt(5.0)) / 2;
  require(std::abs(to_double(rho.lo) - tau) < 1e-10 && std::abs(to_double(rho.hi) - tau) < 1e-10,
          "transfer-matrix spectral radius != tau within 1e-10");
  return "a_m exact for m<=16, 3/7 spectral radius = tau";
}

std::string c17_cli_determinism() {
  const char* bin = std::getenv("BCLAB_BIN");
  require(bin != nullptr, "BCLAB_BIN not set");
  auto capture = [&](const std::string& args) {
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    require(f != nullptr, "popen failed");
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    int rc = pclose(f);
    require(WEXITSTATUS(rc) == 0, "command failed: " + args);
    return out;
  };
  const char* runs[] = {
      "intersect 4/9 8/15",
      "intersect 5/12 8/15 --format json",
      "--format json classify x^3-2x-2",
      "orbit x^2-x-1 1/2 --format json",
      "--format dot mixture 4",
      "density 0.57 --bins 1000 --format csv",
      "grid 0.55 0.6 --nt 4 --bins 128 --format pgm",
      "grid 0.55 0.6 --nt 4 --bins 128 --format ppm",
      "holes 3/7 --depth 10",
      "central 0.55 0.618",
      "scan-two-address 0.57 0.618",
      "tstar 2/5 --format json",
      "curve 1/12 --format json",
      "markov x^3-2x^2+x-1 t --format csv",
  };
  for (const char* args : runs) {
    std::string a = capture(args);
    std::string b = capture(args);
    require(!a.empty(), std::string("empty output: ") + args);
    require(a == b, std::string("outputs differ across runs: ") + args);
  }
  return std::to_string(std::size(runs)) + " command outputs byte-identical";
}

}  // namespace

int main() {
  criterion(1, "golden-orbit-constants", c01_golden_orbit);
  criterion(2, "period-7-orbit", c02_period7);
  criterion(3, "extreme-growth-rates", c03_extremes);
  criterion(4, "fibonacci-mixtures", c04_mixtures);
  criterion(5, "classification-table", c05_classification);
  criterion(6, "tstar-values", c06_tstar);
  criterion(7, "intersection-certificates", c07_intersections);
  criterion(8, "network-solver", c08_network);
  criterion(9, "pisot-network-orbit", c09_example2);
  criterion(10, "transient-growth-orbit", c10_example4);
  criterion(11, "mn-solver", c11_mn_solver);
  criterion(12, "quantile-property", c12_quantiles);
  criterion(13, "markov-histogram-crosscheck", c13_markov_crosscheck);
  criterion(14, "conjugacy-property", c14_conjugacy);
  criterion(15, "central-point", c15_central);
  criterion(16, "hole-counts", c16_holes);
  criterion(17, "cli-determinism", c17_cli_determinism);
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 17 criteria passed\n");
  return 0;
}
