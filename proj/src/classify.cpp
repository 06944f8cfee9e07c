#include "bclab/classify.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <algorithm>
#include <sstream>

#include "bclab/factor.hpp"

namespace bclab {

const char* to_string(NumberTag t) {
  switch (t) {
    case NumberTag::pisot: return "pisot";
    case NumberTag::salem: return "salem";
    case NumberTag::garsia: return "garsia";
    case NumberTag::perron_strict: return "perron_strict";
    case NumberTag::weak_perron_only: return "weak_perron_only";
    case NumberTag::algebraic_integer_only: return "algebraic_integer_only";
    case NumberTag::not_integer: return "not_integer";
  }
  return "?";
}

int unit_circle_pairs(const IntPoly& f) {
  if (!f.is_reciprocal()) return 0;
  int n = f.degree();
  if (n % 2 != 0) return 0;  // irreducible reciprocal of odd degree cannot occur
  int m = n / 2;
  // f(x) = x^m q(x + 1/x); q = a_m + sum_{j>=1} a_{m+j} T_j, where T_j
  // expresses x^j + x^{-j} in y = x + 1/x.
  IntPoly t_prev = IntPoly::constant(2);
  IntPoly t_cur = IntPoly::x();
  IntPoly q = IntPoly::constant(f[m]);
  for (int j = 1; j <= m; ++j) {
    q = q + f[m + j] * t_cur;
    IntPoly t_next = IntPoly::x() * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  SturmChain st(q);
  return st.count_open(BigRat(-2), BigRat(2));
}

namespace {

// Certified data for one root: dyadic-rational bounds from a Weierstrass
// inclusion disk.
struct Disk {
  BigRat mod_lo, mod_hi;  // modulus range
  BigRat re_lo, re_hi;    // real part range
  BigRat im_lo, im_hi;    // imaginary part range
  double approx_mod = 0;
  bool exact_unit = false;  // modulus == 1 exactly (reciprocal circle pair)
  bool exact_beta = false;  // modulus == beta exactly (x^k sibling)
};

template <class Real, class Complex>
bool certified_disks(const IntPoly& f, std::vector<Disk>& out, int effort) {
  const int n = f.degree();
  std::vector<Complex> a(n + 1);
  Real lead = Real(f.lc().str());
  for (int i = 0; i <= n; ++i) a[i] = Complex(Real(f[i].str()) / lead);
  auto eval = [&](const Complex& z) {
    Complex r = 0;
    for (int i = n; i >= 0; --i) r = r * z + a[i];
    return r;
  };
  Real radius = 0;
  for (int i = 0; i < n; ++i)
    radius = std::max(radius, Real(2) * pow(abs(a[i]), Real(1) / (n - i)));
  if (radius == 0) radius = 1;
  std::vector<Complex> z(n);
  const Real pi = atan(Real(1)) * 4;
  for (int j = 0; j < n; ++j) {
    Real ang = (Real(2) * pi * j) / n + Real(1) / Real(2 * n) + Real(3) / Real(10);
    z[j] = Complex(radius * cos(ang), radius * sin(ang));
  }
  // Aberth-Ehrlich iterations
  int iters = 80 + 40 * effort + 4 * n;
  for (int it = 0; it < iters; ++it) {
    Real worst = 0;
    for (int j = 0; j < n; ++j) {
      Complex p = eval(z[j]);
      Complex dp = 0;
      for (int i = n; i >= 1; --i) dp = dp * z[j] + a[i] * Real(i);
      if (dp == Complex(0)) {
        z[j] += Complex(Real(1) / 977, Real(1) / 1031);
        continue;
      }
      Complex w = p / dp;
      Complex s = 0;
      for (int k = 0; k < n; ++k)
        if (k != j) s += Complex(1) / (z[j] - z[k]);
      Complex denom = Complex(1) - w * s;
      Complex corr = (denom == Complex(0)) ? w : w / denom;
      z[j] -= corr;
      worst = std::max(worst, abs(corr));
    }
    if (worst < std::numeric_limits<Real>::epsilon() * (radius + 1) * 4) break;
  }
  // Weierstrass inclusion disks: the union of D(z_j, n |p(z_j) / prod_{k!=j}
  // (z_j - z_k)|) contains every root, and pairwise disjoint disks hold
  // exactly one root each.
  std::vector<Real> rad(n);
  for (int j = 0; j < n; ++j) {
    Complex p = eval(z[j]);
    Complex denom = 1;
    for (int k = 0; k < n; ++k)
      if (k != j) denom *= (z[j] - z[k]);
    if (denom == Complex(0)) return false;
    rad[j] = Real(n) * abs(p / denom);
    rad[j] += std::numeric_limits<Real>::epsilon() * (abs(z[j]) + 1) * Real(64 * n);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(abs(z[i] - z[j]) > rad[i] + rad[j])) return false;
  out.assign(n, Disk{});
  for (int j = 0; j < n; ++j) {
    Real m = abs(z[j]);
    Real lo = m - rad[j];
    if (lo < 0) lo = 0;
    Disk d;
    d.mod_lo = lo.template convert_to<BigRat>();
    d.mod_hi = Real(m + rad[j]).template convert_to<BigRat>();
    d.re_lo = Real(z[j].real() - rad[j]).template convert_to<BigRat>();
    d.re_hi = Real(z[j].real() + rad[j]).template convert_to<BigRat>();
    d.im_lo = Real(z[j].imag() - rad[j]).template convert_to<BigRat>();
    d.im_hi = Real(z[j].imag() + rad[j]).template convert_to<BigRat>();
    d.approx_mod = m.template convert_to<double>();
    out[j] = d;
  }
  return true;
}

bool compute_disks(const IntPoly& f, std::vector<Disk>& disks, int effort) {
  using boost::multiprecision::cpp_bin_float_100;
  using boost::multiprecision::cpp_bin_float_50;
  using F240 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<240>>;
  using C240 = boost::multiprecision::cpp_complex<240>;
  switch (effort) {
    case 0:
      return certified_disks<cpp_bin_float_50, boost::multiprecision::cpp_complex_50>(f, disks, 0);
    case 1:
      return certified_disks<cpp_bin_float_100, boost::multiprecision::cpp_complex_100>(f, disks,
                                                                                        1);
    default:
      return certified_disks<F240, C240>(f, disks, effort);
  }
}

}  // namespace

NumberClass classify(const AlgebraicNumber& alpha) {
  const IntPoly& f = alpha.minpoly();
  const int n = f.degree();
  if (!is_irreducible(f))
    throw std::invalid_argument("classify: minimal polynomial is not irreducible");
  if (alpha.compare(BigRat(1)) <= 0)
    throw std::invalid_argument("classify: selected root must be > 1");

  NumberClass out;
  out.is_algebraic_integer = (f.lc() == 1);
  if (!out.is_algebraic_integer) {
    out.tag = NumberTag::not_integer;
    out.witness = "leading coefficient " + f.lc().str() + " != 1";
    return out;
  }
  if (n == 1) {
    out.is_pisot = out.is_perron = out.is_weak_perron = true;
    out.tag = NumberTag::pisot;
    out.witness = "no conjugates (degree 1)";
    return out;
  }

  const int circle_pairs = unit_circle_pairs(f);
  const bool reciprocal = f.is_reciprocal();
  int deck = 1;  // largest k with f(x) = g(x^k); then k-1 siblings share |.|=beta
  for (int k = n; k >= 2; --k)
    if (n % k == 0 && f.is_poly_in_xk(unsigned(k))) {
      deck = k;
      break;
    }

  std::vector<Disk> disks;
  for (int effort = 0; effort < 6; ++effort) {
    if (!compute_disks(f, disks, effort)) continue;
    RatInterval biv = alpha.refined_interval(BigRat(1, BigInt(1) << (70 + 30 * effort)));
    int self = -1;
    bool clash = false;
    for (int j = 0; j < n; ++j) {
      const Disk& d = disks[j];
      if (d.im_lo <= 0 && 0 <= d.im_hi && d.re_lo <= biv.hi && biv.lo <= d.re_hi) {
        if (self >= 0) clash = true;
        self = j;
      }
    }
    if (self < 0 || clash) continue;

    // attribute exactly-known moduli; counts must match the symbolic data,
    // otherwise an unrelated root is still entangled and we need precision
    int amb_unit = 0, amb_beta = 0;
    for (int j = 0; j < n; ++j) {
      if (j == self) continue;
      Disk& d = disks[j];
      if (d.mod_lo <= 1 && 1 <= d.mod_hi) {
        d.exact_unit = true;
        ++amb_unit;
      }
      if (!(d.mod_hi < biv.lo) && !(d.mod_lo > biv.hi)) {
        d.exact_beta = true;
        ++amb_beta;
      }
    }
    if (amb_unit != 2 * circle_pairs || amb_beta != deck - 1) continue;

    bool below_1 = true;   // all non-exact-unit conjugates strictly inside unit disk
    bool above_1 = true;   // all conjugates strictly outside unit disk
    bool below_beta = true;  // all non-exact-beta conjugates strictly below beta
    double max_mod = 0;
    for (int j = 0; j < n; ++j) {
      if (j == self) continue;
      const Disk& d = disks[j];
      max_mod = std::max(max_mod, d.approx_mod);
      if (d.exact_unit)
        above_1 = false;
      else if (!(d.mod_hi < 1))
        below_1 = false;
      if (!d.exact_unit && !(d.mod_lo > 1)) above_1 = false;
      if (!d.exact_beta && !(d.mod_hi < biv.lo)) below_beta = false;
    }

    out.is_pisot = below_1 && circle_pairs == 0;
    out.is_salem = reciprocal && n >= 4 && circle_pairs == n / 2 - 1 && below_1;
    out.is_perron = below_beta && deck == 1;
    out.is_weak_perron = below_beta;
    out.is_garsia = (abs(f[0]) == 2) && above_1;

    std::ostringstream w;
    w.precision(4);
    if (out.is_pisot)
      w << "all conjugates inside the unit disk, largest modulus ~" << max_mod;
    else if (out.is_salem)
      w << 2 * circle_pairs << " conjugates on the unit circle, none outside";
    else if (out.is_garsia)
      w << "all conjugates outside the unit disk, |constant term| = 2";
    else if (out.is_perron)
      w << "largest conjugate modulus ~" << max_mod << " below the root";
    else if (out.is_weak_perron)
      w << "conjugate of modulus equal to the root (polynomial in x^" << deck << ")";
    else
      w << "conjugate modulus ~" << max_mod << " exceeds the root";
    out.witness = w.str();

    if (out.is_pisot)
      out.tag = NumberTag::pisot;
    else if (out.is_salem)
      out.tag = NumberTag::salem;
    else if (out.is_garsia)
      out.tag = NumberTag::garsia;
    else if (out.is_perron)
      out.tag = NumberTag::perron_strict;
    else if (out.is_weak_perron)
      out.tag = NumberTag::weak_perron_only;
    else
      out.tag = NumberTag::algebraic_integer_only;
    return out;
  }
  throw precision_error("classify: modulus comparisons undecided at maximum precision (degree " +
                        std::to_string(n) + ")");
}

}  // namespace bclab
