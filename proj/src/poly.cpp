#include "bclab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bclab {

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt v) {
  IntPoly p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::x() { return monomial(1); }

IntPoly IntPoly::monomial(unsigned k, BigInt coeff) {
  IntPoly p;
  if (coeff == 0) return p;
  p.c_.assign(k + 1, BigInt(0));
  p.c_[k] = std::move(coeff);
  return p;
}

IntPoly IntPoly::from_ints(const std::vector<long>& v) {
  std::vector<BigInt> c(v.size());
  for (size_t i = 0; i < v.size(); ++i) c[i] = v[i];
  return IntPoly(std::move(c));
}

const BigInt& IntPoly::lc() const {
  if (c_.empty()) throw std::domain_error("lc of zero polynomial");
  return c_.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<BigInt> c(a.c_);
  for (auto& v : c) v = -v;
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const BigInt& k, const IntPoly& a) {
  if (k == 0) return IntPoly();
  std::vector<BigInt> c(a.c_);
  for (auto& v : c) v *= k;
  return IntPoly(std::move(c));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

BigRat IntPoly::eval(const BigRat& x) const {
  BigRat r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + BigRat(c_[i]);
  return r;
}

int IntPoly::sign_at_pos_inf() const { return is_zero() ? 0 : lc().sign(); }

int IntPoly::sign_at_neg_inf() const {
  if (is_zero()) return 0;
  int s = lc().sign();
  return (degree() % 2 == 0) ? s : -s;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<BigInt> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = BigInt(i) * c_[i];
  return IntPoly(std::move(c));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
  return g < 0 ? BigInt(-g) : g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  BigInt g = content();
  if (lc() < 0) g = -g;
  std::vector<BigInt> c(c_);
  for (auto& v : c) v /= g;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::reversed() const {
  std::vector<BigInt> c(c_.rbegin(), c_.rend());
  // strip what were leading zeros of the low end
  size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  return IntPoly(std::vector<BigInt>(c.begin() + k, c.end()));
}

BigInt IntPoly::height() const {
  BigInt h = 0;
  for (const auto& v : c_) h = std::max(h, BigInt(abs(v)));
  return h;
}

IntPoly IntPoly::divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) throw std::domain_error("non-exact polynomial division");
  std::vector<BigInt> rem(a.c_);
  std::vector<BigInt> q(a.degree() - b.degree() + 1, BigInt(0));
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    BigInt num = rem[k + b.degree()];
    if (num % b.lc() != 0) throw std::domain_error("non-exact polynomial division");
    BigInt qk = num / b.lc();
    q[k] = qk;
    if (qk != 0)
      for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= qk * b.c_[i];
  }
  for (const auto& v : rem)
    if (v != 0) throw std::domain_error("non-exact polynomial division");
  return IntPoly(std::move(q));
}

bool IntPoly::divides(const IntPoly& b, const IntPoly& a) {
  try {
    divide_exact(a, b);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

IntPoly IntPoly::pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_rem by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r(a.c_);
  const BigInt& d = b.lc();
  int delta = a.degree() - b.degree();
  for (int k = delta; k >= 0; --k) {
    // multiply the remaining part by lc(b), then eliminate the top term
    for (int i = 0; i < k + b.degree(); ++i) r[i] *= d;
    BigInt top = r[k + b.degree()];
    r[k + b.degree()] = 0;
    for (int i = 0; i < b.degree(); ++i) r[k + i] -= top * b.c_[i];
  }
  r.resize(b.degree());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

IntPoly IntPoly::squarefree_part() const {
  if (is_zero()) return IntPoly();
  if (degree() == 0) return constant(1);
  IntPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return primitive_part();
  return divide_exact(primitive_part(), g).primitive_part();
}

bool IntPoly::is_poly_in_xk(unsigned k) const {
  if (k < 2) return true;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0 && i % k != 0) return false;
  return true;
}

IntPoly IntPoly::decimate(unsigned k) const {
  std::vector<BigInt> c;
  for (size_t i = 0; i < c_.size(); i += k) c.push_back(c_[i]);
  return IntPoly(std::move(c));
}

bool IntPoly::is_reciprocal() const {
  if (is_zero()) return false;
  IntPoly r = reversed();
  return r == *this || r == -*this;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& a = c_[i];
    if (a == 0) continue;
    BigInt m = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? "-" : "+");
    }
    if (i == 0 || m != 1) os << m.str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string IntPoly::to_coeff_list() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i].str();
  }
  if (c_.empty()) os << "0";
  os << "]";
  return os.str();
}

namespace {

// Parser for "x^5-x^4-2x^2+1" style strings. Accepts one variable letter.
struct PolyParser {
  const std::string& s;
  size_t pos = 0;
  char var = 0;

  explicit PolyParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  IntPoly parse() {
    IntPoly total;
    skip_ws();
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    total = total + term(sign);
    skip_ws();
    while (pos < s.size()) {
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
        total = total + term(sign);
        skip_ws();
      } else {
        throw std::invalid_argument("polynomial parse error near '" + s.substr(pos) + "'");
      }
    }
    return total;
  }

  IntPoly term(int sign) {
    skip_ws();
    BigInt coeff = 1;
    bool have_num = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      coeff = BigInt(s.substr(start, pos - start));
      have_num = true;
    }
    skip_ws();
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      skip_ws();
    }
    unsigned exp = 0;
    if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      if (var == 0) var = s[pos];
      if (s[pos] != var) throw std::invalid_argument("multiple variables in polynomial");
      ++pos;
      exp = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("missing exponent");
        exp = std::stoul(s.substr(start, pos - start));
      }
    } else if (!have_num) {
      throw std::invalid_argument("polynomial parse error: empty term");
    }
    return IntPoly::monomial(exp, sign * coeff);
  }
};

IntPoly parse_coeff_list(const std::string& s) {
  std::vector<BigInt> c;
  size_t pos = 1;  // past '['
  while (pos < s.size() && s[pos] != ']') {
    size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != ']') ++pos;
    std::string tok = s.substr(start, pos - start);
    // trim spaces
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty coefficient");
    c.emplace_back(tok.substr(a, b - a + 1));
    if (pos < s.size() && s[pos] == ',') ++pos;
  }
  if (pos >= s.size()) throw std::invalid_argument("unterminated coefficient list");
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly IntPoly::parse(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) throw std::invalid_argument("empty polynomial");
  if (s[a] == '[') return parse_coeff_list(s.substr(a));
  PolyParser p(s);
  return p.parse();
}

QPoly qp_trim(QPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()), BigRat(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return qp_trim(std::move(c));
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()), BigRat(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return qp_trim(std::move(c));
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, BigRat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return qp_trim(std::move(c));
}

QPoly qp_scale(const QPoly& a, const BigRat& k) {
  if (k == 0) return {};
  QPoly c(a);
  for (auto& v : c) v *= k;
  return c;
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("QPoly division by zero");
  QPoly r = a, q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, BigRat(0));
  while (r.size() >= b.size()) {
    BigRat f = r.back() / b.back();
    size_t k = r.size() - b.size();
    q[k] = f;
    for (size_t i = 0; i < b.size(); ++i) r[k + i] -= f * b[i];
    r = qp_trim(std::move(r));
    if (r.size() > k + b.size() - 1) r.resize(k + b.size() - 1);  // guard
  }
  return {qp_trim(std::move(q)), std::move(r)};
}

BigRat qp_eval(const QPoly& a, const BigRat& x) {
  BigRat r = 0;
  for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

QPoly qp_from(const IntPoly& p) {
  QPoly q(p.coeffs().size());
  for (size_t i = 0; i < q.size(); ++i) q[i] = BigRat(p.coeffs()[i]);
  return q;
}

IntPoly qp_to_int_primitive(const QPoly& a) {
  BigInt den = 1;
  for (const auto& v : a) den = boost::multiprecision::lcm(den, denominator(v));
  std::vector<BigInt> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = numerator(a[i] * BigRat(den));
  return IntPoly(std::move(c)).primitive_part();
}

}  // namespace bclab
