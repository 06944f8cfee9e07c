#include "bclab/words.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bclab {

BitWord word_from_string(const std::string& s) {
  BitWord w;
  for (char c : s) {
    if (c == '0')
      w.push_back(0);
    else if (c == '1')
      w.push_back(1);
    else if (!std::isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bit word may contain only 0 and 1");
  }
  return w;
}

std::string word_to_string(const BitWord& w) {
  std::string s;
  s.reserve(w.size());
  for (uint8_t b : w) s.push_back(b ? '1' : '0');
  return s;
}

BitWord word_complement(const BitWord& w) {
  BitWord c(w.size());
  for (size_t i = 0; i < w.size(); ++i) c[i] = 1 - w[i];
  return c;
}

BitWord morse_thue_prefix(int n) {
  if (n < 1) throw std::invalid_argument("morse_thue_prefix requires n >= 1");
  BitWord w(n);
  for (int k = 0; k < n; ++k) w[k] = __builtin_popcount(unsigned(k)) & 1;
  return w;
}

namespace {
// Smallest period d of w (d divides |w|, w = u^{...}), i.e. primitive root.
size_t primitive_period(const BitWord& w) {
  for (size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d != 0) continue;
    bool ok = true;
    for (size_t i = d; i < w.size() && ok; ++i) ok = (w[i] == w[i - d]);
    if (ok) return d;
  }
  return w.size();
}
}  // namespace

BitSeq::BitSeq(BitWord preperiod, BitWord period) : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw std::invalid_argument("period must be nonempty");
  canonicalize();
}

void BitSeq::canonicalize() {
  size_t d = primitive_period(per_);
  per_.resize(d);
  // absorb preperiod letters equal to the rotated period tail
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.begin(), per_.end() - 1, per_.end());
  }
}

BitSeq BitSeq::periodic(const BitWord& w) { return BitSeq({}, w); }

BitSeq BitSeq::from_rational(const BigRat& q) {
  if (q <= 0 || q >= 1) throw std::invalid_argument("from_rational requires q in (0,1)");
  BigInt den = denominator(q);
  if ((den & (den - 1)) == 0)
    throw std::invalid_argument("dyadic: not an itinerary (two expansions)");
  // long division with cycle detection
  std::map<BigRat, size_t> seen;
  std::vector<uint8_t> bits;
  BigRat x = q;
  while (true) {
    auto it = seen.find(x);
    if (it != seen.end()) {
      size_t start = it->second;
      BitWord pre(bits.begin(), bits.begin() + start);
      BitWord per(bits.begin() + start, bits.end());
      return BitSeq(std::move(pre), std::move(per));
    }
    seen.emplace(x, bits.size());
    x *= 2;
    if (x >= 1) {
      bits.push_back(1);
      x -= 1;
    } else {
      bits.push_back(0);
    }
  }
}

uint8_t BitSeq::bit(size_t k) const {
  if (k == 0) throw std::out_of_range("bits are 1-based");
  size_t i = k - 1;
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

BigRat BitSeq::value() const {
  BigInt pre_int = 0;
  for (uint8_t b : pre_) pre_int = (pre_int << 1) | int(b);
  BigInt per_int = 0;
  for (uint8_t b : per_) per_int = (per_int << 1) | int(b);
  BigInt p2pre = BigInt(1) << pre_.size();
  BigInt p2per = (BigInt(1) << per_.size()) - 1;
  return BigRat(pre_int, p2pre) + BigRat(per_int, p2pre * p2per);
}

BitSeq BitSeq::shifted() const {
  if (!pre_.empty()) return BitSeq(BitWord(pre_.begin() + 1, pre_.end()), per_);
  BitWord rot = per_;
  std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  return BitSeq({}, std::move(rot));
}

BitSeq BitSeq::complemented() const { return BitSeq(word_complement(pre_), word_complement(per_)); }

std::string BitSeq::to_string() const {
  std::ostringstream os;
  os << "." << word_to_string(pre_) << "overline{" << word_to_string(per_) << "}";
  return os.str();
}

BitSeq BitSeq::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos && s.find("overline") == std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    return from_rational(BigRat(num, den));
  }
  std::string t = s;
  if (!t.empty() && t[0] == '.') t = t.substr(1);
  auto pos = t.find("overline{");
  if (pos == std::string::npos) throw std::invalid_argument("expected overline{...} or p/q");
  auto close = t.find('}', pos);
  if (close == std::string::npos) throw std::invalid_argument("unterminated overline{");
  BitWord pre = word_from_string(t.substr(0, pos));
  BitWord per = word_from_string(t.substr(pos + 9, close - pos - 9));
  if (per.empty()) throw std::invalid_argument("empty period");
  return BitSeq(std::move(pre), std::move(per));
}

std::vector<BitSeq> doubling_orbit(const BitSeq& b) {
  std::vector<BitSeq> orbit;
  std::set<BigRat> seen;
  BitSeq cur = b;
  while (seen.insert(cur.value()).second) {
    orbit.push_back(cur);
    cur = cur.shifted();
  }
  return orbit;
}

bool is_itinerary(const BitSeq& b) {
  // canonical period of size 1 means a constant tail (value 0 or 1 in orbit
  // closure); dyadic values cannot be constructed at all
  return b.period().size() > 1;
}

bool is_kneading(const BitSeq& b) {
  if (!is_itinerary(b)) return false;
  BigRat half(1, 2);
  BigRat self_dist = abs_rat(b.value() - half);
  for (const BitSeq& s : doubling_orbit(b))
    if (abs_rat(s.value() - half) < self_dist) return false;
  return true;
}

BitSeq kneading_of(const BitSeq& c) {
  if (!is_itinerary(c)) throw std::invalid_argument("kneading_of requires an itinerary");
  BigRat half(1, 2);
  auto orbit = doubling_orbit(c);
  const BitSeq* best = &orbit[0];
  BigRat best_dist = abs_rat(orbit[0].value() - half);
  for (const BitSeq& s : orbit) {
    BigRat d = abs_rat(s.value() - half);
    if (d < best_dist || (d == best_dist && s.value() < best->value())) {
      best = &s;
      best_dist = d;
    }
  }
  return *best;
}

BitSeq period_double(const BitSeq& b) {
  if (!b.purely_periodic())
    throw std::invalid_argument("period_double requires a purely periodic sequence");
  BitWord w = b.period();
  BitWord ww = w;
  BitWord cw = word_complement(w);
  ww.insert(ww.end(), cw.begin(), cw.end());
  return BitSeq::periodic(ww);
}

std::vector<BitSeq> periodic_approximants(const BitWord& prefix, int count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  {
    // reject purely periodic input: a prefix that is a repeated word of
    // period <= |prefix|/2 indicates the caller passed a periodic sequence
    size_t d = primitive_period(prefix);
    if (d * 2 <= prefix.size())
      throw std::invalid_argument("periodic_approximants requires a nonperiodic kneading prefix");
  }
  std::vector<BitSeq> out;
  for (size_t n = 1; n + 1 < prefix.size() + 1 && int(out.size()) < count; ++n) {
    if (n + 1 > prefix.size()) break;
    if (prefix[n] != 1) continue;  // b_{n+1} == 1 (prefix is 0-based)
    bool bad = false;
    for (size_t k = 1; k < n && !bad; ++k) {
      // (1-b_k)...(1-b_{n+1}) == b_1...b_{n-k+2} ?
      bool eq = true;
      for (size_t i = 0; i + k <= n + 1 && eq; ++i) {
        uint8_t lhs = 1 - prefix[k - 1 + i];
        uint8_t rhs = prefix[i];
        eq = (lhs == rhs);
      }
      bad = eq;
    }
    if (!bad) {
      BitSeq s = BitSeq::periodic(BitWord(prefix.begin(), prefix.begin() + n));
      if (is_itinerary(s)) out.push_back(std::move(s));
    }
  }
  if (int(out.size()) < count)
    throw std::invalid_argument(
        "prefix too short to certify the requested number of approximants; supply a longer "
        "prefix");
  return out;
}

std::vector<BitSeq> periodic_kneading_sequences(int max_period) {
  std::vector<BitSeq> out;
  std::set<BigRat> seen;
  for (int p = 2; p <= max_period; ++p) {
    for (uint64_t k = 1; k + 1 < (uint64_t(1) << p); ++k) {
      BitWord w(p);
      for (int i = 0; i < p; ++i) w[i] = (k >> (p - 1 - i)) & 1;
      BitSeq b = BitSeq::periodic(w);
      if (b.value() >= BigRat(1, 2)) continue;
      if (!is_kneading(b)) continue;
      if (seen.insert(b.value()).second) out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BitSeq& a, const BitSeq& b) { return a.value() < b.value(); });
  return out;
}

}  // namespace bclab
