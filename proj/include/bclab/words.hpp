#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bclab/numeric.hpp"

namespace bclab {

// Finite 0/1 word.
using BitWord = std::vector<uint8_t>;

BitWord word_from_string(const std::string& s);   // "0110"
std::string word_to_string(const BitWord& w);
BitWord word_complement(const BitWord& w);
// First n letters of the Thue-Morse sequence 0110100110010110...
BitWord morse_thue_prefix(int n);

// Eventually periodic 0/1 sequence in canonical form (primitive period,
// shortest preperiod), identified with a rational number in [0,1].
class BitSeq {
 public:
  // Canonicalizes; period must be nonempty.
  BitSeq(BitWord preperiod, BitWord period);
  // Binary expansion of a non-dyadic rational in (0,1); also accepts the
  // constant sequences for 0 and 1 (values 0/1 themselves are permitted as
  // degenerate endpoints but rejected by from_rational).
  static BitSeq from_rational(const BigRat& q);
  // Purely periodic sequence .overline{w}.
  static BitSeq periodic(const BitWord& w);
  // Parse ".011overline{10}", ".overline{01}" or a fraction "11/24".
  static BitSeq parse(const std::string& s);

  const BitWord& preperiod() const { return pre_; }
  const BitWord& period() const { return per_; }
  bool purely_periodic() const { return pre_.empty(); }
  uint8_t bit(size_t k) const;  // 1-based index into b_1 b_2 ...

  BigRat value() const;
  BitSeq shifted() const;       // drop b_1 (the doubling map)
  BitSeq complemented() const;  // 1 - value, bitwise complement
  std::string to_string() const;

  bool operator==(const BitSeq& o) const { return pre_ == o.pre_ && per_ == o.per_; }
  bool operator<(const BitSeq& o) const { return value() < o.value(); }

 private:
  BitWord pre_, per_;
  void canonicalize();
};

// Forward orbit under x -> 2x mod 1 in visit order (all distinct shifts).
std::vector<BitSeq> doubling_orbit(const BitSeq& b);

// Orbit closure avoids 1/2: constant tails are the only failures among
// canonical eventually periodic sequences.
bool is_itinerary(const BitSeq& b);

// No shift lies strictly nearer to 1/2.
bool is_kneading(const BitSeq& b);

// The orbit element minimizing |x - 1/2|; ties resolved toward the smaller
// value so results are deterministic.
BitSeq kneading_of(const BitSeq& c);

// .overline{w} -> .overline{w (1-w)}; input must be purely periodic.
BitSeq period_double(const BitSeq& b);

// Periodic approximants s_n = .overline{b_1..b_n} of a nonperiodic kneading
// sequence given by a finite prefix: indices n with b_{n+1} = 1 and no k < n
// such that (1-b_k)...(1-b_{n+1}) equals b_1...b_{n-k+2}.  Throws
// std::invalid_argument when the prefix cannot certify `count` approximants.
std::vector<BitSeq> periodic_approximants(const BitWord& prefix, int count);

// All kneading sequences b < 1/2 with primitive period exactly or at most
// max_period (purely periodic ones), sorted by value.  Test/catalog helper.
std::vector<BitSeq> periodic_kneading_sequences(int max_period);

}  // namespace bclab
