#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "posetrep/errors.hpp"

namespace posetrep {

/// Exact rational scalar. All symbolic computation in the library uses this
/// type; floating point lives only in the flow module.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using RatVec = std::vector<Rat>;

/// Parses "p", "p/q" or a decimal like "0.1" / "-2.25" into an exact rational.
Rat parse_rational(const std::string& text);

/// Renders as "p" or "p/q" (lowest terms, q > 0).
std::string to_string(const Rat& r);

/// Nearest rational to x with denominator at most max_den (continued
/// fractions). Used to lift numeric destabilizer hints back to exact data.
Rat rationalize(double x, std::int64_t max_den);

/// Deterministic 64-bit generator (splitmix64). The standard engines have
/// implementation-defined distributions; this keeps seeded runs byte-stable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline Rat parse_rational(const std::string& text) {
  std::string s = text;
  // strip whitespace
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty rational literal", 0);
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
    bool neg = false;
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) {
      neg = ip[0] == '-';
      ip = ip.substr(1);
    }
    if (ip.empty()) ip = "0";
    for (char c : ip + fp)
      if (!isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad decimal literal: " + text, 0);
    Int num(ip + fp);
    Int den(1);
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    Rat r(num, den);
    return neg ? -r : r;
  }
  try {
    return Rat(t);
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: " + text, 0);
  }
}

inline std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rationalize(double x, std::int64_t max_den) {
  // continued fraction expansion of x, truncated at the denominator bound
  bool neg = x < 0;
  if (neg) x = -x;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e17) break;
    std::int64_t a = static_cast<std::int64_t>(fl);
    std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 <= 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rat(0);
  Rat r(p1, q1);
  return neg ? -r : r;
}

}  // namespace posetrep
