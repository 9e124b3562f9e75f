#pragma once

// Shared basics: exact rational scalars, error type, small utilities.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#define ROOTLEIB_VERSION "0.1.0"

namespace rootleib {

using Q = mpq_class;
using QVec = std::vector<Q>;

// Every failure carries a short machine-readable kind plus a human message.
struct ToolkitError : std::runtime_error {
  std::string kind;
  ToolkitError(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw ToolkitError(kind, msg);
}

inline void check(bool ok, const std::string& kind, const std::string& msg) {
  if (!ok) fail(kind, msg);
}

// Structural invariants that should never fire on correct code; cheap enough
// to keep enabled in release builds.
inline void invariant(bool ok, const std::string& msg) {
  if (!ok) fail("InternalInvariant", msg);
}

inline Q q(long num, long den = 1) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "num" or "num/den" with decimal integers; result is canonical.
Q parse_rational(const std::string& s);

// Canonical form "num/den", den >= 1, gcd(num,den) = 1 (e.g. "-3/2", "0/1").
std::string rational_str(const Q& x);

// Display form: "num" when den == 1, else "num/den".
std::string q_str(const Q& x);

// t^k for integer k (negative allowed; t must be nonzero then).
Q q_pow(const Q& t, long k);

// FNV-1a over a byte string; used for stable structure-constant digests.
std::uint64_t fnv1a(const std::string& bytes);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace rootleib
