#include "rootleib/base.hpp"

namespace rootleib {

Q parse_rational(const std::string& s) {
  auto bad = [&] { fail("MalformedInput", "not a rational: '" + s + "'"); };
  auto digits = [&](const std::string& t) {
    if (t.empty()) bad();
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') bad();
  };
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  digits(num);
  digits(den);
  Q r;
  if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) bad();
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    fail("MalformedInput", "zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_str(const Q& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string q_str(const Q& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return rational_str(x);
}

Q q_pow(const Q& t, long k) {
  if (k < 0) {
    check(t != 0, "SingularOperator", "0 has no negative power");
    return q_pow(Q(1 / t), -k);
  }
  Q r(1), b(t);
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace rootleib
