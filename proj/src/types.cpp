#include "simplext/types.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "simplext/errors.hpp"

namespace simplext {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw InputError("bad rational literal '" + s + "'");
  }
}

std::string rat_to_string(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite double");
  if (x == 0.0) return Rat(0);
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is integral for any finite double
  const Int scaled{static_cast<long long>(std::ldexp(mant, 53))};
  Rat r{scaled};
  const int e = exp - 53;
  const Int pow2 = Int(1) << std::abs(e);
  if (e >= 0) return r * Rat(pow2);
  return r / Rat(pow2);
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec scale(const Rat& c, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

namespace {

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd(a, b);
  Int l = (a / g) * b;
  return l < 0 ? -l : l;
}

}  // namespace

void make_primitive(RatVec& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, denominator(x));
  if (den == 0) den = 1;
  Int g = 0;
  for (auto& x : v) {
    x *= Rat(den);
    g = gcd(g, numerator(x));
  }
  if (g > 1)
    for (auto& x : v) x /= Rat(g);
}

void make_primitive(RatVec& normal, Rat& rhs) {
  RatVec all = normal;
  all.push_back(rhs);
  make_primitive(all);
  rhs = all.back();
  all.pop_back();
  normal = std::move(all);
}

std::vector<std::size_t> set_to_indices(const NodeSet& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != NodeSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

NodeSet indices_to_set(std::size_t n, const std::vector<std::size_t>& idx) {
  NodeSet s(n);
  for (auto i : idx) s.set(i);
  return s;
}

}  // namespace simplext
