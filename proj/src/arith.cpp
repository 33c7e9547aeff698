#include "swl/arith.hpp"

#include <cstdlib>
#include <string>

#include "swl/error.hpp"

namespace swl {

long long fuel_budget(long long fallback) {
  const char* env = std::getenv("SWL_FUEL");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0)
    throw ParseError("SWL_FUEL must be a positive integer, got '" +
                     std::string(env) + "'");
  return v;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int ipow(const Int& base, unsigned exponent) {
  Int result = 1;
  Int b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PlaceStructure::PlaceStructure(int p, std::vector<int> degrees)
    : p_(p), degrees_(std::move(degrees)) {
  if (!is_prime(p) || p < 3)
    throw DomainError("p must be a prime >= 3, got " + std::to_string(p));
  if (degrees_.empty()) throw DomainError("at least one place is required");
  offsets_.reserve(degrees_.size());
  for (int f : degrees_) {
    if (f < 1) throw DomainError("residue degrees must be >= 1");
    offsets_.push_back(total_);
    total_ += f;
  }
}

int PlaceStructure::degree(int place) const {
  if (place < 0 || place >= place_count())
    throw DomainError("place index " + std::to_string(place) + " out of range");
  return degrees_[static_cast<std::size_t>(place)];
}

int PlaceStructure::offset(int place) const {
  degree(place);
  return offsets_[static_cast<std::size_t>(place)];
}

int PlaceStructure::place_of(int tau) const {
  if (tau < 0 || tau >= total_)
    throw DomainError("embedding index " + std::to_string(tau) +
                      " out of range");
  int v = place_count() - 1;
  while (offsets_[static_cast<std::size_t>(v)] > tau) --v;
  return v;
}

int PlaceStructure::local_index(int tau) const {
  return tau - offset(place_of(tau));
}

int PlaceStructure::frobenius(int tau) const {
  int v = place_of(tau);
  int f = degree(v);
  return offset(v) + (local_index(tau) + 1) % f;
}

int PlaceStructure::frobenius_inverse(int tau) const {
  int v = place_of(tau);
  int f = degree(v);
  return offset(v) + (local_index(tau) + f - 1) % f;
}

Int PlaceStructure::modulus(int place, int niveau_multiple) const {
  return ipow(Int(p_), static_cast<unsigned>(degree(place) * niveau_multiple)) -
         1;
}

Int PlaceStructure::field_size(int place) const {
  return ipow(Int(p_), static_cast<unsigned>(degree(place)));
}

CharExponent make_exponent(const PlaceStructure& s, int place, int niveau,
                           const Int& value) {
  int f = s.degree(place);
  if (niveau < 1 || niveau % f != 0)
    throw DomainError("niveau must be a positive multiple of f_v");
  Int m = ipow(Int(s.p()), static_cast<unsigned>(niveau)) - 1;
  return CharExponent{place, niveau, mod_floor(value, m)};
}

namespace {

template <typename T>
CharExponent pack_impl(const PlaceStructure& s, int place, std::span<const T> a) {
  int f = s.degree(place);
  if (static_cast<int>(a.size()) != f)
    throw DomainError("exponent vector has length " + std::to_string(a.size()) +
                      ", expected f_v = " + std::to_string(f));
  Int acc = 0;
  Int pw = 1;
  for (const T& x : a) {
    acc += Int(x) * pw;
    pw *= s.p();
  }
  return make_exponent(s, place, f, acc);
}

}  // namespace

CharExponent pack_exponents(const PlaceStructure& s, int place,
                            std::span<const std::int64_t> a) {
  return pack_impl(s, place, a);
}

CharExponent pack_exponents(const PlaceStructure& s, int place,
                            std::span<const Int> a) {
  return pack_impl(s, place, a);
}

CharExponent frobenius_twist(const PlaceStructure& s, const CharExponent& e) {
  return make_exponent(s, e.place, e.niveau, e.exponent * s.p());
}

CharExponent rebase(const PlaceStructure& s, const CharExponent& e,
                    int from_local, int to_local) {
  // eps_{tau_j} = eps_{tau_0}^{p^j}; moving the base from j1 to j2 divides by
  // p^{j2 - j1}, i.e. multiplies by p^{niveau - (j2 - j1) mod niveau}.
  int n = e.niveau;
  int shift = ((to_local - from_local) % n + n) % n;
  Int factor = ipow(Int(s.p()), static_cast<unsigned>((n - shift) % n));
  return make_exponent(s, e.place, n, e.exponent * factor);
}

CharExponent lift_to_double_niveau(const PlaceStructure& s,
                                   const CharExponent& e) {
  int f = s.degree(e.place);
  if (e.niveau != f)
    throw DomainError("only niveau-f exponents can be lifted to niveau 2f");
  return make_exponent(s, e.place, 2 * f, e.exponent * (s.field_size(e.place) + 1));
}

}  // namespace swl
