#include "swl/shift.hpp"

#include <algorithm>
#include <string>

#include "swl/error.hpp"

namespace swl {

namespace {

void check_length(const PlaceStructure& s, std::size_t n) {
  if (n != static_cast<std::size_t>(s.total_degree()))
    throw DomainError("weight vectors must have length " +
                      std::to_string(s.total_degree()));
}

void check_tau(const PlaceStructure& s, int tau) {
  if (tau < 0 || tau >= s.total_degree())
    throw DomainError("embedding index " + std::to_string(tau) + " out of range");
}

}  // namespace

HasseWeight hasse_weight(const PlaceStructure& s, int tau) {
  check_tau(s, tau);
  HasseWeight h{tau, std::vector<std::int64_t>(static_cast<std::size_t>(s.total_degree()), 0)};
  int prev = s.frobenius_inverse(tau);
  if (prev == tau) {
    h.vector[static_cast<std::size_t>(tau)] = s.p() - 1;
  } else {
    h.vector[static_cast<std::size_t>(tau)] = -1;
    h.vector[static_cast<std::size_t>(prev)] = s.p();
  }
  return h;
}

Weight theta_shift(const PlaceStructure& s, const Weight& w, int tau) {
  check_weight_shape(s, w);
  check_tau(s, tau);
  Weight out = w;
  auto t = static_cast<std::size_t>(tau);
  int prev = s.frobenius_inverse(tau);
  if (prev == tau) {
    out.k[t] += s.p() + 1;
  } else {
    out.k[t] += 1;
    out.k[static_cast<std::size_t>(prev)] += s.p();
  }
  out.l[t] -= 1;
  return out;
}

Weight hasse_shift(const PlaceStructure& s, const Weight& w, int tau) {
  check_weight_shape(s, w);
  auto h = hasse_weight(s, tau);
  Weight out = w;
  for (std::size_t i = 0; i < out.k.size(); ++i) out.k[i] += h.vector[i];
  return out;
}

std::vector<int> cone_violations(const PlaceStructure& s,
                                 std::span<const std::int64_t> k) {
  check_length(s, k.size());
  std::vector<int> out;
  for (int tau = 0; tau < s.total_degree(); ++tau)
    if (s.p() * k[static_cast<std::size_t>(tau)] <
        k[static_cast<std::size_t>(s.frobenius_inverse(tau))])
      out.push_back(tau);
  return out;
}

bool in_minimal_cone(const PlaceStructure& s, std::span<const std::int64_t> k,
                     bool plus) {
  if (!cone_violations(s, k).empty()) return false;
  return !plus || std::all_of(k.begin(), k.end(), [](auto x) { return x >= 1; });
}

bool in_liftable_cone(const PlaceStructure& s, std::span<const std::int64_t> k) {
  check_length(s, k.size());
  for (int tau = 0; tau < s.total_degree(); ++tau)
    if (!(s.p() * (k[static_cast<std::size_t>(tau)] - 2) >
          k[static_cast<std::size_t>(s.frobenius_inverse(tau))] - 2))
      return false;
  return true;
}

std::optional<std::vector<std::int64_t>> le_ha(
    const PlaceStructure& s, std::span<const std::int64_t> k1,
    std::span<const std::int64_t> k2) {
  check_length(s, k1.size());
  check_length(s, k2.size());
  std::vector<std::int64_t> n(k1.size(), 0);
  for (int v = 0; v < s.place_count(); ++v) {
    const int f = s.degree(v);
    const int off = s.offset(v);
    const Int denom = s.modulus(v);
    // diff_j = p n_{j+1} - n_j (f >= 2) or (p-1) n (f = 1); inverting the
    // cyclic system gives n_i = sum_j p^{(j-i) mod f} diff_j / (p^f - 1).
    for (int i = 0; i < f; ++i) {
      Int acc = 0;
      for (int j = 0; j < f; ++j) {
        auto idx = static_cast<std::size_t>(off + j);
        acc += ipow(Int(s.p()), static_cast<unsigned>(((j - i) % f + f) % f)) *
               (k2[idx] - k1[idx]);
      }
      if (acc % denom != 0) return std::nullopt;
      Int ni = acc / denom;
      if (ni < 0) return std::nullopt;
      n[static_cast<std::size_t>(off + i)] = static_cast<std::int64_t>(ni);
    }
  }
  return n;
}

std::vector<std::int64_t> cone_reduce(
    const PlaceStructure& s, std::span<const std::int64_t> k,
    const std::function<int(const std::vector<int>&)>& pick) {
  check_length(s, k.size());
  std::vector<std::int64_t> cur(k.begin(), k.end());
  long long fuel = fuel_budget(kDefaultConeFuel);
  while (true) {
    auto bad = cone_violations(s, cur);
    if (bad.empty()) return cur;
    if (fuel-- <= 0)
      throw FuelExhausted("cone reduction did not converge within its step budget");
    int tau = pick ? pick(bad) : bad.front();
    if (std::find(bad.begin(), bad.end(), tau) == bad.end())
      throw DomainError("cone reduction: chosen embedding is not violating");
    auto h = hasse_weight(s, tau);
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= h.vector[i];
  }
}

Weight twist_weight(const Weight& w, std::span<const std::int64_t> lp) {
  if (lp.size() != w.l.size())
    throw DomainError("twist vector has the wrong length");
  Weight out = w;
  for (std::size_t i = 0; i < lp.size(); ++i) out.l[i] += lp[i];
  return out;
}

Weight stratum_weight(int p, std::int64_t k0, std::int64_t k1) {
  if (!(k1 >= k0 && k0 >= 2 && p * k0 >= k1))
    throw DomainError("stratum weight needs k1 >= k0 >= 2 and p k0 >= k1");
  return Weight{{2, p * k0 - k1 + 2}, {-1, k1 - 1}};
}

ThetaDivisibility theta_divisibility_flag(const PlaceStructure& s,
                                          const Weight& w, int tau) {
  check_weight_shape(s, w);
  check_tau(s, tau);
  return w.k[static_cast<std::size_t>(tau)] % s.p() == 0
             ? ThetaDivisibility::always_divisible_by_ha
             : ThetaDivisibility::divisible_iff_input_divisible;
}

const char* to_string(ThetaDivisibility d) {
  return d == ThetaDivisibility::always_divisible_by_ha
             ? "always_divisible_by_ha"
             : "divisible_iff_input_divisible";
}

}  // namespace swl
