#include "swl/brauer.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "swl/error.hpp"

namespace swl {

namespace {

using u64 = std::uint64_t;

u64 mulm(u64 a, u64 b, u64 m) { return a * b % m; }

u64 powm(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mulm(r, b, m);
    b = mulm(b, b, m);
    e >>= 1U;
  }
  return r;
}

bool prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Smallest prime ell > 2^30 with ell = 1 mod N.
u64 auxiliary_prime(u64 N) {
  const u64 lo = u64{1} << 30;
  for (u64 k = lo / N + 1;; ++k) {
    u64 ell = k * N + 1;
    if (ell >= (u64{1} << 31))
      throw DomainError("no auxiliary prime below 2^31 for N = " +
                        std::to_string(N));
    if (prime_u64(ell)) return ell;
  }
}

u64 primitive_root(u64 ell) {
  auto factors = prime_factors(ell - 1);
  for (u64 g = 2;; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](u64 r) {
      return powm(g, (ell - 1) / r, ell) != 1;
    });
    if (ok) return g;
  }
}

u64 mod_u64(std::int64_t x, u64 m) {
  auto r = x % static_cast<std::int64_t>(m);
  if (r < 0) r += static_cast<std::int64_t>(m);
  return static_cast<u64>(r);
}

std::pair<u64, u64> sorted(u64 a, u64 b) {
  return a <= b ? std::pair{a, b} : std::pair{b, a};
}

// Gauss-Jordan inverse of a K x K matrix mod ell; false if singular.
bool invert(std::vector<u64> m, std::size_t K, u64 ell, std::vector<u64>& inv) {
  inv.assign(K * K, 0);
  for (std::size_t i = 0; i < K; ++i) inv[i * K + i] = 1;
  for (std::size_t col = 0; col < K; ++col) {
    std::size_t piv = col;
    while (piv < K && m[piv * K + col] == 0) ++piv;
    if (piv == K) return false;
    if (piv != col)
      for (std::size_t j = 0; j < K; ++j) {
        std::swap(m[piv * K + j], m[col * K + j]);
        std::swap(inv[piv * K + j], inv[col * K + j]);
      }
    u64 s = powm(m[col * K + col], ell - 2, ell);
    for (std::size_t j = 0; j < K; ++j) {
      m[col * K + j] = mulm(m[col * K + j], s, ell);
      inv[col * K + j] = mulm(inv[col * K + j], s, ell);
    }
    for (std::size_t r = 0; r < K; ++r) {
      if (r == col || m[r * K + col] == 0) continue;
      u64 t = ell - m[r * K + col];
      for (std::size_t j = 0; j < K; ++j) {
        m[r * K + j] = (m[r * K + j] + mulm(t, m[col * K + j], ell)) % ell;
        inv[r * K + j] = (inv[r * K + j] + mulm(t, inv[col * K + j], ell)) % ell;
      }
    }
  }
  return true;
}

// Indices of K linearly independent rows of the R x K matrix `a`.
std::vector<std::size_t> independent_rows(const std::vector<u64>& a,
                                          std::size_t R, std::size_t K,
                                          u64 ell) {
  // Row-reduce the transpose; its pivot columns are the rows we want.
  std::vector<u64> t(K * R);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t j = 0; j < K; ++j) t[j * R + r] = a[r * K + j];
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < R && row < K; ++col) {
    std::size_t piv = row;
    while (piv < K && t[piv * R + col] == 0) ++piv;
    if (piv == K) continue;
    if (piv != row)
      for (std::size_t j = 0; j < R; ++j) std::swap(t[piv * R + j], t[row * R + j]);
    u64 s = powm(t[row * R + col], ell - 2, ell);
    for (std::size_t j = col; j < R; ++j) t[row * R + j] = mulm(t[row * R + j], s, ell);
    for (std::size_t r = row + 1; r < K; ++r) {
      if (t[r * R + col] == 0) continue;
      u64 c = ell - t[r * R + col];
      for (std::size_t j = col; j < R; ++j)
        t[r * R + j] = (t[r * R + j] + mulm(c, t[row * R + j], ell)) % ell;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

BrauerTable::BrauerTable(int p, int f, Exec exec) : p_(p), f_(f) {
  q_ = 1;
  for (int i = 0; i < f; ++i) q_ *= static_cast<u64>(p);
  N_ = q_ * q_ - 1;
  ell_ = auxiliary_prime(N_);
  const u64 omega = powm(primitive_root(ell_), (ell_ - 1) / N_, ell_);

  omega_pow_.resize(N_);
  omega_pow_[0] = 1;
  for (u64 u = 1; u < N_; ++u) omega_pow_[u] = mulm(omega_pow_[u - 1], omega, ell_);
  inv_gap_.assign(N_, 0);
  for (u64 u = 1; u < N_; ++u)
    inv_gap_[u] = powm((omega_pow_[u] + ell_ - 1) % ell_, ell_ - 2, ell_);
  u64 pw = 1;
  for (int i = 0; i < f; ++i) {
    p_pow_.push_back(pw);
    pw = pw * static_cast<u64>(p) % N_;
  }

  // p-regular classes, then one representative per orbit of the centre.
  const u64 step = q_ + 1;
  std::vector<std::pair<u64, u64>> classes;
  for (u64 i = 0; i + 1 < q_; ++i)
    for (u64 j = i; j + 1 < q_; ++j) classes.emplace_back(step * i, step * j);
  for (u64 a = 0; a < N_; ++a) {
    if (a % step == 0) continue;
    u64 b = q_ * a % N_;
    if (a < b) classes.emplace_back(a, b);
  }
  class_count_ = classes.size();
  if (class_count_ != q_ * (q_ - 1))
    throw DomainError("internal: p-regular class count mismatch");

  std::set<std::pair<u64, u64>> reps;
  for (auto [a, b] : classes) {
    auto best = sorted(a, b);
    for (u64 s = 1; s + 1 < q_ + 1; ++s) {
      auto cand = sorted((a + step * s) % N_, (b + step * s) % N_);
      best = std::min(best, cand);
    }
    reps.insert(best);
  }
  reps_.assign(reps.begin(), reps.end());

  // Irreducibles grouped by central character 2D + sum n_i p^i mod q - 1.
  blocks_.resize(q_ - 1);
  std::size_t irreducible_count = 0;
  std::vector<std::int64_t> n(static_cast<std::size_t>(f), 0);
  while (true) {
    u64 packed = 0;
    for (int i = 0; i < f; ++i)
      packed += static_cast<u64>(n[static_cast<std::size_t>(i)]) * p_pow_[static_cast<std::size_t>(i)];
    for (u64 D = 0; D + 1 < q_; ++D) {
      PlaceWeight w{{}, Int(D)};
      for (auto x : n) w.b.push_back(static_cast<int>(x + 2));
      blocks_[(2 * D + packed) % (q_ - 1)].irreducibles.push_back(std::move(w));
      ++irreducible_count;
    }
    int i = 0;
    while (i < f && ++n[static_cast<std::size_t>(i)] == p) n[static_cast<std::size_t>(i++)] = 0;
    if (i == f) break;
  }
  if (irreducible_count != class_count_)
    throw DomainError("internal: irreducible count does not match class count");

  const std::size_t R = reps_.size();
  bool singular = false;
  const auto block_count = static_cast<std::int64_t>(blocks_.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (std::int64_t c = 0; c < block_count; ++c) {
    auto& blk = blocks_[static_cast<std::size_t>(c)];
    const std::size_t K = blk.irreducibles.size();
    blk.values.resize(R * K);
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t j = 0; j < K; ++j) {
        const auto& w = blk.irreducibles[j];
        PlaceSymbol sym{w.D, {}};
        for (int b : w.b) sym.n.push_back(b - 2);
        blk.values[r * K + j] = character(sym, reps_[r].first, reps_[r].second);
      }
    blk.pivots = independent_rows(blk.values, R, K, ell_);
    std::vector<u64> square(K * K);
    for (std::size_t k = 0; k < blk.pivots.size() && k < K; ++k)
      for (std::size_t j = 0; j < K; ++j)
        square[k * K + j] = blk.values[blk.pivots[k] * K + j];
    if (blk.pivots.size() != K || !invert(square, K, ell_, blk.inverse)) {
#pragma omp critical
      singular = true;
    }
  }
  if (singular)
    throw DomainError("internal: singular irreducible character matrix");
}

std::shared_ptr<const BrauerTable> BrauerTable::get(int p, int f,
                                                    long long max_group_size) {
  Int size = ipow(Int(p), static_cast<unsigned>(2 * f));
  if (size > max_group_size)
    throw DomainError("Brauer oracle cap exceeded: p^(2f) = " + size.str() +
                      " > " + std::to_string(max_group_size));
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const BrauerTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, f}];
  if (!slot) slot = std::make_shared<const BrauerTable>(p, f, Exec::parallel);
  return slot;
}

u64 BrauerTable::sym_factor(std::int64_t n, u64 A, u64 B) const {
  if (A == B) {
    u64 coef = mod_u64(n + 1, ell_);
    return mulm(coef, omega_pow_[mulm(mod_u64(n, N_), A, N_)], ell_);
  }
  // (X^{n+1} - Y^{n+1}) / (X - Y), valid for every integer n, including the
  // negative-degree conventions.
  u64 e = mod_u64(n + 1, N_);
  u64 num = (omega_pow_[mulm(e, A, N_)] + ell_ - omega_pow_[mulm(e, B, N_)]) % ell_;
  u64 inv = mulm(omega_pow_[(N_ - B) % N_], inv_gap_[(A + N_ - B) % N_], ell_);
  return mulm(num, inv, ell_);
}

u64 BrauerTable::character(const PlaceSymbol& sym, u64 a, u64 b) const {
  u64 D = static_cast<u64>(mod_floor(sym.D, Int(q_ - 1)));
  u64 val = omega_pow_[mulm(D, (a + b) % N_, N_)];
  for (int i = 0; i < f_; ++i) {
    auto idx = static_cast<std::size_t>(i);
    val = mulm(val, sym_factor(sym.n[idx], mulm(p_pow_[idx], a, N_),
                               mulm(p_pow_[idx], b, N_)), ell_);
    if (val == 0) break;
  }
  return val;
}

std::vector<u64> BrauerTable::projected_character(const PlaceSymbol& sym,
                                                  Exec exec) const {
  const std::size_t R = reps_.size();
  const u64 Q = q_ - 1;
  const u64 step = q_ + 1;
  const u64 inv_q1 = powm(Q % ell_, ell_ - 2, ell_);
  std::vector<u64> out(R * Q);
  const auto rows = static_cast<std::int64_t>(R);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (std::int64_t ri = 0; ri < rows; ++ri) {
    auto r = static_cast<std::size_t>(ri);
    std::vector<u64> vals(Q);
    for (u64 s = 0; s < Q; ++s)
      vals[s] = character(sym, (reps_[r].first + step * s) % N_,
                          (reps_[r].second + step * s) % N_);
    for (u64 c = 0; c < Q; ++c) {
      u64 acc = 0;
      for (u64 s = 0; s < Q; ++s) {
        if (vals[s] == 0) continue;
        u64 e = (N_ - mulm(step, c * s % Q, N_)) % N_;
        acc = (acc + mulm(vals[s], omega_pow_[e], ell_)) % ell_;
      }
      out[r * Q + c] = mulm(acc, inv_q1, ell_);
    }
  }
  return out;
}

PlaceClass BrauerTable::decompose(const PlaceSymbol& sym, Exec exec) const {
  if (static_cast<int>(sym.n.size()) != f_)
    throw DomainError("symbol has the wrong number of degrees");
  const std::size_t R = reps_.size();
  const u64 Q = q_ - 1;
  auto proj = projected_character(sym, exec);
  PlaceClass out;
  for (u64 c = 0; c < Q; ++c) {
    const auto& blk = blocks_[c];
    const std::size_t K = blk.irreducibles.size();
    std::vector<u64> x(K, 0);
    for (std::size_t i = 0; i < K; ++i) {
      u64 acc = 0;
      for (std::size_t k = 0; k < K; ++k)
        acc = (acc + mulm(blk.inverse[i * K + k], proj[blk.pivots[k] * Q + c], ell_)) % ell_;
      x[i] = acc;
    }
    for (std::size_t r = 0; r < R; ++r) {
      u64 acc = 0;
      for (std::size_t j = 0; j < K; ++j)
        acc = (acc + mulm(blk.values[r * K + j], x[j], ell_)) % ell_;
      if (acc != proj[r * Q + c])
        throw DomainError("internal: Brauer character is not a combination "
                          "of irreducible characters");
    }
    for (std::size_t j = 0; j < K; ++j) {
      if (x[j] == 0) continue;
      long long m = x[j] > ell_ / 2 ? -static_cast<long long>(ell_ - x[j])
                                    : static_cast<long long>(x[j]);
      out.emplace(blk.irreducibles[j], m);
    }
  }
  return out;
}

PlaceClass brauer_decompose_place(const PlaceStructure& s, int place,
                                  const PlaceSymbol& sym,
                                  const OracleOptions& opts) {
  auto table = BrauerTable::get(s.p(), s.degree(place), opts.max_group_size);
  // Every multiplicity is bounded by |dim| of the symbol; the symmetric lift
  // is exact as long as that bound stays below ell / 2.
  Int bound = 1;
  for (auto n : sym.n) bound *= (n + 1 < 0 ? -(n + 1) : n + 1);
  if (2 * bound >= table->modulus())
    throw DomainError("symbol too large for the Brauer oracle modulus");
  return table->decompose(sym, opts.exec);
}

VirtualClass brauer_decompose(const SymbolicClass& c, const OracleOptions& opts) {
  const auto& s = c.structure();
  std::vector<std::map<PlaceSymbol, PlaceClass>> memo(
      static_cast<std::size_t>(s.place_count()));
  VirtualClass out(s);
  for (const auto& t : c.terms()) {
    std::vector<PlaceClass> factors;
    for (int v = 0; v < s.place_count(); ++v) {
      const auto& ps = t.places[static_cast<std::size_t>(v)];
      auto& cache = memo[static_cast<std::size_t>(v)];
      auto it = cache.find(ps);
      if (it == cache.end())
        it = cache.emplace(ps, brauer_decompose_place(s, v, ps, opts)).first;
      factors.push_back(it->second);
    }
    out += tensor_places(s, factors, t.coef);
  }
  return out;
}

}  // namespace swl
