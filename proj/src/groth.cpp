#include "swl/groth.hpp"

#include <algorithm>

#include "swl/error.hpp"

namespace swl {

namespace {

PlaceSymbol canonical(const PlaceStructure& s, int place, PlaceSymbol sym) {
  sym.D = mod_floor(sym.D, s.modulus(place));
  return sym;
}

void accumulate(std::map<PlaceSymbol, long long>& work, PlaceSymbol sym,
                long long coef) {
  if (coef == 0) return;
  auto [it, inserted] = work.try_emplace(std::move(sym), coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) work.erase(it);
  }
}

}  // namespace

SymbolicClass SymbolicClass::monomial(const PlaceStructure& s,
                                      std::span<const Int> d,
                                      std::span<const std::int64_t> n,
                                      long long coef) {
  auto total = static_cast<std::size_t>(s.total_degree());
  if (d.size() != total || n.size() != total)
    throw DomainError("symbol vectors must have length " +
                      std::to_string(total));
  SymbolTerm t;
  t.coef = coef;
  for (int v = 0; v < s.place_count(); ++v) {
    auto first = static_cast<std::size_t>(s.offset(v));
    auto f = static_cast<std::size_t>(s.degree(v));
    PlaceSymbol ps;
    ps.D = pack_exponents(s, v, d.subspan(first, f)).exponent;
    ps.n.assign(n.begin() + static_cast<std::ptrdiff_t>(first),
                n.begin() + static_cast<std::ptrdiff_t>(first + f));
    t.places.push_back(std::move(ps));
  }
  SymbolicClass out(s);
  out.add_term(std::move(t));
  return out;
}

SymbolicClass SymbolicClass::from_weight(const PlaceStructure& s,
                                         const Weight& w) {
  check_weight_shape(s, w);
  std::vector<Int> d(w.l.begin(), w.l.end());
  std::vector<std::int64_t> n(w.k.size());
  std::transform(w.k.begin(), w.k.end(), n.begin(),
                 [](std::int64_t k) { return k - 2; });
  return monomial(s, d, n);
}

SymbolicClass SymbolicClass::from_serre_weight(const PlaceStructure& s,
                                               const SerreWeight& w) {
  if (static_cast<int>(w.places.size()) != s.place_count())
    throw DomainError("Serre weight does not match the place structure");
  SymbolTerm t;
  for (const auto& pw : w.places) {
    PlaceSymbol ps{pw.D, {}};
    for (int b : pw.b) ps.n.push_back(b - 2);
    t.places.push_back(std::move(ps));
  }
  SymbolicClass out(s);
  out.add_term(std::move(t));
  return out;
}

void SymbolicClass::add_term(SymbolTerm t) {
  if (static_cast<int>(t.places.size()) != structure_.place_count())
    throw DomainError("symbol term does not match the place structure");
  for (int v = 0; v < structure_.place_count(); ++v) {
    auto& ps = t.places[static_cast<std::size_t>(v)];
    if (static_cast<int>(ps.n.size()) != structure_.degree(v))
      throw DomainError("symbol term has the wrong number of degrees");
    ps = canonical(structure_, v, std::move(ps));
  }
  if (t.coef != 0) terms_.push_back(std::move(t));
}

SymbolicClass& SymbolicClass::operator+=(const SymbolicClass& o) {
  if (!(structure_ == o.structure_))
    throw DomainError("cannot add symbols over different place structures");
  for (const auto& t : o.terms_) terms_.push_back(t);
  return *this;
}

SymbolicClass& SymbolicClass::operator-=(const SymbolicClass& o) {
  return *this += o.scaled(-1);
}

SymbolicClass SymbolicClass::scaled(long long c) const {
  SymbolicClass out(structure_);
  if (c == 0) return out;
  for (auto t : terms_) {
    t.coef *= c;
    out.terms_.push_back(std::move(t));
  }
  return out;
}

SymbolicClass SymbolicClass::twisted(std::span<const Int> c) const {
  if (static_cast<int>(c.size()) != structure_.place_count())
    throw DomainError("one twist exponent per place is required");
  SymbolicClass out(structure_);
  for (auto t : terms_) {
    for (int v = 0; v < structure_.place_count(); ++v) {
      auto& ps = t.places[static_cast<std::size_t>(v)];
      ps.D = mod_floor(ps.D + c[static_cast<std::size_t>(v)],
                       structure_.modulus(v));
    }
    out.terms_.push_back(std::move(t));
  }
  return out;
}

Int SymbolicClass::dimension() const {
  Int total = 0;
  for (const auto& t : terms_) {
    Int dim = t.coef;
    for (const auto& ps : t.places)
      for (auto n : ps.n) dim *= (n + 1);
    total += dim;
  }
  return total;
}

long long VirtualClass::multiplicity(const SerreWeight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void VirtualClass::add(const SerreWeight& w, long long m) {
  if (m == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) terms_.erase(it);
  }
}

VirtualClass& VirtualClass::operator+=(const VirtualClass& o) {
  if (!(structure_ == o.structure_))
    throw DomainError("classes belong to different place structures");
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

VirtualClass& VirtualClass::operator-=(const VirtualClass& o) {
  if (!(structure_ == o.structure_))
    throw DomainError("classes belong to different place structures");
  for (const auto& [w, m] : o.terms_) add(w, -m);
  return *this;
}

VirtualClass operator-(VirtualClass a, const VirtualClass& b) {
  a -= b;
  return a;
}

VirtualClass operator+(VirtualClass a, const VirtualClass& b) {
  a += b;
  return a;
}

VirtualClass VirtualClass::twisted(std::span<const Int> c) const {
  VirtualClass out(structure_);
  for (const auto& [w, m] : terms_)
    out.add(twist_serre_weight(structure_, w, c), m);
  return out;
}

Int VirtualClass::dimension() const {
  Int total = 0;
  for (const auto& [w, m] : terms_) total += serre_weight_dimension(w) * m;
  return total;
}

bool VirtualClass::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second > 0; });
}

std::set<SerreWeight> VirtualClass::support() const {
  std::set<SerreWeight> out;
  for (const auto& [w, m] : terms_) out.insert(w);
  return out;
}

PlaceClass reduce_place(const PlaceStructure& s, int place,
                        const PlaceSymbol& sym, long long& fuel) {
  const int f = s.degree(place);
  const std::int64_t p = s.p();
  const Int modulus = s.modulus(place);
  std::vector<Int> p_powers;
  for (int i = 0; i < f; ++i) p_powers.push_back(ipow(Int(p), static_cast<unsigned>(i)));

  std::map<PlaceSymbol, long long> work;
  accumulate(work, canonical(s, place, sym), 1);
  PlaceClass out;

  auto push = [&](std::vector<std::int64_t> n, const Int& D, long long coef) {
    accumulate(work, PlaceSymbol{mod_floor(D, modulus), std::move(n)}, coef);
  };

  while (!work.empty()) {
    if (fuel-- <= 0)
      throw FuelExhausted("Grothendieck rewriting exceeded its step budget");
    // Highest symbol first, so that cancellations between branches are
    // collected before they are expanded further.
    auto node = work.extract(std::prev(work.end()));
    PlaceSymbol cur = std::move(node.key());
    long long coef = node.mapped();

    if (std::find(cur.n.begin(), cur.n.end(), -1) != cur.n.end()) continue;

    auto bad = std::find_if(cur.n.begin(), cur.n.end(), [p](std::int64_t n) {
      return n < -1 || n > p - 1;
    });
    if (bad == cur.n.end()) {
      PlaceWeight w{{}, cur.D};
      for (auto n : cur.n) w.b.push_back(static_cast<int>(n + 2));
      auto [it, inserted] = out.try_emplace(std::move(w), coef);
      if (!inserted) {
        it->second += coef;
        if (it->second == 0) out.erase(it);
      }
      continue;
    }

    const auto i = static_cast<std::size_t>(bad - cur.n.begin());
    const std::int64_t m = cur.n[i];
    if (m < -1) {
      auto n = cur.n;
      n[i] = -m - 2;
      push(std::move(n), cur.D + Int(m + 1) * p_powers[i], -coef);
      continue;
    }

    if (f == 1) {
      // Single embedding: the periodic relation with n = 0 combined with
      // Sym^1 (x) Sym^a = Sym^{a+1} + det Sym^{a-1}.
      push({m - p + 1}, cur.D, coef);
      push({m - p - 1}, cur.D + 1, coef);
      push({m - 2 * p}, cur.D + 1, -coef);
      continue;
    }

    // tau_i = Fr^{-1} o tau_j.  Solve the relation for Sym^n_j Sym^m_i.
    const auto j = (i + 1) % static_cast<std::size_t>(f);
    const std::int64_t nj = cur.n[j];
    {
      auto n = cur.n;
      n[j] = nj - 1;
      n[i] = m - p;
      push(std::move(n), cur.D + p_powers[j], coef);
    }
    {
      auto n = cur.n;
      n[j] = nj + 1;
      n[i] = m - p;
      push(std::move(n), cur.D, coef);
    }
    {
      auto n = cur.n;
      n[i] = m - 2 * p;
      push(std::move(n), cur.D + p_powers[j], -coef);
    }
  }
  return out;
}

VirtualClass tensor_places(const PlaceStructure& s,
                           const std::vector<PlaceClass>& factors,
                           long long coef) {
  VirtualClass out(s);
  if (factors.size() != static_cast<std::size_t>(s.place_count()))
    throw DomainError("one factor per place is required");
  std::vector<std::pair<SerreWeight, long long>> acc{{SerreWeight{}, coef}};
  for (const auto& factor : factors) {
    std::vector<std::pair<SerreWeight, long long>> next;
    for (const auto& [w, m] : acc)
      for (const auto& [pw, pm] : factor) {
        SerreWeight x = w;
        x.places.push_back(pw);
        next.emplace_back(std::move(x), m * pm);
      }
    acc = std::move(next);
  }
  for (auto& [w, m] : acc) out.add(w, m);
  return out;
}

VirtualClass reduce(const SymbolicClass& c, ReduceStats* stats) {
  const auto& s = c.structure();
  const long long budget = fuel_budget(kDefaultRewriteFuel);
  long long fuel = budget;
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
        it = cache.emplace(ps, reduce_place(s, v, ps, fuel)).first;
      factors.push_back(it->second);
    }
    out += tensor_places(s, factors, t.coef);
  }
  if (stats != nullptr) stats->steps = budget - fuel;
  return out;
}

bool is_subquotient(const VirtualClass& a, const VirtualClass& b) {
  if (!(a.structure() == b.structure()))
    throw DomainError("classes belong to different place structures");
  return (b - a).is_effective();
}

std::set<SerreWeight> jh_set(const PlaceStructure& s, const Weight& w) {
  check_weight_shape(s, w);
  for (auto k : w.k)
    if (k < 2)
      throw DomainError("k = " + std::to_string(k) +
                        " does not give a representation (need k >= 2)");
  VirtualClass cls = reduce(SymbolicClass::from_weight(s, w));
  if (!cls.is_effective())
    throw DomainError("internal: genuine representation reduced to a "
                      "non-effective class");
  return cls.support();
}

}  // namespace swl
