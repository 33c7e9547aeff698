#include "swl/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>

#include "swl/bdj.hpp"
#include "swl/error.hpp"
#include "swl/shift.hpp"

namespace swl {

namespace {

Expr expr_from(const json& j) {
  if (j.is_number_integer()) return Expr::number(Int(j.get<std::int64_t>()));
  if (j.is_string()) return parse_expr(j.get<std::string>());
  throw ParseError("expected an expression, got " + j.dump());
}

std::vector<Expr> exprs_from(const json& j) {
  if (!j.is_array()) throw ParseError("expected a list of expressions, got " + j.dump());
  std::vector<Expr> out;
  for (const auto& e : j) out.push_back(expr_from(e));
  return out;
}

ClassSpec class_spec_from(const json& j) {
  if (j.is_string()) return ClassSpec{parse_class(j.get<std::string>())};
  if (j.is_object() && j.contains("weight")) {
    const auto& w = j["weight"];
    return ClassSpec{ClassSpec::WeightRef{exprs_from(w.at("k")), exprs_from(w.at("l"))}};
  }
  if (j.is_object() && j.contains("stratum")) {
    auto v = exprs_from(j["stratum"]);
    if (v.size() != 2) throw ParseError("stratum needs [k0, k1]");
    return ClassSpec{ClassSpec::StratumRef{v[0], v[1]}};
  }
  throw ParseError("bad class operand " + j.dump());
}

std::vector<ClassExpr> class_list(const json& j) {
  if (!j.is_array()) throw ParseError("expected a list of classes");
  std::vector<ClassExpr> out;
  for (const auto& e : j) out.push_back(parse_class(e.get<std::string>()));
  return out;
}

std::int64_t to_i64(const Int& v) {
  if (v > Int(std::int64_t{1} << 40) || v < -Int(std::int64_t{1} << 40))
    throw DomainError("parameter value out of range");
  return static_cast<std::int64_t>(v);
}

std::vector<std::int64_t> eval_vec(const std::vector<Expr>& v, const Env& env) {
  std::vector<std::int64_t> out;
  for (const auto& e : v) out.push_back(to_i64(e.eval(env)));
  return out;
}

SymbolicClass weight_class(const PlaceStructure& s, const Weight& w) {
  // V_{k,-k-l}
  Weight v = w;
  for (std::size_t i = 0; i < v.l.size(); ++i) v.l[i] = -w.k[i] - w.l[i];
  return SymbolicClass::from_weight(s, v);
}

SymbolicClass class_of(const ClassSpec& spec, const PlaceStructure& s,
                       const Env& env) {
  if (const auto* c = std::get_if<ClassExpr>(&spec.value)) return eval_class(*c, s, env);
  if (const auto* w = std::get_if<ClassSpec::WeightRef>(&spec.value))
    return weight_class(s, Weight{eval_vec(w->k, env), eval_vec(w->l, env)});
  const auto& st = std::get<ClassSpec::StratumRef>(spec.value);
  return weight_class(s, stratum_weight(s.p(), to_i64(st.k0.eval(env)),
                                        to_i64(st.k1.eval(env))));
}

std::set<SerreWeight> weight_set(const std::vector<ClassExpr>& members,
                                 const PlaceStructure& s, const Env& env) {
  std::set<SerreWeight> out;
  for (const auto& m : members) {
    VirtualClass c = reduce(eval_class(m, s, env));
    if (c.terms().size() != 1 || c.terms().begin()->second != 1)
      throw ParseError("set member is not a single Serre weight");
    out.insert(c.terms().begin()->first);
  }
  return out;
}

std::string describe(const Env& env) {
  std::string out;
  for (const auto& [k, v] : env) {
    if (k == "p") continue;
    if (!out.empty()) out += ", ";
    out += k + "=" + v.str();
  }
  return out.empty() ? "" : "at " + out + ": ";
}

using Check = std::function<std::optional<std::string>(const Env&)>;

std::optional<std::string> check_identity(const Claim& c, const PlaceStructure& s,
                                          const Env& env, bool subquotient) {
  VirtualClass L = reduce(class_of(*c.lhs, s, env));
  VirtualClass R = reduce(class_of(*c.rhs, s, env));
  if (subquotient) {
    if (is_subquotient(L, R)) return std::nullopt;
    return "rhs - lhs = " + to_text(s, R - L);
  }
  if (L == R) return std::nullopt;
  return "lhs - rhs = " + to_text(s, L - R);
}

std::optional<std::string> check_intersection(const Claim& c, const PlaceStructure& s,
                                              const Env& env) {
  std::set<SerreWeight> jh;
  if (c.lhs) {
    VirtualClass cls = reduce(class_of(*c.lhs, s, env));
    if (!cls.is_effective()) throw ParseError("intersection class is not effective");
    jh = cls.support();
  }
  std::optional<SerreWeight> member;
  if (c.member) member = *weight_set({*c.member}, s, env).begin();
  std::set<SerreWeight> exception = weight_set(c.exception, s, env);

  for (const auto& named : c.sets) {
    auto set = weight_set(named.members, s, env);
    bool meets = std::any_of(set.begin(), set.end(),
                             [&](const SerreWeight& w) { return jh.count(w) > 0; });
    bool has_member = member && set.count(*member) > 0;
    bool ok = false;
    if (c.mode == "disjoint") ok = !meets;
    else if (c.mode == "member_or_disjoint") ok = has_member || !meets;
    else if (c.mode == "member_unless_equal") ok = has_member || set == exception;
    else throw ParseError("unknown intersection mode '" + c.mode + "'");
    if (!ok) return "set " + named.name + " violates " + c.mode;
  }
  return std::nullopt;
}

std::optional<std::string> check_forcing(const Claim& c, const PlaceStructure& s,
                                         const Env& env) {
  InducedStructure st;
  if (c.structure == "split") st = InducedStructure::split;
  else if (c.structure == "inert") st = InducedStructure::inert_quadratic;
  else throw ParseError("unknown forcing structure '" + c.structure + "'");
  auto got = induced_character_weights(s.p(), st);
  std::set<std::vector<int>> want;
  for (const auto& k : c.expected_k) {
    std::vector<int> v;
    for (auto x : eval_vec(k, env)) v.push_back(static_cast<int>(x));
    want.insert(v);
  }
  if (got == want) return std::nullopt;
  std::string text = "computed {";
  for (const auto& k : got) {
    std::vector<std::int64_t> v(k.begin(), k.end());
    text += to_text(v) + " ";
  }
  return text + "}";
}

std::optional<std::string> check_poset(const Claim& c, const PlaceStructure& s,
                                       const Env& env, long long& cases) {
  const auto lo = to_i64(c.box_lo.eval(env));
  const auto hi = to_i64(c.box_hi.eval(env));
  const auto d = static_cast<std::size_t>(s.total_degree());
  std::set<std::vector<std::int64_t>> excluded;
  for (const auto& e : c.exclude) excluded.insert(eval_vec(e, env));

  std::vector<std::vector<std::int64_t>> box;
  std::vector<std::int64_t> k(d, lo);
  while (true) {
    if (in_minimal_cone(s, k, true)) box.push_back(k);
    std::size_t i = 0;
    while (i < d && ++k[i] > hi) k[i++] = lo;
    if (i == d) break;
  }
  std::map<std::vector<std::int64_t>, VirtualClass> cls;
  auto class_for = [&](const std::vector<std::int64_t>& w) -> const VirtualClass& {
    auto it = cls.find(w);
    if (it == cls.end())
      it = cls.emplace(w, reduce(SymbolicClass::from_weight(
                              s, Weight{w, std::vector<std::int64_t>(d, 0)}))).first;
    return it->second;
  };
  for (const auto& kp : box) {
    if (excluded.count(kp)) continue;
    for (const auto& kk : box) {
      if (!le_ha(s, kp, kk)) continue;
      ++cases;
      if (!is_subquotient(class_for(kp), class_for(kk)))
        return "[V_" + to_text(kp) + "] not <= [V_" + to_text(kk) + "]";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_shift(const Claim& c, const PlaceStructure& s,
                                       const Env& env) {
  if (c.check == "ops") {
    Weight w{eval_vec(c.start_k, env), eval_vec(c.start_l, env)};
    for (const auto& op : c.ops) {
      auto digits = op.find_first_of("0123456789");
      if (digits == std::string::npos) throw ParseError("bad op '" + op + "'");
      int tau = std::stoi(op.substr(digits));
      std::string name = op.substr(0, digits);
      if (name == "Ha") w = hasse_shift(s, w, tau);
      else if (name == "Theta") w = theta_shift(s, w, tau);
      else throw ParseError("bad op '" + op + "'");
    }
    Weight want{eval_vec(c.expected_wk, env), eval_vec(c.expected_wl, env)};
    if (w == want) return std::nullopt;
    return "got " + to_text(w) + ", expected " + to_text(want);
  }
  if (c.check == "cone_reduce") {
    auto got = cone_reduce(s, eval_vec(c.start_k, env));
    auto want = eval_vec(c.expected_wk, env);
    if (got == want) return std::nullopt;
    return "got " + to_text(got);
  }
  if (c.check == "liftable" || c.check == "minimal" || c.check == "minimal_plus") {
    auto k = eval_vec(c.start_k, env);
    bool got = c.check == "liftable" ? in_liftable_cone(s, k)
                                     : in_minimal_cone(s, k, c.check == "minimal_plus");
    if (!c.expected_bool) throw ParseError("predicate check needs a boolean");
    if (got == *c.expected_bool) return std::nullopt;
    return c.check + to_text(k) + " = " + (got ? "true" : "false");
  }
  if (c.check == "le_ha") {
    auto got = le_ha(s, eval_vec(c.start_k, env), eval_vec(c.aux_k, env));
    if (c.expected_none) {
      if (!got) return std::nullopt;
      return "unexpected witness " + to_text(*got);
    }
    auto want = eval_vec(c.expected_wk, env);
    if (got && *got == want) return std::nullopt;
    return got ? "witness " + to_text(*got) : std::string("no witness");
  }
  if (c.check == "stratum") {
    auto k = eval_vec(c.start_k, env);
    if (k.size() != 2) throw ParseError("stratum check needs [k0, k1]");
    Weight got = stratum_weight(s.p(), k[0], k[1]);
    Weight want{eval_vec(c.expected_wk, env), eval_vec(c.expected_wl, env)};
    if (got == want) return std::nullopt;
    return "got " + to_text(got);
  }
  throw ParseError("unknown shift check '" + c.check + "'");
}

}  // namespace

Claim claim_from_json(const json& j) {
  Claim c;
  c.id = j.at("id").get<std::string>();
  try {
    c.anchor = j.at("anchor").get<std::string>();
    c.kind = j.at("kind").get<std::string>();
    if (j.contains("provenance")) c.provenance = j["provenance"].get<std::string>();
    if (j.contains("places")) c.places = j["places"].get<std::vector<int>>();
    if (j.contains("primes")) {
      const auto& pr = j["primes"];
      if (pr.contains("min")) c.min_p = pr["min"].get<int>();
      if (pr.contains("max")) c.max_p = pr["max"].get<int>();
      if (pr.contains("only")) c.only_p = pr["only"].get<std::vector<int>>();
    }
    if (j.contains("params"))
      for (const auto& p : j["params"])
        c.params.push_back(Param{p.at("name").get<std::string>(), expr_from(p.at("from")),
                                 expr_from(p.at("to"))});
    if (j.contains("let"))
      for (const auto& l : j["let"])
        c.lets.emplace_back(l.at(0).get<std::string>(), expr_from(l.at(1)));
    if (j.contains("where"))
      for (const auto& w : j["where"]) c.where.push_back(expr_from(w));

    if (c.kind == "identity" || c.kind == "subquotient") {
      c.lhs = class_spec_from(j.at("lhs"));
      c.rhs = class_spec_from(j.at("rhs"));
    } else if (c.kind == "intersection") {
      c.mode = j.at("mode").get<std::string>();
      if (j.contains("class")) c.lhs = class_spec_from(j["class"]);
      if (j.contains("member")) c.member = parse_class(j["member"].get<std::string>());
      if (j.contains("exception")) c.exception = class_list(j["exception"]);
      for (const auto& [name, members] : j.at("sets").items())
        c.sets.push_back(NamedSet{name, class_list(members)});
      if ((c.mode == "member_or_disjoint" || c.mode == "member_unless_equal") && !c.member)
        throw ParseError("mode " + c.mode + " needs a member");
      if (c.mode != "member_unless_equal" && !c.lhs)
        throw ParseError("mode " + c.mode + " needs a class");
    } else if (c.kind == "forcing") {
      c.structure = j.at("structure").get<std::string>();
      for (const auto& k : j.at("expected")) c.expected_k.push_back(exprs_from(k));
    } else if (c.kind == "poset") {
      const auto& box = j.at("box");
      c.box_lo = expr_from(box.at(0));
      c.box_hi = expr_from(box.at(1));
      if (j.contains("exclude"))
        for (const auto& k : j["exclude"]) c.exclude.push_back(exprs_from(k));
    } else if (c.kind == "shift") {
      c.check = j.at("check").get<std::string>();
      if (c.check == "ops") {
        c.start_k = exprs_from(j.at("start").at("k"));
        c.start_l = exprs_from(j.at("start").at("l"));
        c.ops = j.at("ops").get<std::vector<std::string>>();
        c.expected_wk = exprs_from(j.at("expected").at("k"));
        c.expected_wl = exprs_from(j.at("expected").at("l"));
      } else if (c.check == "cone_reduce") {
        c.start_k = exprs_from(j.at("input"));
        c.expected_wk = exprs_from(j.at("expected"));
      } else if (c.check == "le_ha") {
        c.start_k = exprs_from(j.at("k1"));
        c.aux_k = exprs_from(j.at("k2"));
        if (j.at("expected").is_null()) c.expected_none = true;
        else c.expected_wk = exprs_from(j["expected"]);
      } else if (c.check == "stratum") {
        c.start_k = exprs_from(j.at("input"));
        c.expected_wk = exprs_from(j.at("expected").at("k"));
        c.expected_wl = exprs_from(j.at("expected").at("l"));
      } else {
        c.start_k = exprs_from(j.at("k"));
        c.expected_bool = j.at("expected").get<bool>();
      }
    } else {
      throw ParseError("unknown claim kind '" + c.kind + "'");
    }
  } catch (const json::exception& e) {
    throw ParseError("claim " + c.id + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError("claim " + c.id + ": " + e.what());
  }
  return c;
}

ClaimRegistry ClaimRegistry::from_json(const json& j) {
  ClaimRegistry reg;
  if (!j.contains("claims") || !j["claims"].is_array())
    throw ParseError("fixture file needs a \"claims\" list");
  std::set<std::string> ids;
  for (const auto& cj : j["claims"]) {
    Claim c = claim_from_json(cj);
    if (!ids.insert(c.id).second) throw ParseError("duplicate claim id " + c.id);
    reg.claims_.push_back(std::move(c));
  }
  return reg;
}

ClaimRegistry ClaimRegistry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fixture file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("fixture file " + path + ": " + e.what());
  }
  return from_json(j);
}

const Claim& ClaimRegistry::find(const std::string& id) const {
  for (const auto& c : claims_)
    if (c.id == id) return c;
  throw ParseError("unknown claim id '" + id + "'");
}

bool claim_applies(const Claim& c, int p) {
  if (!c.only_p.empty())
    return std::find(c.only_p.begin(), c.only_p.end(), p) != c.only_p.end();
  return p >= c.min_p && (!c.max_p || p <= *c.max_p);
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "PASS";
    case ClaimStatus::fail: return "FAIL";
    case ClaimStatus::skipped: return "SKIP";
  }
  return "?";
}

ClaimReport run_claim(const Claim& c, int p) {
  if (p < 3 || !is_prime(p)) throw ParseError(std::to_string(p) + " is not a prime >= 3");
  if (!claim_applies(c, p))
    throw ParseError("p = " + std::to_string(p) + " is outside the range of claim " + c.id);
  auto t0 = std::chrono::steady_clock::now();
  PlaceStructure s(p, c.places);
  ClaimReport rep;
  rep.id = c.id;
  rep.p = p;

  Check check = [&](const Env& env) -> std::optional<std::string> {
    if (c.kind == "identity") return check_identity(c, s, env, false);
    if (c.kind == "subquotient") return check_identity(c, s, env, true);
    if (c.kind == "intersection") return check_intersection(c, s, env);
    if (c.kind == "forcing") return check_forcing(c, s, env);
    if (c.kind == "poset") {
      --rep.cases;  // counted per pair instead
      return check_poset(c, s, env, rep.cases);
    }
    return check_shift(c, s, env);
  };

  std::optional<std::string> failure;
  std::function<void(std::size_t, Env&)> walk = [&](std::size_t i, Env& env) {
    if (failure) return;
    if (i == c.params.size()) {
      Env full = env;
      for (const auto& [name, e] : c.lets) full[name] = e.eval(full);
      for (const auto& w : c.where)
        if (w.eval(full) == 0) return;
      ++rep.cases;
      if (auto f = check(full)) failure = describe(full) + *f;
      return;
    }
    const auto& prm = c.params[i];
    Int lo = prm.from.eval(env);
    Int hi = prm.to.eval(env);
    for (Int v = lo; v <= hi && !failure; ++v) {
      env[prm.name] = v;
      walk(i + 1, env);
    }
    env.erase(prm.name);
  };
  Env env{{"p", Int(p)}};
  walk(0, env);

  if (failure) {
    rep.status = ClaimStatus::fail;
    rep.detail = *failure;
  } else if (rep.cases <= 0) {
    rep.status = ClaimStatus::skipped;
    rep.detail = "no parameter values in range";
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

bool SuiteReport::ok() const {
  return std::none_of(reports.begin(), reports.end(),
                      [](const ClaimReport& r) { return r.status == ClaimStatus::fail; });
}

SuiteReport run_suite(const ClaimRegistry& reg, const std::vector<int>& primes) {
  for (int p : primes)
    if (p < 3 || !is_prime(p)) throw ParseError(std::to_string(p) + " is not a prime >= 3");
  SuiteReport out;
  for (const auto& c : reg.claims())
    for (int p : primes) {
      if (!claim_applies(c, p)) {
        out.reports.push_back(ClaimReport{c.id, p, ClaimStatus::skipped, 0,
                                          "outside declared prime range", 0});
        continue;
      }
      out.reports.push_back(run_claim(c, p));
    }
  std::stable_sort(out.reports.begin(), out.reports.end(),
                   [](const ClaimReport& a, const ClaimReport& b) {
                     return std::tie(a.id, a.p) < std::tie(b.id, b.p);
                   });
  return out;
}

std::vector<Claim> multiplicity_mutants(const Claim& c) {
  std::vector<Claim> out;
  if (c.kind != "identity") return out;
  for (int side = 0; side < 2; ++side) {
    const auto& spec = side == 0 ? *c.lhs : *c.rhs;
    const auto* expr = std::get_if<ClassExpr>(&spec.value);
    if (!expr) continue;
    for (std::size_t i = 0; i < expr->terms.size(); ++i)
      for (long long delta : {1LL, -1LL}) {
        Claim m = c;
        ClassSpec mutated{expr->with_bumped_coefficient(i, delta)};
        (side == 0 ? m.lhs : m.rhs) = mutated;
        m.id = c.id + (side == 0 ? "/lhs" : "/rhs") + std::to_string(i) +
               (delta > 0 ? "+1" : "-1");
        out.push_back(std::move(m));
      }
  }
  return out;
}

std::string default_fixtures_dir() {
#ifdef SWL_FIXTURES_DIR
  return SWL_FIXTURES_DIR;
#else
  return "fixtures";
#endif
}

}  // namespace swl
