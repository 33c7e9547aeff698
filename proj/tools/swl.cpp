// swl: command-line front end.  Vectors are comma-separated in embedding
// order tau_0, tau_1, ... (global numbering across places).

#include <charconv>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swl/bdj.hpp"
#include "swl/brauer.hpp"
#include "swl/error.hpp"
#include "swl/expr.hpp"
#include "swl/format.hpp"
#include "swl/groth.hpp"
#include "swl/harness.hpp"
#include "swl/shift.hpp"

using namespace swl;

namespace {

std::vector<std::int64_t> parse_vec(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw ParseError("bad integer '" + item + "' in vector '" + text + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

Int parse_int(const std::string& text) {
  std::size_t start = text.size() > 0 && (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size() ||
      text.find_first_not_of("0123456789", start) != std::string::npos)
    throw ParseError("bad integer '" + text + "'");
  Int v(text.substr(start));
  return text[0] == '-' ? Int(-v) : v;
}

struct Structure {
  int p = 0;
  std::string places = "1";
  bool json = false;

  void add_to(CLI::App* app) {
    app->add_option("--p", p, "prime")->required();
    app->add_option("--places", places, "residue degrees, e.g. \"2\" or \"1,1,1\"");
    app->add_flag("--json", json, "JSON output");
  }

  PlaceStructure build() const {
    if (p < 3 || !is_prime(p)) throw ParseError("--p must be an odd prime");
    std::vector<int> degrees;
    for (auto d : parse_vec(places)) {
      if (d < 1 || d > 64) throw ParseError("--places entries must lie in [1, 64]");
      degrees.push_back(static_cast<int>(d));
    }
    return PlaceStructure(p, degrees);
  }
};

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

struct ClassInput {
  std::string k, l, cls;

  void add_to(CLI::App* app) {
    app->add_option("--k", k, "weight vector k");
    app->add_option("--l", l, "twist vector l (default 0); the class is det^l Sym^{k-2}");
    app->add_option("--class", cls, "class in notation, e.g. \"e^3 Sym[0]^2 Sym[1]^4\"");
  }

  SymbolicClass build(const PlaceStructure& s) const {
    if (!cls.empty()) {
      if (!k.empty() || !l.empty()) throw ParseError("give either --class or --k/--l");
      return parse_symbolic(cls, s);
    }
    if (k.empty()) throw ParseError("--k or --class is required");
    Weight w{parse_vec(k), {}};
    w.l = l.empty() ? std::vector<std::int64_t>(w.k.size(), 0) : parse_vec(l);
    return SymbolicClass::from_weight(s, w);
  }
};

struct TypeInput {
  std::string type, e1 = "0", e2 = "0", ext = "unknown", orbit = "0";
  int place = 0;

  void add_to(CLI::App* app) {
    app->add_option("--type", type, "reducible | irreducible")->required();
    app->add_option("--e1", e1, "reducible: exponent of chi_1");
    app->add_option("--e2", e2, "reducible: exponent of chi_2");
    app->add_option("--ext", ext, "split | generic | peu | tres | unknown");
    app->add_option("--orbit", orbit, "irreducible: niveau-2f exponent a");
    app->add_option("--place", place, "place index");
  }

  InertialType build(const PlaceStructure& s) const {
    return make(s, type, place, e1, e2, ext, orbit);
  }

  static InertialType make(const PlaceStructure& s, const std::string& type, int place,
                           const std::string& e1, const std::string& e2,
                           const std::string& ext, const std::string& orbit) {
    if (place < 0 || place >= s.place_count()) throw ParseError("--place out of range");
    if (type == "reducible")
      return make_reducible(s, place, parse_int(e1), parse_int(e2), parse_extension_flag(ext));
    if (type == "irreducible") return make_irreducible(s, place, parse_int(orbit));
    throw ParseError("--type must be reducible or irreducible");
  }
};

std::string j_text(const std::vector<int>& J) {
  std::string out = "{";
  for (std::size_t i = 0; i < J.size(); ++i) out += (i ? "," : "") + std::to_string(J[i]);
  return out + "}";
}

std::string type_text(const InertialType& t) {
  if (t.kind == InertialType::Kind::reducible)
    return "reducible e1=" + t.e1.str() + " e2=" + t.e2.str() + " ext=" + to_string(t.ext);
  return "irreducible orbit=" + t.orbit.str();
}

json type_json(const InertialType& t) {
  json j;
  j["place"] = t.place;
  if (t.kind == InertialType::Kind::reducible) {
    j["type"] = "reducible";
    j["e1"] = t.e1.str();
    j["e2"] = t.e2.str();
    j["ext"] = to_string(t.ext);
  } else {
    j["type"] = "irreducible";
    j["orbit"] = t.orbit.str();
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Serre weight calculus"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // decompose / oracle-decompose
  Structure st_dec;
  ClassInput in_dec;
  auto* dec = app.add_subcommand("decompose", "decompose a class by Grothendieck rewriting");
  st_dec.add_to(dec);
  in_dec.add_to(dec);

  Structure st_or;
  ClassInput in_or;
  bool or_serial = false;
  long long or_cap = OracleOptions{}.max_group_size;
  auto* orc = app.add_subcommand("oracle-decompose", "decompose a class with Brauer characters");
  st_or.add_to(orc);
  in_or.add_to(orc);
  orc->add_flag("--serial", or_serial, "run the serial reference kernel");
  orc->add_option("--max-group-size", or_cap, "cap on p^{2f} per place");

  // jh
  Structure st_jh;
  std::string jh_k, jh_l;
  auto* jh = app.add_subcommand("jh", "Jordan-Holder set of det^l Sym^{k-2}");
  st_jh.add_to(jh);
  jh->add_option("--k", jh_k)->required();
  jh->add_option("--l", jh_l);

  // subquotient
  Structure st_sq;
  std::string sq_a, sq_b;
  auto* sq = app.add_subcommand("subquotient", "is [a] <= [b] after decomposition");
  st_sq.add_to(sq);
  sq->add_option("--a", sq_a)->required();
  sq->add_option("--b", sq_b)->required();

  // bdj / bdj-product / twist
  Structure st_bdj;
  TypeInput in_bdj;
  auto* bdj = app.add_subcommand("bdj", "weight candidates for an inertial type");
  st_bdj.add_to(bdj);
  in_bdj.add_to(bdj);

  Structure st_prod;
  std::vector<std::string> prod_types;
  auto* prod = app.add_subcommand("bdj-product", "product of per-place candidate sets");
  st_prod.add_to(prod);
  prod->add_option("--t", prod_types,
                   "one per place, in order: reducible,E1,E2,EXT or irreducible,A")
      ->required();

  Structure st_tw;
  std::string tw_type, tw_e1 = "0", tw_e2 = "0", tw_ext = "unknown", tw_orbit = "0",
                       tw_k, tw_l, tw_lp;
  int tw_place = 0;
  auto* tw = app.add_subcommand("twist", "twist an inertial type (--type) or a weight (--k)");
  st_tw.add_to(tw);
  tw->add_option("--type", tw_type);
  tw->add_option("--e1", tw_e1);
  tw->add_option("--e2", tw_e2);
  tw->add_option("--ext", tw_ext);
  tw->add_option("--orbit", tw_orbit);
  tw->add_option("--place", tw_place);
  tw->add_option("--k", tw_k);
  tw->add_option("--l", tw_l);
  tw->add_option("--lp", tw_lp, "twist vector l'")->required();

  // cone
  auto* cone = app.add_subcommand("cone", "minimal and liftable cones");
  cone->require_subcommand(1);
  Structure st_cm;
  std::string cm_k;
  auto* cm = cone->add_subcommand("member", "cone membership of k");
  st_cm.add_to(cm);
  cm->add_option("--k", cm_k)->required();
  Structure st_cr;
  std::string cr_k;
  auto* cr = cone->add_subcommand("reduce", "reduce k into the minimal cone");
  st_cr.add_to(cr);
  cr->add_option("--k", cr_k)->required();

  // le-ha
  Structure st_le;
  std::string le_k1, le_k2;
  auto* le = app.add_subcommand("le-ha", "k1 <=_Ha k2, with the Hasse multiplicities");
  st_le.add_to(le);
  le->add_option("--k1", le_k1)->required();
  le->add_option("--k2", le_k2)->required();

  // shift
  auto* sh = app.add_subcommand("shift", "theta and Hasse weight shifts");
  sh->require_subcommand(1);
  Structure st_th, st_ha;
  std::string th_k, th_l, ha_k, ha_l;
  int th_tau = 0, ha_tau = 0;
  auto* th = sh->add_subcommand("theta", "theta operator at tau");
  st_th.add_to(th);
  th->add_option("--k", th_k)->required();
  th->add_option("--l", th_l);
  th->add_option("--tau", th_tau)->required();
  auto* ha = sh->add_subcommand("hasse", "partial Hasse invariant at tau");
  st_ha.add_to(ha);
  ha->add_option("--k", ha_k)->required();
  ha->add_option("--l", ha_l);
  ha->add_option("--tau", ha_tau)->required();

  // stratum-weight
  int sw_p = 0;
  std::int64_t sw_k0 = 0, sw_k1 = 0;
  bool sw_json = false;
  auto* sw = app.add_subcommand("stratum-weight", "weight on the stratum for (k0, k1)");
  sw->add_option("--p", sw_p)->required();
  sw->add_option("--k0", sw_k0)->required();
  sw->add_option("--k1", sw_k1)->required();
  sw->add_flag("--json", sw_json);

  // induced
  int ind_p = 0;
  std::string ind_structure;
  bool ind_json = false;
  auto* ind = app.add_subcommand("induced", "weights forced by induced characters");
  ind->add_option("--p", ind_p)->required();
  ind->add_option("--structure", ind_structure, "split | inert")->required();
  ind->add_flag("--json", ind_json);

  // verify
  std::string v_suite = "paper", v_fixtures = default_fixtures_dir();
  std::vector<int> v_primes;
  std::vector<std::string> v_claims;
  bool v_json = false;
  auto* ver = app.add_subcommand("verify", "check the claim registry");
  ver->add_option("--suite", v_suite, "fixture suite name (<fixtures>/<suite>.claims.json)");
  ver->add_option("--p", v_primes, "prime (repeatable)");
  ver->add_option("--fixtures", v_fixtures, "fixture directory");
  ver->add_option("--claim", v_claims, "restrict to claim id (repeatable)");
  ver->add_flag("--json", v_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (dec->parsed() || orc->parsed()) {
    const auto& stc = dec->parsed() ? st_dec : st_or;
    auto s = stc.build();
    auto sym = (dec->parsed() ? in_dec : in_or).build(s);
    VirtualClass c =
        dec->parsed()
            ? reduce(sym)
            : brauer_decompose(sym, OracleOptions{or_cap, or_serial ? Exec::serial
                                                                    : Exec::parallel});
    if (stc.json) print(to_json(c));
    else std::cout << to_text(s, c) << "\n";
    return 0;
  }
  if (jh->parsed()) {
    auto s = st_jh.build();
    Weight w{parse_vec(jh_k), {}};
    w.l = jh_l.empty() ? std::vector<std::int64_t>(w.k.size(), 0) : parse_vec(jh_l);
    auto set = jh_set(s, w);
    if (st_jh.json) {
      json j = json::array();
      for (const auto& x : set) j.push_back(to_json(x));
      print(j);
    } else {
      for (const auto& x : set) std::cout << to_text(s, x) << "\n";
    }
    return 0;
  }
  if (sq->parsed()) {
    auto s = st_sq.build();
    VirtualClass a = reduce(parse_symbolic(sq_a, s));
    VirtualClass b = reduce(parse_symbolic(sq_b, s));
    bool r = is_subquotient(a, b);
    if (st_sq.json) print(json{{"result", r}, {"difference", to_json(b - a)}});
    else std::cout << (r ? "true" : "false") << "\n";
    return 0;
  }
  if (bdj->parsed()) {
    auto s = st_bdj.build();
    auto cands = bdj_candidates(s, in_bdj.build(s));
    if (st_bdj.json) {
      json j = json::array();
      for (const auto& c : cands) j.push_back(to_json(c));
      print(j);
    } else {
      for (const auto& c : cands) {
        PlaceStructure single(s.p(), {s.degree(in_bdj.place)});
        std::cout << to_text(single, SerreWeight{{c.weight}}) << "  J=" << j_text(c.J)
                  << "  " << to_string(c.certainty) << "\n";
      }
    }
    return 0;
  }
  if (prod->parsed()) {
    auto s = st_prod.build();
    if (static_cast<int>(prod_types.size()) != s.place_count())
      throw ParseError("bdj-product needs one --t per place");
    std::vector<InertialType> ts;
    for (int v = 0; v < s.place_count(); ++v) {
      std::vector<std::string> parts;
      std::string spec = prod_types[static_cast<std::size_t>(v)];
      std::size_t pos = 0;
      while (true) {
        auto c = spec.find(',', pos);
        parts.push_back(spec.substr(pos, c - pos));
        if (c == std::string::npos) break;
        pos = c + 1;
      }
      if (parts[0] == "reducible" && parts.size() == 4)
        ts.push_back(TypeInput::make(s, parts[0], v, parts[1], parts[2], parts[3], "0"));
      else if (parts[0] == "irreducible" && parts.size() == 2)
        ts.push_back(TypeInput::make(s, parts[0], v, "0", "0", "unknown", parts[1]));
      else
        throw ParseError("bad --t '" + spec + "'");
    }
    auto cands = bdj_product(s, ts);
    if (st_prod.json) {
      json j = json::array();
      for (const auto& c : cands) j.push_back(to_json(c));
      print(j);
    } else {
      for (const auto& c : cands)
        std::cout << to_text(s, c.weight) << "  " << to_string(c.certainty) << "\n";
    }
    return 0;
  }
  if (tw->parsed()) {
    auto s = st_tw.build();
    auto lp = parse_vec(tw_lp);
    if (!tw_type.empty()) {
      if (!tw_k.empty()) throw ParseError("give either --type or --k");
      auto t = TypeInput::make(s, tw_type, tw_place, tw_e1, tw_e2, tw_ext, tw_orbit);
      auto r = twist_inertial(s, t, lp);
      if (st_tw.json) print(type_json(r));
      else std::cout << type_text(r) << "\n";
      return 0;
    }
    if (tw_k.empty()) throw ParseError("twist needs --type or --k");
    Weight w{parse_vec(tw_k), {}};
    w.l = tw_l.empty() ? std::vector<std::int64_t>(w.k.size(), 0) : parse_vec(tw_l);
    check_weight_shape(s, w);
    auto r = twist_weight(w, lp);
    if (st_tw.json) print(to_json(r));
    else std::cout << to_text(r) << "\n";
    return 0;
  }
  if (cm->parsed()) {
    auto s = st_cm.build();
    auto k = parse_vec(cm_k);
    bool minimal = in_minimal_cone(s, k);
    bool plus = in_minimal_cone(s, k, true);
    bool liftable = in_liftable_cone(s, k);
    if (st_cm.json) {
      print(json{{"minimal", minimal}, {"minimal_plus", plus}, {"liftable", liftable}});
    } else {
      std::cout << "minimal " << (minimal ? "true" : "false") << "\n"
                << "minimal_plus " << (plus ? "true" : "false") << "\n"
                << "liftable " << (liftable ? "true" : "false") << "\n";
    }
    return 0;
  }
  if (cr->parsed()) {
    auto s = st_cr.build();
    auto r = cone_reduce(s, parse_vec(cr_k));
    if (st_cr.json) print(json(r));
    else std::cout << to_text(r) << "\n";
    return 0;
  }
  if (le->parsed()) {
    auto s = st_le.build();
    auto r = le_ha(s, parse_vec(le_k1), parse_vec(le_k2));
    if (st_le.json) print(r ? json{{"le", true}, {"n", *r}} : json{{"le", false}});
    else std::cout << (r ? "true " + to_text(*r) : std::string("false")) << "\n";
    return 0;
  }
  if (th->parsed() || ha->parsed()) {
    bool theta = th->parsed();
    const auto& stc = theta ? st_th : st_ha;
    auto s = stc.build();
    Weight w{parse_vec(theta ? th_k : ha_k), {}};
    const auto& l = theta ? th_l : ha_l;
    w.l = l.empty() ? std::vector<std::int64_t>(w.k.size(), 0) : parse_vec(l);
    int tau = theta ? th_tau : ha_tau;
    Weight r = theta ? theta_shift(s, w, tau) : hasse_shift(s, w, tau);
    if (stc.json) {
      json j = to_json(r);
      if (theta) j["divisibility"] = to_string(theta_divisibility_flag(s, w, tau));
      print(j);
    } else {
      std::cout << to_text(r) << "\n";
    }
    return 0;
  }
  if (sw->parsed()) {
    if (sw_p < 3 || !is_prime(sw_p)) throw ParseError("--p must be an odd prime");
    Weight r = stratum_weight(sw_p, sw_k0, sw_k1);
    if (sw_json) print(to_json(r));
    else std::cout << to_text(r) << "\n";
    return 0;
  }
  if (ind->parsed()) {
    if (ind_p < 3 || !is_prime(ind_p)) throw ParseError("--p must be an odd prime");
    InducedStructure which;
    if (ind_structure == "split") which = InducedStructure::split;
    else if (ind_structure == "inert") which = InducedStructure::inert_quadratic;
    else throw ParseError("--structure must be split or inert");
    auto r = induced_character_weights(ind_p, which);
    if (ind_json) {
      print(json(r));
    } else {
      for (const auto& k : r) {
        std::vector<std::int64_t> v(k.begin(), k.end());
        std::cout << to_text(v) << "\n";
      }
    }
    return 0;
  }
  if (ver->parsed()) {
    auto reg = ClaimRegistry::load(v_fixtures + "/" + v_suite + ".claims.json");
    SuiteReport rep;
    if (v_claims.empty()) {
      rep = run_suite(reg, v_primes);
    } else {
      for (const auto& id : v_claims) reg.find(id);
      for (int p : v_primes)
        if (p < 3 || !is_prime(p)) throw ParseError(std::to_string(p) + " is not a prime >= 3");
      for (const auto& id : v_claims)
        for (int p : v_primes) {
          const Claim& c = reg.find(id);
          if (claim_applies(c, p)) rep.reports.push_back(run_claim(c, p));
          else
            rep.reports.push_back(
                ClaimReport{id, p, ClaimStatus::skipped, 0, "outside declared prime range", 0});
        }
      std::stable_sort(rep.reports.begin(), rep.reports.end(),
                       [](const ClaimReport& a, const ClaimReport& b) {
                         return std::tie(a.id, a.p) < std::tie(b.id, b.p);
                       });
    }
    if (v_json) {
      json j = json::array();
      for (const auto& r : rep.reports)
        j.push_back(json{{"id", r.id},
                         {"p", r.p},
                         {"status", to_string(r.status)},
                         {"cases", r.cases},
                         {"detail", r.detail}});
      print(j);
    } else {
      for (const auto& r : rep.reports) {
        std::cout << to_string(r.status) << "  " << r.id << "  p=" << r.p
                  << "  cases=" << r.cases;
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << "\n";
      }
    }
    return rep.ok() ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
