#include "fom/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "fom/approx.hpp"
#include "fom/expr.hpp"
#include "fom/galois.hpp"
#include "fom/weil.hpp"

namespace fom::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  int conductor = 1;
  int field = 0;
  int k = 2;
  int sigma = 1;
  int generator = 1;
  int order = 1;
  int choice = -1;
  bool anti = false;
  std::string format = "human";
  std::string lambda, mu, value, points, map;
  std::string l1, l2, l3, m1, m2, m3;
};

CycElt element(const std::string& flag, const std::string& text, int n) {
  if (text.empty()) throw UsageError(flag + ": required");
  try {
    return parse_element(text, n);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what() + " at position " + std::to_string(e.position()));
  } catch (const DivisionByZero& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

SpherePoint sphere_point(const std::string& flag, const std::string& text, int n) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  if (t == "inf" || t == "oo") return SpherePoint::infinity();
  return SpherePoint(element(flag, text, n));
}

GaloisElement galois(const std::string& flag, int n, long a) {
  if (gcd_int(((a % n) + n) % n, n) != 1) throw UsageError(flag + ": " + std::to_string(a) + " is not a unit mod " + std::to_string(n));
  return GaloisElement(n, ((a % n) + n) % n);
}

json elt(const CycElt& u) { return u.to_string(); }

json elt_full(const CycElt& u) {
  json j;
  j["value"] = u.to_string();
  j["approx"] = approx_string(u, default_approx_bits());
  return j;
}

json point_json(const SpherePoint& p) { return p.to_string(); }

json moebius_json(const Moebius& m) {
  json j;
  j["a"] = m.a().to_string();
  j["b"] = m.b().to_string();
  j["c"] = m.c().to_string();
  j["d"] = m.d().to_string();
  j["anti"] = m.anti();
  j["display"] = m.to_string();
  return j;
}

json moebius_list(const std::vector<Moebius>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(moebius_json(m));
  return a;
}

json subfield_json(const Subfield& f) {
  json j;
  j["conductor"] = f.conductor;
  j["degree"] = f.degree();
  j["subgroup"] = f.subgroup;
  j["primitive"] = f.primitive.to_string();
  j["minpoly"] = f.minpoly.to_string("x");
  return j;
}

json iso_json(const MonomialIso& f) {
  json j;
  json perm = json::array();
  for (int i : f.perm) perm.push_back(i + 1);
  j["perm"] = perm;
  json s = json::array();
  for (const auto& c : f.scales) s.push_back(c.to_string());
  j["scales"] = s;
  j["display"] = f.to_string();
  return j;
}

Moebius parse_map(const Options& o, int n) {
  auto parts = split_list(o.map);
  if (o.map.empty() || parts.size() != 4) throw UsageError("--map: expected four comma-separated coefficients a,b,c,d");
  try {
    return Moebius(element("--map", parts[0], n), element("--map", parts[1], n),
                   element("--map", parts[2], n), element("--map", parts[3], n), o.anti);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("--map: ") + e.what());
  }
}

Configuration config_from(const Options& o, bool second) {
  const int n = o.conductor;
  if (second)
    return make_config(element("--m1", o.m1, n), element("--m2", o.m2, n), element("--m3", o.m3, n));
  return make_config(element("--l1", o.l1, n), element("--l2", o.l2, n), element("--l3", o.l3, n));
}

json config_json(const Configuration& c) {
  json j = json::array();
  for (const auto& l : c.lambdas()) j.push_back(l.to_string());
  return j;
}

FamilyParams family_from(const Options& o, json& doc) {
  CycElt lambda = element("--lambda", o.lambda, o.conductor);
  CycElt mu = element("--mu", o.mu, o.conductor);
  doc["input"]["conductor"] = o.conductor;
  doc["input"]["k"] = o.k;
  doc["input"]["lambda"] = elt_full(lambda);
  doc["input"]["mu"] = elt_full(mu);
  return validate(lambda, mu, o.k).lift(o.conductor);
}

json quadruple_json(const Quadruple& q) {
  json j;
  json pts = json::array();
  for (const auto& p : q.points) pts.push_back(point_json(p));
  j["points"] = pts;
  j["cross_ratio"] = q.cross_ratio.to_string();
  return j;
}

void render_human(const json& j, std::ostream& out, int indent, const std::string& key) {
  const std::string pad(indent, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    if (!key.empty()) out << pad << key << ":\n";
    for (const auto& [k, v] : j.items()) render_human(v, out, key.empty() ? indent : indent + 2, k);
  } else if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); });
    if (flat) {
      out << pad << key << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar(j[i]);
      out << "]\n";
    } else {
      out << pad << key << ":\n";
      for (std::size_t i = 0; i < j.size(); ++i) render_human(j[i], out, indent + 2, "[" + std::to_string(i) + "]");
    }
  } else {
    out << pad << key << ": " << scalar(j) << "\n";
  }
}

// CLI11 reads "-z" or "-1" as a flag; glue such values onto the option before them.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    bool dashed_value = a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h";
    if (dashed_value && !out.empty() && out.back().rfind("--", 0) == 0 &&
        out.back().find('=') == std::string::npos) {
      out.back() += "=" + a;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

using Handler = std::function<json(const Options&)>;

json cmd_crossratio(const Options& o) {
  auto parts = split_list(o.points);
  if (o.points.empty() || parts.size() != 4) throw UsageError("--points: expected four comma-separated points");
  std::array<SpherePoint, 4> p;
  json doc;
  doc["input"]["conductor"] = o.conductor;
  for (int i = 0; i < 4; ++i) {
    p[i] = sphere_point("--points", parts[i], o.conductor);
    doc["input"]["points"].push_back(point_json(p[i]));
  }
  CycElt cr = cross_ratio(p[0], p[1], p[2], p[3]);
  doc["result"]["cross_ratio"] = elt_full(cr);
  json orbit = json::array();
  for (const auto& v : g_orbit(cr)) orbit.push_back(elt(v));
  doc["result"]["g_orbit"] = orbit;
  doc["result"]["concircular"] = cr.is_zero() ? true : is_real(cr);
  return doc;
}

json cmd_circles(const Options& o) {
  Configuration c = config_from(o, false);
  json doc;
  doc["input"]["conductor"] = o.conductor;
  doc["input"]["lambdas"] = config_json(c);
  json q = json::array();
  for (const auto& quad : concircular_quadruples(c)) q.push_back(quadruple_json(quad));
  doc["result"]["quadruples"] = q;
  return doc;
}

json cmd_orbit(const Options& o) {
  json doc;
  doc["input"]["conductor"] = o.conductor;
  if (!o.value.empty()) {
    CycElt v = element("--value", o.value, o.conductor);
    doc["input"]["value"] = elt(v);
    json orbit = json::array();
    for (const auto& x : g_orbit(v)) orbit.push_back(elt(x));
    doc["result"]["g_orbit"] = orbit;
    return doc;
  }
  Configuration c = config_from(o, false);
  doc["input"]["lambdas"] = config_json(c);
  auto triples = u_orbit(c);
  doc["result"]["size"] = triples.size();
  json t = json::array();
  for (const auto& tr : triples) t.push_back({tr[0].to_string(), tr[1].to_string(), tr[2].to_string()});
  doc["result"]["triples"] = t;
  return doc;
}

json cmd_equiv(const Options& o) {
  Configuration a = config_from(o, false);
  Configuration b = config_from(o, true);
  json doc;
  doc["input"]["conductor"] = o.conductor;
  doc["input"]["first"] = config_json(a);
  doc["input"]["second"] = config_json(b);
  auto t = equivalent(a, b);
  doc["result"]["equivalent"] = t.has_value();
  doc["result"]["witness"] = t ? moebius_json(*t) : json(nullptr);
  return doc;
}

json cmd_symmetries(const Options& o) {
  Configuration c = config_from(o, false);
  json doc;
  doc["input"]["conductor"] = o.conductor;
  doc["input"]["lambdas"] = config_json(c);
  Symmetries s = symmetries(c);
  doc["result"]["conformal"] = moebius_list(s.conformal);
  doc["result"]["anticonformal"] = moebius_list(s.anticonformal);
  doc["result"]["anticonformal_squares"] = moebius_list(s.anticonformal_squares);
  return doc;
}

json cmd_validate(const Options& o) {
  json doc;
  family_from(o, doc);
  doc["result"]["valid"] = true;
  return doc;
}

json cmd_genus(const Options& o) {
  json doc;
  doc["input"]["k"] = o.k;
  try {
    doc["result"]["genus"] = genus(o.k);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("--k: ") + e.what());
  }
  return doc;
}

json cmd_analyze(const Options& o) {
  json doc;
  FamilyParams p = family_from(o, doc);
  FamilyReport r = analyze(p);
  json& res = doc["result"];
  res["pseudo_real"] = r.pseudo_real;
  res["genus"] = r.genus;
  res["aut_trivial"] = r.aut_trivial;
  res["conformal"] = moebius_list(r.conformal);
  res["anticonformal"] = moebius_list(r.anti_symmetries);
  res["anti_is_expected"] = r.anti_is_expected;
  res["anti_squares_identity"] = r.anti_squares_identity;
  const auto& a = r.alpha_constraints;
  res["alpha_k_powers"] = {a.alpha2.to_string(), a.alpha3.to_string(), a.alpha4.to_string(),
                           a.alpha5.to_string(), a.alpha6.to_string()};
  res["alpha_transport_verified"] = r.alpha_transport_verified;
  res["involution_obstructed"] = r.involution_obstructed;
  json q = json::array();
  for (const auto& quad : r.quadruples) q.push_back(quadruple_json(quad));
  res["quadruples"] = q;
  return doc;
}

json cmd_classify(const Options& o) {
  json doc;
  FamilyParams p = family_from(o, doc);
  doc["input"]["sigma"] = o.sigma;
  SigmaClassification c = classify_sigma(p, galois("--sigma", o.conductor, o.sigma));
  json& res = doc["result"];
  res["sigma_lambda"] = elt(c.sigma_lambda);
  res["sigma_mu"] = elt(c.sigma_mu);
  json rows = json::array();
  for (const auto& m : c.matched_rows) rows.push_back({{"row", m.row}, {"sign", m.sign}});
  res["rows"] = rows;
  res["witness"] = c.witness ? moebius_json(*c.witness) : json(nullptr);
  res["oracle_maps"] = moebius_list(c.oracle_maps);
  res["oracle_agrees"] = c.brute_force_agree;
  return doc;
}

json cmd_stabilizer(const Options& o) {
  json doc;
  FamilyParams p = family_from(o, doc);
  doc["result"]["stabilizer"] = stabilizer(p, o.conductor);
  return doc;
}

json cmd_moduli(const Options& o) {
  json doc;
  FamilyParams p = family_from(o, doc);
  ModuliResult r = field_of_moduli(p, o.conductor);
  json& res = doc["result"];
  res["stabilizer"] = r.stabilizer;
  res["moduli_field"] = subfield_json(r.moduli_field);
  res["hypothesis_lambda_squared_rational"] = r.hypothesis_r4_rational;
  res["hypothesis_no_negation"] = r.hypothesis_no_negation;
  res["min_def_field"] = subfield_json(r.min_def_field);
  res["degree_over_moduli"] = r.degree_over_moduli;
  res["min_def_field_is_minimal"] = r.theorem_applies;
  return doc;
}

int ambient(const Options& o) {
  int m = o.field ? o.field : o.conductor;
  if (m % o.conductor != 0) throw UsageError("--field: must be a multiple of --conductor");
  return m;
}

json cmd_lift(const Options& o) {
  json doc;
  FamilyParams p = family_from(o, doc);
  const int m = ambient(o);
  doc["input"]["field"] = m;
  doc["input"]["sigma"] = o.sigma;
  Moebius t = parse_map(o, o.conductor);
  doc["input"]["map"] = moebius_json(t);
  LiftResult r = lift_to_monomial(t, p, galois("--sigma", m, o.sigma), m);
  json& res = doc["result"];
  json perm = json::array();
  for (int i : r.perm) perm.push_back(i + 1);
  res["perm"] = perm;
  json pw = json::array();
  for (const auto& u : r.powers) pw.push_back(u.to_string());
  res["scale_powers"] = pw;
  json isos = json::array();
  for (const auto& f : r.isos) isos.push_back(iso_json(f));
  res["isomorphisms"] = isos;
  res["missing_radicals"] = r.missing_radicals;
  return doc;
}

json cmd_weil(const Options& o) {
  json doc;
  FamilyParams p = family_from(o, doc);
  const int m = ambient(o);
  doc["input"]["field"] = m;
  doc["input"]["generator"] = o.generator;
  doc["input"]["order"] = o.order;
  Moebius t = parse_map(o, o.conductor);
  doc["input"]["map"] = moebius_json(t);
  const GaloisElement g = galois("--generator", m, o.generator);
  LiftResult lifted = lift_to_monomial(t, p, g, m);
  json& res = doc["result"];
  res["missing_radicals"] = lifted.missing_radicals;
  json cands = json::array();
  int closing = 0;
  for (std::size_t i = 0; i < lifted.isos.size(); ++i) {
    if (o.choice >= 0 && static_cast<std::size_t>(o.choice) != i) continue;
    WeilDatum d;
    try {
      d = extend_cyclic(lifted.isos[i], g, o.order, p);
    } catch (const PreconditionError& e) {
      throw UsageError(std::string("--order: ") + e.what());
    }
    CocycleResult c = cocycle_check(d);
    json cj;
    cj["index"] = i;
    cj["generator_map"] = iso_json(lifted.isos[i]);
    cj["closing_map"] = iso_json(*d.closing);
    cj["closes"] = d.closes;
    cj["cocycle_ok"] = c.ok;
    cj["failing_pair"] = c.failing_pair ? json({c.failing_pair->first, c.failing_pair->second}) : json(nullptr);
    cj["failing_transport"] = c.failing_transport ? json(*c.failing_transport) : json(nullptr);
    if (c.ok) ++closing;
    cands.push_back(cj);
  }
  res["candidates"] = cands;
  res["passing"] = closing;
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fields of moduli and Weil descent for a pseudo-real family", "fom"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "human or structured")->check(CLI::IsMember({"human", "structured"}));
  };
  auto add_config = [&](CLI::App* s, bool second) {
    s->add_option("--conductor", o.conductor)->check(CLI::PositiveNumber);
    s->add_option("--l1", o.l1);
    s->add_option("--l2", o.l2);
    s->add_option("--l3", o.l3);
    if (second) {
      s->add_option("--m1", o.m1);
      s->add_option("--m2", o.m2);
      s->add_option("--m3", o.m3);
    }
  };
  auto add_family = [&](CLI::App* s) {
    s->add_option("--conductor", o.conductor)->check(CLI::PositiveNumber);
    s->add_option("--k", o.k);
    s->add_option("--lambda", o.lambda)->required();
    s->add_option("--mu", o.mu)->required();
  };

  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    add_format(s);
    commands.emplace_back(s, std::move(h));
    return s;
  };

  auto* s = sub("crossratio", "cross-ratio of four points", cmd_crossratio);
  s->add_option("--conductor", o.conductor)->check(CLI::PositiveNumber);
  s->add_option("--points", o.points, "a,b,c,d (inf allowed)")->required();

  add_config(sub("circles", "concircular quadruples of {inf,0,1,l1,l2,l3}", cmd_circles), false);
  s = sub("orbit", "G-orbit of --value, or the equivalence class of a triple", cmd_orbit);
  add_config(s, false);
  s->add_option("--value", o.value);
  add_config(sub("equiv", "Moebius equivalence of two configurations", cmd_equiv), true);
  add_config(sub("symmetries", "conformal and anticonformal symmetries", cmd_symmetries), false);

  add_family(sub("validate", "check family parameters", cmd_validate));
  sub("genus", "genus of the family curve", cmd_genus)->add_option("--k", o.k)->required();
  add_family(sub("analyze", "pseudo-reality report", cmd_analyze));
  s = sub("classify", "table row matched by sigma_a", cmd_classify);
  add_family(s);
  s->add_option("--sigma", o.sigma)->required();
  add_family(sub("stabilizer", "Galois stabilizer in (Z/n)^*", cmd_stabilizer));
  add_family(sub("moduli", "field of moduli and minimal field of definition", cmd_moduli));

  s = sub("lift", "monomial lifts of a Moebius map", cmd_lift);
  add_family(s);
  s->add_option("--field", o.field, "ambient conductor m for the scales");
  s->add_option("--sigma", o.sigma)->required();
  s->add_option("--map", o.map, "a,b,c,d")->required();
  s->add_flag("--anti", o.anti);

  s = sub("weil-check", "cyclic Weil cocycle for every lift of a Moebius map", cmd_weil);
  add_family(s);
  s->add_option("--field", o.field, "ambient conductor m");
  s->add_option("--generator", o.generator)->required();
  s->add_option("--order", o.order)->required();
  s->add_option("--map", o.map, "a,b,c,d")->required();
  s->add_option("--choice", o.choice, "restrict to one lift by index");

  std::vector<std::string> args = glue_negative_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  for (auto& [cmd, handler] : commands) {
    if (!cmd->parsed()) continue;
    json doc;
    doc["command"] = cmd->get_name();
    int code = kOk;
    try {
      json body = handler(o);
      for (auto& [k, v] : body.items()) doc[k] = v;
      doc["status"] = "ok";
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return kUsage;
    } catch (const ValidationError& e) {
      doc["status"] = "rejected";
      doc["diagnostic"] = {{"clause", clause_name(e.clause())}, {"message", e.what()}};
      code = kRejected;
    } catch (const Error& e) {
      doc["status"] = "rejected";
      doc["diagnostic"] = {{"message", e.what()}};
      code = kRejected;
    }
    if (o.format == "structured")
      out << doc.dump(2) << "\n";
    else
      render_human(doc, out, 0, "");
    return code;
  }
  return kUsage;
}

}  // namespace fom::cli
