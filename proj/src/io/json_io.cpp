#include "degen/io/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

#include "degen/error.hpp"

#ifndef DEGEN_DATA_DIR
#define DEGEN_DATA_DIR "data"
#endif

namespace degen::io {

using strata::GeneralFiberData;
using strata::SpecialFiberModel;
using strata::StratumRecord;

namespace {

std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }

void require_object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ValidationError(path.empty() ? "/" : path, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) throw ValidationError(join(path, k), "unknown field");
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(join(path, key), "missing required field");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

long get_long(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ValidationError(path, "expected an integer");
  return j.get<long>();
}

bool get_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw ValidationError(path, "expected a boolean");
  return j.get<bool>();
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ValidationError(path, "expected a string");
  return j.get<std::string>();
}

std::vector<long> get_long_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path, "expected an array of integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_long(j[i], join(path, std::to_string(i))));
  return out;
}

lmhs::HodgeDiamond diamond_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path, "expected a Hodge diamond (array of rows)");
  lmhs::HodgeDiamond h;
  for (std::size_t i = 0; i < j.size(); ++i) h.push_back(get_long_list(j[i], join(path, std::to_string(i))));
  return h;
}

long parse_key(const std::string& key, const std::string& path) {
  try {
    std::size_t used = 0;
    const long v = std::stol(key, &used);
    if (used == key.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError(join(path, key), "expected an integer key");
}

template <typename F>
auto rethrow_under(const std::string& prefix, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw e.under(prefix);
  }
}

StratumRecord record_from_json(const Json& j, long k, const std::string& path) {
  require_object(j, path, {"chi_top", "chi_struct", "hodge_chis", "chern_c1cd"});
  StratumRecord r;
  r.k = k;
  r.chi_top = get_long(field(j, "chi_top", path), join(path, "chi_top"));
  if (auto* v = optional_field(j, "chi_struct")) r.chi_struct = get_long(*v, join(path, "chi_struct"));
  if (auto* v = optional_field(j, "hodge_chis")) r.hodge_chis = get_long_list(*v, join(path, "hodge_chis"));
  if (auto* v = optional_field(j, "chern_c1cd")) r.chern_c1cd = rational_from_json(*v, join(path, "chern_c1cd"));
  return r;
}

// Sum of per-component records; optional fields must be present on all or none.
StratumRecord sum_records(const std::vector<StratumRecord>& rs, const std::string& path) {
  StratumRecord out = rs.front();
  for (std::size_t i = 1; i < rs.size(); ++i) {
    const auto& r = rs[i];
    const std::string at = join(path, std::to_string(i));
    out.chi_top += r.chi_top;
    if (out.chi_struct.has_value() != r.chi_struct.has_value())
      throw ValidationError(join(at, "chi_struct"), "present on some components only");
    if (out.chi_struct) *out.chi_struct += *r.chi_struct;
    if (out.chern_c1cd.has_value() != r.chern_c1cd.has_value())
      throw ValidationError(join(at, "chern_c1cd"), "present on some components only");
    if (out.chern_c1cd) *out.chern_c1cd += *r.chern_c1cd;
    if (out.hodge_chis.has_value() != r.hodge_chis.has_value())
      throw ValidationError(join(at, "hodge_chis"), "present on some components only");
    if (out.hodge_chis) {
      if (out.hodge_chis->size() != r.hodge_chis->size())
        throw ValidationError(join(at, "hodge_chis"), "length differs between components");
      for (std::size_t j = 0; j < r.hodge_chis->size(); ++j) (*out.hodge_chis)[j] += (*r.hodge_chis)[j];
    }
  }
  return out;
}

Json record_to_json(const StratumRecord& r) {
  Json j;
  j["chi_top"] = r.chi_top;
  if (r.chi_struct) j["chi_struct"] = *r.chi_struct;
  if (r.hodge_chis) j["hodge_chis"] = *r.hodge_chis;
  if (r.chern_c1cd) j["chern_c1cd"] = to_json(*r.chern_c1cd);
  return j;
}

Json diamond_to_json(const lmhs::HodgeDiamond& h) {
  Json j = Json::array();
  for (const auto& row : h) j.push_back(row);
  return j;
}

// Canonical form of a builtin preset reference.
Json preset_json(const Json& j, const std::string& path) {
  const std::string name = get_string(field(j, "preset", path), join(path, "preset"));
  Json out;
  out["preset"] = name;
  if (name == "odp") {
    require_object(j, path, {"preset", "count", "hodge"});
    out["count"] = get_long(field(j, "count", path), join(path, "count"));
    if (auto* h = optional_field(j, "hodge")) out["hodge"] = diamond_to_json(diamond_from_json(*h, join(path, "hodge")));
  } else if (name == "pure") {
    require_object(j, path, {"preset", "hodge"});
    out["hodge"] = diamond_to_json(diamond_from_json(field(j, "hodge", path), join(path, "hodge")));
  } else {
    require_object(j, path, {"preset"});
  }
  return out;
}

lmhs::LimitingMHS explicit_mhs(const Json& j, long n, const std::string& path) {
  require_object(j, path, {"degrees"});
  const Json& ds = field(j, "degrees", path);
  if (!ds.is_array()) throw ValidationError(join(path, "degrees"), "expected an array");
  std::map<long, lmhs::DegreeData> degrees;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const std::string at = join(join(path, "degrees"), std::to_string(i));
    const Json& d = ds[i];
    require_object(d, at, {"k", "table", "betti", "rotations"});
    const long k = get_long(field(d, "k", at), join(at, "k"));
    if (degrees.count(k)) throw ValidationError(join(at, "k"), "duplicate degree");
    const Json& t = field(d, "table", at);
    if (!t.is_array()) throw ValidationError(join(at, "table"), "expected an array of [p, w, dim]");
    std::map<lmhs::HodgeDeligneTable::Key, long> dims;
    for (std::size_t r = 0; r < t.size(); ++r) {
      const std::string rat = join(join(at, "table"), std::to_string(r));
      const auto e = get_long_list(t[r], rat);
      if (e.size() != 3) throw ValidationError(rat, "expected [p, w, dim]");
      if (dims.count({e[0], e[1]})) throw ValidationError(rat, "duplicate (p, w) entry");
      dims[{e[0], e[1]}] = e[2];
    }
    std::optional<long> betti;
    if (auto* b = optional_field(d, "betti")) betti = get_long(*b, join(at, "betti"));
    auto table = rethrow_under(at, [&] { return lmhs::HodgeDeligneTable(k, n, dims, betti); });
    lmhs::GrFRotations rot;
    if (auto* r = optional_field(d, "rotations")) {
      const std::string rat = join(at, "rotations");
      if (!r->is_object()) throw ValidationError(rat, "expected an object keyed by level p");
      for (const auto& [key, vals] : r->items()) {
        const long p = parse_key(key, rat);
        if (!vals.is_array()) throw ValidationError(join(rat, key), "expected an array of rotation numbers");
        exactalg::RotationMultiset ms;
        for (std::size_t v = 0; v < vals.size(); ++v) {
          const std::string vat = join(join(rat, key), std::to_string(v));
          const Rational a = rational_from_json(vals[v], vat);
          if (a.sign() < 0 || a >= Rational(1)) throw ValidationError(vat, "rotation number must lie in [0, 1)");
          ms.emplace_back(a);
        }
        rot[p] = std::move(ms);
      }
    }
    degrees.emplace(k, lmhs::DegreeData{std::move(table), std::move(rot)});
  }
  return rethrow_under(path, [&] { return lmhs::LimitingMHS(n, std::move(degrees)); });
}

}  // namespace

Json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ValidationError(path, "expected an exact rational \"p/q\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception&) {
    throw ValidationError(path, "malformed rational \"" + j.get<std::string>() + "\"");
  }
}

Json to_json(const RationalMatrix& m) {
  Json j = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    j.push_back(row);
  }
  return j;
}

RationalMatrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ValidationError(path, "expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  RationalMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string at = join(path, std::to_string(r));
    if (!j[r].is_array() || j[r].size() != cols) throw ValidationError(at, "rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rational_from_json(j[r][c], join(at, std::to_string(c)));
  }
  return m;
}

Json to_json(const GeneralFiberData& f) {
  Json j;
  j["n"] = f.n;
  j["chi_top"] = f.chi_top;
  if (f.chi_struct) j["chi_struct"] = *f.chi_struct;
  if (f.hodge_chis) j["hodge_chis"] = *f.hodge_chis;
  if (f.betti) j["betti"] = *f.betti;
  j["type"] = strata::to_string(f.type);
  return j;
}

GeneralFiberData fiber_from_json(const Json& j, const std::string& path) {
  require_object(j, path, {"n", "chi_top", "chi_struct", "hodge_chis", "betti", "type"});
  GeneralFiberData f;
  f.n = get_long(field(j, "n", path), join(path, "n"));
  f.chi_top = get_long(field(j, "chi_top", path), join(path, "chi_top"));
  if (auto* v = optional_field(j, "chi_struct")) f.chi_struct = get_long(*v, join(path, "chi_struct"));
  if (auto* v = optional_field(j, "hodge_chis")) f.hodge_chis = get_long_list(*v, join(path, "hodge_chis"));
  if (auto* v = optional_field(j, "betti")) f.betti = get_long_list(*v, join(path, "betti"));
  if (auto* v = optional_field(j, "type")) {
    try {
      f.type = strata::parse_fiber_type(get_string(*v, join(path, "type")));
    } catch (const ValidationError&) {
      throw;
    } catch (const Error& e) {
      throw ValidationError(join(path, "type"), e.what());
    }
  }
  rethrow_under(path, [&] { strata::validate(f); });
  return f;
}

Json to_json(const SpecialFiberModel& m) {
  Json j;
  Json comps = Json::array();
  for (const auto& c : m.components) comps.push_back(Json{{"name", c.name}, {"multiplicity", c.multiplicity}});
  j["components"] = comps;
  Json st = Json::object();
  for (const auto& [k, r] : m.strata) st[std::to_string(k)] = record_to_json(r);
  j["strata"] = st;
  if (m.b_integral) j["B_integral"] = to_json(*m.b_integral);
  if (m.quadruple_count) j["quadruple_count"] = *m.quadruple_count;
  j["semistable"] = m.semistable;
  j["kulikov"] = m.kulikov;
  if (m.singularities) {
    const auto& s = *m.singularities;
    Json sj;
    sj["isolated"] = s.isolated;
    sj["rational"] = s.rational;
    sj["odp_only"] = s.odp_only;
    if (s.odp_count) sj["odp_count"] = *s.odp_count;
    if (s.milnor) sj["milnor"] = *s.milnor;
    j["singularities"] = sj;
  }
  if (m.desing_chi_struct) j["desing_chi_struct"] = *m.desing_chi_struct;
  return j;
}

SpecialFiberModel model_from_json(const Json& j, long n, const std::string& path) {
  require_object(j, path, {"components", "strata", "B_integral", "quadruple_count", "semistable", "kulikov",
                           "singularities", "desing_chi_struct"});
  SpecialFiberModel m;
  m.n = n;
  const std::string cpath = join(path, "components");
  const Json& comps = field(j, "components", path);
  if (!comps.is_array()) throw ValidationError(cpath, "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string at = join(cpath, std::to_string(i));
    require_object(comps[i], at, {"name", "multiplicity"});
    strata::Component c;
    c.name = get_string(field(comps[i], "name", at), join(at, "name"));
    if (auto* v = optional_field(comps[i], "multiplicity")) c.multiplicity = get_long(*v, join(at, "multiplicity"));
    m.components.push_back(c);
  }
  const std::string spath = join(path, "strata");
  const Json& st = field(j, "strata", path);
  if (!st.is_object()) throw ValidationError(spath, "expected an object keyed by codimension k");
  for (const auto& [key, v] : st.items()) {
    const long k = parse_key(key, spath);
    const std::string at = join(spath, key);
    if (v.is_array()) {
      if (v.empty()) throw ValidationError(at, "empty component list");
      std::vector<StratumRecord> rs;
      for (std::size_t i = 0; i < v.size(); ++i) rs.push_back(record_from_json(v[i], k, join(at, std::to_string(i))));
      m.strata[k] = sum_records(rs, at);
    } else {
      m.strata[k] = record_from_json(v, k, at);
    }
  }
  if (auto* v = optional_field(j, "B_integral")) m.b_integral = rational_from_json(*v, join(path, "B_integral"));
  if (auto* v = optional_field(j, "quadruple_count")) m.quadruple_count = get_long(*v, join(path, "quadruple_count"));
  if (auto* v = optional_field(j, "semistable")) m.semistable = get_bool(*v, join(path, "semistable"));
  if (auto* v = optional_field(j, "kulikov")) m.kulikov = get_bool(*v, join(path, "kulikov"));
  if (auto* v = optional_field(j, "singularities")) {
    const std::string at = join(path, "singularities");
    require_object(*v, at, {"isolated", "rational", "odp_only", "odp_count", "milnor"});
    strata::Singularities s;
    if (auto* x = optional_field(*v, "isolated")) s.isolated = get_bool(*x, join(at, "isolated"));
    if (auto* x = optional_field(*v, "rational")) s.rational = get_bool(*x, join(at, "rational"));
    if (auto* x = optional_field(*v, "odp_only")) s.odp_only = get_bool(*x, join(at, "odp_only"));
    if (auto* x = optional_field(*v, "odp_count")) s.odp_count = get_long(*x, join(at, "odp_count"));
    if (auto* x = optional_field(*v, "milnor")) s.milnor = get_long(*x, join(at, "milnor"));
    m.singularities = s;
  }
  if (auto* v = optional_field(j, "desing_chi_struct"))
    m.desing_chi_struct = get_long_list(*v, join(path, "desing_chi_struct"));
  rethrow_under(path, [&] { strata::validate(m); });
  return m;
}

Json to_json(const lmhs::LimitingMHS& mhs) {
  Json ds = Json::array();
  for (const auto& [k, d] : mhs.degrees()) {
    Json dj;
    dj["k"] = k;
    Json t = Json::array();
    for (const auto& [key, dim] : d.table.dims()) t.push_back(Json::array({key.first, key.second, dim}));
    dj["table"] = t;
    Json rot = Json::object();
    for (const auto& [p, ms] : d.rotations) {
      bool trivial = true;
      for (const auto& r : ms) trivial = trivial && r.value().is_zero();
      if (trivial) continue;
      Json vals = Json::array();
      for (const auto& r : exactalg::sorted(ms)) vals.push_back(to_json(r.value()));
      rot[std::to_string(p)] = vals;
    }
    if (!rot.empty()) dj["rotations"] = rot;
    ds.push_back(dj);
  }
  return Json{{"degrees", ds}};
}

PresetResolver PresetResolver::from(const std::optional<std::string>& flag) {
  if (flag) return {std::filesystem::path(*flag)};
  if (const char* env = std::getenv("BCOV_PRESETS"); env && *env) return {std::filesystem::path(env)};
  return {std::filesystem::path(DEGEN_DATA_DIR) / "presets"};
}

lmhs::LimitingMHS mhs_from_json(const Json& j, long n, const PresetResolver& presets, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path, "expected an object");
  if (!j.contains("preset")) return explicit_mhs(j, n, path);
  const Json p = preset_json(j, path);
  const std::string name = p["preset"].get<std::string>();
  if (name == "nodal_elliptic") {
    if (n != 1) throw ValidationError(join(path, "preset"), "nodal_elliptic needs n = 1");
    return lmhs::nodal_elliptic();
  }
  if (name == "odp") {
    std::optional<lmhs::HodgeDiamond> h;
    if (p.contains("hodge")) h = diamond_from_json(p["hodge"], join(path, "hodge"));
    return rethrow_under(path, [&] { return lmhs::odp(n, p["count"].get<long>(), h); });
  }
  if (name == "pure") {
    const auto h = diamond_from_json(p["hodge"], join(path, "hodge"));
    if (static_cast<long>(h.size()) != n + 1) throw ValidationError(join(path, "hodge"), "expected n+1 rows");
    return rethrow_under(path, [&] { return lmhs::pure(n, h); });
  }
  if (!presets.dir) throw ValidationError(join(path, "preset"), "no preset directory configured");
  const auto file = *presets.dir / (name + ".json");
  if (!std::filesystem::exists(file))
    throw ValidationError(join(path, "preset"), "unknown preset \"" + name + "\" (looked in " + presets.dir->string() + ")");
  const Json body = read_json_file(file);
  if (body.contains("preset")) throw ValidationError(join(path, "preset"), "preset file " + file.string() + " refers to another preset");
  try {
    return explicit_mhs(body, n, "");
  } catch (const ValidationError& e) {
    throw ValidationError(join(path, "preset"), "preset " + name + " at " + e.path() + ": " + e.reason());
  }
}

Json to_json(const bcov::FamilyContext& c) {
  Json j;
  j["compact_base"] = c.compact_base;
  j["primitive"] = c.primitive;
  j["non_isotrivial"] = c.non_isotrivial;
  if (c.total_nodes) j["total_nodes"] = *c.total_nodes;
  return j;
}

bcov::FamilyContext family_from_json(const Json& j, const std::string& path) {
  require_object(j, path, {"compact_base", "primitive", "non_isotrivial", "total_nodes"});
  bcov::FamilyContext c;
  if (auto* v = optional_field(j, "compact_base")) c.compact_base = get_bool(*v, join(path, "compact_base"));
  if (auto* v = optional_field(j, "primitive")) c.primitive = get_bool(*v, join(path, "primitive"));
  if (auto* v = optional_field(j, "non_isotrivial")) c.non_isotrivial = get_bool(*v, join(path, "non_isotrivial"));
  if (auto* v = optional_field(j, "total_nodes")) c.total_nodes = get_long(*v, join(path, "total_nodes"));
  return c;
}

Descriptor parse_descriptor(const Json& j, const PresetResolver& presets) {
  require_object(j, "", {"version", "fiber", "special_fiber", "mhs", "options"});
  const std::string version = get_string(field(j, "version", ""), "/version");
  if (version != kVersion) throw ValidationError("/version", "unsupported version \"" + version + "\", expected " + kVersion);
  Descriptor d;
  d.fiber = fiber_from_json(field(j, "fiber", ""));
  d.model = model_from_json(field(j, "special_fiber", ""), d.fiber.n);
  if (auto* m = optional_field(j, "mhs")) {
    d.mhs = mhs_from_json(*m, d.fiber.n, presets);
    d.mhs_source = m->contains("preset") ? preset_json(*m, "/mhs") : to_json(*d.mhs);
  }
  if (auto* o = optional_field(j, "options")) {
    require_object(*o, "/options", {"family"});
    if (auto* f = optional_field(*o, "family")) d.family = family_from_json(*f);
  }
  return d;
}

Json serialize(const Descriptor& d) {
  Json j;
  j["version"] = kVersion;
  j["fiber"] = to_json(d.fiber);
  j["special_fiber"] = to_json(d.model);
  if (d.mhs) j["mhs"] = d.mhs_source.is_null() ? to_json(*d.mhs) : d.mhs_source;
  j["options"] = Json{{"family", to_json(d.family)}};
  return j;
}

bool Analysis::consistent() const {
  for (const auto& c : cross_checks)
    if (!c.pass) return false;
  return report.inconsistencies.empty();
}

Analysis analyze(const Descriptor& d) {
  Analysis a;
  a.report = bcov::analyze(d.model, d.fiber, d.mhs, d.family);
  if (d.mhs) {
    try {
      a.breakdown = bcov::kappa_general(d.model, d.fiber, *d.mhs, monodromy::Branch::Upper, monodromy::Branch::Lower);
    } catch (const Error&) {
    }
  }
  std::map<std::string, Rational> v(a.report.formulas.begin(), a.report.formulas.end());
  const auto compare = [&](const std::string& ref, const std::string& other) {
    if (!v.count(ref) || !v.count(other)) return;
    a.cross_checks.push_back({other + " = " + ref, v.at(ref), v.at(other), v.at(ref) == v.at(other)});
  };
  // reference: kappa_general when available, else the first closed form
  std::string ref;
  for (const auto& [name, value] : a.report.formulas)
    if (name.rfind("kappa_", 0) == 0) {
      if (ref.empty()) ref = name;
      else compare(ref, name);
    }
  compare("rho", "rho_odp");
  if (v.count("chi_generic_semistable")) {
    const Rational chi(d.fiber.chi_top);
    a.cross_checks.push_back({"chi_generic_semistable = fiber.chi_top", chi, v.at("chi_generic_semistable"),
                              chi == v.at("chi_generic_semistable")});
  }
  return a;
}

Json to_json(const Analysis& a, const Descriptor& d) {
  std::map<std::string, Rational> v(a.report.formulas.begin(), a.report.formulas.end());
  Json j;
  j["version"] = kVersion;
  j["n"] = d.fiber.n;
  j["branches"] = Json{{"alpha", "upper"}, {"alpha_pq", "lower"}};
  j["kappa"] = v.count("kappa_general") ? to_json(v.at("kappa_general")) : Json();
  j["rho"] = v.count("rho") ? to_json(v.at("rho")) : Json();
  if (a.breakdown) {
    const auto& b = *a.breakdown;
    j["kappa_breakdown"] = Json{{"euler_term", to_json(b.euler_term)},         {"strata_term", to_json(b.strata_term)},
                                {"b_term", to_json(b.b_term)},                 {"chern_term", to_json(b.chern_term)},
                                {"alpha_top_term", to_json(b.alpha_top_term)}, {"alpha_hodge_term", to_json(b.alpha_hodge_term)},
                                {"total", to_json(b.total)}};
  }
  Json f = Json::object();
  for (const auto& [name, value] : a.report.formulas) f[name] = to_json(value);
  j["formulas"] = f;
  Json u = Json::object();
  for (const auto& [name, why] : a.report.unavailable) u[name] = why;
  j["unavailable"] = u;
  Json cc = Json::array();
  for (const auto& c : a.cross_checks)
    cc.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"expected", to_json(c.expected)}, {"actual", to_json(c.actual)}});
  for (const auto& [name, why] : a.report.inconsistencies)
    cc.push_back(Json{{"name", name}, {"pass", false}, {"detail", why}});
  j["cross_checks"] = cc;
  Json ls = Json::array();
  for (const auto& l : a.report.lints) {
    Json lj{{"name", l.name}, {"status", bcov::to_string(l.status)}, {"message", l.message}};
    if (l.value) lj["value"] = l.value->get_str();
    ls.push_back(lj);
  }
  j["lints"] = ls;
  j["status"] = a.consistent() ? "ok" : "inconsistent";
  return j;
}

hodgemetrics::TorusDescriptor torus_from_json(const Json& j) {
  require_object(j, "", {"version", "n", "J", "omega"});
  if (auto* v = optional_field(j, "version"))
    if (get_string(*v, "/version") != kVersion) throw ValidationError("/version", std::string("expected ") + kVersion);
  hodgemetrics::TorusDescriptor t;
  t.n = get_long(field(j, "n", ""), "/n");
  t.J = matrix_from_json(field(j, "J", ""), "/J");
  t.omega = matrix_from_json(field(j, "omega", ""), "/omega");
  hodgemetrics::validate(t);
  return t;
}

Json to_json(const hodgemetrics::CovolumeReport& r) {
  Json c = Json::array();
  for (const auto& x : r.covol_sq) c.push_back(to_json(x));
  const std::size_t top = r.covol_sq.size() - 1;
  bool duality = true;
  for (std::size_t k = 0; k <= top; ++k) duality = duality && r.covol_sq[k] * r.covol_sq[top - k] == Rational(1);
  return Json{{"version", kVersion}, {"covol_sq", c}, {"B_squared", to_json(r.b_squared)}, {"duality", duality}};
}

Json to_json(const periods::FitResult& f, const std::string& model) {
  const bool bcov = model == "bcov";
  return Json{{"model", model},
              {bcov ? "kappa_hat" : "alpha_hat", f.alpha_hat},
              {bcov ? "rho_hat" : "beta_hat", f.beta_hat},
              {"const_hat", f.const_hat},
              {"residual", f.residual}};
}

Json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("", std::string("JSON syntax: ") + e.what());
  }
}

}  // namespace degen::io
