#include "rotsurf/serialization.hpp"

#include <cmath>
#include <cstdio>

#include "rotsurf/errors.hpp"

namespace rotsurf {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct FamilyEntry {
  const char* token;
  CurveFamily family;
};

constexpr FamilyEntry kFamilies[] = {
    {"elliptic_thm2_i", CurveFamily::EllipticCircle},
    {"elliptic_thm2_ii", CurveFamily::EllipticSpiral},
    {"hyperbolic_thm5_i", CurveFamily::HyperbolicBranch},
    {"hyperbolic_thm5_ii", CurveFamily::HyperbolicSpiral},
    {"parabolic_thm7", CurveFamily::ParabolicLog},
    {"custom_analytic", CurveFamily::Custom},
};

struct KindEntry {
  const char* token;
  SurfaceKind kind;
};

constexpr KindEntry kKinds[] = {
    {"elliptic", SurfaceKind::Elliptic},
    {"hyperbolic", SurfaceKind::Hyperbolic},
    {"parabolic", SurfaceKind::Parabolic},
};

[[noreturn]] void fail(const std::string& msg) {
  throw InvalidInputError(msg);
}

const json& require_key(const json& j, const char* key,
                        const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing key '" + key + "'");
  return *it;
}

double as_number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where + ": expected a number");
  return j.get<double>();
}

Interval as_interval(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    fail(where + ": expected [lo, hi]");
  return Interval{as_number(j[0], where), as_number(j[1], where)};
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> ok,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : ok) known = known || it.key() == k;
    if (!known) fail(where + ": unknown key '" + it.key() + "'");
  }
}

// The translation pair of the planar families can be given as a single
// "delta4"; expand it to the two canonical keys.
void expand_shorthand(CurveFamily family,
                      std::map<std::string, double>& params,
                      const std::string& where) {
  auto it = params.find("delta4");
  if (it == params.end()) return;
  const double v = it->second;
  params.erase(it);
  const char* first = nullptr;
  const char* second = nullptr;
  if (family == CurveFamily::EllipticCircle) {
    first = "delta4_1";
    second = "delta4_2";
  } else if (family == CurveFamily::HyperbolicBranch) {
    first = "delta4_2";
    second = "delta4_4";
  } else {
    fail(where + ": unknown parameter 'delta4'");
  }
  if (params.count(first) || params.count(second))
    fail(where + ": 'delta4' conflicts with an explicit translation key");
  params[first] = v;
  params[second] = v;
}

CurveTable table_from_samples(const json& samples, SurfaceKind kind,
                              const std::string& where) {
  if (!samples.is_array() || samples.size() < 8)
    fail(where + ": 'samples' must be an array of at least 8 rows");
  CurveTable tab;
  tab.kind = kind;
  std::vector<double> ss;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const json& row = samples[i];
    if (!row.is_array() || row.size() != 5)
      fail(where + ": each sample row must be [s, x1, x2, x3, x4]");
    ss.push_back(as_number(row[0], where));
    tab.x.push_back(Vector4{as_number(row[1], where),
                            as_number(row[2], where),
                            as_number(row[3], where),
                            as_number(row[4], where)});
  }
  const double n1 = static_cast<double>(ss.size() - 1);
  tab.s0 = ss.front();
  tab.spacing = (ss.back() - ss.front()) / n1;
  if (!(tab.spacing > 0.0))
    fail(where + ": sample parameters must increase");
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const double expect = tab.s0 + static_cast<double>(i) * tab.spacing;
    if (std::abs(ss[i] - expect) >
        1e-9 * std::max(1.0, std::abs(expect)))
      fail(where + ": sample parameters must be uniformly spaced");
  }
  return tab;
}

ordered_json params_to_json(const CurveSpec& spec) {
  static const std::map<CurveFamily, std::vector<const char*>> order = {
      {CurveFamily::EllipticCircle,
       {"delta1", "delta2", "delta3", "delta4_1", "delta4_2"}},
      {CurveFamily::EllipticSpiral,
       {"lambda1", "lambda2", "lambda3", "lambda4"}},
      {CurveFamily::HyperbolicBranch,
       {"delta1", "delta2", "delta3", "delta4_2", "delta4_4"}},
      {CurveFamily::HyperbolicSpiral,
       {"lambda1", "lambda2", "lambda3", "lambda4"}},
      {CurveFamily::ParabolicLog, {"mu1", "mu2", "mu4", "mu5", "eps"}},
  };
  ordered_json out = ordered_json::object();
  auto it = order.find(spec.family);
  if (it == order.end()) return out;
  for (const char* key : it->second) {
    auto p = spec.params.find(key);
    if (p != spec.params.end()) out[key] = p->second;
  }
  return out;
}

void emit(const ordered_json& j, std::string& out, int depth);

bool all_primitive(const ordered_json& arr) {
  for (const auto& v : arr)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

void indent(std::string& out, int depth) {
  out.append(static_cast<std::size_t>(2 * depth), ' ');
}

void emit(const ordered_json& j, std::string& out, int depth) {
  switch (j.type()) {
    case nlohmann::detail::value_t::null:
      out += "null";
      return;
    case nlohmann::detail::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case nlohmann::detail::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      return;
    case nlohmann::detail::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      return;
    case nlohmann::detail::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      return;
    }
    case nlohmann::detail::value_t::string:
      out += json(j.get<std::string>()).dump();
      return;
    case nlohmann::detail::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      if (all_primitive(j)) {
        out += "[";
        bool first = true;
        for (const auto& v : j) {
          if (!first) out += ", ";
          first = false;
          emit(v, out, depth);
        }
        out += "]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        indent(out, depth + 1);
        emit(v, out, depth + 1);
      }
      out += "\n";
      indent(out, depth);
      out += "]";
      return;
    }
    case nlohmann::detail::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        indent(out, depth + 1);
        out += json(it.key()).dump();
        out += ": ";
        emit(it.value(), out, depth + 1);
      }
      out += "\n";
      indent(out, depth);
      out += "}";
      return;
    }
    default:
      out += "null";
      return;
  }
}

}  // namespace

std::string family_token(CurveFamily family) {
  for (const FamilyEntry& e : kFamilies)
    if (e.family == family) return e.token;
  fail("unknown curve family");
}

CurveFamily family_from_token(const std::string& token) {
  for (const FamilyEntry& e : kFamilies)
    if (token == e.token) return e.family;
  fail("unknown curve family '" + token + "'");
}

std::string kind_token(SurfaceKind kind) {
  for (const KindEntry& e : kKinds)
    if (e.kind == kind) return e.token;
  fail("unknown surface kind");
}

SurfaceKind kind_from_token(const std::string& token) {
  for (const KindEntry& e : kKinds)
    if (token == e.token) return e.kind;
  fail("unknown surface kind '" + token + "'");
}

CurveSpec curve_spec_from_json(const json& j) {
  const std::string where = "curve";
  if (!j.is_object()) fail(where + ": expected an object");
  reject_unknown_keys(j, {"family", "params", "s_domain", "kind", "samples"},
                      where);
  CurveSpec spec;
  const json& fam = require_key(j, "family", where);
  if (!fam.is_string()) fail(where + ": 'family' must be a string");
  spec.family = family_from_token(fam.get<std::string>());
  spec.s_domain = as_interval(require_key(j, "s_domain", where), where);
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) fail(where + ": 'params' must be an object");
    for (auto p = it->begin(); p != it->end(); ++p)
      spec.params[p.key()] = as_number(p.value(), where + ".params");
  }
  if (spec.family == CurveFamily::Custom) {
    const json& kind = require_key(j, "kind", where);
    if (!kind.is_string()) fail(where + ": 'kind' must be a string");
    spec.table = table_from_samples(require_key(j, "samples", where),
                                    kind_from_token(kind.get<std::string>()),
                                    where);
  } else {
    if (j.count("samples"))
      fail(where + ": 'samples' is only valid for custom curves");
    if (auto it = j.find("kind"); it != j.end()) {
      if (kind_from_token(it->get<std::string>()) != kind_of(spec.family))
        fail(where + ": 'kind' does not match the family");
    }
    expand_shorthand(spec.family, spec.params, where);
  }
  spec.validate();
  return spec;
}

SurfaceSpec surface_spec_from_json(const json& j) {
  const std::string where = "surface";
  if (!j.is_object()) fail(where + ": expected an object");
  reject_unknown_keys(j, {"kind", "curve", "t_domain"}, where);
  SurfaceSpec spec;
  const json& kind = require_key(j, "kind", where);
  if (!kind.is_string()) fail(where + ": 'kind' must be a string");
  spec.kind = kind_from_token(kind.get<std::string>());
  spec.curve = curve_spec_from_json(require_key(j, "curve", where));
  spec.t_domain = as_interval(require_key(j, "t_domain", where), where);
  spec.validate();
  return spec;
}

namespace {
json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("malformed JSON");
  return j;
}
}  // namespace

CurveSpec curve_spec_from_string(const std::string& text) {
  return curve_spec_from_json(parse_text(text));
}

SurfaceSpec surface_spec_from_string(const std::string& text) {
  return surface_spec_from_json(parse_text(text));
}

ordered_json to_json(const CurveSpec& spec) {
  ordered_json out;
  out["family"] = family_token(spec.family);
  if (spec.family == CurveFamily::Custom) {
    out["kind"] = kind_token(spec.table->kind);
  } else {
    out["params"] = params_to_json(spec);
  }
  out["s_domain"] = {spec.s_domain.lo, spec.s_domain.hi};
  if (spec.family == CurveFamily::Custom) {
    ordered_json rows = ordered_json::array();
    const CurveTable& tab = *spec.table;
    for (std::size_t i = 0; i < tab.x.size(); ++i) {
      const double s = tab.s0 + static_cast<double>(i) * tab.spacing;
      rows.push_back(
          {s, tab.x[i][0], tab.x[i][1], tab.x[i][2], tab.x[i][3]});
    }
    out["samples"] = std::move(rows);
  }
  return out;
}

ordered_json to_json(const SurfaceSpec& spec) {
  ordered_json out;
  out["kind"] = kind_token(spec.kind);
  out["curve"] = to_json(spec.curve);
  out["t_domain"] = {spec.t_domain.lo, spec.t_domain.hi};
  return out;
}

ordered_json to_json(const ClassificationResult& r,
                     const ClassifyOptions& opts) {
  ordered_json out;
  out["verdict"] = to_string(r.verdict);
  out["t_fixed"] = r.t_fixed;
  out["s_samples"] = r.s_samples;
  out["f_samples"] = r.f_samples;
  out["C"] = std::vector<double>(r.C.c.begin(), r.C.c.end());
  out["residual"] = r.residual;
  out["max_deltaG_norm"] = r.max_deltaG_norm;
  out["rank_deficient"] = r.rank_deficient;
  if (r.formula_match) {
    out["formula_match"] = {{"max_abs_err", r.formula_match->max_abs_err},
                            {"max_rel_err", r.formula_match->max_rel_err}};
  } else {
    out["formula_match"] = nullptr;
  }
  out["options"] = {{"residual_threshold", opts.residual_threshold},
                    {"c_tol", opts.c_tol},
                    {"f_const_tol", opts.f_const_tol},
                    {"harmonic_floor", opts.harmonic_floor},
                    {"oracle_path", opts.use_oracle},
                    {"oracle_h", opts.oracle_h}};
  return out;
}

ordered_json to_json(const TheoremReport& r) {
  ordered_json out;
  out["theorem"] = to_string(r.id);
  out["description"] = r.description;
  out["pass"] = r.all_pass();
  ordered_json lines = ordered_json::array();
  for (const CheckLine& l : r.lines) {
    ordered_json line;
    line["name"] = l.name;
    line["pass"] = l.pass;
    line["measured"] = l.measured;
    line["tol"] = l.tol;
    line["note"] = l.note;
    lines.push_back(std::move(line));
  }
  out["lines"] = std::move(lines);
  return out;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump_deterministic(const ordered_json& j) {
  std::string out;
  emit(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace rotsurf
