#include "gicbound/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include <json.hpp>

#include "gicbound/kuser.hpp"

namespace gicb {

using nlohmann::json;

cd parse_complex_text(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ConfigError("empty complex value");
  auto number = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw ConfigError("bad complex value: " + text);
    }
    if (used != t.size()) throw ConfigError("bad complex value: " + text);
    return v;
  };
  if (s.back() != 'i' && s.back() != 'j') return {number(s), 0.0};
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, number(s)};
  return {number(s.substr(0, split)), number(s.substr(split))};
}

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = {"eval", "sweep", "surface", "largek", "reproduce"};
  return v;
}

namespace {

const std::set<std::string> kKeys = {"k",     "p",     "p_db",  "g",     "g2",    "alpha",  "field",
                                     "bounds", "grid", "threads", "profile", "channel", "axis", "start",
                                     "stop",  "step",  "range", "figure", "mag1",  "mag2"};

cd complex_value(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_string()) return parse_complex_text(v.get<std::string>());
  if (v.is_array() && v.size() == 2) return {v[0].get<double>(), v[1].get<double>()};
  if (v.is_object()) return {v.value("re", 0.0), v.value("im", 0.0)};
  throw ConfigError("complex values are numbers, \"a+bi\" strings, [re, im] or {re, im}");
}

std::vector<std::string> bound_list(const json& v) {
  std::vector<std::string> out;
  auto add = [&](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (!s.empty()) out.push_back(s);
  };
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const std::size_t comma = s.find(',', pos);
      add(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else if (v.is_array()) {
    for (const auto& x : v) add(x.get<std::string>());
  } else {
    throw ConfigError("bounds must be a comma list or an array");
  }
  return out;
}

struct Config {
  json j;

  bool has(const char* key) const { return j.contains(key) && !j[key].is_null(); }

  int threads() const {
    const int t = has("threads") ? j["threads"].get<int>() : 1;
    if (t < 1) throw ConfigError("threads must be positive");
    return t;
  }

  OptProfile profile(bool light_default) const {
    const std::string p = has("profile") ? j["profile"].get<std::string>() : (light_default ? "light" : "standard");
    if (p == "light") return OptProfile::light();
    if (p == "standard") return OptProfile::standard();
    throw ConfigError("profile must be \"light\" or \"standard\"");
  }

  double power(double fallback) const {
    if (has("p") && has("p_db")) throw ConfigError("give either p or p_db, not both");
    if (has("p")) return j["p"].get<double>();
    if (has("p_db")) return std::pow(10.0, j["p_db"].get<double>() / 10.0);
    return fallback;
  }

  Field field(Field fallback) const {
    if (!has("field")) return fallback;
    const std::string f = j["field"].get<std::string>();
    if (f == "real") return Field::real;
    if (f == "complex") return Field::complex;
    throw ConfigError("field must be \"real\" or \"complex\"");
  }

  Scenario scenario(int default_k, bool need_gain) const {
    if (has("channel")) {
      const json& c = j["channel"];
      return scenario_from_channel(channel_from_json(c.is_string() ? c.get<std::string>() : c.dump()));
    }
    Scenario sc;
    sc.K = has("k") ? j["k"].get<int>() : default_k;
    sc.P = power(10.0);
    if (has("g")) {
      sc.g1 = complex_value(j["g"]);
    } else if (need_gain && !has("alpha")) {
      throw ConfigError("missing g");
    } else {
      sc.g1 = 1.0;
    }
    if (has("g2")) sc.g2 = complex_value(j["g2"]);
    const bool complex_gain = sc.g1.imag() != 0.0 || (sc.g2 && sc.g2->imag() != 0.0);
    sc.field = field(complex_gain ? Field::complex : Field::real);
    if (has("alpha")) sc = apply_axis(sc, Axis::alpha, j["alpha"].get<double>());
    sc.validate();
    return sc;
  }

  std::vector<std::string> bounds() const {
    return has("bounds") ? bound_list(j["bounds"]) : std::vector<std::string>{"all"};
  }
};

json result_json(const BoundResult& r) {
  json o;
  o["bound"] = r.name;
  o["feasible"] = r.feasible;
  o["sum_rate_bits"] = r.feasible ? json(r.sum_rate) : json(nullptr);
  o["normalized"] = r.feasible ? json(r.normalized) : json(nullptr);
  if (!r.source.empty()) o["source"] = r.source;
  if (!r.perm.empty()) o["perm"] = r.perm;
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  o["params"] = params;
  return o;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

RunOutput run_eval(const Config& c) {
  SweepSpec s;
  s.fixed = c.scenario(3, true);
  s.bounds = c.bounds();
  s.threads = c.threads();
  s.profile = c.profile(false);
  RunOutput out;
  out.tables.push_back({"eval", run_sweep(s)});
  json rows = json::array();
  for (const Row& r : out.tables[0].table) rows.push_back(result_json(r.result));
  out.report_json = json{{"verb", "eval"}, {"results", rows}}.dump();
  return out;
}

RunOutput run_sweep_verb(const Config& c) {
  if (!c.has("axis")) throw ConfigError("sweep needs an axis");
  SweepSpec s;
  s.axis = parse_axis(c.j["axis"].get<std::string>());
  if (s.axis == Axis::none) throw ConfigError("sweep needs an axis");
  if (c.has("range")) {
    const json& r = c.j["range"];
    if (!r.is_array() || r.size() != 3) throw ConfigError("range is [start, stop, step]");
    s.start = r[0].get<double>();
    s.stop = r[1].get<double>();
    s.step = r[2].get<double>();
  } else {
    if (!c.has("start") || !c.has("stop") || !c.has("step")) throw ConfigError("sweep needs start, stop and step");
    s.start = c.j["start"].get<double>();
    s.stop = c.j["stop"].get<double>();
    s.step = c.j["step"].get<double>();
  }
  const bool sets_gain = s.axis == Axis::alpha || s.axis == Axis::g2;
  s.fixed = c.scenario(3, !sets_gain);
  if (s.axis == Axis::phase) {
    if (c.has("field") && s.fixed.field == Field::real) throw ConfigError("phase sweeps need the complex field");
    s.fixed.field = Field::complex;
  }
  s.bounds = c.bounds();
  s.threads = c.threads();
  s.profile = c.profile(false);
  RunOutput out;
  out.tables.push_back({"sweep", run_sweep(s)});
  out.report_json = json{{"verb", "sweep"}, {"axis", axis_name(s.axis)}, {"rows", out.tables[0].table.size()}}.dump();
  return out;
}

RunOutput run_surface_verb(const Config& c) {
  SurfaceSpec s;
  if (c.has("mag1") || c.has("mag2")) {
    s.mag1 = c.has("mag1") ? c.j["mag1"].get<double>() : 0.3;
    s.mag2 = c.has("mag2") ? c.j["mag2"].get<double>() : s.mag1;
  } else {
    if (!c.has("g") || !c.has("g2")) throw ConfigError("surface needs mag1/mag2 or g and g2");
    s.mag1 = std::norm(complex_value(c.j["g"]));
    s.mag2 = std::norm(complex_value(c.j["g2"]));
  }
  s.P = c.power(10.0);
  if (!(s.P > 0.0)) throw ConfigError("power must be positive");
  s.grid_n = c.has("grid") ? c.j["grid"].get<int>() : 16;
  s.threads = c.threads();
  s.profile = c.profile(true);
  const Surface sf = run_surface(s);
  RunOutput out;
  out.tables.push_back({"surface", surface_table(sf)});
  json ex = json::array();
  for (const Extremum& e : sf.report.extrema)
    ex.push_back({{"phi1", e.phi1},
                  {"phi2", e.phi2},
                  {"value", e.value},
                  {"kind", e.is_max ? "max" : "min"},
                  {"dist_max_lines", e.dist_max_lines},
                  {"dist_min_lines", e.dist_min_lines}});
  out.report_json = json{{"verb", "surface"},     {"mag1", s.mag1}, {"mag2", s.mag2}, {"p", s.P},
                         {"grid", s.grid_n},      {"tdm_normalized", sf.tdm}, {"extrema", ex}}
                        .dump();
  return out;
}

RunOutput run_largek(const Config& c) {
  SweepSpec s;
  s.fixed = c.scenario(100000, true);
  if (s.fixed.g2 || s.fixed.custom) throw ConfigError("largek needs a symmetric scenario");
  s.bounds = c.has("bounds") ? c.bounds()
                             : std::vector<std::string>{"tin",   "tdm",   "snd",   "best_lower",  "kramer",
                                                        "prop1", "prop2", "prop3", "closed_best", "affine"};
  s.threads = c.threads();
  s.profile = c.profile(false);
  RunOutput out;
  out.tables.push_back({"largek", run_sweep(s)});
  const LargeKResult lk = eta_regime(s.fixed.P, s.fixed.g1);
  out.report_json = json{{"verb", "largek"},
                         {"k", s.fixed.K},
                         {"d_K", lk.d_K},
                         {"ell_star", finite_or_null(lk.ell_star)},
                         {"finite", lk.finite},
                         {"eta", lk.eta}}
                        .dump();
  return out;
}

RunOutput run_reproduce(const Config& c) {
  if (!c.has("figure")) throw ConfigError("reproduce needs a figure id");
  ReproduceOptions o;
  o.threads = c.threads();
  o.grid = c.has("grid") ? c.j["grid"].get<int>() : 16;
  o.profile = c.profile(true);
  const std::string id = c.j["figure"].get<std::string>();
  RunOutput out;
  out.tables = reproduce(id, o);
  json names = json::array();
  for (const auto& t : out.tables) names.push_back(t.name);
  out.report_json = json{{"verb", "reproduce"}, {"figure", id}, {"tables", names}}.dump();
  return out;
}

}  // namespace

RunOutput run_verb(const std::string& verb, const std::string& config_json) {
  Config c;
  try {
    c.j = config_json.empty() ? json::object() : json::parse(config_json);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!c.j.is_object()) throw ConfigError("configuration must be a JSON object");
  for (const auto& [k, v] : c.j.items())
    if (!kKeys.count(k)) throw ConfigError("unknown configuration key: " + k);
  try {
    if (verb == "eval") return run_eval(c);
    if (verb == "sweep") return run_sweep_verb(c);
    if (verb == "surface") return run_surface_verb(c);
    if (verb == "largek") return run_largek(c);
    if (verb == "reproduce") return run_reproduce(c);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("configuration: ") + e.what());
  }
  throw ConfigError("unknown verb: " + verb);
}

}  // namespace gicb
