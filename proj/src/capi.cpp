#include "gicbound/gicbound.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "gicbound/config.hpp"
#include "gicbound/sweep.hpp"

struct gic_channel {
  gicb::Scenario scenario;
};

struct gic_table {
  gicb::RunOutput out;
};

namespace {

thread_local std::string g_last_error;

gic_status fail(gic_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
gic_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const gicb::ConfigError& e) {
    return fail(GIC_ERR_CONFIG, e.what());
  } catch (const gicb::DomainError& e) {
    return fail(GIC_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GIC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GIC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GIC_ERR_INTERNAL, "unknown error");
  }
}

gic_status make(gicb::Scenario sc, gic_channel** out) {
  sc.validate();
  *out = new gic_channel{std::move(sc)};
  return GIC_OK;
}

char* dup(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* gic_version(void) { return "0.1.0"; }

const char* gic_status_string(gic_status s) {
  switch (s) {
    case GIC_OK: return "ok";
    case GIC_ERR_NULL_ARG: return "null argument";
    case GIC_ERR_DOMAIN: return "domain error";
    case GIC_ERR_CONFIG: return "configuration error";
    case GIC_ERR_INFEASIBLE: return "infeasible";
    case GIC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gic_last_error(void) { return g_last_error.c_str(); }

gic_status gic_channel_symmetric(int k, double g_re, double g_im, double p, int real_field, gic_channel** out) {
  if (!out) return fail(GIC_ERR_NULL_ARG, "out is null");
  *out = nullptr;
  return guarded([&] {
    gicb::Scenario sc;
    sc.K = k;
    sc.g1 = {g_re, g_im};
    sc.P = p;
    sc.field = real_field ? gicb::Field::real : gicb::Field::complex;
    return make(sc, out);
  });
}

gic_status gic_channel_semi_symmetric(double g1_re, double g1_im, double g2_re, double g2_im, double p,
                                      int real_field, gic_channel** out) {
  if (!out) return fail(GIC_ERR_NULL_ARG, "out is null");
  *out = nullptr;
  return guarded([&] {
    gicb::Scenario sc;
    sc.K = 3;
    sc.g1 = {g1_re, g1_im};
    sc.g2 = gicb::cd{g2_re, g2_im};
    sc.P = p;
    sc.field = real_field ? gicb::Field::real : gicb::Field::complex;
    return make(sc, out);
  });
}

gic_status gic_channel_from_json(const char* json, gic_channel** out) {
  if (!json || !out) return fail(GIC_ERR_NULL_ARG, "json or out is null");
  *out = nullptr;
  return guarded([&] { return make(gicb::scenario_from_channel(gicb::channel_from_json(json)), out); });
}

void gic_channel_free(gic_channel* ch) { delete ch; }

int gic_channel_k(const gic_channel* ch) { return ch ? ch->scenario.K : 0; }

gic_status gic_bound(const gic_channel* ch, const char* name, gic_bound_value* out) {
  if (!ch || !name || !out) return fail(GIC_ERR_NULL_ARG, "channel, name or out is null");
  return guarded([&] {
    if (std::strcmp(name, "all") == 0) return fail(GIC_ERR_CONFIG, "gic_bound takes a single bound name");
    const gicb::BoundResult r = gicb::evaluate_bounds(ch->scenario, {name})[0];
    out->sum_rate = r.sum_rate;
    out->normalized = r.normalized;
    out->feasible = r.feasible ? 1 : 0;
    return r.feasible ? GIC_OK : fail(GIC_ERR_INFEASIBLE, std::string(name) + " is infeasible here");
  });
}

gic_status gic_run(const char* verb, const char* config_json, gic_table** out) {
  if (!verb || !out) return fail(GIC_ERR_NULL_ARG, "verb or out is null");
  *out = nullptr;
  return guarded([&] {
    *out = new gic_table{gicb::run_verb(verb, config_json ? config_json : "")};
    return GIC_OK;
  });
}

size_t gic_table_parts(const gic_table* t) { return t ? t->out.tables.size() : 0; }

const char* gic_table_part_name(const gic_table* t, size_t part) {
  if (!t || part >= t->out.tables.size()) return nullptr;
  return t->out.tables[part].name.c_str();
}

size_t gic_table_rows(const gic_table* t, size_t part) {
  if (!t || part >= t->out.tables.size()) return 0;
  return t->out.tables[part].table.size();
}

gic_status gic_table_csv(const gic_table* t, size_t part, char** out) {
  if (!t || !out) return fail(GIC_ERR_NULL_ARG, "table or out is null");
  *out = nullptr;
  if (part >= t->out.tables.size()) return fail(GIC_ERR_CONFIG, "part index out of range");
  return guarded([&] {
    std::ostringstream os;
    gicb::write_csv(os, t->out.tables[part].table);
    *out = dup(os.str());
    return GIC_OK;
  });
}

const char* gic_table_report_json(const gic_table* t) { return t ? t->out.report_json.c_str() : nullptr; }

int gic_table_all_infeasible(const gic_table* t) {
  if (!t) return 0;
  bool any_rows = false;
  for (const auto& part : t->out.tables) {
    if (part.table.empty()) continue;
    any_rows = true;
    if (!gicb::all_infeasible(part.table)) return 0;
  }
  return any_rows ? 1 : 0;
}

void gic_table_free(gic_table* t) { delete t; }

void gic_string_free(char* s) { delete[] s; }

}  // extern "C"
