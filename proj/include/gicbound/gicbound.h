#ifndef GICBOUND_H
#define GICBOUND_H

#include <stddef.h>

#if defined(_WIN32)
#define GIC_API __declspec(dllexport)
#else
#define GIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gic_channel gic_channel;
typedef struct gic_table gic_table;

typedef enum gic_status {
  GIC_OK = 0,
  GIC_ERR_NULL_ARG = 1,
  GIC_ERR_DOMAIN = 2,
  GIC_ERR_CONFIG = 3,
  GIC_ERR_INFEASIBLE = 4,
  GIC_ERR_INTERNAL = 5
} gic_status;

typedef struct gic_bound_value {
  double sum_rate;   /* bits per channel use, all users */
  double normalized; /* sum_rate / (2K) */
  int feasible;
} gic_bound_value;

GIC_API const char* gic_version(void);
GIC_API const char* gic_status_string(gic_status s);
/* Message of the last failing call on this thread; empty if none. */
GIC_API const char* gic_last_error(void);

/* real_field != 0 restricts gains and genie correlations to the reals. */
GIC_API gic_status gic_channel_symmetric(int k, double g_re, double g_im, double p, int real_field,
                                         gic_channel** out);
GIC_API gic_status gic_channel_semi_symmetric(double g1_re, double g1_im, double g2_re, double g2_im,
                                              double p, int real_field, gic_channel** out);
/* Scenario JSON: {"k", "field", "p", "h" | "sym" | "semisym"}. */
GIC_API gic_status gic_channel_from_json(const char* json, gic_channel** out);
GIC_API void gic_channel_free(gic_channel* ch);
GIC_API int gic_channel_k(const gic_channel* ch);

/* Evaluates one named bound (e.g. "best_upper", "thm2", "tdm").
   Returns GIC_ERR_INFEASIBLE, with out filled, when the bound does not
   apply or no admissible parameters exist. */
GIC_API gic_status gic_bound(const gic_channel* ch, const char* name, gic_bound_value* out);

/* Runs a CLI verb ("eval", "sweep", "surface", "largek", "reproduce") on a
   JSON configuration. The table may hold several named parts. */
GIC_API gic_status gic_run(const char* verb, const char* config_json, gic_table** out);
GIC_API size_t gic_table_parts(const gic_table* t);
GIC_API const char* gic_table_part_name(const gic_table* t, size_t part);
GIC_API size_t gic_table_rows(const gic_table* t, size_t part);
/* CSV text of one part; release with gic_string_free. */
GIC_API gic_status gic_table_csv(const gic_table* t, size_t part, char** out);
GIC_API const char* gic_table_report_json(const gic_table* t);
/* 1 when the table has rows and none is feasible. */
GIC_API int gic_table_all_infeasible(const gic_table* t);
GIC_API void gic_table_free(gic_table* t);
GIC_API void gic_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
