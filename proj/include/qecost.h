#ifndef QECOST_H
#define QECOST_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every API call. */
typedef enum qecost_status {
  QECOST_OK = 0,
  QECOST_INVALID_ARGUMENT = 1,
  QECOST_OUT_OF_REGIME = 2,
  QECOST_RESOURCE_LIMIT = 3,
  QECOST_INFEASIBLE = 4,
  QECOST_PARSE_ERROR = 5,
  QECOST_IO_ERROR = 6,
  QECOST_INTERNAL_ERROR = 7
} qecost_status;

/* Human-readable message for the last error on this thread. */
const char* qecost_last_error(void);

/* ------------------------------------------------------------------ runs -- */

/* Opaque handle owning the outputs of one scenario run. */
typedef struct qecost_run qecost_run_t;

/* Run a scenario from config text. grid_scale: "coarse", "default" or
 * "fine" (NULL means "default"); threads >= 1. On success *out owns the
 * results and must be freed with qecost_run_free. */
qecost_status qecost_run_config_text(const char* config_text, int threads,
                                     const char* grid_scale, qecost_run_t** out);

/* Same, reading the config from a file. */
qecost_status qecost_run_config_file(const char* path, int threads, const char* grid_scale,
                                     qecost_run_t** out);

/* Scenario name of a run. Pointer owned by the handle. */
qecost_status qecost_run_scenario(const qecost_run_t* run, const char** name);

/* 1 if the scenario found a feasible optimum, 0 otherwise. */
qecost_status qecost_run_feasible(const qecost_run_t* run, int* feasible);

/* JSON summary text. Pointer owned by the handle. */
qecost_status qecost_run_summary_json(const qecost_run_t* run, const char** json);

/* Output files (CSV) attached to the run. */
qecost_status qecost_run_file_count(const qecost_run_t* run, size_t* count);
qecost_status qecost_run_file_name(const qecost_run_t* run, size_t index, const char** name);
qecost_status qecost_run_file_content(const qecost_run_t* run, size_t index,
                                      const char** content);

void qecost_run_free(qecost_run_t* run);

/* -------------------------------------------------------------- catalogs -- */

/* Newline-separated "name: description" lines of registered scenarios.
 * Copies up to cap-1 bytes into buf (NUL-terminated); *needed receives the
 * full length including the terminator. buf may be NULL when cap is 0. */
qecost_status qecost_list_scenarios(char* buf, size_t cap, size_t* needed);

/* Generated markdown describing config keys and CSV schemas. Same buffer
 * contract as qecost_list_scenarios. */
qecost_status qecost_schemas_markdown(char* buf, size_t cap, size_t* needed);

/* ---------------------------------------------------------- numeric ops --- */

/* Logical error per gate after k concatenations. */
qecost_status qecost_logical_error(double eta, double eta_thr, int k, double* out);

/* Thermal photon occupation at temperature T (K) and frequency omega0
 * (rad/s). */
qecost_status qecost_bose_einstein(double temperature, double omega0, double* out);

/* Pauli error strength (1 + 2 n_tot) * gamma_sp * tau / 4. */
qecost_status qecost_pauli_strength(double n_tot, double gamma_sp, double tau, double* out);

/* Drive power of a Rabi pulse of angle theta (rad) and duration tau (s). */
qecost_status qecost_gate_drive_power(double gamma_sp, double omega0, double theta, double tau,
                                      double* out);

/* Heat conducted along one cable between two anchors. model: 0 composite,
 * 1 coax, 2 stripline; length in meters. */
qecost_status qecost_conduction(double t_cold, double t_hot, int model, double length,
                                double* out);

/* Angular coefficient C_z of the 2-D lattice-sum asymptotics, 0 <= z < 2. */
qecost_status qecost_cz_coefficient(double z, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QECOST_H */
