#ifndef CARTAN_H
#define CARTAN_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Status codes; the non-zero values match the `cartan` exit codes where
// they overlap.
typedef enum CartanStatus {
  CARTAN_STATUS_OK = 0,
  CARTAN_STATUS_INTERNAL = 1,
  CARTAN_STATUS_DOMAIN = 2,
  CARTAN_STATUS_CONVERGENCE = 3,
  CARTAN_STATUS_INVALID_ARGUMENT = 4,
  CARTAN_STATUS_NULL_POINTER = 5,
  CARTAN_STATUS_PANIC = 6,
} CartanStatus;

typedef enum CartanStratum {
  CARTAN_STRATUM_C1 = 1,
  CARTAN_STRATUM_C2 = 2,
  CARTAN_STRATUM_C3 = 3,
  CARTAN_STRATUM_C4 = 4,
  CARTAN_STRATUM_C5 = 5,
  CARTAN_STRATUM_C6 = 6,
  CARTAN_STRATUM_C7 = 7,
} CartanStratum;

// Shooting solver with its configuration.
typedef struct CartanSolver CartanSolver;

// Sampled geodesic.
typedef struct CartanTrajectory CartanTrajectory;

// Initial covector `(θ, c, α, β)` with `α ≥ 0`.
typedef struct CartanCovector {
  double theta;
  double c;
  double alpha;
  double beta;
} CartanCovector;

typedef struct CartanClassification {
  enum CartanStratum stratum;
  double energy;
  // Elliptic modulus, NaN outside `C1`, `C2`, `C3`.
  double k;
} CartanClassification;

// Point `(x, y, z, v, w)` of the group.
typedef struct CartanPoint {
  double x;
  double y;
  double z;
  double v;
  double w;
} CartanPoint;

typedef struct CartanConstants {
  double k0;
  double k1;
  double t1z0;
  double t2v0;
  double zeta;
} CartanConstants;

typedef struct CartanShootResult {
  struct CartanCovector lambda;
  double t;
  double residual;
  double homogeneous_residual;
  double distance;
  uint32_t iterations;
  uint32_t starts_tried;
  // Reciprocal condition number of the Jacobian at the solution.
  double rcond;
  bool ill_conditioned;
} CartanShootResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL.
//
// The pointer stays valid until the next `cartan_*` call on the same thread.
const char *cartan_last_error(void);

// Library version as a static NUL-terminated string.
const char *cartan_version(void);

// Stratum, energy and modulus of `lambda`. `band` widens the
// lower-dimensional strata (0 tests them exactly).
//
// # Safety
// `lambda` must be valid for reads and `out` valid for writes.
enum CartanStatus cartan_classify(const struct CartanCovector *lambda,
                                  double band,
                                  struct CartanClassification *out);

// `Exp(lambda, t)` with integrator tolerance `tol`.
//
// # Safety
// `lambda` must be valid for reads and `out` valid for writes.
enum CartanStatus cartan_exp(const struct CartanCovector *lambda,
                             double t,
                             double tol,
                             struct CartanPoint *out);

// Cut time of `lambda`; `INFINITY` on the line and critical strata.
//
// # Safety
// `lambda` must be valid for reads and `out` valid for writes.
enum CartanStatus cartan_cut_time(const struct CartanCovector *lambda, double *out);

// Engel and Cartan cut times of `lambda`, checking
// `t_engel <= t_cartan <= zeta * t_engel`.
//
// # Safety
// `lambda` must be valid for reads; `engel` and `cartan` valid for writes.
enum CartanStatus cartan_compare(const struct CartanCovector *lambda,
                                 double *engel,
                                 double *cartan);

// `k0`, `k1`, `t1z(0)`, `t2v(0)` and `zeta`.
//
// # Safety
// `out` must be valid for writes.
enum CartanStatus cartan_constants(struct CartanConstants *out);

// Sample `Exp(lambda, ·)` at `n ≥ 2` equally spaced times on `[0, t_end]`.
//
// # Safety
// `lambda` must be valid for reads and `out` valid for writes. The handle
// written to `out` must be released with [`cartan_trajectory_free`].
enum CartanStatus cartan_trajectory_new(const struct CartanCovector *lambda,
                                        double t_end,
                                        size_t n,
                                        double tol,
                                        struct CartanTrajectory **out);

// Number of samples in `traj` (0 for NULL).
//
// # Safety
// `traj` must be NULL or a live handle.
size_t cartan_trajectory_len(const struct CartanTrajectory *traj);

// Sample `i` of `traj`: time, point and heading `θ`.
//
// # Safety
// `traj` must be a live handle; `t`, `q`, `theta` valid for writes.
enum CartanStatus cartan_trajectory_get(const struct CartanTrajectory *traj,
                                        size_t i,
                                        double *t,
                                        struct CartanPoint *q,
                                        double *theta);

// Release a trajectory. NULL is ignored.
//
// # Safety
// `traj` must be NULL or a handle from [`cartan_trajectory_new`] that has
// not been freed.
void cartan_trajectory_free(struct CartanTrajectory *traj);

// Solver with the default configuration. Release with [`cartan_solver_free`].
struct CartanSolver *cartan_solver_new(void);

// Set the residual tolerance and the integrator tolerance.
//
// # Safety
// `solver` must be a live handle.
enum CartanStatus cartan_solver_set_tolerances(struct CartanSolver *solver,
                                               double residual,
                                               double integrator);

// Limit the number of Newton starts.
//
// # Safety
// `solver` must be a live handle.
enum CartanStatus cartan_solver_set_max_starts(struct CartanSolver *solver, uint32_t max_starts);

// Minimizer from the identity to `q`.
//
// # Safety
// `solver` must be a live handle, `q` valid for reads, `out` valid for
// writes.
enum CartanStatus cartan_solver_solve(const struct CartanSolver *solver,
                                      const struct CartanPoint *q,
                                      struct CartanShootResult *out);

// Release a solver. NULL is ignored.
//
// # Safety
// `solver` must be NULL or a handle from [`cartan_solver_new`] that has not
// been freed.
void cartan_solver_free(struct CartanSolver *solver);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CARTAN_H */
