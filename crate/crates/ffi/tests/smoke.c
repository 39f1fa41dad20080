#include <math.h>
#include <stdio.h>
#include "cartan.h"

#define CHECK(cond)                                                  \
    do {                                                             \
        if (!(cond)) {                                               \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                \
        }                                                            \
    } while (0)

int main(void) {
    CartanCovector l = {0.4, 0.9, 1.5, 0.2};
    CartanPoint q;
    CHECK(cartan_exp(&l, 2.5, 1e-15, &q) == CARTAN_STATUS_OK);

    CartanSolver *s = cartan_solver_new();
    CartanShootResult r;
    CHECK(cartan_solver_solve(s, &q, &r) == CARTAN_STATUS_OK);
    CHECK(fabs(r.t - 2.5) < 1e-6);
    CHECK(fabs(r.lambda.alpha - 1.5) < 1e-6);

    CartanPoint bad = {1.0, 0.0, 0.0, 0.2, 0.1};
    CHECK(cartan_solver_solve(s, &bad, &r) == CARTAN_STATUS_DOMAIN);
    CHECK(cartan_last_error() != NULL);
    cartan_solver_free(s);

    CartanTrajectory *tr = NULL;
    CHECK(cartan_trajectory_new(&l, 1.0, 5, 1e-12, &tr) == CARTAN_STATUS_OK);
    CHECK(cartan_trajectory_len(tr) == 5);
    double t, th;
    CHECK(cartan_trajectory_get(tr, 0, &t, &q, &th) == CARTAN_STATUS_OK);
    CHECK(t == 0.0 && q.x == 0.0 && th == 0.4);
    CHECK(cartan_trajectory_get(tr, 5, &t, &q, &th) == CARTAN_STATUS_INVALID_ARGUMENT);
    cartan_trajectory_free(tr);

    CartanClassification c;
    CHECK(cartan_classify(NULL, 0.0, &c) == CARTAN_STATUS_NULL_POINTER);
    printf("ok %s\n", cartan_version());
    return 0;
}
