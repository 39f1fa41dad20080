//! Boundary problem `Exp(λ, t) = q` on the uniqueness domain `zV ≠ 0`.
//!
//! The target is first moved by a rotation and a dilation to the canonical
//! representative with `x = 0`, `y > 0` and unit homogeneous radius. On that
//! scale a damped Newton
//! iteration with a finite-difference Jacobian solves the five equations in
//! `ξ = (θ, c, a, b, t)`, where `(a, b) = α(cos β, sin β)`. Starts come from a
//! table of forward-mapped covectors, nearest first.

use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

use nalgebra::{Matrix5, Vector5};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expmap::{dilate, dilate_cov, exp_at_times, exp_cartesian, rotate, rotate_cov, GroupPoint};
use crate::maxwell::cut_time;
use crate::pendulum::{wrap_pi, Covector, EllipticCoords, Stratum};

/// Below this `|zV|` on the canonical scale the solver flags the target as
/// close to the Maxwell set.
pub const ILL_CONDITIONED_ZV: f64 = 1e-8;

/// Starts evaluated together; the lowest-index success wins.
const BATCH: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Max-norm of `Exp(λ′, t′) − q′` on the canonical scale.
    pub tol: f64,
    pub max_starts: usize,
    pub max_iterations: usize,
    pub integrator_tol: f64,
    /// Relative central-difference step.
    pub fd_step: f64,
    /// Targets with [`domain_margin`] at or below this are refused.
    pub domain_tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_starts: 2048,
            max_iterations: 40,
            integrator_tol: 1e-14,
            fd_step: 1e-6,
            domain_tol: 1e-10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShootResult {
    pub lambda: Covector,
    pub t: f64,
    /// Max-norm residual on the canonical scale.
    pub residual: f64,
    /// `max(|Δx|, |Δy|, |Δz|^{1/2}, |Δv|^{1/3}, |Δw|^{1/3})` on the canonical scale.
    pub homogeneous_residual: f64,
    pub distance: f64,
    pub iterations: usize,
    pub starts_tried: usize,
    /// `σ_min/σ_max` of the Jacobian at the solution on the canonical scale.
    pub rcond: f64,
    /// Canonical `|zV|` below [`ILL_CONDITIONED_ZV`] or `rcond` below the
    /// cutoff under which a parameter direction is not resolved.
    pub ill_conditioned: bool,
}

/// Canonical representative of `q` under rotations and dilations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Canonical {
    pub q: GroupPoint,
    pub eta: f64,
    pub mu: f64,
}

impl Canonical {
    /// Map a solution `(λ′, t′)` for the canonical target back to `q`.
    pub fn restore(&self, lambda: &Covector, t: f64) -> Result<(Covector, f64)> {
        let (l, t) = dilate_cov(1.0 / self.mu, lambda, t)?;
        Ok((rotate_cov(-self.eta, &l), t))
    }

    /// Move `(λ, t)` with `Exp(λ, t) = q` to the canonical scale.
    pub fn apply(&self, lambda: &Covector, t: f64) -> Result<(Covector, f64)> {
        let (l, t) = dilate_cov(self.mu, lambda, t)?;
        Ok((rotate_cov(self.eta, &l), t))
    }
}

/// Rotate `q` onto `x = 0, y > 0`, then dilate to unit homogeneous radius.
///
/// The radius is `max(|(x, y)|, |z|^{1/2}, |(v, w)|^{1/3})`, so every canonical
/// coordinate lies in `[−1, 1]` even when the chord `|(x, y)|` is short.
pub fn canonicalize(q: &GroupPoint) -> Result<Canonical> {
    if !q.is_finite() {
        return Err(Error::NonFinite("target point"));
    }
    let r = q.x.hypot(q.y);
    if r == 0.0 || q.z_v() == 0.0 {
        return Err(Error::NotInDomain { zv: q.z_v() });
    }
    let eta = wrap_pi(q.y.atan2(q.x) - FRAC_PI_2);
    let mu = 1.0 / q.homogeneous_radius();
    let mut c = dilate(mu, &rotate(eta, q))?;
    c.x = 0.0;
    c.y = (mu * r).min(1.0);
    Ok(Canonical { q: c, eta, mu })
}

/// Scale-free distance of `q` from `zV = 0`: the smaller of `|z|/ρ²` and
/// `|V| / (r |(v, w)| + r² |z|/2)` with `r = |(x, y)|` and `ρ` the
/// homogeneous radius. Both ratios are invariant under rotations and
/// dilations; rounding in `Exp` leaves points of `zV = 0` with a margin near
/// machine precision.
pub fn domain_margin(q: &GroupPoint) -> f64 {
    let r = q.x.hypot(q.y);
    let rho = q.homogeneous_radius();
    let terms = r * q.v.hypot(q.w) + 0.5 * r * r * q.z.abs();
    if rho == 0.0 || terms == 0.0 {
        return 0.0;
    }
    (q.z.abs() / (rho * rho)).min(q.big_v().abs() / terms)
}

/// `ρ(Δq)` with the dilation weights `(1, 1, 2, 3, 3)`.
pub fn homogeneous_norm(d: &GroupPoint) -> f64 {
    d.x.abs()
        .max(d.y.abs())
        .max(d.z.abs().sqrt())
        .max(d.v.abs().cbrt())
        .max(d.w.abs().cbrt())
}

type Xi = [f64; 5];

#[derive(Debug, Clone, Copy)]
struct Seed {
    key: [f64; 4],
    xi: Xi,
}

fn to_xi(lambda: &Covector, t: f64) -> Xi {
    let (s, c) = lambda.beta.sin_cos();
    [lambda.theta, lambda.c, lambda.alpha * c, lambda.alpha * s, t]
}

fn from_xi(xi: &Xi) -> Result<(Covector, f64)> {
    let alpha = xi[2].hypot(xi[3]);
    let beta = if alpha == 0.0 { 0.0 } else { xi[3].atan2(xi[2]) };
    Ok((Covector::new(xi[0], xi[1], alpha, beta)?, xi[4]))
}

const SEED_K: [f64; 23] = [
    0.01, 0.02, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 0.98,
    0.995,
];
const SEED_PHASES: usize = 16;
const SEED_TIMES: usize = 16;

fn seed_family(lambda: &Covector) -> Vec<Seed> {
    let Ok(tc) = cut_time(lambda) else { return Vec::new() };
    let times: Vec<f64> = (1..SEED_TIMES).map(|j| tc * j as f64 / SEED_TIMES as f64).collect();
    let Ok(tr) = exp_at_times(lambda, &times, 1e-10) else { return Vec::new() };
    tr.samples
        .iter()
        .filter_map(|s| {
            let can = canonicalize(&s.q).ok()?;
            let (l, t) = can.apply(lambda, s.t).ok()?;
            Some(Seed {
                key: [can.q.y, can.q.z, can.q.v, can.q.w],
                xi: to_xi(&l, t),
            })
        })
        .collect()
}

fn build_seeds() -> Vec<Seed> {
    let mut lambdas = Vec::new();
    for &k in &SEED_K {
        for (stratum, dir) in [(Stratum::C1, 1.0), (Stratum::C2, 1.0), (Stratum::C2, -1.0)] {
            let Ok(l0) = EllipticCoords::from_parts(stratum, k, 0.0, 1.0, 0.0, dir) else { continue };
            let Ok(per) = crate::pendulum::period(&l0) else { continue };
            for j in 0..SEED_PHASES {
                let phi = per * j as f64 / SEED_PHASES as f64;
                if let Ok(l) = EllipticCoords::from_parts(stratum, k, phi, 1.0, 0.0, dir) {
                    lambdas.push(l);
                }
            }
        }
    }
    lambdas.par_iter().map(seed_family).collect::<Vec<_>>().concat()
}

fn seeds() -> &'static [Seed] {
    static CELL: OnceLock<Vec<Seed>> = OnceLock::new();
    CELL.get_or_init(build_seeds)
}

fn residual(xi: &Xi, target: &GroupPoint, tol: f64) -> Option<Vector5<f64>> {
    if xi[4] <= 0.0 {
        return None;
    }
    let q = exp_cartesian(xi[0], xi[1], xi[2], xi[3], xi[4], tol).ok()?;
    let r = Vector5::new(q.x - target.x, q.y - target.y, q.z - target.z, q.v - target.v, q.w - target.w)
;
    r.iter().all(|v| v.is_finite()).then_some(r)
}


fn jacobian(xi: &Xi, target: &GroupPoint, cfg: &SolverConfig) -> Option<Matrix5<f64>> {
    let mut j = Matrix5::zeros();
    for i in 0..5 {
        let h = cfg.fd_step * xi[i].abs().max(1.0);
        let (mut p, mut m) = (*xi, *xi);
        p[i] += h;
        m[i] -= h;
        let fp = residual(&p, target, cfg.integrator_tol)?;
        let fm = residual(&m, target, cfg.integrator_tol)?;
        j.set_column(i, &((fp - fm) / (2.0 * h)));
    }
    Some(j)
}

struct Converged {
    xi: Xi,
    residual: Vector5<f64>,
    iterations: usize,
}

/// Extra steps with the last Jacobian once the tolerance is met, kept while
/// the residual keeps shrinking.
const POLISH_STEPS: usize = 3;

fn polish(xi: &mut Xi, f: &mut Vector5<f64>, j: &Matrix5<f64>, target: &GroupPoint, cfg: &SolverConfig) {
    for _ in 0..POLISH_STEPS {
        let Some(d) = pinv_step(j, f) else { return };
        let mut trial = *xi;
        for i in 0..5 {
            trial[i] += d[i];
        }
        match residual(&trial, target, cfg.integrator_tol) {
            Some(ft) if ft.amax() < f.amax() => {
                *xi = trial;
                *f = ft;
            }
            _ => return,
        }
    }
}

/// Singular values below this fraction of the largest are treated as zero.
/// Central differences with the default step carry noise of about 1e-8.
const PINV_RCOND: f64 = 1e-9;

/// Minimum-norm Newton step `d = −J⁺ f` with small singular values dropped.
/// Near lines one direction of `ξ` barely moves the endpoint and a plain
/// solve follows finite-difference noise along it.
fn pinv_step(j: &Matrix5<f64>, f: &Vector5<f64>) -> Option<Vector5<f64>> {
    let svd = j.svd(true, true);
    let smax = svd.singular_values.max();
    if !(smax.is_finite() && smax > 0.0) {
        return None;
    }
    svd.solve(&(-f), PINV_RCOND * smax)
        .ok()
        .filter(|d| d.iter().all(|v| v.is_finite()))
}

/// Levenberg–Marquardt step `(JᵀJ + ν diag JᵀJ) d = −Jᵀf` with `ν` raised
/// until the residual decreases. Used when the Newton direction fails, which
/// happens near lines where the Jacobian is close to singular.
fn marquardt(xi: &Xi, f: &Vector5<f64>, j: &Matrix5<f64>, target: &GroupPoint, cfg: &SolverConfig) -> Option<(Xi, Vector5<f64>)> {
    let jt = j.transpose();
    let jtj = jt * j;
    let g = -(jt * f);
    let diag = Matrix5::from_diagonal(&jtj.diagonal().map(|v| v.max(1e-300)));
    let norm0 = f.norm();
    for nu in [1e-8, 1e-6, 1e-4, 1e-2, 1.0, 1e2, 1e4] {
        let Some(mut d) = (jtj + diag * nu).lu().solve(&g) else { continue };
        let scale = d.amax();
        if !scale.is_finite() {
            continue;
        }
        if scale > 1.0 {
            d /= scale;
        }
        let mut trial = *xi;
        for i in 0..5 {
            trial[i] += d[i];
        }
        if let Some(ft) = residual(&trial, target, cfg.integrator_tol) {
            if ft.norm() < norm0 {
                return Some((trial, ft));
            }
        }
    }
    None
}

fn newton(start: &Xi, target: &GroupPoint, cfg: &SolverConfig) -> std::result::Result<Converged, f64> {
    let mut xi = *start;
    let Some(mut f) = residual(&xi, target, cfg.integrator_tol) else { return Err(f64::INFINITY) };
    let mut best = f.amax();
    let mut last_j = None;
    for it in 0..=cfg.max_iterations {
        if f.amax() <= cfg.tol {
            if let Some(j) = last_j {
                polish(&mut xi, &mut f, &j, target, cfg);
            }
            xi[0] = wrap_pi(xi[0]);
            return Ok(Converged { xi, residual: f, iterations: it });
        }
        if it == cfg.max_iterations {
            break;
        }
        let Some(j) = jacobian(&xi, target, cfg) else { return Err(best) };
        let Some(mut d) = pinv_step(&j, &f) else { return Err(best) };
        last_j = Some(j);
        let scale = d.amax();
        if scale > 1.0 {
            d /= scale;
        }
        let norm0 = f.norm();
        let mut s = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let mut trial = xi;
            for i in 0..5 {
                trial[i] += s * d[i];
            }
            if let Some(ft) = residual(&trial, target, cfg.integrator_tol) {
                if ft.norm() < (1.0 - 1e-4 * s) * norm0 {
                    xi = trial;
                    f = ft;
                    accepted = true;
                    break;
                }
            }
            s *= 0.5;
        }
        if !accepted {
            match marquardt(&xi, &f, &j, target, cfg) {
                Some((x, ft)) => {
                    xi = x;
                    f = ft;
                }
                None => return Err(best),
            }
        }
        best = best.min(f.amax());
    }
    Err(best)
}

/// Accept a Newton root only if it lies in the optimal set `t ≤ 𝐭(λ)`.
fn admissible(xi: &Xi) -> Option<(Covector, f64)> {
    let (l, t) = from_xi(xi).ok()?;
    let tc = cut_time(&l).ok()?;
    (t > 0.0 && t <= tc + 1e-9 * t.max(1.0)).then_some((l, t))
}

/// The unique minimizer `(λ, t)` with `Exp(λ, t) = q`.
pub fn solve(q: &GroupPoint, cfg: &SolverConfig) -> Result<ShootResult> {
    let can = canonicalize(q)?;
    if domain_margin(q) <= cfg.domain_tol {
        return Err(Error::NotInDomain { zv: q.z_v() });
    }
    let zv = can.q.z_v();
    let target = can.q;
    let mut order: Vec<(f64, usize)> = seeds()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let d = (s.key[0] - target.y).powi(2)
                + (s.key[1] - target.z).powi(2)
                + (s.key[2] - target.v).powi(2)
                + (s.key[3] - target.w).powi(2);
            (d, i)
        })
        .collect();
    order.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    order.truncate(cfg.max_starts);

    let mut best = f64::INFINITY;
    for (b, chunk) in order.chunks(BATCH).enumerate() {
        let outcomes: Vec<_> = chunk
            .par_iter()
            .map(|&(_, i)| {
                newton(&seeds()[i].xi, &target, cfg).and_then(|c| match admissible(&c.xi) {
                    Some(sol) => Ok((c, sol)),
                    None => Err(f64::INFINITY),
                })
            })
            .collect();
        for (n, out) in outcomes.into_iter().enumerate() {
            match out {
                Ok((c, (l, t))) => {
                    let (lambda, t) = can.restore(&l, t)?;
                    let r = &c.residual;
                    let rcond = jacobian(&c.xi, &target, cfg).map_or(0.0, |j| {
                        let sv = j.singular_values();
                        sv.min() / sv.max()
                    });
                    return Ok(ShootResult {
                        lambda,
                        t,
                        residual: c.residual.amax(),
                        homogeneous_residual: homogeneous_norm(&GroupPoint::new(r[0], r[1], r[2], r[3], r[4])),
                        distance: t,
                        iterations: c.iterations,
                        starts_tried: b * BATCH + n + 1,
                        rcond,
                        ill_conditioned: zv.abs() < ILL_CONDITIONED_ZV || rcond < PINV_RCOND,
                    });
                }
                Err(r) => best = best.min(r),
            }
        }
    }
    Err(Error::NoConvergence {
        starts: order.len(),
        best_residual: best,
    })
}

/// Sub-Riemannian distance `d(Id, q)`.
pub fn distance(q: &GroupPoint, cfg: &SolverConfig) -> Result<f64> {
    solve(q, cfg).map(|r| r.t)
}

/// `|a − b|` modulo `2π`.
pub fn angle_gap(a: f64, b: f64) -> f64 {
    wrap_pi(a - b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expmap::{exp, EXP_TOL};
    use crate::maxwell::cut_time;

    fn c1(k: f64, phi: f64, alpha: f64, beta: f64) -> Covector {
        EllipticCoords::from_parts(Stratum::C1, k, phi, alpha, beta, 1.0).unwrap()
    }

    #[test]
    fn already_canonical() {
        let q = GroupPoint::new(0.0, 1.0, 0.3, 0.2, -0.1);
        let c = canonicalize(&q).unwrap();
        assert!(c.eta.abs() < 1e-15);
        assert!((c.mu - 1.0).abs() < 1e-15);
        assert!(c.q.max_abs_diff(&q) < 1e-15);
    }

    #[test]
    fn near_line_target_is_flagged() {
        // Short arc of a nearly straight inflectional elastica: one parameter
        // combination moves the endpoint by less than 1e-10.
        let l = Covector::new(1.1464531244951492, 0.07305293473691452, 4.13215124723416, 1.0335516854679947).unwrap();
        let t = 0.2834655724712346;
        let q = exp(&l, t, 1e-15).unwrap();
        let r = solve(&q, &SolverConfig::default()).unwrap();
        assert!(r.residual < 1e-10);
        assert!((r.t - t).abs() < 1e-9);
        assert!(r.rcond < PINV_RCOND);
        assert!(r.ill_conditioned);
    }

    #[test]
    fn short_chord_stays_bounded() {
        let q = GroupPoint::new(1e-3, 2e-3, 0.5, -2.0, 0.7);
        let c = canonicalize(&q).unwrap();
        assert!((c.q.homogeneous_radius() - 1.0).abs() < 1e-15);
        assert!(c.q.to_array().iter().all(|v| v.abs() <= 1.0));
        assert!(c.q.y > 0.0 && c.q.y < 1e-2);
    }

    #[test]
    fn canonical_round_trip() {
        let q = GroupPoint::new(0.7, -1.3, 0.4, -0.9, 1.1);
        let c = canonicalize(&q).unwrap();
        let back = rotate(-c.eta, &dilate(1.0 / c.mu, &c.q).unwrap());
        assert!(back.max_abs_diff(&q) < 1e-12);
    }

    #[test]
    fn canonical_form_is_rotation_invariant() {
        let l = c1(0.6, 0.3, 2.0, 0.4);
        let q = exp(&l, 1.5, EXP_TOL).unwrap();
        let a = canonicalize(&q).unwrap();
        for s in [0.3, 1.9, -2.7] {
            let b = canonicalize(&rotate(s, &q)).unwrap();
            assert!(a.q.max_abs_diff(&b.q) < 1e-12);
        }
    }

    #[test]
    fn abnormal_line_not_in_domain() {
        let q = GroupPoint::new(0.8, 0.6, 0.0, 0.0, 0.0);
        assert!(matches!(
            solve(&q, &SolverConfig::default()),
            Err(Error::NotInDomain { .. })
        ));
        assert!(matches!(canonicalize(&GroupPoint::identity()), Err(Error::NotInDomain { .. })));
    }

    #[test]
    fn round_trip_c1() {
        let l = c1(0.5, 0.7, 1.3, 0.9);
        let t = 0.9 * cut_time(&l).unwrap();
        let q = exp(&l, t, EXP_TOL).unwrap();
        let r = solve(&q, &SolverConfig::default()).unwrap();
        assert!((r.t - t).abs() < 1e-6, "{} vs {t}", r.t);
        assert!(angle_gap(r.lambda.theta, l.theta) < 1e-6);
        assert!((r.lambda.c - l.c).abs() < 1e-6);
        assert!((r.lambda.alpha - l.alpha).abs() < 1e-6);
        assert!(angle_gap(r.lambda.beta, l.beta) < 1e-6);
        assert!(r.residual <= 1e-10);
        assert!(!r.ill_conditioned);
        assert_eq!(r.distance, r.t);
    }

    #[test]
    fn round_trip_c2() {
        let l = EllipticCoords::from_parts(Stratum::C2, 0.7, 0.2, 0.8, -1.0, -1.0).unwrap();
        let t = 0.6 * cut_time(&l).unwrap();
        let q = exp(&l, t, 1e-15).unwrap();
        let r = solve(&q, &SolverConfig::default()).unwrap();
        assert!((r.t - t).abs() < 1e-6);
        assert!(angle_gap(r.lambda.theta, l.theta) < 1e-6);
        assert!((r.lambda.c - l.c).abs() < 1e-6);
        assert!((r.lambda.alpha - l.alpha).abs() < 1e-6);
    }

    #[test]
    fn circles_are_refused() {
        // Circles have V = 0 identically, so their endpoints lie on zV = 0.
        let l = Covector::new(0.4, 1.7, 0.0, 0.0).unwrap();
        let q = exp(&l, 0.6 * cut_time(&l).unwrap(), EXP_TOL).unwrap();
        assert!(q.z.abs() > 0.1);
        assert!(matches!(solve(&q, &SolverConfig::default()), Err(Error::NotInDomain { .. })));
    }

    #[test]
    fn rotation_equivariance() {
        let l = c1(0.8, 0.1, 1.0, 0.0);
        let q = exp(&l, 0.7 * cut_time(&l).unwrap(), EXP_TOL).unwrap();
        let cfg = SolverConfig::default();
        let a = solve(&q, &cfg).unwrap();
        let eta = 1.1;
        let b = solve(&rotate(eta, &q), &cfg).unwrap();
        let expected = rotate_cov(eta, &a.lambda);
        assert!((a.t - b.t).abs() < 1e-8);
        assert!(angle_gap(b.lambda.theta, expected.theta) < 1e-7);
        assert!(angle_gap(b.lambda.beta, expected.beta) < 1e-7);
    }

    #[test]
    fn distance_scales_with_dilation() {
        let l = c1(0.4, 1.0, 1.0, 0.5);
        let q = exp(&l, 0.5 * cut_time(&l).unwrap(), EXP_TOL).unwrap();
        let cfg = SolverConfig::default();
        let d = distance(&q, &cfg).unwrap();
        let d2 = distance(&dilate(2.5, &q).unwrap(), &cfg).unwrap();
        assert!((d2 - 2.5 * d).abs() < 1e-8);
    }

    #[test]
    fn margin_is_dilation_and_rotation_invariant() {
        let q = exp(&c1(0.7, 0.4, 1.0, 0.2), 2.0, EXP_TOL).unwrap();
        let m = domain_margin(&q);
        assert!(m > 1e-4);
        assert!((domain_margin(&dilate(3.0, &rotate(0.8, &q)).unwrap()) - m).abs() < 1e-12);
    }

    #[test]
    fn homogeneous_norm_weights() {
        let d = GroupPoint::new(1e-3, 0.0, 1e-4, 8e-9, 0.0);
        assert!((homogeneous_norm(&d) - 1e-2).abs() < 1e-15);
    }
}
