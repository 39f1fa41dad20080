//! The exponential map of the Cartan group and its continuous symmetries.
//!
//! `Exp(λ, t)` integrates the pendulum together with the horizontal system
//! `x' = cos θ`, `y' = sin θ`, `z' = (x y' − y x')/2`, `v' = y'(x² + y²)/2`,
//! `w' = −x'(x² + y²)/2` from the identity.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::engel::{EngelCovector, EngelPoint};
use crate::error::{Error, Result};
use crate::ode::{Dop853, Flow};
use crate::pendulum::Covector;

/// Default integrator tolerance for `Exp`.
pub const EXP_TOL: f64 = 1e-12;

/// A point `(x, y, z, v, w)` of the Cartan group.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct GroupPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub v: f64,
    pub w: f64,
}

impl GroupPoint {
    pub const fn new(x: f64, y: f64, z: f64, v: f64, w: f64) -> Self {
        Self { x, y, z, v, w }
    }

    pub const fn identity() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0, 0.0)
    }

    pub fn to_array(self) -> [f64; 5] {
        [self.x, self.y, self.z, self.v, self.w]
    }

    pub fn from_array(a: [f64; 5]) -> Self {
        Self::new(a[0], a[1], a[2], a[3], a[4])
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    /// `V = x v + y w − (x² + y²) z / 2`.
    #[inline]
    pub fn big_v(&self) -> f64 {
        self.x * self.v + self.y * self.w - 0.5 * (self.x * self.x + self.y * self.y) * self.z
    }

    /// `z · V`; vanishes on the set containing all Maxwell points.
    #[inline]
    pub fn z_v(&self) -> f64 {
        self.z * self.big_v()
    }

    /// Rotation-invariant homogeneous norm
    /// `max(|(x, y)|, |z|^{1/2}, |(v, w)|^{1/3})`, of degree 1 under `δ_μ`.
    pub fn homogeneous_radius(&self) -> f64 {
        self.x
            .hypot(self.y)
            .max(self.z.abs().sqrt())
            .max(self.v.hypot(self.w).cbrt())
    }

    /// `zV / ρ⁶` with `ρ` the homogeneous radius; invariant under rotations
    /// and dilations. Zero at the identity.
    pub fn normalized_z_v(&self) -> f64 {
        let rho = self.homogeneous_radius();
        if rho == 0.0 {
            return 0.0;
        }
        self.z_v() / rho.powi(6)
    }

    /// Group product `self · other`.
    pub fn mul(&self, o: &GroupPoint) -> GroupPoint {
        let (x1, y1, z1, v1, w1) = (self.x, self.y, self.z, self.v, self.w);
        let r1 = x1 * x1 + y1 * y1;
        GroupPoint {
            x: x1 + o.x,
            y: y1 + o.y,
            z: z1 + o.z + 0.5 * (x1 * o.y - y1 * o.x),
            v: v1 + o.v + 0.5 * r1 * o.y + x1 * (o.z + 0.5 * o.x * o.y) + 0.5 * y1 * o.y * o.y,
            w: w1 + o.w - 0.5 * r1 * o.x - 0.5 * x1 * o.x * o.x - y1 * (0.5 * o.x * o.y - o.z),
        }
    }

    pub fn inverse(&self) -> GroupPoint {
        GroupPoint {
            x: -self.x,
            y: -self.y,
            z: -self.z,
            v: -self.v + self.x * self.z,
            w: -self.w + self.y * self.z,
        }
    }

    /// Largest absolute coordinate difference.
    pub fn max_abs_diff(&self, o: &GroupPoint) -> f64 {
        self.to_array()
            .iter()
            .zip(o.to_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// A sampled geodesic.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub lambda: Covector,
    pub tol: f64,
    pub samples: Vec<TrajectorySample>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectorySample {
    pub t: f64,
    pub q: GroupPoint,
    pub theta: f64,
}

type State = [f64; 7];

/// Vector field with the pendulum written through `(a, b) = α(cos β, sin β)`,
/// so that `−α sin(θ − β) = b cos θ − a sin θ`.
fn vector_field(a: f64, b: f64) -> impl Fn(f64, &State) -> State {
    move |_t, s| {
        let (th, c, x, y) = (s[0], s[1], s[2], s[3]);
        let (sn, cs) = th.sin_cos();
        let r2 = 0.5 * (x * x + y * y);
        [
            c,
            b * cs - a * sn,
            cs,
            sn,
            0.5 * (x * sn - y * cs),
            sn * r2,
            -cs * r2,
        ]
    }
}

fn cartesian(lambda: &Covector) -> (f64, f64) {
    let (s, c) = lambda.beta.sin_cos();
    (lambda.alpha * c, lambda.alpha * s)
}

fn start(lambda: &Covector) -> State {
    [lambda.theta, lambda.c, 0.0, 0.0, 0.0, 0.0, 0.0]
}

fn point(s: &State) -> GroupPoint {
    GroupPoint::new(s[2], s[3], s[4], s[5], s[6])
}

fn check(lambda: &Covector, t: f64, tol: f64) -> Result<()> {
    if ![lambda.theta, lambda.c, lambda.alpha, lambda.beta, t, tol]
        .iter()
        .all(|v| v.is_finite())
    {
        return Err(Error::NonFinite("exp input"));
    }
    if t < 0.0 {
        return Err(Error::Domain(format!("time t = {t} must be non-negative")));
    }
    if tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance {tol} must be positive")));
    }
    Ok(())
}

/// `Exp(λ, t)` with per-step error tolerance `tol`.
pub fn exp(lambda: &Covector, t: f64, tol: f64) -> Result<GroupPoint> {
    exp_with_heading(lambda, t, tol).map(|(q, _)| q)
}

/// `Exp(λ, t)` together with the final heading `(θ_t, c_t)`.
pub fn exp_with_heading(lambda: &Covector, t: f64, tol: f64) -> Result<(GroupPoint, [f64; 2])> {
    check(lambda, t, tol)?;
    let (a, b) = cartesian(lambda);
    let s = Dop853::new(tol).integrate(vector_field(a, b), 0.0, start(lambda), t)?;
    Ok((point(&s), [s[0], s[1]]))
}

/// `Exp` for the covector `(θ, c)` with pendulum constants given as
/// `(a, b) = α(cos β, sin β)`; smooth through `α = 0`.
pub fn exp_cartesian(theta: f64, c: f64, a: f64, b: f64, t: f64, tol: f64) -> Result<GroupPoint> {
    if ![theta, c, a, b, t, tol].iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite("exp input"));
    }
    if t < 0.0 {
        return Err(Error::Domain(format!("time t = {t} must be non-negative")));
    }
    if tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance {tol} must be positive")));
    }
    let s = Dop853::new(tol).integrate(vector_field(a, b), 0.0, [theta, c, 0.0, 0.0, 0.0, 0.0, 0.0], t)?;
    Ok(point(&s))
}

/// Samples of `Exp(λ, ·)` at the given increasing times.
pub fn exp_at_times(lambda: &Covector, times: &[f64], tol: f64) -> Result<Trajectory> {
    let t_end = times.last().copied().unwrap_or(0.0);
    check(lambda, t_end, tol)?;
    if times.windows(2).any(|w| w[1] <= w[0]) || times.first().is_some_and(|&t| t < 0.0) {
        return Err(Error::Domain("sample times must be non-negative and strictly increasing".into()));
    }
    let mut samples = Vec::with_capacity(times.len());
    let mut idx = 0;
    let s0 = start(lambda);
    while idx < times.len() && times[idx] == 0.0 {
        samples.push(TrajectorySample {
            t: 0.0,
            q: GroupPoint::identity(),
            theta: lambda.theta,
        });
        idx += 1;
    }
    if idx < times.len() {
        let (a, b) = cartesian(lambda);
        Dop853::new(tol).integrate_dense(vector_field(a, b), 0.0, s0, t_end, |step| {
            while idx < times.len() && times[idx] <= step.t {
                let t = times[idx];
                let s = if t == step.t { step.y } else { step.eval(t) };
                samples.push(TrajectorySample {
                    t,
                    q: point(&s),
                    theta: s[0],
                });
                idx += 1;
            }
            if idx == times.len() {
                Flow::Stop
            } else {
                Flow::Continue
            }
        })?;
    }
    Ok(Trajectory {
        lambda: *lambda,
        tol,
        samples,
    })
}

/// `n ≥ 2` uniformly spaced samples of `Exp(λ, ·)` on `[0, t_end]`.
pub fn exp_trajectory(lambda: &Covector, t_end: f64, n: usize, tol: f64) -> Result<Trajectory> {
    if n < 2 || t_end <= 0.0 {
        return Err(Error::Domain("trajectory needs n ≥ 2 samples and t_end > 0".into()));
    }
    let times: Vec<f64> = (0..n)
        .map(|i| if i + 1 == n { t_end } else { t_end * i as f64 / (n - 1) as f64 })
        .collect();
    exp_at_times(lambda, &times, tol)
}

/// Dilation `δ_μ` on the group: weights `(1, 1, 2, 3, 3)`.
pub fn dilate(mu: f64, q: &GroupPoint) -> Result<GroupPoint> {
    check_mu(mu)?;
    let (m2, m3) = (mu * mu, mu * mu * mu);
    Ok(GroupPoint::new(mu * q.x, mu * q.y, m2 * q.z, m3 * q.v, m3 * q.w))
}

/// Dilation `δ_μ` on `(λ, t)`: `(θ, c/μ, α/μ², β, μ t)`.
pub fn dilate_cov(mu: f64, lambda: &Covector, t: f64) -> Result<(Covector, f64)> {
    check_mu(mu)?;
    let l = Covector {
        theta: lambda.theta,
        c: lambda.c / mu,
        alpha: lambda.alpha / (mu * mu),
        beta: lambda.beta,
    };
    Ok((l, mu * t))
}

fn check_mu(mu: f64) -> Result<()> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::Domain(format!("dilation factor mu = {mu} must be positive")));
    }
    Ok(())
}

/// Rotation `R_η` on the group: `(x, y)` and `(v, w)` turn by `−η`, `z` fixed.
pub fn rotate(eta: f64, q: &GroupPoint) -> GroupPoint {
    let (s, c) = eta.sin_cos();
    GroupPoint::new(
        q.x * c + q.y * s,
        q.y * c - q.x * s,
        q.z,
        q.v * c + q.w * s,
        q.w * c - q.v * s,
    )
}

/// Rotation `R_η` on the cylinder: `(θ − η, c, α, β − η)`.
pub fn rotate_cov(eta: f64, lambda: &Covector) -> Covector {
    Covector::new(lambda.theta - eta, lambda.c, lambda.alpha, lambda.beta - eta)
        .expect("rotation preserves validity")
}

/// Engel projection of a covector: `(θ − β + π/2, c, α)`.
pub fn project_engel_cov(lambda: &Covector) -> EngelCovector {
    EngelCovector::new(lambda.theta - lambda.beta + FRAC_PI_2, lambda.c, lambda.alpha)
}

/// Engel projection of the point reached along `λ`: rotate by `β − π/2`,
/// then drop `w`.
pub fn project_engel_point(beta: f64, q: &GroupPoint) -> EngelPoint {
    let r = rotate(beta - FRAC_PI_2, q);
    EngelPoint {
        x: r.x,
        y: r.y,
        z: r.z,
        v: r.v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pendulum::pendulum_flow;

    fn cov(theta: f64, c: f64, alpha: f64, beta: f64) -> Covector {
        Covector::new(theta, c, alpha, beta).unwrap()
    }

    #[test]
    fn exp_at_zero_is_identity() {
        assert_eq!(exp(&cov(0.3, 1.0, 2.0, 0.1), 0.0, EXP_TOL).unwrap(), GroupPoint::identity());
    }

    #[test]
    fn straight_line_matches_cubic_closed_form() {
        let th: f64 = 0.7;
        let t: f64 = 2.5;
        let q = exp(&cov(th, 0.0, 0.0, 0.0), t, EXP_TOL).unwrap();
        let want = GroupPoint::new(
            t * th.cos(),
            t * th.sin(),
            0.0,
            th.sin() * t.powi(3) / 6.0,
            -th.cos() * t.powi(3) / 6.0,
        );
        assert!(q.max_abs_diff(&want) < 1e-12);
    }

    #[test]
    fn free_rotation_is_a_circle() {
        let c = -1.7;
        let traj = exp_trajectory(&cov(0.4, c, 0.0, 0.0), 5.0, 40, EXP_TOL).unwrap();
        // Centre of the circle through the origin with heading 0.4.
        let (cx, cy) = (-(0.4f64).sin() / c, (0.4f64).cos() / c);
        for s in &traj.samples {
            let r = ((s.q.x - cx).powi(2) + (s.q.y - cy).powi(2)).sqrt();
            assert!((r - 1.0 / c.abs()).abs() < 1e-11);
        }
    }

    #[test]
    fn trajectory_is_arc_length_parametrized() {
        let traj = exp_trajectory(&cov(0.2, 0.9, 1.4, 2.0), 3.0, 3001, EXP_TOL).unwrap();
        let len: f64 = traj
            .samples
            .windows(2)
            .map(|w| ((w[1].q.x - w[0].q.x).powi(2) + (w[1].q.y - w[0].q.y).powi(2)).sqrt())
            .sum();
        assert!((len - 3.0).abs() < 1e-6);
        assert_eq!(traj.samples[0].q, GroupPoint::identity());
        assert_eq!(traj.samples.last().unwrap().t, 3.0);
    }

    #[test]
    fn dense_samples_agree_with_direct_integration() {
        let l = cov(1.0, -0.3, 0.8, 0.5);
        let traj = exp_trajectory(&l, 4.0, 9, EXP_TOL).unwrap();
        for s in &traj.samples {
            assert!(s.q.max_abs_diff(&exp(&l, s.t, EXP_TOL).unwrap()) < 1e-10);
        }
    }

    #[test]
    fn dilation_weights() {
        assert_eq!(
            dilate(2.0, &GroupPoint::new(1.0, 0.0, 1.0, 1.0, 0.0)).unwrap(),
            GroupPoint::new(2.0, 0.0, 4.0, 8.0, 0.0)
        );
        let q = GroupPoint::new(0.1, 0.2, 0.3, 0.4, 0.5);
        assert_eq!(dilate(1.0, &q).unwrap(), q);
        assert!(dilate(0.0, &q).is_err());
        assert!(dilate_cov(-1.0, &cov(0.0, 1.0, 1.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn rotation_identity_and_invariants() {
        let q = GroupPoint::new(0.3, -1.2, 0.7, 0.4, -0.9);
        assert_eq!(rotate(0.0, &q), q);
        let r = rotate(1.234, &q);
        assert!((r.z - q.z).abs() < 1e-15);
        assert!((r.big_v() - q.big_v()).abs() < 1e-12);
    }

    #[test]
    fn group_law_inverse_and_associativity() {
        let a = GroupPoint::new(0.3, -1.2, 0.7, 0.4, -0.9);
        let b = GroupPoint::new(-0.5, 0.8, 0.1, 1.1, 0.2);
        let c = GroupPoint::new(1.5, 0.1, -0.6, 0.3, 0.7);
        assert!(a.mul(&a.inverse()).max_abs_diff(&GroupPoint::identity()) < 1e-15);
        assert!(a.inverse().mul(&a).max_abs_diff(&GroupPoint::identity()) < 1e-15);
        assert!(a.mul(&b).mul(&c).max_abs_diff(&a.mul(&b.mul(&c))) < 1e-14);
    }

    /// Left invariance: continuing a geodesic from `Exp(λ, s)` is the left
    /// translate of the geodesic of the flowed covector.
    #[test]
    fn group_law_matches_geodesic_concatenation() {
        let l = cov(0.6, 0.5, 1.3, 2.2);
        let (s, t) = (1.1, 0.8);
        let q_s = exp(&l, s, EXP_TOL).unwrap();
        let l_s = pendulum_flow(&l, s).unwrap();
        let tail = exp(&l_s, t, EXP_TOL).unwrap();
        let whole = exp(&l, s + t, EXP_TOL).unwrap();
        assert!(q_s.mul(&tail).max_abs_diff(&whole) < 1e-10);
    }

    #[test]
    fn halving_tolerance_changes_little() {
        let l = cov(2.0, 1.1, 0.7, 0.3);
        for tol in [1e-8, 1e-10] {
            let a = exp(&l, 3.0, tol).unwrap();
            let b = exp(&l, 3.0, tol / 2.0).unwrap();
            assert!(a.max_abs_diff(&b) < 10.0 * tol);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let l = cov(0.0, 1.0, 1.0, 0.0);
        assert!(exp(&l, -1.0, EXP_TOL).is_err());
        assert!(exp(&l, f64::INFINITY, EXP_TOL).is_err());
        assert!(exp(&l, 1.0, 0.0).is_err());
    }

    #[test]
    fn engel_projection_at_quarter_turn_drops_w() {
        let q = GroupPoint::new(0.3, -1.2, 0.7, 0.4, -0.9);
        let e = project_engel_point(FRAC_PI_2, &q);
        assert_eq!((e.x, e.y, e.z, e.v), (q.x, q.y, q.z, q.v));
        let id = project_engel_point(0.4, &GroupPoint::identity());
        assert_eq!((id.x, id.y, id.z, id.v), (0.0, 0.0, 0.0, 0.0));
    }
}
