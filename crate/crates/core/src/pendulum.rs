//! Covectors on the initial cylinder, the pendulum they drive, and their
//! stratification.
//!
//! A covector is `(θ, c, α, β)` with `α ≥ 0`. Its vertical part follows the
//! pendulum `θ' = c`, `c' = −α sin(θ − β)` with energy
//! `E = c²/2 − α cos(θ − β)`.

use std::f64::consts::{PI, TAU};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::elliptic::{complete_k, jacobi, Modulus};
use crate::error::{Error, Result};
use crate::ode::{Dop853, Flow};
use crate::roots::brent;

/// Integrator tolerance used for pendulum and phase computations.
pub const FLOW_TOL: f64 = 1e-13;

/// Reduce an angle to `[0, 2π)`.
#[inline]
pub fn reduce_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Reduce an angle to `(−π, π]`.
#[inline]
pub fn wrap_pi(a: f64) -> f64 {
    let r = reduce_angle(a);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// A point `(θ, c, α, β)` of the cylinder.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Covector {
    pub theta: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl Covector {
    /// Validates finiteness and `α ≥ 0`; angles are reduced to `[0, 2π)`.
    pub fn new(theta: f64, c: f64, alpha: f64, beta: f64) -> Result<Self> {
        if ![theta, c, alpha, beta].iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("covector"));
        }
        if alpha < 0.0 {
            return Err(Error::Domain(format!("alpha = {alpha} must be non-negative")));
        }
        Ok(Self {
            theta: reduce_angle(theta),
            c,
            alpha,
            beta: reduce_angle(beta),
        })
    }

    /// `θ − β` in `(−π, π]`.
    #[inline]
    pub fn psi(&self) -> f64 {
        wrap_pi(self.theta - self.beta)
    }

    #[inline]
    pub fn energy(&self) -> f64 {
        energy(self)
    }

    #[inline]
    pub fn stratum(&self) -> Stratum {
        classify(self, 0.0)
    }
}

/// The seven strata of the cylinder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stratum {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
}

impl Stratum {
    pub const ALL: [Stratum; 7] = [
        Stratum::C1,
        Stratum::C2,
        Stratum::C3,
        Stratum::C4,
        Stratum::C5,
        Stratum::C6,
        Stratum::C7,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Stratum::C1 => "C1",
            Stratum::C2 => "C2",
            Stratum::C3 => "C3",
            Stratum::C4 => "C4",
            Stratum::C5 => "C5",
            Stratum::C6 => "C6",
            Stratum::C7 => "C7",
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Stratum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Stratum::ALL
            .into_iter()
            .find(|st| st.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown stratum {s:?}")))
    }
}

/// Pendulum energy `E = c²/2 − α cos(θ − β)`.
#[inline]
pub fn energy(lambda: &Covector) -> f64 {
    0.5 * lambda.c * lambda.c - lambda.alpha * (lambda.theta - lambda.beta).cos()
}

/// Stratum of `λ`.
///
/// With `tol = 0` the defining equalities are tested exactly. A positive
/// `tol` widens the lower-dimensional strata: `α ≤ tol` counts as `α = 0`,
/// `|c| ≤ tol` as `c = 0`, and `|E ∓ α| ≤ tol·max(1, α)` as `E = ±α`.
pub fn classify(lambda: &Covector, tol: f64) -> Stratum {
    let tol = tol.max(0.0);
    let (c, alpha) = (lambda.c, lambda.alpha);
    let c_zero = c.abs() <= tol;
    if alpha <= tol {
        return if c_zero { Stratum::C7 } else { Stratum::C6 };
    }
    let e = energy(lambda);
    let band = tol * alpha.max(1.0);
    if (e + alpha).abs() <= band {
        return Stratum::C4;
    }
    if (e - alpha).abs() <= band {
        return if c_zero { Stratum::C5 } else { Stratum::C3 };
    }
    if e < alpha {
        Stratum::C1
    } else {
        Stratum::C2
    }
}

/// Elliptic modulus of `λ ∈ C1 ∪ C2 ∪ C3`.
pub fn modulus(lambda: &Covector) -> Result<Modulus> {
    modulus_in(lambda, lambda.stratum())
}

/// Elliptic modulus using a stratum already known to the caller.
pub fn modulus_in(lambda: &Covector, stratum: Stratum) -> Result<Modulus> {
    let e = energy(lambda);
    let a = lambda.alpha;
    let k = match stratum {
        Stratum::C1 => ((e + a) / (2.0 * a)).sqrt(),
        Stratum::C2 => (2.0 * a / (e + a)).sqrt(),
        Stratum::C3 => 1.0,
        other => return Err(Error::Stratum(other)),
    };
    // Rounding can push k to the edge of (0, 1); clamp into the open interval.
    let k = k.clamp(0.0, 1.0);
    Modulus::new(k)
}

fn rhs(alpha: f64, beta: f64) -> impl Fn(f64, &[f64; 2]) -> [f64; 2] {
    move |_t, y| [y[1], -alpha * (y[0] - beta).sin()]
}

/// Flow `λ` along the pendulum for time `t` (either sign).
pub fn pendulum_flow(lambda: &Covector, t: f64) -> Result<Covector> {
    if lambda.alpha == 0.0 || (lambda.c == 0.0 && lambda.alpha * lambda.psi().sin() == 0.0) {
        // Free rotation or an equilibrium: closed form.
        return Covector::new(lambda.theta + lambda.c * t, lambda.c, lambda.alpha, lambda.beta);
    }
    let y = Dop853::new(FLOW_TOL).integrate(
        rhs(lambda.alpha, lambda.beta),
        0.0,
        [lambda.theta, lambda.c],
        t,
    )?;
    Covector::new(y[0], y[1], lambda.alpha, lambda.beta)
}

/// Period of the pendulum motion in `C1` (`4K/√α`), `C2` (`2kK/√α`, one
/// full turn of `θ`) or `C6` (`2π/|c|`).
pub fn period(lambda: &Covector) -> Result<f64> {
    let st = lambda.stratum();
    match st {
        Stratum::C1 => Ok(4.0 * complete_k(modulus_in(lambda, st)?)? / lambda.alpha.sqrt()),
        Stratum::C2 => {
            let k = modulus_in(lambda, st)?;
            Ok(2.0 * k.value() * complete_k(k)? / lambda.alpha.sqrt())
        }
        Stratum::C6 => Ok(TAU / lambda.c.abs()),
        other => Err(Error::Stratum(other)),
    }
}

/// Elliptic coordinates of a covector in `C1 ∪ C2`.
///
/// `phi` is the pendulum time elapsed since the reference point: for `C1` the
/// passage through `θ = β` with `c > 0`, for `C2` the latest passage through
/// `θ ≡ β (mod 2π)`. `direction` is the sign of `c` (always `+1` on `C1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticCoords {
    pub phi: f64,
    pub k: Modulus,
    pub alpha: f64,
    pub beta: f64,
    pub stratum: Stratum,
    pub direction: f64,
}

impl EllipticCoords {
    /// Pendulum period in these coordinates.
    pub fn period(&self) -> f64 {
        let kk = complete_k(self.k).unwrap_or(f64::INFINITY);
        match self.stratum {
            Stratum::C1 => 4.0 * kk / self.alpha.sqrt(),
            _ => 2.0 * self.k.value() * kk / self.alpha.sqrt(),
        }
    }

    /// Reconstruct `(θ, c)` from the elliptic closed forms.
    ///
    /// C1: `sin(ψ/2) = k sn(√α φ)`, `c = 2k√α cn(√α φ)`.
    /// C2: `ψ/2 = ±am(√α φ/k)`, `c = ±(2√α/k) dn(√α φ/k)`.
    pub fn covector(&self) -> Result<Covector> {
        let k = self.k.value();
        let sa = self.alpha.sqrt();
        let (psi, c) = match self.stratum {
            Stratum::C1 => {
                let e = jacobi(sa * self.phi, self.k);
                (2.0 * (k * e.sn).asin(), 2.0 * k * sa * e.cn)
            }
            Stratum::C2 => {
                let e = jacobi(sa * self.phi / k, self.k);
                let am = e.sn.atan2(e.cn);
                (
                    self.direction * 2.0 * am,
                    self.direction * 2.0 * sa / k * e.dn,
                )
            }
            other => return Err(Error::Stratum(other)),
        };
        Covector::new(psi + self.beta, c, self.alpha, self.beta)
    }

    /// Covector with given modulus, phase and `(α, β)` on `C1` or `C2`.
    pub fn from_parts(stratum: Stratum, k: f64, phi: f64, alpha: f64, beta: f64, direction: f64) -> Result<Covector> {
        let k = Modulus::new(k)?;
        EllipticCoords {
            phi,
            k,
            alpha,
            beta,
            stratum,
            direction: direction.signum(),
        }
        .covector()
    }
}

/// Elliptic coordinates `(φ, k, α, β)` of `λ ∈ C1 ∪ C2`, with `φ` located by
/// event detection on the integrated pendulum flow.
pub fn phase(lambda: &Covector) -> Result<EllipticCoords> {
    let st = lambda.stratum();
    if !matches!(st, Stratum::C1 | Stratum::C2) {
        return Err(Error::Stratum(st));
    }
    let k = modulus_in(lambda, st)?;
    let per = period(lambda)?;
    let direction = if st == Stratum::C1 { 1.0 } else { lambda.c.signum() };
    let psi0 = lambda.psi();

    // Unwrapped ψ starts at psi0; the next reference passage is where the
    // event function crosses zero upward (C1) or ψ reaches ±2π (C2).
    let (start, target) = match st {
        Stratum::C1 => {
            if psi0 == 0.0 && lambda.c > 0.0 {
                return Ok(coords(0.0, k, lambda, st, direction));
            }
            (psi0, 0.0)
        }
        _ => {
            let s = if direction > 0.0 {
                psi0.rem_euclid(TAU)
            } else {
                -(-psi0).rem_euclid(TAU)
            };
            if s == 0.0 {
                return Ok(coords(0.0, k, lambda, st, direction));
            }
            (s, direction * TAU)
        }
    };

    let f = rhs(lambda.alpha, 0.0);
    let g = |psi: f64| match st {
        Stratum::C1 => psi.sin(),
        _ => direction * (psi - target),
    };
    let mut hit: Option<f64> = None;
    let mut failure: Option<Error> = None;
    Dop853::new(FLOW_TOL).h_max(per / 16.0).integrate_dense(
        &f,
        0.0,
        [start, lambda.c],
        2.0 * per,
        |step| {
            let (g0, g1) = (g(step.y_old[0]), g(step.y[0]));
            let rising = match st {
                Stratum::C1 => g0 < 0.0 && g1 >= 0.0 && step.y[1] > 0.0,
                _ => g0 < 0.0 && g1 >= 0.0,
            };
            if !rising {
                return Flow::Continue;
            }
            match brent(|t| g(step.eval(t)[0]), step.t_old, step.t, 1e-15) {
                Ok(t) => hit = Some(t),
                Err(e) => failure = Some(e),
            }
            Flow::Stop
        },
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    let tau = hit.ok_or_else(|| Error::Bracket("no reference passage within two periods".into()))?;
    let mut phi = (per - tau).rem_euclid(per);
    if phi >= per {
        phi = 0.0;
    }
    Ok(coords(phi, k, lambda, st, direction))
}

fn coords(phi: f64, k: Modulus, lambda: &Covector, stratum: Stratum, direction: f64) -> EllipticCoords {
    EllipticCoords {
        phi,
        k,
        alpha: lambda.alpha,
        beta: lambda.beta,
        stratum,
        direction,
    }
}
