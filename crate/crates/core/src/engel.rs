//! Cut times in the Engel group and their comparison with the Cartan ones.
//!
//! Engel covectors `(θ, c, α)` drive the pendulum `θ' = c`, `c' = α cos θ`,
//! i.e. the Cartan pendulum with `β = π/2`. Negative `α` is reduced to
//! positive by `(θ, α) ↦ (θ + π, −α)`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::elliptic::{complete_k, Modulus};
use crate::error::{Error, Result};
use crate::expmap::project_engel_cov;
use crate::maxwell::{cut_time, t1v, t1z, t2v};
use crate::ode::Dop853;
use crate::pendulum::{modulus_in, reduce_angle, Covector, Stratum};
use crate::roots::golden_max;

/// Relative slack allowed in the cut-time inequalities.
pub const COMPARE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EngelCovector {
    pub theta: f64,
    pub c: f64,
    pub alpha: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EngelPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub v: f64,
}

impl EngelPoint {
    pub fn max_abs_diff(&self, o: &EngelPoint) -> f64 {
        [self.x - o.x, self.y - o.y, self.z - o.z, self.v - o.v]
            .iter()
            .fold(0.0, |m, d| m.max(d.abs()))
    }
}

impl EngelCovector {
    pub fn new(theta: f64, c: f64, alpha: f64) -> Self {
        Self {
            theta: reduce_angle(theta),
            c,
            alpha,
        }
    }

    /// The Cartan covector with `β = π/2` and `α ≥ 0` driving the same pendulum.
    pub fn to_cartan(&self) -> Result<Covector> {
        if self.alpha < 0.0 {
            Covector::new(self.theta + PI, self.c, -self.alpha, FRAC_PI_2)
        } else {
            Covector::new(self.theta, self.c, self.alpha, FRAC_PI_2)
        }
    }

    /// Engel stratum, labelled like its Cartan counterpart.
    pub fn stratum(&self) -> Result<Stratum> {
        Ok(self.to_cartan()?.stratum())
    }

    /// `E = c²/2 − α sin θ`.
    pub fn energy(&self) -> f64 {
        0.5 * self.c * self.c - self.alpha * self.theta.sin()
    }
}

/// Cut time of the Engel geodesic with covector `λᴱ`.
pub fn engel_cut_time(lambda: &EngelCovector) -> Result<f64> {
    let l = lambda.to_cartan()?;
    let st = l.stratum();
    let sa = l.alpha.sqrt();
    match st {
        Stratum::C1 => {
            let k = modulus_in(&l, st)?;
            Ok(4.0 * complete_k(k)? * t1z(k)?.min(1.0) / sa)
        }
        Stratum::C2 => {
            let k = modulus_in(&l, st)?;
            Ok(2.0 * k.value() * complete_k(k)? / sa)
        }
        Stratum::C6 => Ok(TAU / l.c.abs()),
        _ => Ok(f64::INFINITY),
    }
}

/// `Exp` of the Engel group, integrated in canonical coordinates
/// `(x, y, z, v, p_x, p_y)` with the Casimirs `p_z = c₀`, `p_v = α`.
pub fn exp_engel(lambda: &EngelCovector, t: f64, tol: f64) -> Result<EngelPoint> {
    if ![lambda.theta, lambda.c, lambda.alpha, t].iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite("engel exp input"));
    }
    if t < 0.0 {
        return Err(Error::Domain(format!("time t = {t} must be non-negative")));
    }
    let (pz, pv) = (lambda.c, lambda.alpha);
    let f = move |_t: f64, s: &[f64; 6]| -> [f64; 6] {
        let (x, y, px, py) = (s[0], s[1], s[4], s[5]);
        let r2 = 0.5 * (x * x + y * y);
        let h1 = px - 0.5 * y * pz;
        let h2 = py + 0.5 * x * pz + r2 * pv;
        [
            h1,
            h2,
            0.5 * (x * h2 - y * h1),
            r2 * h2,
            -h2 * (0.5 * pz + x * pv),
            0.5 * h1 * pz - h2 * y * pv,
        ]
    };
    let (s, c) = lambda.theta.sin_cos();
    let y = Dop853::new(tol).integrate(f, 0.0, [0.0, 0.0, 0.0, 0.0, c, s], t)?;
    Ok(EngelPoint {
        x: y[0],
        y: y[1],
        z: y[2],
        v: y[3],
    })
}

/// The constant `ζ` with the location of both maxima.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Zeta {
    pub value: f64,
    pub t1z_max: f64,
    pub t1z_argmax: f64,
    pub t2v_max: f64,
    pub t2v_argmax: f64,
}

impl Zeta {
    pub fn certified(&self) -> bool {
        self.value < 2.0
    }
}

fn branch_max<F: Fn(f64) -> f64 + Sync>(f: F) -> (f64, f64) {
    let mut ks: Vec<f64> = (0..100).map(|i| i as f64 / 100.0).collect();
    ks.extend([0.995, 0.999, 0.9999]);
    let vals: Vec<f64> = ks.par_iter().map(|&k| f(k)).collect();
    let (i, _) = vals
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |(bi, bv), (i, &v)| if v > bv { (i, v) } else { (bi, bv) });
    if i == 0 || i + 1 == ks.len() {
        return (ks[i], vals[i]);
    }
    let (k, v) = golden_max(&f, ks[i - 1], ks[i + 1], 1e-7);
    if v > vals[i] {
        (k, v)
    } else {
        (ks[i], vals[i])
    }
}

/// `ζ = max(max 𝐭₁ᶻ, max 𝐭₂ⱽ)` over `k ∈ [0, 1)`.
pub fn zeta() -> Result<Zeta> {
    let eval = |f: fn(Modulus) -> Result<f64>| {
        move |k: f64| Modulus::new(k).and_then(f).unwrap_or(f64::NAN)
    };
    let (kz, vz) = branch_max(eval(t1z));
    let (kv, vv) = branch_max(eval(t2v));
    if !(vz.is_finite() && vv.is_finite()) {
        return Err(Error::NonFinite("normalized Maxwell time"));
    }
    Ok(Zeta {
        value: vz.max(vv),
        t1z_max: vz,
        t1z_argmax: kz,
        t2v_max: vv,
        t2v_argmax: kv,
    })
}

/// `ζ`, computed once per process.
pub fn zeta_cached() -> Result<Zeta> {
    static CELL: OnceLock<std::result::Result<Zeta, Error>> = OnceLock::new();
    CELL.get_or_init(zeta).clone()
}

/// Engel and Cartan cut times of one covector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub engel: f64,
    pub cartan: f64,
    /// `t_C / t_E`; 1 when both are infinite.
    pub ratio: f64,
}

/// Compute `t_E = t_cut^E(π̄_E λ)` and `t_C = 𝐭(λ)` and check
/// `t_E ≤ t_C ≤ ζ t_E`.
pub fn compare(lambda: &Covector) -> Result<Comparison> {
    let z = zeta_cached()?.value;
    let engel = engel_cut_time(&project_engel_cov(lambda))?;
    let cartan = cut_time(lambda)?;
    let ratio = if engel.is_infinite() && cartan.is_infinite() {
        1.0
    } else {
        cartan / engel
    };
    let ok = if engel.is_infinite() || cartan.is_infinite() {
        engel.is_infinite() && cartan.is_infinite()
    } else {
        engel <= cartan * (1.0 + COMPARE_SLACK) && cartan <= z * engel * (1.0 + COMPARE_SLACK)
    };
    if !ok {
        return Err(Error::Violation { engel, cartan, zeta: z });
    }
    Ok(Comparison { engel, cartan, ratio })
}

/// Elastica family in the normalized cut-time table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Inflectional,
    NonInflectional,
}

/// Normalized Engel and Cartan cut times at one modulus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutTimeRow {
    pub family: Family,
    pub k: f64,
    pub engel: f64,
    pub cartan: f64,
}

/// Normalized cut-time curves of both families on the given moduli:
/// inflectional rows first, then non-inflectional, each in input order.
pub fn cut_time_curves(ks: &[f64]) -> Result<Vec<CutTimeRow>> {
    let rows: Vec<Result<[CutTimeRow; 2]>> = ks
        .par_iter()
        .map(|&k| {
            let m = Modulus::new(k)?;
            let (a, b, c) = (t1z(m)?, t1v(m)?, t2v(m)?);
            Ok([
                CutTimeRow {
                    family: Family::Inflectional,
                    k,
                    engel: a.min(1.0),
                    cartan: a.min(b),
                },
                CutTimeRow {
                    family: Family::NonInflectional,
                    k,
                    engel: 1.0,
                    cartan: c,
                },
            ])
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let mut out: Vec<CutTimeRow> = rows.iter().map(|r| r[0]).collect();
    out.extend(rows.iter().map(|r| r[1]));
    Ok(out)
}
