//! First Maxwell times from the elliptic root equations, the critical moduli
//! `k₀`, `k₁`, and the cut-time function `𝐭(λ)`.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::elliptic::{complete_integrals, complete_k, jacobi, jacobi_zeta, Modulus};
use crate::error::{Error, Result};
use crate::expmap::{exp, EXP_TOL};
use crate::f2v_series::{F2V_SMALL_K_ORDER, F2V_SMALL_K_TERMS};
use crate::pendulum::{modulus_in, phase, Covector, Stratum};
use crate::roots::{brent, first_sign_change};

/// Samples used to bracket the first root in the search window.
pub const ROOT_SAMPLES: usize = 1024;

/// Below this modulus `f2v` is evaluated from its power series in `k²`.
pub const F2V_SERIES_CROSSOVER: f64 = 0.4;

/// `f₁ᶻ(p, k) = sn p dn p − g₁(p) cn p` with `g₁ = 2E(p) − p`.
pub fn f1z(p: f64, k: Modulus) -> f64 {
    let e = jacobi(p, k);
    let g1 = 2.0 * e.eps - p;
    e.sn * e.dn - g1 * e.cn
}

/// The `V`-root function on `C1`.
pub fn f1v(p: f64, k: Modulus) -> f64 {
    let e = jacobi(p, k);
    let k2 = k.value() * k.value();
    let g1 = 2.0 * e.eps - p;
    let (sn, cn, dn) = (e.sn, e.cn, e.dn);
    let bracket = g1 * g1 * g1 - p - 2.0 * g1 * (1.0 - (2.0 - 6.0 * cn * cn) * k2) + 8.0 * k2 * sn * cn * dn;
    4.0 / 3.0 * dn * sn * bracket + 4.0 * cn * g1 * g1 * (1.0 - 2.0 * k2 * sn * sn)
}

/// The `V`-root function on `C2`; at `k = 0` the closed form
/// `((32p² − 1) cos 2p − 8p sin 2p + cos 6p)/512` is returned instead.
///
/// For `0 < k` the function is `O(k⁸)` while its individual terms are
/// `O(k²)`; below [`F2V_SERIES_CROSSOVER`] it is evaluated as `k⁸` times a
/// power series in `k²` to avoid the cancellation.
pub fn f2v(p: f64, k: Modulus) -> f64 {
    let kv = k.value();
    if kv == 0.0 {
        return f2v_k0(p);
    }
    if kv < F2V_SERIES_CROSSOVER {
        let m = kv * kv;
        return m * m * m * m * f2v_series(p, m);
    }
    f2v_direct(p, k)
}

/// `f₂ⱽ(p, k)/k⁸`, continuous at `k = 0` where it equals the closed form.
pub fn f2v_normalized(p: f64, k: Modulus) -> f64 {
    let kv = k.value();
    if kv == 0.0 {
        return f2v_k0(p);
    }
    if kv < F2V_SERIES_CROSSOVER {
        return f2v_series(p, kv * kv);
    }
    let k8 = kv.powi(8);
    f2v_direct(p, k) / k8
}

fn f2v_k0(p: f64) -> f64 {
    ((32.0 * p * p - 1.0) * (2.0 * p).cos() - 8.0 * p * (2.0 * p).sin() + (6.0 * p).cos()) / 512.0
}

fn f2v_direct(p: f64, k: Modulus) -> f64 {
    // g₂ = 2E(p) − (2 − k²)p is O(k²); form it from Z(p) and the AGM defect.
    let (e, zeta, defect) = jacobi_zeta(p, k);
    let k2 = k.value() * k.value();
    let g2 = 2.0 * zeta - defect * p;
    let (sn, cn, dn) = (e.sn, e.cn, e.dn);
    let sn2 = sn * sn;
    let first = dn * (8.0 * k2 * cn * cn * sn2 + g2 * g2 * (3.0 - 6.0 * sn2));
    let second = cn * sn * (g2 * g2 * g2 - k2 * k2 * p - 2.0 * g2 * (4.0 + k2 * (1.0 - 6.0 * sn2)));
    4.0 / 3.0 * (first + second)
}

fn f2v_series(p: f64, m: f64) -> f64 {
    let (s, c) = p.sin_cos();
    let mut up = [1.0; 16];
    let mut cp = [1.0; 33];
    let mut mp = [1.0; F2V_SMALL_K_ORDER + 1];
    for i in 1..up.len() {
        up[i] = up[i - 1] * p;
    }
    for i in 1..cp.len() {
        cp[i] = cp[i - 1] * c;
    }
    for i in 1..mp.len() {
        mp[i] = mp[i - 1] * m;
    }
    let mut acc = [0.0; F2V_SMALL_K_ORDER + 1];
    for &(j, a, b, cc, coeff) in F2V_SMALL_K_TERMS.iter() {
        let sb = if b == 1 { s } else { 1.0 };
        acc[j as usize] += coeff * up[a as usize] * sb * cp[cc as usize];
    }
    // Highest order first to keep rounding at the scale of the result.
    acc.iter().enumerate().rev().fold(0.0, |sum, (j, &a)| sum + a * mp[j])
}

/// Which root equation to solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootTarget {
    F1z,
    F1v,
    F2v,
}

impl RootTarget {
    fn name(self) -> &'static str {
        match self {
            RootTarget::F1z => "f1z",
            RootTarget::F1v => "f1v",
            RootTarget::F2v => "f2v",
        }
    }

    fn eval(self, p: f64, k: Modulus) -> f64 {
        match self {
            RootTarget::F1z => f1z(p, k),
            RootTarget::F1v => f1v(p, k),
            RootTarget::F2v => f2v_normalized(p, k),
        }
    }
}

/// Left end of the root search window in units of `K`.
///
/// All three functions vanish to high order at `p = 0`, and for moderate `k`
/// their values just above 0 are below the rounding noise of the closed
/// forms. Every first root lies beyond `p = K`, so the scan starts at `K/2`.
pub const ROOT_WINDOW_START: f64 = 0.5;

/// Smallest `p > K/2` with `f(p, k) = 0`, searched in `(K/2, 4K]`.
///
/// The window is sampled in units of `K` so the bracketing grid scales with
/// the period as `k → 1`.
pub fn first_root(target: RootTarget, k: Modulus) -> Result<f64> {
    let kk = complete_k(k)?;
    let f = |s: f64| target.eval(s * kk, k);
    let window = 4.0;
    let (a, b) = first_sign_change(f, ROOT_WINDOW_START, window, ROOT_SAMPLES).ok_or(Error::NoRoot {
        target: target.name(),
        k: k.value(),
        window: window * kk,
    })?;
    let s = brent(f, a, b, 1e-13)?;
    Ok(s * kk)
}

/// Normalized first Maxwell times for a modulus and stratum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaxwellTimes {
    pub t1z: Option<f64>,
    pub t1v: Option<f64>,
    pub t2v: Option<f64>,
    /// `𝐭` after normalization; `+∞` off `C1 ∪ C2 ∪ C6`.
    pub combined: f64,
}

impl MaxwellTimes {
    pub const INFINITE: MaxwellTimes = MaxwellTimes {
        t1z: None,
        t1v: None,
        t2v: None,
        combined: f64::INFINITY,
    };
}

/// `𝐭₁ᶻ(k) = p₁ᶻ/(2K)`.
pub fn t1z(k: Modulus) -> Result<f64> {
    Ok(first_root(RootTarget::F1z, k)? / (2.0 * complete_k(k)?))
}

/// `𝐭₁ⱽ(k) = p₁ⱽ/(2K)`.
pub fn t1v(k: Modulus) -> Result<f64> {
    Ok(first_root(RootTarget::F1v, k)? / (2.0 * complete_k(k)?))
}

/// `𝐭₂ⱽ(k) = p₂ⱽ/K`; at `k = 0` this is `2p₂ⱽ(0)/π`.
pub fn t2v(k: Modulus) -> Result<f64> {
    Ok(first_root(RootTarget::F2v, k)? / complete_k(k)?)
}

/// `𝐭₁(k) = min(𝐭₁ᶻ, 𝐭₁ⱽ)`.
pub fn t1(k: Modulus) -> Result<f64> {
    Ok(t1z(k)?.min(t1v(k)?))
}

/// Normalized times for `C1`, `C2` or `C6` (`k` is ignored for `C6`).
pub fn normalized_times(k: Modulus, stratum: Stratum) -> Result<MaxwellTimes> {
    match stratum {
        Stratum::C1 => {
            let (a, b) = (t1z(k)?, t1v(k)?);
            Ok(MaxwellTimes {
                t1z: Some(a),
                t1v: Some(b),
                t2v: None,
                combined: a.min(b),
            })
        }
        Stratum::C2 | Stratum::C6 => {
            let k = if stratum == Stratum::C6 { Modulus::new(0.0)? } else { k };
            let t = t2v(k)?;
            Ok(MaxwellTimes {
                t1z: None,
                t1v: None,
                t2v: Some(t),
                combined: t,
            })
        }
        other => Err(Error::Stratum(other)),
    }
}

/// Moduli in `(0, 1)` where `𝐭₁ᶻ = 𝐭₁ⱽ`, returned as `(k₀, k₁)` with
/// `k₀ > k₁`.
pub fn critical_moduli() -> Result<(f64, f64)> {
    let h = |k: f64| -> f64 {
        let m = Modulus::new(k).expect("grid modulus in (0, 1)");
        match (t1z(m), t1v(m)) {
            (Ok(a), Ok(b)) => a - b,
            _ => f64::NAN,
        }
    };
    let grid: Vec<f64> = (1..200).map(|i| i as f64 / 200.0).collect();
    let vals: Vec<f64> = grid.par_iter().map(|&k| h(k)).collect();
    if vals.iter().any(|v| !v.is_finite()) {
        return Err(Error::Bracket("t1z - t1v not finite on the k-grid".into()));
    }
    let brackets: Vec<(f64, f64)> = (1..grid.len())
        .filter(|&i| vals[i - 1].signum() != vals[i].signum())
        .map(|i| (grid[i - 1], grid[i]))
        .collect();
    match brackets.as_slice() {
        [(a1, b1), (a0, b0)] => {
            let k1 = brent(h, *a1, *b1, 1e-16)?;
            // t1z has a square-root branch point at k0, so the crossing is
            // refined through f1z(2K, k) = 4E − 2K = 0 instead.
            let g = |k: f64| match Modulus::new(k).and_then(complete_integrals) {
                Ok((kk, ee)) => 2.0 * ee - kk,
                Err(_) => f64::NAN,
            };
            let k0 = brent(g, *a0, *b0, 1e-16)?;
            Ok((k0, k1))
        }
        _ => Err(Error::Bracket(format!(
            "expected two crossings of t1z and t1v, found {}",
            brackets.len()
        ))),
    }
}

/// Dilation factor `μ_λ` that gives the elastica a unit-length period.
pub fn normalization(lambda: &Covector) -> Result<Option<f64>> {
    let st = lambda.stratum();
    Ok(match st {
        Stratum::C1 => {
            let k = modulus_in(lambda, st)?;
            Some(lambda.alpha.sqrt() / (4.0 * complete_k(k)?))
        }
        Stratum::C2 => {
            let k = modulus_in(lambda, st)?;
            Some(lambda.alpha.sqrt() / (2.0 * k.value() * complete_k(k)?))
        }
        Stratum::C6 => Some(lambda.c.abs() / TAU),
        _ => None,
    })
}

/// Modulus used for the normalized times (0 on `C6`).
fn stratum_modulus(lambda: &Covector, st: Stratum) -> Result<Modulus> {
    match st {
        Stratum::C6 => Modulus::new(0.0),
        _ => modulus_in(lambda, st),
    }
}

/// Cut time `𝐭(λ)`; `+∞` on `C3 ∪ C4 ∪ C5 ∪ C7`.
pub fn cut_time(lambda: &Covector) -> Result<f64> {
    let st = lambda.stratum();
    let Some(mu) = normalization(lambda)? else {
        return Ok(f64::INFINITY);
    };
    let times = normalized_times(stratum_modulus(lambda, st)?, st)?;
    Ok(times.combined / mu)
}

/// `z·V` of `Exp(λ, t)` on the dilation-normalized scale `ρ = 1`, see
/// [`GroupPoint::normalized_z_v`].
pub fn normalized_zv(lambda: &Covector, t: f64) -> Result<f64> {
    Ok(exp(lambda, t, EXP_TOL)?.normalized_z_v())
}

/// Whether `Exp(λ, t)` lies on `zV = 0` within `tol` on the normalized scale.
pub fn in_cut_candidate_set(lambda: &Covector, t: f64, tol: f64) -> Result<bool> {
    Ok(normalized_zv(lambda, t)?.abs() <= tol)
}

/// `sn τ · cn τ` with `τ = √α(φ + t/2)` on `C1` and `τ = (√α/k)(φ + t/2)`
/// on `C2`.
pub fn fix_value(lambda: &Covector, t: f64) -> Result<f64> {
    let ec = phase(lambda)?;
    let sa = ec.alpha.sqrt();
    let tau = match ec.stratum {
        Stratum::C1 => sa * (ec.phi + 0.5 * t),
        _ => sa / ec.k.value() * (ec.phi + 0.5 * t),
    };
    let e = jacobi(tau, ec.k);
    Ok(e.sn * e.cn)
}

pub fn fix_predicate(lambda: &Covector, t: f64, tol: f64) -> Result<bool> {
    Ok(fix_value(lambda, t)?.abs() <= tol)
}

/// One row of the normalized Maxwell-time table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub k: f64,
    pub t1z: f64,
    pub t1v: f64,
    pub t2v: f64,
    pub t1_combined: f64,
}

/// Normalized times on the given moduli, computed in parallel, in input order.
pub fn table(ks: &[f64]) -> Result<Vec<TableRow>> {
    ks.par_iter()
        .map(|&k| {
            let m = Modulus::new(k)?;
            let (a, b, c) = (t1z(m)?, t1v(m)?, t2v(m)?);
            Ok(TableRow {
                k,
                t1z: a,
                t1v: b,
                t2v: c,
                t1_combined: a.min(b),
            })
        })
        .collect()
}

/// `n` moduli evenly spread over the open interval `(0, 1)`.
pub fn open_grid(n: usize) -> Vec<f64> {
    (1..=n).map(|i| i as f64 / (n + 1) as f64).collect()
}

/// First positive root of `sin p = p cos p`, used for `𝐭₁ᶻ(0) = p/π`.
pub fn tan_root() -> f64 {
    brent(|p| p.sin() - p * p.cos(), PI, 1.5 * PI, 1e-15).expect("bracket of tan p = p")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::complete_integrals;
    use crate::pendulum::EllipticCoords;

    fn m(k: f64) -> Modulus {
        Modulus::new(k).unwrap()
    }

    /// Second transcription of `f₁ⱽ`, expanded term by term.
    fn f1v_expanded(p: f64, k: f64) -> f64 {
        let e = jacobi(p, m(k));
        let (s, c, d) = (e.sn, e.cn, e.dn);
        let g = 2.0 * e.eps - p;
        let kk = k * k;
        (4.0 / 3.0) * d * s * g.powi(3) - (4.0 / 3.0) * d * s * p - (8.0 / 3.0) * d * s * g
            + (16.0 / 3.0) * kk * d * s * g
            - 16.0 * kk * c * c * d * s * g
            + (32.0 / 3.0) * kk * d * d * s * s * c
            + 4.0 * c * g * g
            - 8.0 * kk * c * s * s * g * g
    }

    #[test]
    fn f1z_origin_and_trig_limit() {
        assert_eq!(f1z(0.0, m(0.4)), 0.0);
        for p in [0.3, 1.7, 4.0] {
            assert!((f1z(p, m(0.0)) - (p.sin() - p * p.cos())).abs() < 1e-14);
        }
    }

    /// Dense sampling oracle: for k below k₀ the first root of f₁ᶻ lies in
    /// (2K, 3K), and there is none in (0, 2K].
    #[test]
    fn f1z_bracket_for_half() {
        let k = m(0.5);
        let kk = complete_k(k).unwrap();
        let n = 6000;
        let first = (1..n)
            .find(|&i| {
                let (a, b) = (3.0 * kk * i as f64 / n as f64, 3.0 * kk * (i + 1) as f64 / n as f64);
                f1z(a, k).signum() != f1z(b, k).signum()
            })
            .map(|i| 3.0 * kk * i as f64 / n as f64)
            .unwrap();
        assert!(first > 2.0 * kk && first < 3.0 * kk);
        assert!((first - first_root(RootTarget::F1z, k).unwrap()).abs() < 3.0 * kk / n as f64);
    }

    #[test]
    fn f1v_double_transcription() {
        assert_eq!(f1v(0.0, m(0.3)), 0.0);
        for &(p, k) in &[(0.4, 0.1), (2.2, 0.5), (5.5, 0.8), (7.9, 0.95), (3.3, 0.0)] {
            let a = f1v(p, m(k));
            let b = f1v_expanded(p, k);
            assert!((a - b).abs() <= 1e-10 * (1.0 + a.abs()), "p={p} k={k}: {a} vs {b}");
        }
    }

    #[test]
    fn f2v_closed_form_at_zero() {
        let want = -PI / 256.0;
        assert!((f2v(PI / 4.0, m(0.0)) - want).abs() < 1e-15);
    }

    #[test]
    fn f2v_negative_at_quarter_period() {
        for i in 1..=9 {
            let k = m(i as f64 / 10.0);
            let kk = complete_k(k).unwrap();
            assert!(f2v(kk, k) < 0.0, "k = {}", k.value());
        }
    }

    #[test]
    fn f2v_nonnegative_at_three_halves_near_one() {
        for k in [0.995, 0.999, 0.9999] {
            let k = m(k);
            let kk = complete_k(k).unwrap();
            assert!(f2v(1.5 * kk, k) >= 0.0);
        }
    }

    #[test]
    fn f2v_series_agrees_with_direct_at_crossover() {
        for k in [0.15, 0.2, 0.3] {
            for p in [0.7, 2.3, 4.1] {
                let a = f2v_series(p, k * k);
                let b = f2v_direct(p, m(k)) / k.powi(8);
                assert!((a - b).abs() < 1e-6 * a.abs().max(1e-3), "k={k} p={p}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn f2v_normalized_is_continuous_at_zero() {
        for p in [0.5, 2.3, 5.0] {
            let a = f2v_normalized(p, m(1e-6));
            assert!((a - f2v_k0(p)).abs() < 1e-10);
        }
    }

    #[test]
    fn tan_root_value() {
        let p = tan_root();
        assert!((p.tan() - p).abs() < 1e-9);
        assert!((p / PI - 1.430).abs() < 1e-3);
        let r = first_root(RootTarget::F1z, m(0.0)).unwrap();
        assert!((r - p).abs() < 1e-12);
    }

    #[test]
    fn c6_time_and_k0_root() {
        let p = first_root(RootTarget::F2v, m(0.0)).unwrap();
        assert!((p - 2.3005).abs() < 1e-3);
        let t = normalized_times(m(0.3), Stratum::C6).unwrap();
        assert!((t.combined - 2.0 * p / PI).abs() < 1e-12);
        assert!((t.combined - 1.465).abs() < 1e-3);
    }

    #[test]
    fn first_root_is_first() {
        for k in [0.2, 0.235, 0.6, 0.93] {
            let km = m(k);
            for target in [RootTarget::F1z, RootTarget::F1v, RootTarget::F2v] {
                let r = first_root(target, km).unwrap();
                assert!(target.eval(r, km).abs() < 1e-8 * (1.0 + r.powi(3)));
                // Fine scan between the window start and the root.
                let n = 20_000;
                let p0 = 0.25 * complete_k(km).unwrap();
                let s0 = target.eval(p0, km).signum();
                for i in 0..n {
                    let p = p0 + (r * 0.999 - p0) * i as f64 / n as f64;
                    assert_eq!(target.eval(p, km).signum(), s0, "{target:?} k={k} p={p}");
                }
            }
        }
    }

    #[test]
    fn t2v_above_one_through_series_crossover() {
        for i in 0..40 {
            let k = 0.1 + 0.005 * i as f64;
            let t = t2v(m(k)).unwrap();
            assert!((1.0..1.5).contains(&t), "k={k} t2v={t}");
        }
    }

    /// Reference roots from 40-digit arithmetic on the same root equation.
    #[test]
    fn t2v_matches_high_precision_roots() {
        for (k, want) in [(0.2, 1.464_706_683_559_523_5), (0.3, 1.464_596_421_665_234_9), (0.42, 1.464_157_852_019_644_2)] {
            let t = t2v(m(k)).unwrap();
            assert!((t - want).abs() < 1e-12, "k={k}: {t} vs {want}");
        }
    }

    #[test]
    fn t2v_is_stable_under_rounding_of_k() {
        for k in [0.16, 0.25, 0.35, F2V_SERIES_CROSSOVER] {
            let a = t2v(m(k)).unwrap();
            for j in 1..8 {
                let b = t2v(m(k * (1.0 + j as f64 * 1e-15))).unwrap();
                assert!((a - b).abs() < 1e-12, "k={k}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn normalized_times_rejects_other_strata() {
        assert!(matches!(normalized_times(m(0.5), Stratum::C3), Err(Error::Stratum(Stratum::C3))));
    }

    #[test]
    fn cut_time_infinite_strata() {
        let c3 = Covector::new(0.0, 2.0, 1.0, 0.0).unwrap();
        assert_eq!(cut_time(&c3).unwrap(), f64::INFINITY);
        let c7 = Covector::new(0.3, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(cut_time(&c7).unwrap(), f64::INFINITY);
    }

    #[test]
    fn c6_cut_time_scales_with_c() {
        let l = Covector::new(0.0, TAU, 0.0, 0.0).unwrap();
        let t = cut_time(&l).unwrap();
        assert!((t - 1.465).abs() < 1e-3);
        let l2 = Covector::new(0.0, -2.0 * TAU, 0.0, 0.0).unwrap();
        assert!((cut_time(&l2).unwrap() - t / 2.0).abs() < 1e-12);
    }

    #[test]
    fn cut_time_unit_at_normalized_covector() {
        let k = 0.6;
        let (kk, _) = complete_integrals(m(k)).unwrap();
        let alpha = (4.0 * kk).powi(2);
        let l = EllipticCoords::from_parts(Stratum::C1, k, 0.0, alpha, 0.0, 1.0).unwrap();
        let mu = normalization(&l).unwrap().unwrap();
        assert!((mu - 1.0).abs() < 1e-12);
        assert!((cut_time(&l).unwrap() - t1(m(k)).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn fix_predicate_at_quarter_period() {
        // φ = 0, α = 1, t = 2K gives τ = K.
        let k = 0.7;
        let kk = complete_k(m(k)).unwrap();
        let l = EllipticCoords::from_parts(Stratum::C1, k, 0.0, 1.0, 0.0, 1.0).unwrap();
        assert!(fix_predicate(&l, 2.0 * kk, 1e-8).unwrap());
        assert!(!fix_predicate(&l, kk, 1e-3).unwrap());
    }

    #[test]
    fn table_preserves_order() {
        let ks = open_grid(5);
        let rows = table(&ks).unwrap();
        assert_eq!(rows.iter().map(|r| r.k).collect::<Vec<_>>(), ks);
        for r in rows {
            assert_eq!(r.t1_combined, r.t1z.min(r.t1v));
        }
    }

    #[test]
    fn fix_zeros_lie_on_zv_zero() {
        // Every zero of sn τ cn τ along the geodesic is a point of zV = 0,
        // with no phase offset in either stratum or direction.
        let cases = [
            (Stratum::C1, 0.6, 0.3, 1.0),
            (Stratum::C1, 0.95, 2.0, 1.0),
            (Stratum::C2, 0.6, 0.3, 1.0),
            (Stratum::C2, 0.8, 0.9, -1.0),
        ];
        for (st, k, phi, dir) in cases {
            let l = EllipticCoords::from_parts(st, k, phi, 1.3, 0.4, dir).unwrap();
            let f = |t: f64| fix_value(&l, t).unwrap();
            let t_max = 2.0 * crate::pendulum::period(&l).unwrap();
            let n = 800;
            let mut zeros = 0;
            for i in 0..n {
                let (a, b) = (t_max * (i as f64 + 0.5) / n as f64, t_max * (i as f64 + 1.5) / n as f64);
                if f(a).signum() != f(b).signum() {
                    let t = brent(f, a, b, 1e-14).unwrap();
                    let q = exp(&l, t, 1e-13).unwrap();
                    let rho = q.homogeneous_radius();
                    let gap = (q.z / rho.powi(2)).abs().min((q.big_v() / rho.powi(4)).abs());
                    assert!(gap < 1e-10, "{st:?} k={k} t={t} gap={gap:e}");
                    assert!(fix_predicate(&l, t, 1e-9).unwrap());
                    zeros += 1;
                }
            }
            assert!(zeros >= 2, "{st:?} k={k}: {zeros} zeros");
        }
    }
}
