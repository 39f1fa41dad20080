//! Jacobi elliptic functions and complete elliptic integrals.
//!
//! Complete integrals come from the arithmetic-geometric mean. The functions
//! `sn`, `cn`, `dn` and the epsilon function `E(p) = ∫₀ᵖ dn²` are evaluated
//! with the descending Landen sequence after reducing the argument to
//! `[-K, K]`; the second-kind part is recovered from the Jacobi zeta function
//! accumulated along the same sequence.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Below `1 - k` of this size the hyperbolic limit forms are used.
pub const HYPERBOLIC_CROSSOVER: f64 = 1e-12;

const MAX_AGM_STEPS: usize = 64;

/// Elliptic modulus `k ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Modulus(f64);

impl Modulus {
    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(Error::NonFinite("modulus"));
        }
        if !(0.0..=1.0).contains(&k) {
            return Err(Error::Domain(format!("modulus k = {k} outside [0, 1]")));
        }
        Ok(Self(k))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// `k' = √(1 − k²)`, computed without cancellation near `k = 1`.
    #[inline]
    pub fn complementary(self) -> f64 {
        ((1.0 - self.0) * (1.0 + self.0)).sqrt()
    }

    #[inline]
    pub fn is_hyperbolic(self) -> bool {
        1.0 - self.0 < HYPERBOLIC_CROSSOVER
    }
}

impl TryFrom<f64> for Modulus {
    type Error = Error;

    fn try_from(k: f64) -> Result<Self> {
        Self::new(k)
    }
}

/// Values of `sn`, `cn`, `dn` and the epsilon function at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticValues {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
    /// `E(p)`: incomplete second-kind integral composed with the amplitude.
    pub eps: f64,
}

/// Descending AGM table `(a_n, c_n)` for modulus `k < 1`.
struct Agm {
    a: [f64; MAX_AGM_STEPS],
    c: [f64; MAX_AGM_STEPS],
    len: usize,
}

impl Agm {
    fn new(k: f64, kp: f64) -> Self {
        let mut a = [0.0; MAX_AGM_STEPS];
        let mut c = [0.0; MAX_AGM_STEPS];
        a[0] = 1.0;
        c[0] = k;
        let mut b = kp;
        let mut n = 0;
        while c[n].abs() > f64::EPSILON * a[n] && n + 1 < MAX_AGM_STEPS {
            a[n + 1] = 0.5 * (a[n] + b);
            // (a − b)/2 rewritten to keep relative accuracy for small c.
            c[n + 1] = c[n] * c[n] / (4.0 * a[n + 1]);
            b = (a[n] * b).sqrt();
            n += 1;
        }
        Self { a, c, len: n + 1 }
    }

    fn last(&self) -> usize {
        self.len - 1
    }

    fn complete_k(&self) -> f64 {
        FRAC_PI_2 / self.a[self.last()]
    }

    /// `E/K = 1 − Σ 2^{n−1} c_n²`.
    fn e_over_k(&self) -> f64 {
        let mut weight = 0.5;
        let mut sum = 0.0;
        for &cn in &self.c[..self.len] {
            sum += weight * cn * cn;
            weight *= 2.0;
        }
        1.0 - sum
    }

    /// `2 − 2E/K − k² = Σ_{n≥1} 2ⁿ c_n²`, free of cancellation for small `k`.
    fn defect(&self) -> f64 {
        let mut weight = 2.0;
        let mut sum = 0.0;
        for &cn in &self.c[1..self.len] {
            sum += weight * cn * cn;
            weight *= 2.0;
        }
        sum
    }
}

/// Complete elliptic integral of the first kind `K(k)`.
pub fn complete_k(k: Modulus) -> Result<f64> {
    if k.value() >= 1.0 {
        return Err(Error::Divergent);
    }
    if k.value() == 0.0 {
        return Ok(FRAC_PI_2);
    }
    Ok(Agm::new(k.value(), k.complementary()).complete_k())
}

/// Complete elliptic integral of the second kind `E(k)`.
pub fn complete_e(k: Modulus) -> f64 {
    let kv = k.value();
    if kv >= 1.0 {
        return 1.0;
    }
    if kv == 0.0 {
        return FRAC_PI_2;
    }
    let agm = Agm::new(kv, k.complementary());
    agm.complete_k() * agm.e_over_k()
}

/// Both complete integrals from a single AGM pass.
pub fn complete_integrals(k: Modulus) -> Result<(f64, f64)> {
    if k.value() >= 1.0 {
        return Err(Error::Divergent);
    }
    if k.value() == 0.0 {
        return Ok((FRAC_PI_2, FRAC_PI_2));
    }
    let agm = Agm::new(k.value(), k.complementary());
    let kk = agm.complete_k();
    Ok((kk, kk * agm.e_over_k()))
}

/// Jacobi elliptic functions and the epsilon function at `p`.
///
/// `k = 1` (and `1 − k` below [`HYPERBOLIC_CROSSOVER`]) returns the
/// hyperbolic limits `sn = tanh`, `cn = dn = sech`, `E = tanh`.
pub fn jacobi(p: f64, k: Modulus) -> EllipticValues {
    jacobi_zeta(p, k).0
}

/// [`jacobi`] together with the Jacobi zeta function `Z(p) = E(p) − (E/K) p`
/// and `2 − 2E/K − k²`, both accurate in relative terms as `k → 0`.
pub(crate) fn jacobi_zeta(p: f64, k: Modulus) -> (EllipticValues, f64, f64) {
    let kv = k.value();
    if kv == 0.0 {
        let (s, c) = p.sin_cos();
        let v = EllipticValues {
            sn: s,
            cn: c,
            dn: 1.0,
            eps: p,
        };
        return (v, 0.0, 0.0);
    }
    if k.is_hyperbolic() {
        let t = p.tanh();
        let sech = 1.0 / p.cosh();
        let v = EllipticValues {
            sn: t,
            cn: sech,
            dn: sech,
            eps: t,
        };
        return (v, t, 2.0 - kv * kv);
    }

    let agm = Agm::new(kv, k.complementary());
    let kk = agm.complete_k();
    let ek = agm.e_over_k();

    // p = r + 2nK with r in [-K, K]; sn, cn flip sign per half period.
    let n = (p / (2.0 * kk)).round();
    let r = p - 2.0 * n * kk;
    let sign = if (n as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };

    let last = agm.last();
    let mut phi = agm.a[last] * r * 2f64.powi(last as i32);
    let mut zeta = 0.0;
    let mut phi_next = phi;
    for i in (1..=last).rev() {
        zeta += agm.c[i] * phi.sin();
        phi_next = phi;
        phi = 0.5 * (phi + (agm.c[i] / agm.a[i] * phi.sin()).asin());
    }
    let (sn, cn) = phi.sin_cos();
    let dn = if last == 0 {
        1.0
    } else {
        cn / (phi_next - phi).cos()
    };

    let v = EllipticValues {
        sn: sign * sn,
        cn: sign * cn,
        dn,
        eps: zeta + ek * r + 2.0 * n * kk * ek,
    };
    (v, zeta, agm.defect())
}
