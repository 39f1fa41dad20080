//! Dormand–Prince 8(5,3) integrator with 7th order dense output.
//!
//! Coefficients and step-size control follow Hairer's DOP853. States are
//! fixed-size arrays; the right-hand side is any `Fn(t, &y) -> dy`.

use crate::error::{Error, Result};

/// Integrator settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dop853 {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
    pub h_max: f64,
}

impl Dop853 {
    /// Same relative and absolute tolerance `tol`.
    pub fn new(tol: f64) -> Self {
        Self {
            rtol: tol,
            atol: tol,
            max_steps: 1_000_000,
            h_max: f64::INFINITY,
        }
    }

    pub fn h_max(mut self, h_max: f64) -> Self {
        self.h_max = h_max;
        self
    }
}

/// One accepted step together with its continuous extension.
#[derive(Debug, Clone)]
pub struct DenseStep<const N: usize> {
    pub t_old: f64,
    pub t: f64,
    pub y_old: [f64; N],
    pub y: [f64; N],
    cont: [[f64; N]; 8],
}

impl<const N: usize> DenseStep<N> {
    /// Interpolated state at `t` within `[t_old, t]`.
    pub fn eval(&self, t: f64) -> [f64; N] {
        let h = self.t - self.t_old;
        let s = (t - self.t_old) / h;
        let s1 = 1.0 - s;
        let c = &self.cont;
        std::array::from_fn(|i| {
            let conpar = c[4][i] + (c[5][i] + (c[6][i] + c[7][i] * s) * s1) * s;
            c[0][i] + (c[1][i] + (c[2][i] + (c[3][i] + conpar * s1) * s) * s1) * s
        })
    }
}

/// Whether the caller wants to continue after an accepted step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flow {
    Continue,
    Stop,
}

#[inline]
fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    std::array::from_fn(|i| {
        let mut s = 0.0;
        for (a, k) in terms {
            s += a * k[i];
        }
        y[i] + h * s
    })
}

/// `a + b` and its exact rounding error (Knuth's TwoSum).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

fn rms_norm<const N: usize>(v: &[f64; N], sk: &[f64; N]) -> f64 {
    let mut s = 0.0;
    for i in 0..N {
        s += (v[i] / sk[i]).powi(2);
    }
    s
}

impl Dop853 {
    /// Integrate from `(t0, y0)` to `t1` and return `y(t1)`.
    pub fn integrate<F, const N: usize>(&self, f: F, t0: f64, y0: [f64; N], t1: f64) -> Result<[f64; N]>
    where
        F: Fn(f64, &[f64; N]) -> [f64; N],
    {
        self.run(f, t0, y0, t1, None::<fn(&DenseStep<N>) -> Flow>)
    }

    /// Integrate from `(t0, y0)` to `t1`, handing each accepted step with its
    /// dense interpolant to `observer`. Returns the state where integration
    /// ended (`t1`, or the end of the step on which the observer stopped).
    pub fn integrate_dense<F, O, const N: usize>(
        &self,
        f: F,
        t0: f64,
        y0: [f64; N],
        t1: f64,
        observer: O,
    ) -> Result<[f64; N]>
    where
        F: Fn(f64, &[f64; N]) -> [f64; N],
        O: FnMut(&DenseStep<N>) -> Flow,
    {
        self.run(f, t0, y0, t1, Some(observer))
    }

    fn initial_step<F, const N: usize>(&self, f: &F, t0: f64, y0: &[f64; N], k1: &[f64; N], dir: f64) -> f64
    where
        F: Fn(f64, &[f64; N]) -> [f64; N],
    {
        let sk: [f64; N] = std::array::from_fn(|i| self.atol + self.rtol * y0[i].abs());
        let dnf = rms_norm(k1, &sk);
        let dny = rms_norm(y0, &sk);
        let mut h = if dnf <= 1e-10 || dny <= 1e-10 {
            1e-6
        } else {
            (dny / dnf).sqrt() * 0.01
        };
        h = h.min(self.h_max) * dir;
        let y1 = axpy(y0, h, &[(1.0, k1)]);
        let k2 = f(t0 + h, &y1);
        let diff: [f64; N] = std::array::from_fn(|i| k2[i] - k1[i]);
        let der2 = rms_norm(&diff, &sk).sqrt() / h.abs();
        let der12 = der2.max(dnf.sqrt());
        let h1 = if der12 <= 1e-15 {
            (h.abs() * 1e-3).max(1e-6)
        } else {
            (0.01 / der12).powf(1.0 / 8.0)
        };
        (100.0 * h.abs()).min(h1).min(self.h_max) * dir
    }

    fn run<F, O, const N: usize>(
        &self,
        f: F,
        t0: f64,
        y0: [f64; N],
        t1: f64,
        mut observer: Option<O>,
    ) -> Result<[f64; N]>
    where
        F: Fn(f64, &[f64; N]) -> [f64; N],
        O: FnMut(&DenseStep<N>) -> Flow,
    {
        if !t0.is_finite() || !t1.is_finite() || y0.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("integrator input"));
        }
        if t1 == t0 {
            return Ok(y0);
        }
        let dir = (t1 - t0).signum();
        let mut t = t0;
        let mut y = y0;
        let mut k1 = f(t, &y);
        let mut h = self.initial_step(&f, t0, &y0, &k1, dir);
        let mut last_rejected = false;
        // Compensated summation of the accepted increments.
        let mut comp = [0.0; N];
        let mut t_comp = 0.0;

        for _ in 0..self.max_steps {
            let mut last = false;
            if (t + 1.01 * h - t1) * dir >= 0.0 {
                h = t1 - t;
                last = true;
            }
            if h.abs() <= 16.0 * f64::EPSILON * t.abs().max(1.0) {
                return Err(Error::NonFinite("integrator step size underflow"));
            }

            let k2 = f(t + C2 * h, &axpy(&y, h, &[(A21, &k1)]));
            let k3 = f(t + C3 * h, &axpy(&y, h, &[(A31, &k1), (A32, &k2)]));
            let k4 = f(t + C4 * h, &axpy(&y, h, &[(A41, &k1), (A43, &k3)]));
            let k5 = f(t + C5 * h, &axpy(&y, h, &[(A51, &k1), (A53, &k3), (A54, &k4)]));
            let k6 = f(t + C6 * h, &axpy(&y, h, &[(A61, &k1), (A64, &k4), (A65, &k5)]));
            let k7 = f(
                t + C7 * h,
                &axpy(&y, h, &[(A71, &k1), (A74, &k4), (A75, &k5), (A76, &k6)]),
            );
            let k8 = f(
                t + C8 * h,
                &axpy(&y, h, &[(A81, &k1), (A84, &k4), (A85, &k5), (A86, &k6), (A87, &k7)]),
            );
            let k9 = f(
                t + C9 * h,
                &axpy(
                    &y,
                    h,
                    &[(A91, &k1), (A94, &k4), (A95, &k5), (A96, &k6), (A97, &k7), (A98, &k8)],
                ),
            );
            let k10 = f(
                t + C10 * h,
                &axpy(
                    &y,
                    h,
                    &[
                        (A101, &k1),
                        (A104, &k4),
                        (A105, &k5),
                        (A106, &k6),
                        (A107, &k7),
                        (A108, &k8),
                        (A109, &k9),
                    ],
                ),
            );
            let k11 = f(
                t + C11 * h,
                &axpy(
                    &y,
                    h,
                    &[
                        (A111, &k1),
                        (A114, &k4),
                        (A115, &k5),
                        (A116, &k6),
                        (A117, &k7),
                        (A118, &k8),
                        (A119, &k9),
                        (A1110, &k10),
                    ],
                ),
            );
            let (t_new, t_comp_new) = two_sum(t, h + t_comp);
            let k12 = f(
                t_new,
                &axpy(
                    &y,
                    h,
                    &[
                        (A121, &k1),
                        (A124, &k4),
                        (A125, &k5),
                        (A126, &k6),
                        (A127, &k7),
                        (A128, &k8),
                        (A129, &k9),
                        (A1210, &k10),
                        (A1211, &k11),
                    ],
                ),
            );
            let incr: [f64; N] = std::array::from_fn(|i| {
                B1 * k1[i]
                    + B6 * k6[i]
                    + B7 * k7[i]
                    + B8 * k8[i]
                    + B9 * k9[i]
                    + B10 * k10[i]
                    + B11 * k11[i]
                    + B12 * k12[i]
            });
            let mut comp_new = [0.0; N];
            let y_new: [f64; N] = std::array::from_fn(|i| {
                let (s, e) = two_sum(y[i], h * incr[i] + comp[i]);
                comp_new[i] = e;
                s
            });

            let mut err = 0.0;
            let mut err2 = 0.0;
            for i in 0..N {
                let sk = self.atol + self.rtol * y[i].abs().max(y_new[i].abs());
                let e2 = incr[i] - BHH1 * k1[i] - BHH2 * k9[i] - BHH3 * k12[i];
                err2 += (e2 / sk).powi(2);
                let e = ER1 * k1[i]
                    + ER6 * k6[i]
                    + ER7 * k7[i]
                    + ER8 * k8[i]
                    + ER9 * k9[i]
                    + ER10 * k10[i]
                    + ER11 * k11[i]
                    + ER12 * k12[i];
                err += (e / sk).powi(2);
            }
            let mut deno = err + 0.01 * err2;
            if deno <= 0.0 {
                deno = 1.0;
            }
            let err = h.abs() * err * (1.0 / (deno * N as f64)).sqrt();
            if !err.is_finite() {
                return Err(Error::NonFinite("integrator error estimate"));
            }

            let fac11 = err.powf(EXPO1);
            let fac = FACC2.max(FACC1.min(fac11 / SAFE));
            let mut h_new = h / fac;

            if err <= 1.0 {
                let k_new = f(t_new, &y_new);

                if let Some(obs) = observer.as_mut() {
                    let ydiff: [f64; N] = std::array::from_fn(|i| y_new[i] - y[i]);
                    let bspl: [f64; N] = std::array::from_fn(|i| h * k1[i] - ydiff[i]);
                    let c4: [f64; N] = std::array::from_fn(|i| ydiff[i] - h * k_new[i] - bspl[i]);
                    let dsum = |d: &[f64; 8]| -> [f64; N] {
                        std::array::from_fn(|i| {
                            d[0] * k1[i]
                                + d[1] * k6[i]
                                + d[2] * k7[i]
                                + d[3] * k8[i]
                                + d[4] * k9[i]
                                + d[5] * k10[i]
                                + d[6] * k11[i]
                                + d[7] * k12[i]
                        })
                    };
                    let c5 = dsum(&[D41, D46, D47, D48, D49, D410, D411, D412]);
                    let c6 = dsum(&[D51, D56, D57, D58, D59, D510, D511, D512]);
                    let c7 = dsum(&[D61, D66, D67, D68, D69, D610, D611, D612]);
                    let c8 = dsum(&[D71, D76, D77, D78, D79, D710, D711, D712]);

                    let k14 = f(
                        t + C14 * h,
                        &axpy(
                            &y,
                            h,
                            &[
                                (A141, &k1),
                                (A147, &k7),
                                (A148, &k8),
                                (A149, &k9),
                                (A1410, &k10),
                                (A1411, &k11),
                                (A1412, &k12),
                                (A1413, &k_new),
                            ],
                        ),
                    );
                    let k15 = f(
                        t + C15 * h,
                        &axpy(
                            &y,
                            h,
                            &[
                                (A151, &k1),
                                (A156, &k6),
                                (A157, &k7),
                                (A158, &k8),
                                (A1511, &k11),
                                (A1512, &k12),
                                (A1513, &k_new),
                                (A1514, &k14),
                            ],
                        ),
                    );
                    let k16 = f(
                        t + C16 * h,
                        &axpy(
                            &y,
                            h,
                            &[
                                (A161, &k1),
                                (A166, &k6),
                                (A167, &k7),
                                (A168, &k8),
                                (A169, &k9),
                                (A1613, &k_new),
                                (A1614, &k14),
                                (A1615, &k15),
                            ],
                        ),
                    );
                    let fin = |c: [f64; N], d: [f64; 4]| -> [f64; N] {
                        std::array::from_fn(|i| {
                            h * (c[i] + d[0] * k_new[i] + d[1] * k14[i] + d[2] * k15[i] + d[3] * k16[i])
                        })
                    };
                    let step = DenseStep {
                        t_old: t,
                        t: t_new,
                        y_old: y,
                        y: y_new,
                        cont: [
                            y,
                            ydiff,
                            bspl,
                            c4,
                            fin(c5, [D413, D414, D415, D416]),
                            fin(c6, [D513, D514, D515, D516]),
                            fin(c7, [D613, D614, D615, D616]),
                            fin(c8, [D713, D714, D715, D716]),
                        ],
                    };
                    if obs(&step) == Flow::Stop {
                        return Ok(y_new);
                    }
                }

                k1 = k_new;
                y = y_new;
                t = t_new;
                comp = comp_new;
                t_comp = t_comp_new;
                if last {
                    return Ok(y);
                }
                if h_new.abs() > self.h_max {
                    h_new = self.h_max * dir;
                }
                if last_rejected {
                    h_new = dir * h_new.abs().min(h.abs());
                }
                last_rejected = false;
            } else {
                h_new = h / FACC1.min(fac11 / SAFE);
                last_rejected = true;
            }
            h = h_new;
        }
        Err(Error::NonFinite("integrator exceeded max_steps"))
    }
}

const SAFE: f64 = 0.9;
const EXPO1: f64 = 1.0 / 8.0;
const FACC1: f64 = 1.0 / 0.33;
const FACC2: f64 = 1.0 / 6.0;

const A21: f64 = 5.26001519587677318785587544488e-2;
const A31: f64 = 1.97250569845378994544595329183e-2;
const A32: f64 = 5.91751709536136983633785987549e-2;
const A41: f64 = 2.95875854768068491816892993775e-2;
const A43: f64 = 8.87627564304205475450678981324e-2;
const A51: f64 = 2.41365134159266685502369798665e-1;
const A53: f64 = -8.84549479328286085344864962717e-1;
const A54: f64 = 9.24834003261792003115737966543e-1;
const A61: f64 = 3.7037037037037037037037037037e-2;
const A64: f64 = 1.70828608729473871279604482173e-1;
const A65: f64 = 1.25467687566822425016691814123e-1;
const A71: f64 = 3.7109375e-2;
const A74: f64 = 1.70252211019544039314978060272e-1;
const A75: f64 = 6.02165389804559606850219397283e-2;
const A76: f64 = -1.7578125e-2;
const A81: f64 = 3.70920001185047927108779319836e-2;
const A84: f64 = 1.70383925712239993810214054705e-1;
const A85: f64 = 1.07262030446373284651809199168e-1;
const A86: f64 = -1.53194377486244017527936158236e-2;
const A87: f64 = 8.27378916381402288758473766002e-3;
const A91: f64 = 6.24110958716075717114429577812e-1;
const A94: f64 = -3.36089262944694129406857109825e0;
const A95: f64 = -8.68219346841726006818189891453e-1;
const A96: f64 = 2.75920996994467083049415600797e1;
const A97: f64 = 2.01540675504778934086186788979e1;
const A98: f64 = -4.34898841810699588477366255144e1;
const A101: f64 = 4.77662536438264365890433908527e-1;
const A104: f64 = -2.48811461997166764192642586468e0;
const A105: f64 = -5.90290826836842996371446475743e-1;
const A106: f64 = 2.12300514481811942347288949897e1;
const A107: f64 = 1.52792336328824235832596922938e1;
const A108: f64 = -3.32882109689848629194453265587e1;
const A109: f64 = -2.03312017085086261358222928593e-2;
const A111: f64 = -9.3714243008598732571704021658e-1;
const A114: f64 = 5.18637242884406370830023853209e0;
const A115: f64 = 1.09143734899672957818500254654e0;
const A116: f64 = -8.14978701074692612513997267357e0;
const A117: f64 = -1.85200656599969598641566180701e1;
const A118: f64 = 2.27394870993505042818970056734e1;
const A119: f64 = 2.49360555267965238987089396762e0;
const A1110: f64 = -3.0467644718982195003823669022e0;
const A121: f64 = 2.27331014751653820792359768449e0;
const A124: f64 = -1.05344954667372501984066689879e1;
const A125: f64 = -2.00087205822486249909675718444e0;
const A126: f64 = -1.79589318631187989172765950534e1;
const A127: f64 = 2.79488845294199600508499808837e1;
const A128: f64 = -2.85899827713502369474065508674e0;
const A129: f64 = -8.87285693353062954433549289258e0;
const A1210: f64 = 1.23605671757943030647266201528e1;
const A1211: f64 = 6.43392746015763530355970484046e-1;
const A141: f64 = 5.61675022830479523392909219681e-2;
const A147: f64 = 2.53500210216624811088794765333e-1;
const A148: f64 = -2.46239037470802489917441475441e-1;
const A149: f64 = -1.24191423263816360469010140626e-1;
const A1410: f64 = 1.5329179827876569731206322685e-1;
const A1411: f64 = 8.20105229563468988491666602057e-3;
const A1412: f64 = 7.56789766054569976138603589584e-3;
const A1413: f64 = -8.298e-3;
const A151: f64 = 3.18346481635021405060768473261e-2;
const A156: f64 = 2.83009096723667755288322961402e-2;
const A157: f64 = 5.35419883074385676223797384372e-2;
const A158: f64 = -5.49237485713909884646569340306e-2;
const A1511: f64 = -1.08347328697249322858509316994e-4;
const A1512: f64 = 3.82571090835658412954920192323e-4;
const A1513: f64 = -3.40465008687404560802977114492e-4;
const A1514: f64 = 1.41312443674632500278074618366e-1;
const A161: f64 = -4.28896301583791923408573538692e-1;
const A166: f64 = -4.69762141536116384314449447206e0;
const A167: f64 = 7.68342119606259904184240953878e0;
const A168: f64 = 4.06898981839711007970213554331e0;
const A169: f64 = 3.56727187455281109270669543021e-1;
const A1613: f64 = -1.39902416515901462129418009734e-3;
const A1614: f64 = 2.9475147891527723389556272149e0;
const A1615: f64 = -9.15095847217987001081870187138e0;
const B1: f64 = 5.42937341165687622380535766363e-2;
const B6: f64 = 4.45031289275240888144113950566e0;
const B7: f64 = 1.89151789931450038304281599044e0;
const B8: f64 = -5.8012039600105847814672114227e0;
const B9: f64 = 3.1116436695781989440891606237e-1;
const B10: f64 = -1.52160949662516078556178806805e-1;
const B11: f64 = 2.01365400804030348374776537501e-1;
const B12: f64 = 4.47106157277725905176885569043e-2;
const BHH1: f64 = 0.244094488188976377952755905512e+00;
const BHH2: f64 = 0.733846688281611857341361741547e+00;
const BHH3: f64 = 0.220588235294117647058823529412e-01;
const C2: f64 = 0.526001519587677318785587544488e-01;
const C3: f64 = 0.789002279381515978178381316732e-01;
const C4: f64 = 0.118350341907227396726757197510e+00;
const C5: f64 = 0.281649658092772603273242802490e+00;
const C6: f64 = 0.333333333333333333333333333333e+00;
const C7: f64 = 0.25e+00;
const C8: f64 = 0.307692307692307692307692307692e+00;
const C9: f64 = 0.651282051282051282051282051282e+00;
const C10: f64 = 0.6e+00;
const C11: f64 = 0.857142857142857142857142857142e+00;
const C14: f64 = 0.1e+00;
const C15: f64 = 0.2e+00;
const C16: f64 = 0.777777777777777777777777777778e+00;
const ER1: f64 = 0.1312004499419488073250102996e-01;
const ER6: f64 = -0.1225156446376204440720569753e+01;
const ER7: f64 = -0.4957589496572501915214079952e+00;
const ER8: f64 = 0.1664377182454986536961530415e+01;
const ER9: f64 = -0.3503288487499736816886487290e+00;
const ER10: f64 = 0.3341791187130174790297318841e+00;
const ER11: f64 = 0.8192320648511571246570742613e-01;
const ER12: f64 = -0.2235530786388629525884427845e-01;
const D41: f64 = -0.84289382761090128651353491142e+01;
const D46: f64 = 0.56671495351937776962531783590e+00;
const D47: f64 = -0.30689499459498916912797304727e+01;
const D48: f64 = 0.23846676565120698287728149680e+01;
const D49: f64 = 0.21170345824450282767155149946e+01;
const D410: f64 = -0.87139158377797299206789907490e+00;
const D411: f64 = 0.22404374302607882758541771650e+01;
const D412: f64 = 0.63157877876946881815570249290e+00;
const D413: f64 = -0.88990336451333310820698117400e-01;
const D414: f64 = 0.18148505520854727256656404962e+02;
const D415: f64 = -0.91946323924783554000451984436e+01;
const D416: f64 = -0.44360363875948939664310572000e+01;
const D51: f64 = 0.10427508642579134603413151009e+02;
const D56: f64 = 0.24228349177525818288430175319e+03;
const D57: f64 = 0.16520045171727028198505394887e+03;
const D58: f64 = -0.37454675472269020279518312152e+03;
const D59: f64 = -0.22113666853125306036270938578e+02;
const D510: f64 = 0.77334326684722638389603898808e+01;
const D511: f64 = -0.30674084731089398182061213626e+02;
const D512: f64 = -0.93321305264302278729567221706e+01;
const D513: f64 = 0.15697238121770843886131091075e+02;
const D514: f64 = -0.31139403219565177677282850411e+02;
const D515: f64 = -0.93529243588444783865713862664e+01;
const D516: f64 = 0.35816841486394083752465898540e+02;
const D61: f64 = 0.19985053242002433820987653617e+02;
const D66: f64 = -0.38703730874935176555105901742e+03;
const D67: f64 = -0.18917813819516756882830838328e+03;
const D68: f64 = 0.52780815920542364900561016686e+03;
const D69: f64 = -0.11573902539959630126141871134e+02;
const D610: f64 = 0.68812326946963000169666922661e+01;
const D611: f64 = -0.10006050966910838403183860980e+01;
const D612: f64 = 0.77771377980534432092869265740e+00;
const D613: f64 = -0.27782057523535084065932004339e+01;
const D614: f64 = -0.60196695231264120758267380846e+02;
const D615: f64 = 0.84320405506677161018159903784e+02;
const D616: f64 = 0.11992291136182789328035130030e+02;
const D71: f64 = -0.25693933462703749003312586129e+02;
const D76: f64 = -0.15418974869023643374053993627e+03;
const D77: f64 = -0.23152937917604549567536039109e+03;
const D78: f64 = 0.35763911791061412378285349910e+03;
const D79: f64 = 0.93405324183624310003907691704e+02;
const D710: f64 = -0.37458323136451633156875139351e+02;
const D711: f64 = 0.10409964950896230045147246184e+03;
const D712: f64 = 0.29840293426660503123344363579e+02;
const D713: f64 = -0.43533456590011143754432175058e+02;
const D714: f64 = 0.96324553959188282948394950600e+02;
const D715: f64 = -0.39177261675615439165231486172e+02;
const D716: f64 = -0.14972683625798562581422125276e+03;

#[cfg(test)]
mod tests {
    use super::*;

    fn oscillator(_t: f64, y: &[f64; 2]) -> [f64; 2] {
        [y[1], -y[0]]
    }

    #[test]
    fn harmonic_oscillator_endpoint() {
        let y = Dop853::new(1e-12).integrate(oscillator, 0.0, [0.0, 1.0], 10.0).unwrap();
        assert!((y[0] - 10f64.sin()).abs() < 1e-10);
        assert!((y[1] - 10f64.cos()).abs() < 1e-10);
    }

    #[test]
    fn backward_integration() {
        let y = Dop853::new(1e-12).integrate(oscillator, 3.0, [3f64.sin(), 3f64.cos()], 0.5).unwrap();
        assert!((y[0] - 0.5f64.sin()).abs() < 1e-10);
    }

    #[test]
    fn dense_output_matches_solution_inside_steps() {
        let mut worst: f64 = 0.0;
        let mut steps = 0;
        Dop853::new(1e-11)
            .integrate_dense(oscillator, 0.0, [0.0, 1.0], 20.0, |s| {
                steps += 1;
                for j in 0..=10 {
                    let t = s.t_old + (s.t - s.t_old) * j as f64 / 10.0;
                    let y = s.eval(t);
                    worst = worst.max((y[0] - t.sin()).abs());
                }
                Flow::Continue
            })
            .unwrap();
        assert!(steps > 3);
        assert!(worst < 1e-9, "dense error {worst:e}");
    }

    #[test]
    fn observer_can_stop_early() {
        let mut last_t = 0.0;
        Dop853::new(1e-10)
            .integrate_dense(oscillator, 0.0, [0.0, 1.0], 100.0, |s| {
                last_t = s.t;
                if s.t > 1.0 { Flow::Stop } else { Flow::Continue }
            })
            .unwrap();
        assert!(last_t > 1.0 && last_t < 100.0);
    }

    #[test]
    fn exponential_growth_relative_accuracy() {
        let y = Dop853::new(1e-12).integrate(|_, y: &[f64; 1]| [y[0]], 0.0, [1.0], 5.0).unwrap();
        assert!((y[0] / 5f64.exp() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn rejects_non_finite_input() {
        assert!(Dop853::new(1e-8).integrate(oscillator, 0.0, [f64::NAN, 1.0], 1.0).is_err());
    }
}
