//! C ABI for `cartan-core`.
//!
//! Every fallible function returns a [`CartanStatus`] and writes results
//! through out-pointers. On failure the message is kept per thread and read
//! back with [`cartan_last_error`]. Solvers and sampled trajectories are
//! opaque handles released with their `_free` functions.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cartan_core::cli;
use cartan_core::engel::compare;
use cartan_core::expmap::{exp, exp_trajectory, GroupPoint, TrajectorySample};
use cartan_core::maxwell::cut_time;
use cartan_core::pendulum::{Covector, Stratum};
use cartan_core::shooting::{solve, SolverConfig};
use cartan_core::Error;

/// Status codes; the non-zero values match the `cartan` exit codes where
/// they overlap.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartanStatus {
    Ok = 0,
    Internal = 1,
    Domain = 2,
    Convergence = 3,
    InvalidArgument = 4,
    NullPointer = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartanStratum {
    C1 = 1,
    C2 = 2,
    C3 = 3,
    C4 = 4,
    C5 = 5,
    C6 = 6,
    C7 = 7,
}

impl From<Stratum> for CartanStratum {
    fn from(s: Stratum) -> Self {
        match s {
            Stratum::C1 => CartanStratum::C1,
            Stratum::C2 => CartanStratum::C2,
            Stratum::C3 => CartanStratum::C3,
            Stratum::C4 => CartanStratum::C4,
            Stratum::C5 => CartanStratum::C5,
            Stratum::C6 => CartanStratum::C6,
            Stratum::C7 => CartanStratum::C7,
        }
    }
}

/// Initial covector `(θ, c, α, β)` with `α ≥ 0`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartanCovector {
    pub theta: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// Point `(x, y, z, v, w)` of the group.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CartanPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub v: f64,
    pub w: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartanClassification {
    pub stratum: CartanStratum,
    pub energy: f64,
    /// Elliptic modulus, NaN outside `C1`, `C2`, `C3`.
    pub k: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartanConstants {
    pub k0: f64,
    pub k1: f64,
    pub t1z0: f64,
    pub t2v0: f64,
    pub zeta: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartanShootResult {
    pub lambda: CartanCovector,
    pub t: f64,
    pub residual: f64,
    pub homogeneous_residual: f64,
    pub distance: f64,
    pub iterations: u32,
    pub starts_tried: u32,
    /// Reciprocal condition number of the Jacobian at the solution.
    pub rcond: f64,
    pub ill_conditioned: bool,
}

/// Shooting solver with its configuration.
pub struct CartanSolver {
    cfg: SolverConfig,
}

/// Sampled geodesic.
pub struct CartanTrajectory {
    samples: Vec<TrajectorySample>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> CartanStatus {
    match cli::exit_code(e) {
        cli::EXIT_DOMAIN => CartanStatus::Domain,
        cli::EXIT_CONVERGENCE => CartanStatus::Convergence,
        _ => CartanStatus::Internal,
    }
}

fn fail(status: CartanStatus, msg: impl Into<String>) -> CartanStatus {
    set_error(msg.into());
    status
}

/// Run `f`, translating errors and panics into status codes.
fn guard<F: FnOnce() -> Result<(), CartanStatus>>(f: F) -> CartanStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CartanStatus::Ok,
        Ok(Err(s)) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(CartanStatus::Panic, msg)
        }
    }
}

fn lib<T>(r: cartan_core::Result<T>) -> Result<T, CartanStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

fn read<'a, T>(p: *const T, name: &str) -> Result<&'a T, CartanStatus> {
    // SAFETY: callers pass pointers that are null or valid for reads.
    unsafe { p.as_ref() }.ok_or_else(|| fail(CartanStatus::NullPointer, format!("{name} is NULL")))
}

fn write<T>(p: *mut T, name: &str, v: T) -> Result<(), CartanStatus> {
    if p.is_null() {
        return Err(fail(CartanStatus::NullPointer, format!("{name} is NULL")));
    }
    // SAFETY: non-null and, by contract, valid for writes.
    unsafe { p.write(v) };
    Ok(())
}

fn covector(l: &CartanCovector) -> Result<Covector, CartanStatus> {
    lib(Covector::new(l.theta, l.c, l.alpha, l.beta))
}

fn from_covector(l: &Covector) -> CartanCovector {
    CartanCovector {
        theta: l.theta,
        c: l.c,
        alpha: l.alpha,
        beta: l.beta,
    }
}

fn from_point(q: &GroupPoint) -> CartanPoint {
    CartanPoint {
        x: q.x,
        y: q.y,
        z: q.z,
        v: q.v,
        w: q.w,
    }
}

/// Message of the last failed call on this thread, or NULL.
///
/// The pointer stays valid until the next `cartan_*` call on the same thread.
#[no_mangle]
pub extern "C" fn cartan_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cartan_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Stratum, energy and modulus of `lambda`. `band` widens the
/// lower-dimensional strata (0 tests them exactly).
///
/// # Safety
/// `lambda` must be valid for reads and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cartan_classify(
    lambda: *const CartanCovector,
    band: f64,
    out: *mut CartanClassification,
) -> CartanStatus {
    guard(|| {
        let l = covector(read(lambda, "lambda")?)?;
        let r = lib(cli::classify_report(&l, band))?;
        write(
            out,
            "out",
            CartanClassification {
                stratum: r.stratum.into(),
                energy: r.energy,
                k: r.k.unwrap_or(f64::NAN),
            },
        )
    })
}

/// `Exp(lambda, t)` with integrator tolerance `tol`.
///
/// # Safety
/// `lambda` must be valid for reads and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cartan_exp(lambda: *const CartanCovector, t: f64, tol: f64, out: *mut CartanPoint) -> CartanStatus {
    guard(|| {
        let l = covector(read(lambda, "lambda")?)?;
        let q = lib(exp(&l, t, tol))?;
        write(out, "out", from_point(&q))
    })
}

/// Cut time of `lambda`; `INFINITY` on the line and critical strata.
///
/// # Safety
/// `lambda` must be valid for reads and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cartan_cut_time(lambda: *const CartanCovector, out: *mut f64) -> CartanStatus {
    guard(|| {
        let l = covector(read(lambda, "lambda")?)?;
        write(out, "out", lib(cut_time(&l))?)
    })
}

/// Engel and Cartan cut times of `lambda`, checking
/// `t_engel <= t_cartan <= zeta * t_engel`.
///
/// # Safety
/// `lambda` must be valid for reads; `engel` and `cartan` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cartan_compare(lambda: *const CartanCovector, engel: *mut f64, cartan: *mut f64) -> CartanStatus {
    guard(|| {
        let l = covector(read(lambda, "lambda")?)?;
        let c = lib(compare(&l))?;
        write(engel, "engel", c.engel)?;
        write(cartan, "cartan", c.cartan)
    })
}

/// `k0`, `k1`, `t1z(0)`, `t2v(0)` and `zeta`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cartan_constants(out: *mut CartanConstants) -> CartanStatus {
    guard(|| {
        let c = lib(cli::constants())?;
        write(
            out,
            "out",
            CartanConstants {
                k0: c.k0,
                k1: c.k1,
                t1z0: c.t1z0,
                t2v0: c.t2v0,
                zeta: c.zeta,
            },
        )
    })
}

/// Sample `Exp(lambda, ·)` at `n ≥ 2` equally spaced times on `[0, t_end]`.
///
/// # Safety
/// `lambda` must be valid for reads and `out` valid for writes. The handle
/// written to `out` must be released with [`cartan_trajectory_free`].
#[no_mangle]
pub unsafe extern "C" fn cartan_trajectory_new(
    lambda: *const CartanCovector,
    t_end: f64,
    n: usize,
    tol: f64,
    out: *mut *mut CartanTrajectory,
) -> CartanStatus {
    guard(|| {
        let l = covector(read(lambda, "lambda")?)?;
        let tr = lib(exp_trajectory(&l, t_end, n, tol))?;
        write(out, "out", Box::into_raw(Box::new(CartanTrajectory { samples: tr.samples })))
    })
}

/// Number of samples in `traj` (0 for NULL).
///
/// # Safety
/// `traj` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cartan_trajectory_len(traj: *const CartanTrajectory) -> usize {
    unsafe { traj.as_ref() }.map_or(0, |t| t.samples.len())
}

/// Sample `i` of `traj`: time, point and heading `θ`.
///
/// # Safety
/// `traj` must be a live handle; `t`, `q`, `theta` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cartan_trajectory_get(
    traj: *const CartanTrajectory,
    i: usize,
    t: *mut f64,
    q: *mut CartanPoint,
    theta: *mut f64,
) -> CartanStatus {
    guard(|| {
        let tr = read(traj, "traj")?;
        let s = tr
            .samples
            .get(i)
            .ok_or_else(|| fail(CartanStatus::InvalidArgument, format!("index {i} out of range {}", tr.samples.len())))?;
        write(t, "t", s.t)?;
        write(q, "q", from_point(&s.q))?;
        write(theta, "theta", s.theta)
    })
}

/// Release a trajectory. NULL is ignored.
///
/// # Safety
/// `traj` must be NULL or a handle from [`cartan_trajectory_new`] that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn cartan_trajectory_free(traj: *mut CartanTrajectory) {
    if !traj.is_null() {
        drop(unsafe { Box::from_raw(traj) });
    }
}

/// Solver with the default configuration. Release with [`cartan_solver_free`].
#[no_mangle]
pub extern "C" fn cartan_solver_new() -> *mut CartanSolver {
    Box::into_raw(Box::new(CartanSolver {
        cfg: SolverConfig::default(),
    }))
}

/// Set the residual tolerance and the integrator tolerance.
///
/// # Safety
/// `solver` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cartan_solver_set_tolerances(solver: *mut CartanSolver, residual: f64, integrator: f64) -> CartanStatus {
    guard(|| {
        // SAFETY: live handle by contract.
        let s = unsafe { solver.as_mut() }.ok_or_else(|| fail(CartanStatus::NullPointer, "solver is NULL"))?;
        if !(residual > 0.0 && integrator > 0.0 && residual.is_finite() && integrator.is_finite()) {
            return Err(fail(CartanStatus::InvalidArgument, "tolerances must be positive and finite"));
        }
        s.cfg.tol = residual;
        s.cfg.integrator_tol = integrator;
        Ok(())
    })
}

/// Limit the number of Newton starts.
///
/// # Safety
/// `solver` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cartan_solver_set_max_starts(solver: *mut CartanSolver, max_starts: u32) -> CartanStatus {
    guard(|| {
        // SAFETY: live handle by contract.
        let s = unsafe { solver.as_mut() }.ok_or_else(|| fail(CartanStatus::NullPointer, "solver is NULL"))?;
        s.cfg.max_starts = max_starts as usize;
        Ok(())
    })
}

/// Minimizer from the identity to `q`.
///
/// # Safety
/// `solver` must be a live handle, `q` valid for reads, `out` valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn cartan_solver_solve(
    solver: *const CartanSolver,
    q: *const CartanPoint,
    out: *mut CartanShootResult,
) -> CartanStatus {
    guard(|| {
        let s = read(solver, "solver")?;
        let q = read(q, "q")?;
        let r = lib(solve(&GroupPoint::new(q.x, q.y, q.z, q.v, q.w), &s.cfg))?;
        write(
            out,
            "out",
            CartanShootResult {
                lambda: from_covector(&r.lambda),
                t: r.t,
                residual: r.residual,
                homogeneous_residual: r.homogeneous_residual,
                distance: r.distance,
                iterations: r.iterations as u32,
                starts_tried: r.starts_tried as u32,
                rcond: r.rcond,
                ill_conditioned: r.ill_conditioned,
            },
        )
    })
}

/// Release a solver. NULL is ignored.
///
/// # Safety
/// `solver` must be NULL or a handle from [`cartan_solver_new`] that has not
/// been freed.
#[no_mangle]
pub unsafe extern "C" fn cartan_solver_free(solver: *mut CartanSolver) {
    if !solver.is_null() {
        drop(unsafe { Box::from_raw(solver) });
    }
}
