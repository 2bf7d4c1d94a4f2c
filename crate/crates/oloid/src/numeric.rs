//! Small numerical toolkit: tolerances, finite differences, quadrature,
//! dense linear solves, and a conic least-squares fit.
//!
//! Everything here is deterministic and allocation-light; the heaviest item
//! is the adaptive Simpson integrator used for arc lengths and the
//! Gauss-Legendre rule used for the surface-area integral.

use crate::error::{Error, Result};

/// Absolute/relative tolerance pair used by residual checks.
///
/// A residual `r` measured against a natural scale `s` passes when
/// `|r| <= abs + rel * |s|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { abs: 1e-10, rel: 1e-10 }
    }
}

impl Tolerance {
    pub const fn new(abs: f64, rel: f64) -> Self {
        Self { abs, rel }
    }

    /// Threshold for a quantity whose natural size is `scale`.
    pub fn bound(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale.abs()
    }

    pub fn check(&self, residual: f64, scale: f64) -> bool {
        residual.is_finite() && residual.abs() <= self.bound(scale)
    }
}

/// Central difference approximation of `f'(x)` with step `h`.
pub fn central_diff<F>(f: F, x: f64, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    Ok((f(x + h)? - f(x - h)?) / (2.0 * h))
}

const SIMPSON_MAX_DEPTH: u32 = 48;

/// Hard cap on interval splits. Tolerances below the integrand's own noise
/// floor otherwise never satisfy the acceptance test and the recursion
/// degenerates into an exponential tree.
const SIMPSON_MAX_NODES: u64 = 1 << 20;

/// Adaptive Simpson quadrature of `f` over `[a, b]` with absolute target
/// `tol`. Returns the integral together with an accumulated error estimate.
/// Errors from the integrand propagate unchanged.
///
/// Refinements that fall below the rounding noise of the integrand are
/// accepted as converged: the per-level tolerance and the noise in a panel
/// shrink at the same rate, so without the floor a noisy panel would split
/// all the way to the depth cap.
pub fn adaptive_simpson<F>(f: &F, a: f64, b: f64, tol: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let m = 0.5 * (a + b);
    let fa = f(a)?;
    let fm = f(m)?;
    let fb = f(b)?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let scale = whole
        .abs()
        .max((b - a) * fa.abs().max(fm.abs()).max(fb.abs()));
    let floor = 1e-12 * scale.max(f64::MIN_POSITIVE);
    let mut est = 0.0;
    let mut budget = SIMPSON_MAX_NODES;
    let value = simpson_step(f, a, b, fa, fm, fb, whole, tol, floor, 0, &mut est, &mut budget)?;
    Ok((value, est))
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    floor: f64,
    depth: u32,
    est: &mut f64,
    budget: &mut u64,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth >= SIMPSON_MAX_DEPTH
        || *budget == 0
        || delta.abs() <= 15.0 * tol
        || delta.abs() <= floor
    {
        *est += delta.abs() / 15.0;
        return Ok(left + right + delta / 15.0);
    }
    *budget -= 1;
    let half_tol = 0.5 * tol;
    let l = simpson_step(f, a, m, fa, flm, fm, left, half_tol, floor, depth + 1, est, budget)?;
    let r = simpson_step(f, m, b, fm, frm, fb, right, half_tol, floor, depth + 1, est, budget)?;
    Ok(l + r)
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 2, "need at least a two-point rule");
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        // Tricomi-style initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                let (p2, d2) = legendre(n, x);
                dp = d2;
                x -= p2 / d2;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.push((x, w));
    }
    rule
}

/// Value and derivative of the Legendre polynomial `P_n` at `x`.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integrate `f` over `[a, b]` with a fixed Gauss-Legendre rule.
pub fn gauss_integrate<F>(rule: &[(f64, f64)], f: &F, a: f64, b: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = 0.0;
    for &(x, w) in rule {
        acc += w * f(mid + half * x)?;
    }
    Ok(acc * half)
}

/// Solve the dense system `a x = b` by Gaussian elimination with partial
/// pivoting. Returns `None` when the matrix is numerically singular.
pub fn solve_linear(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    debug_assert!(a.len() == n && a.iter().all(|row| row.len() == n));
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| {
            a[i][col]
                .abs()
                .partial_cmp(&a[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[pivot][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut s = b[row];
        for k in row + 1..n {
            s -= a[row][k] * x[k];
        }
        x[row] = s / a[row][row];
    }
    Some(x)
}

/// Coefficients `(a, b, c)` of the parabola `a m^2 + b m + c` through three
/// samples `(m_i, y_i)` with pairwise distinct abscissae.
pub fn quadratic_through(p0: (f64, f64), p1: (f64, f64), p2: (f64, f64)) -> (f64, f64, f64) {
    let (m0, y0) = p0;
    let (m1, y1) = p1;
    let (m2, y2) = p2;
    // Newton divided differences, then expand.
    let d01 = (y1 - y0) / (m1 - m0);
    let d12 = (y2 - y1) / (m2 - m1);
    let d012 = (d12 - d01) / (m2 - m0);
    let a = d012;
    let b = d01 - d012 * (m0 + m1);
    let c = y0 - d01 * m0 + d012 * m0 * m1;
    (a, b, c)
}

/// Fit a central conic `y^2 + p yz + q z^2 + r y + s z + u = 0` through the
/// given plane samples (least squares, coefficient of `y^2` pinned to 1) and
/// return its center.
///
/// The samples are shifted to their centroid before the normal equations are
/// formed, which keeps the fit well conditioned even when the data sits far
/// from the origin. Returns `None` when the system is singular or the conic
/// has no center.
pub fn fit_conic_center(samples: &[(f64, f64)]) -> Option<(f64, f64)> {
    if samples.len() < 5 {
        return None;
    }
    let n = samples.len() as f64;
    let (mut cy, mut cz) = (0.0, 0.0);
    for &(y, z) in samples {
        cy += y;
        cz += z;
    }
    cy /= n;
    cz /= n;

    // Basis [yz, z^2, y, z, 1] against the right-hand side -y^2, in
    // centroid-shifted coordinates.
    let mut ata = vec![vec![0.0; 5]; 5];
    let mut atb = vec![0.0; 5];
    for &(y0, z0) in samples {
        let y = y0 - cy;
        let z = z0 - cz;
        let row = [y * z, z * z, y, z, 1.0];
        let rhs = -y * y;
        for i in 0..5 {
            for j in 0..5 {
                ata[i][j] += row[i] * row[j];
            }
            atb[i] += row[i] * rhs;
        }
    }
    let sol = solve_linear(ata, atb)?;
    let (p, q, r, s) = (sol[0], sol[1], sol[2], sol[3]);
    // Center solves [2 p; p 2q] (y, z)^T = -(r, s)^T.
    let det = 4.0 * q - p * p;
    if det.abs() < 1e-300 {
        return None;
    }
    let yc = (-2.0 * q * r + p * s) / det;
    let zc = (p * r - 2.0 * s) / det;
    Some((yc + cy, zc + cz))
}

/// Promote a non-finite evaluation to a pole error.
pub(crate) fn finite_or_pole(op: &'static str, what: &'static str, at: f64, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Pole { op, what, at })
    }
}
