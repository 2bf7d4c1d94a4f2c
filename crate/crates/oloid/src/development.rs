//! Isometric development of the surface into the plane.
//!
//! A developable surface can be unrolled into the plane without stretching.
//! Unrolling the ruled surface turns each touching curve C_lambda into a
//! periodic plane curve (xi(t), eta(t)) and the rulings into straight
//! segments; arc lengths on the surface and in the plane agree.
//!
//! Because the surface closes up after one period of rulings, the unrolled
//! picture repeats with the parameter period 4pi/3 and the horizontal shift
//! [`XI_PERIOD`]. The reduction is handled by [`h_step`]: it splits t into a
//! step count k and a residual h in [-2pi/3, 2pi/3], and the development
//! evaluates closed forms in h shifted k periods sideways. With
//! c = cos h, s = sin h, d = 1 + lambda c, the touching curve develops to
//!
//! ```text
//! xi  = k XI_PERIOD + sgn(h) (2 sqrt(3)/9) [ arccos(sqrt(2) c / sqrt(1 + c))
//!        + (1 - 2 lambda) |s| sqrt(2 (1 + 2c)) / (d sqrt(1 + c)) ]
//! eta = (sqrt(3)/9) [ ln(2/(1 + c)) + (4 + 7 lambda + (11 lambda - 4) c) / d ]
//! ```
//!
//! and the edge of regression to the analogous pair [`dev_regression`]. The
//! development is normalized so that the image of C_0 (the circle k_A)
//! passes through the origin and eta increases toward the image of C_1:
//! it corresponds to the surface patch carrying the negative-z arc of each
//! touching curve, with xi odd and eta even in t.
//!
//! For the infinite member the xi component is the pointwise limit of the
//! finite formula, while the eta component uses the separately derived
//! closed form below, whose logarithm term ln(2/sqrt(1 + c)) differs from
//! the termwise limit ln(2/(1 + c)) of the finite family:
//!
//! ```text
//! xi*  = k XI_PERIOD + sgn(h) (2 sqrt(3)/9) [ arccos(sqrt(2) c / sqrt(1 + c))
//!         - 2 |s| sqrt(2 (1 + 2c)) / (c sqrt(1 + c)) ]
//! eta* = (sqrt(3)/9) [ ln(2/sqrt(1 + c)) + (7 + 11 c) / c ]
//! ```
//!
//! Arc lengths of parametric paths, on the surface or in the plane, are
//! computed by adaptive quadrature of a finite-difference speed.

use crate::error::{Error, Result};
use crate::geom::Point3;
use crate::numeric;
use crate::pencil::ExtendedParam;

use std::f64::consts::PI;

/// Horizontal shift of the development per parameter period 4pi/3, the
/// value 4 pi / (3 sqrt(3)).
pub const XI_PERIOD: f64 = 2.418_399_152_312_290_3;

/// A point of the development plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlanePoint {
    pub xi: f64,
    pub eta: f64,
}

impl PlanePoint {
    pub const fn new(xi: f64, eta: f64) -> Self {
        Self { xi, eta }
    }

    pub fn distance(self, other: PlanePoint) -> f64 {
        (self.xi - other.xi).hypot(self.eta - other.eta)
    }

    pub fn is_finite(self) -> bool {
        self.xi.is_finite() && self.eta.is_finite()
    }
}

/// Split t into a residual h in [-2pi/3, 2pi/3] and a signed period count k
/// with `t = h + k (4pi/3)`. Half-period boundaries reduce downward: at
/// t = 2pi/3 the result is h = -2pi/3, k = 1.
pub fn h_step(t: f64) -> (f64, i64) {
    let sign = if t < 0.0 { -1.0 } else { 1.0 };
    let k = sign * (3.0 * t.abs() / (4.0 * PI) + 0.5).floor();
    (t - k * 4.0 * PI / 3.0, k as i64)
}

/// Shared pieces of the development formulas at the residual h.
struct DevTerms {
    c: f64,
    s_abs: f64,
    sgn_h: f64,
    /// arccos(sqrt(2) c / sqrt(1 + c)), the common bend integral.
    bend: f64,
    /// sqrt(2 (1 + 2c)).
    root2q: f64,
    k: i64,
}

fn dev_terms(h: f64, k: i64) -> DevTerms {
    let c = h.cos();
    let q = (1.0 + 2.0 * c).max(0.0);
    let arg = (2f64.sqrt() * c / (1.0 + c).sqrt()).clamp(-1.0, 1.0);
    DevTerms {
        c,
        s_abs: h.sin().abs(),
        sgn_h: if h < 0.0 { -1.0 } else { 1.0 },
        bend: arg.acos(),
        root2q: (2.0 * q).sqrt(),
        k,
    }
}

const SQRT3: f64 = 1.732_050_807_568_877_2;
const COEF_XI: f64 = 2.0 * SQRT3 / 9.0;
const COEF_ETA: f64 = SQRT3 / 9.0;

fn assemble(terms: &DevTerms, xi_local: f64, eta: f64) -> PlanePoint {
    PlanePoint::new(terms.k as f64 * XI_PERIOD + terms.sgn_h * xi_local, eta)
}

/// Development of the touching curve C_lambda.
///
/// Fails where the curve itself has a pole (1 + lambda cos h = 0, or
/// cos h = 0 for the infinite member).
pub fn dev_touching(lambda: ExtendedParam, t: f64) -> Result<PlanePoint> {
    let (h, k) = h_step(t);
    let terms = dev_terms(h, k);
    let c = terms.c;
    let p = match lambda {
        ExtendedParam::Finite(l) => {
            let d = 1.0 + l * c;
            if d == 0.0 {
                return Err(Error::Pole {
                    op: "dev_touching",
                    what: "1 + lambda cos t",
                    at: h,
                });
            }
            let xi_local = COEF_XI
                * (terms.bend
                    + (1.0 - 2.0 * l) * terms.s_abs * terms.root2q / (d * (1.0 + c).sqrt()));
            let eta = COEF_ETA
                * ((2.0 / (1.0 + c)).ln() + (4.0 + 7.0 * l + (11.0 * l - 4.0) * c) / d);
            assemble(&terms, xi_local, eta)
        }
        ExtendedParam::Infinity => {
            if c == 0.0 {
                return Err(Error::Pole {
                    op: "dev_touching",
                    what: "cos t",
                    at: h,
                });
            }
            let xi_local = COEF_XI
                * (terms.bend - 2.0 * terms.s_abs * terms.root2q / (c * (1.0 + c).sqrt()));
            let eta = COEF_ETA * ((2.0 / (1.0 + c).sqrt()).ln() + (7.0 + 11.0 * c) / c);
            assemble(&terms, xi_local, eta)
        }
    };
    if !p.is_finite() {
        return Err(Error::Pole {
            op: "dev_touching",
            what: "1 + lambda cos t",
            at: h,
        });
    }
    Ok(p)
}

/// Development of the edge of regression:
///
/// ```text
/// xi  = k XI_PERIOD + sgn(h) (2 sqrt(3)/9) [ arccos(sqrt(2) c / sqrt(1 + c))
///        - (2 + 2c - c^2) sqrt(2 (1 + 2c)) |s| / (3 c (1 + c)^(3/2)) ]
/// eta = (sqrt(3)/9) [ ln(2/(1 + c)) + (7 + 33 c + 18 c^2 - 4 c^3) / (3 c (1 + c)) ]
/// ```
///
/// with poles at cos h = 0, matching the space curve.
pub fn dev_regression(t: f64) -> Result<PlanePoint> {
    let (h, k) = h_step(t);
    let terms = dev_terms(h, k);
    let c = terms.c;
    if c == 0.0 {
        return Err(Error::Pole {
            op: "dev_regression",
            what: "cos t",
            at: h,
        });
    }
    let onepc = 1.0 + c;
    let xi_local = COEF_XI
        * (terms.bend
            - (2.0 + 2.0 * c - c * c) * terms.root2q * terms.s_abs
                / (3.0 * c * onepc * onepc.sqrt()));
    let eta = COEF_ETA
        * ((2.0 / onepc).ln()
            + (7.0 + 33.0 * c + 18.0 * c * c - 4.0 * c * c * c) / (3.0 * c * onepc));
    let p = assemble(&terms, xi_local, eta);
    if !p.is_finite() {
        return Err(Error::Pole {
            op: "dev_regression",
            what: "cos t",
            at: h,
        });
    }
    Ok(p)
}

/// Arc length of a parametric result, returned with the quadrature error
/// estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcLength {
    pub value: f64,
    pub est_abs_err: f64,
}

fn fd_step(t: f64) -> f64 {
    // Near the cube root of machine epsilon: small enough for the O(h^2)
    // difference bias, large enough that rounding noise in the path stays
    // below quadrature tolerances down to about 1e-9.
    1e-5 * (1.0 + t.abs())
}

/// Arc length of a space path over `[t0, t1]` by adaptive quadrature of a
/// finite-difference speed. The difference stencil is clamped into the
/// integration interval, so the path is never evaluated outside it.
pub fn arc_length_surface<F>(path: F, t0: f64, t1: f64, tol: f64) -> Result<ArcLength>
where
    F: Fn(f64) -> Result<Point3>,
{
    if !(t1 > t0) {
        return Err(Error::NonMonotone { t0, t1 });
    }
    let speed = |t: f64| -> Result<f64> {
        let h = fd_step(t);
        let ta = (t - h).max(t0);
        let tb = (t + h).min(t1);
        let a = path(ta)?;
        let b = path(tb)?;
        Ok((b - a).norm() / (tb - ta))
    };
    let (value, est_abs_err) = numeric::adaptive_simpson(&speed, t0, t1, tol)?;
    Ok(ArcLength { value, est_abs_err })
}

/// Arc length of a plane path over `[t0, t1]`; same scheme as
/// [`arc_length_surface`].
pub fn arc_length_plane<F>(path: F, t0: f64, t1: f64, tol: f64) -> Result<ArcLength>
where
    F: Fn(f64) -> Result<PlanePoint>,
{
    if !(t1 > t0) {
        return Err(Error::NonMonotone { t0, t1 });
    }
    let speed = |t: f64| -> Result<f64> {
        let h = fd_step(t);
        let ta = (t - h).max(t0);
        let tb = (t + h).min(t1);
        let a = path(ta)?;
        let b = path(tb)?;
        Ok(a.distance(b) / (tb - ta))
    };
    let (value, est_abs_err) = numeric::adaptive_simpson(&speed, t0, t1, tol)?;
    Ok(ArcLength { value, est_abs_err })
}
