//! Touching curves: the curves along which the inscribed quadrics meet the
//! surface.
//!
//! The quadric Q_lambda touches the ruled surface along a closed curve
//! C_lambda that crosses every ruling once. On the ruling at t the contact
//! sits at the affine coordinate
//!
//! ```text
//! psi(lambda, t) = lambda (1 + cos t) / (1 + lambda cos t),
//! ```
//!
//! which gives the space curve kappa(lambda, t) with components
//!
//! ```text
//! kappa_1 = (1 - lambda) sin t / (1 + lambda cos t)
//! kappa_2 = (2 lambda - 1 + (lambda - 2) cos t) / (2 (1 + lambda cos t))
//! kappa_3 = lambda sqrt(1 + 2 cos t) / (1 + lambda cos t)
//! ```
//!
//! for t in the ruling interval [-2pi/3, 2pi/3]. The closed curve consists
//! of this arc on the positive ruling family and of its mirror image on the
//! negative family; [`gamma`] glues the two with the curve parameter running
//! over (-2pi/3, 2pi] (branch two maps t to 4pi/3 - t and flips z), repeating
//! with period [`CURVE_PERIOD`]. The two arcs join smoothly because kappa_3
//! vanishes on the ruling-domain boundary.
//!
//! For 1 + lambda cos t = 0 the curve escapes to infinity: outside
//! -1 < lambda < 2 there are four such poles and four straight asymptotes.
//! The module also provides the curve of the infinite pencil member
//! ([`kappa_star`]), axis crossings, coordinate-plane projections, and the
//! projected conic for a few specially analyzed parameters.

use crate::error::{Error, Result};
use crate::geom::{Line3, Point3, Vec3};
use crate::pencil::ExtendedParam;
use crate::regression;
use crate::surface::{self, Angle};

use std::f64::consts::{PI, TAU};

/// Period of the closed-curve parametrization [`gamma`].
pub const CURVE_PERIOD: f64 = 8.0 * PI / 3.0;

/// Label of the two arcs of the closed touching curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveBranch {
    /// t in [-2pi/3, 2pi/3], carried by the positive ruling family.
    Gamma1,
    /// t in (2pi/3, 2pi], carried by the negative family.
    Gamma2,
}

impl CurveBranch {
    pub fn label(self) -> &'static str {
        match self {
            CurveBranch::Gamma1 => "gamma1",
            CurveBranch::Gamma2 => "gamma2",
        }
    }
}

/// A point of the closed touching curve, tagged with its normalized curve
/// parameter and arc label.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub t: f64,
    pub branch: CurveBranch,
    pub point: Point3,
}

/// Reduce an arbitrary curve parameter into the fundamental window
/// (-2pi/3, 2pi].
pub fn curve_param(t: f64) -> f64 {
    TAU - (TAU - t).rem_euclid(CURVE_PERIOD)
}

/// Branch, pullback into the ruling interval, and z sign for a normalized
/// curve parameter.
fn split_branch(u: f64) -> (CurveBranch, f64, f64) {
    if u <= surface::T_MAX {
        (CurveBranch::Gamma1, u, 1.0)
    } else {
        (CurveBranch::Gamma2, 4.0 * PI / 3.0 - u, -1.0)
    }
}

/// Affine contact coordinate along the ruling at t: the touching point is
/// `ruling_point(psi(lambda, t), t, zb)`.
pub fn psi(lambda: f64, t: Angle) -> Result<f64> {
    let (w, c, _) = surface::ruling_domain("psi", t)?;
    let d = 1.0 + lambda * c;
    if d == 0.0 {
        return Err(Error::Pole {
            op: "psi",
            what: "1 + lambda cos t",
            at: w,
        });
    }
    crate::numeric::finite_or_pole("psi", "1 + lambda cos t", w, lambda * (1.0 + c) / d)
}

/// The touching-curve arc on the positive ruling family, for finite lambda.
pub fn kappa(lambda: f64, t: Angle) -> Result<Point3> {
    let (w, c, q) = surface::ruling_domain("kappa", t)?;
    let d = 1.0 + lambda * c;
    if d == 0.0 {
        return Err(Error::Pole {
            op: "kappa",
            what: "1 + lambda cos t",
            at: w,
        });
    }
    let s = w.sin();
    let p = Point3::new(
        (1.0 - lambda) * s / d,
        (2.0 * lambda - 1.0 + (lambda - 2.0) * c) / (2.0 * d),
        lambda * q.sqrt() / d,
    );
    if !p.is_finite() {
        return Err(Error::Pole {
            op: "kappa",
            what: "1 + lambda cos t",
            at: w,
        });
    }
    Ok(p)
}

/// The arc of the touching curve of the infinite member (the hyperbolic
/// paraboloid), i.e. the pointwise limit of [`kappa`] as lambda -> infinity.
pub fn kappa_star(t: Angle) -> Result<Point3> {
    let (w, c, q) = surface::ruling_domain("kappa_star", t)?;
    if c == 0.0 {
        return Err(Error::Pole {
            op: "kappa_star",
            what: "cos t",
            at: w,
        });
    }
    let s = w.sin();
    let p = Point3::new(-s / c, 0.5 + 1.0 / c, q.sqrt() / c);
    if !p.is_finite() {
        return Err(Error::Pole {
            op: "kappa_star",
            what: "cos t",
            at: w,
        });
    }
    Ok(p)
}

/// A point of the closed touching curve C_lambda.
///
/// The parameter is first reduced into (-2pi/3, 2pi]; values up to 2pi/3
/// evaluate on the first arc, larger ones on the mirrored second arc. The
/// map repeats with period [`CURVE_PERIOD`] and is continuous across both
/// seams, where the curve crosses the plane z = 0.
pub fn gamma(lambda: ExtendedParam, t: Angle) -> Result<CurvePoint> {
    let u = curve_param(t.radians());
    let (branch, pull, zsign) = split_branch(u);
    let base = match lambda {
        ExtendedParam::Finite(l) => kappa(l, pull.into())?,
        ExtendedParam::Infinity => kappa_star(pull.into())?,
    };
    Ok(CurvePoint {
        t: u,
        branch,
        point: Point3::new(base.x, base.y, zsign * base.z),
    })
}

/// Derivative of [`kappa`] with respect to t.
///
/// Fails on the ruling-domain boundary 1 + 2 cos t = 0, where the z
/// component has a square-root singularity.
pub fn kappa_dot(lambda: f64, t: Angle) -> Result<Vec3> {
    let (w, c, q) = surface::ruling_domain("kappa_dot", t)?;
    if q == 0.0 {
        return Err(Error::Boundary {
            op: "kappa_dot",
            t: w,
        });
    }
    let d = 1.0 + lambda * c;
    if d == 0.0 {
        return Err(Error::Pole {
            op: "kappa_dot",
            what: "1 + lambda cos t",
            at: w,
        });
    }
    let s = w.sin();
    let d2 = d * d;
    let b = 1.0 - lambda + lambda * lambda;
    let v = Vec3::new(
        (1.0 - lambda) * (lambda + c) / d2,
        b * s / d2,
        lambda * (lambda * (1.0 + c) - 1.0) * s / (d2 * q.sqrt()),
    );
    if !v.is_finite() {
        return Err(Error::Pole {
            op: "kappa_dot",
            what: "1 + lambda cos t",
            at: w,
        });
    }
    Ok(v)
}

/// Tangent line of the closed curve C_lambda at curve parameter t.
///
/// On the second arc the chain rule through t -> 4pi/3 - t flips the x and
/// y components of the velocity while the z flip of the arc restores the
/// z component.
pub fn tangent_line(lambda: f64, t: Angle) -> Result<Line3> {
    let u = curve_param(t.radians());
    let (branch, pull, _) = split_branch(u);
    let base = gamma(ExtendedParam::Finite(lambda), u.into())?.point;
    let kd = kappa_dot(lambda, pull.into())?;
    let dir = match branch {
        CurveBranch::Gamma1 => kd,
        CurveBranch::Gamma2 => Vec3::new(-kd.x, -kd.y, kd.z),
    };
    Ok(Line3::new(base, dir))
}

/// The four poles of C_lambda in curve-parameter order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleSet {
    pub t1: Angle,
    pub t2: Angle,
    pub t3: Angle,
    pub t4: Angle,
}

impl PoleSet {
    pub fn as_array(&self) -> [Angle; 4] {
        [self.t1, self.t2, self.t3, self.t4]
    }
}

/// Curve parameters where 1 + lambda cos t vanishes. Requires lambda
/// outside (-1, 2); inside, the curve is closed and bounded.
///
/// The first two poles are -+arccos(-1/lambda) on the first arc; the other
/// two are their images 4pi/3 -+ arccos(-1/lambda) on the second arc. At
/// lambda = -1 and lambda = 2 each pair collapses to a double pole.
pub fn poles(lambda: f64) -> Result<PoleSet> {
    if lambda > -1.0 && lambda < 2.0 {
        return Err(Error::NoPoles { lambda });
    }
    let t2 = (-1.0 / lambda).acos();
    Ok(PoleSet {
        t1: (-t2).into(),
        t2: t2.into(),
        t3: (4.0 * PI / 3.0 - t2).into(),
        t4: (4.0 * PI / 3.0 + t2).into(),
    })
}

/// Poles of the touching curve of the infinite member: -+pi/2 on the first
/// arc and their images 5pi/6, 11pi/6 on the second.
pub fn poles_inf() -> PoleSet {
    PoleSet {
        t1: (-PI / 2.0).into(),
        t2: (PI / 2.0).into(),
        t3: (5.0 * PI / 6.0).into(),
        t4: (11.0 * PI / 6.0).into(),
    }
}

/// Signs (s_x, s_z) applied to the asymptote template for index k in 1..=4.
fn quadrant_signs(op: &'static str, k: u8) -> Result<(f64, f64)> {
    match k {
        1 => Ok((1.0, 1.0)),
        2 => Ok((-1.0, 1.0)),
        3 => Ok((-1.0, -1.0)),
        4 => Ok((1.0, -1.0)),
        _ => Err(Error::Domain {
            op,
            requirement: "asymptote index k in 1..=4",
            got: k as f64,
        }),
    }
}

/// The k-th straight asymptote of C_lambda, k in 1..=4.
///
/// Requires lambda outside [-1, 2] (or the infinite member): at the
/// boundary values the poles collapse pairwise and the curve leaves along
/// parabolic branches instead of straight lines. The four asymptotes are
/// the images of the first one under the x and z mirror symmetries; for the
/// infinite member they coincide with the asymptotes of the edge of
/// regression.
pub fn asymptote(lambda: ExtendedParam, k: u8) -> Result<Line3> {
    let (sx, sz) = quadrant_signs("asymptote", k)?;
    let l = match lambda {
        ExtendedParam::Infinity => return regression::regression_asymptote(k),
        ExtendedParam::Finite(l) => l,
    };
    if (-1.0..=2.0).contains(&l) {
        return Err(Error::Domain {
            op: "asymptote",
            requirement: "lambda outside [-1, 2]",
            got: l,
        });
    }
    let b = 1.0 - l + l * l;
    let x1 = b / (2.0 + l - l * l) * (1.0 - 1.0 / (l * l)).sqrt();
    let y1 = (2.0 - 2.0 * l - l * l) / (2.0 * l * (l - 2.0));
    let yt1 = (1.0 - 4.0 * l + l * l) / (2.0 * (l * l - 1.0));
    let zt1 = b / (l * l - 1.0) * (l / (l - 2.0)).sqrt();
    let p0 = Point3::new(sx * x1, y1, 0.0);
    let p1 = Point3::new(0.0, yt1, sz * zt1);
    Ok(Line3::through(p0, p1))
}

/// The crossings of C_lambda with the symmetry planes x = 0 (points X_1,
/// X_2, off the base circles) and z = 0 (points Z_1, Z_2).
///
/// Components degenerate for two parameter values: at lambda = -1 the X
/// pair escapes to infinity, at lambda = 2 the Z pair does; those entries
/// come back as `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisPoints {
    pub x1: Option<Point3>,
    pub x2: Option<Point3>,
    pub z1: Option<Point3>,
    pub z2: Option<Point3>,
}

/// Axis crossings of C_lambda; see [`AxisPoints`].
pub fn axis_points(lambda: ExtendedParam) -> AxisPoints {
    let s3 = 3f64.sqrt();
    match lambda {
        ExtendedParam::Infinity => AxisPoints {
            x1: Some(Point3::new(0.0, 1.5, s3)),
            x2: Some(Point3::new(0.0, 1.5, -s3)),
            z1: Some(Point3::new(s3, -1.5, 0.0)),
            z2: Some(Point3::new(-s3, -1.5, 0.0)),
        },
        ExtendedParam::Finite(l) => {
            let x = if 1.0 + l != 0.0 {
                let p = Point3::new(
                    0.0,
                    -3.0 * (1.0 - l) / (2.0 * (1.0 + l)),
                    s3 * l / (1.0 + l),
                );
                p.is_finite().then_some(p)
            } else {
                None
            };
            let z = if 2.0 - l != 0.0 {
                let p = Point3::new(
                    s3 * (1.0 - l) / (2.0 - l),
                    3.0 * l / (2.0 * (2.0 - l)),
                    0.0,
                );
                p.is_finite().then_some(p)
            } else {
                None
            };
            AxisPoints {
                x1: x,
                x2: x.map(Point3::mirror_z),
                z1: z,
                z2: z.map(Point3::mirror_x),
            }
        }
    }
}

/// Residuals of a point against the three coordinate-plane projections of a
/// touching curve. Each entry vanishes when the projected point lies on the
/// corresponding projected curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionResiduals {
    /// Projection onto the plane x = 0.
    pub x: f64,
    /// Projection onto the plane y = 0.
    pub y: f64,
    /// Projection onto the plane z = 0.
    pub z: f64,
}

impl ProjectionResiduals {
    pub fn max_abs(&self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }
}

/// Projections of the touching curve of the infinite member: two hyperbolas
/// and a quartic.
///
/// ```text
/// x = 0:  (y + 1/2)^2 - z^2 = 1
/// y = 0:  (x^2 - z^2)^2 - 2 (x^2 + z^2) = 3
/// z = 0:  (y - 1/2)^2 - x^2 = 1
/// ```
pub fn projection_residuals_inf(p: Point3) -> ProjectionResiduals {
    let (x, y, z) = (p.x, p.y, p.z);
    ProjectionResiduals {
        x: (y + 0.5) * (y + 0.5) - z * z - 1.0,
        y: {
            let d = x * x - z * z;
            d * d - 2.0 * (x * x + z * z) - 3.0
        },
        z: (y - 0.5) * (y - 0.5) - x * x - 1.0,
    }
}

/// Projections of C_{-1}: a hyperbola, a quartic, and a parabola.
///
/// ```text
/// x = 0:  (y - 1/2)^2 - 3 z^2 = 1
/// y = 0:  3 x^4 + 8 x^2 - 64 z^2 = 16
/// z = 0:  y = -3 x^2 / 8
/// ```
pub fn projection_residuals_minus_one(p: Point3) -> ProjectionResiduals {
    let (x, y, z) = (p.x, p.y, p.z);
    ProjectionResiduals {
        x: (y - 0.5) * (y - 0.5) - 3.0 * z * z - 1.0,
        y: 3.0 * x.powi(4) + 8.0 * x * x - 64.0 * z * z - 16.0,
        z: y + 3.0 * x * x / 8.0,
    }
}

/// The conic carrying the projection of C_lambda onto the plane x = 0, in
/// the implicit form `a_yy y^2 + a_zz z^2 + a_y y + a_0 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionConic {
    pub lambda: f64,
    pub a_yy: f64,
    pub a_zz: f64,
    pub a_y: f64,
    pub a_0: f64,
}

impl ProjectionConic {
    /// Center of the conic in the (y, z) plane.
    pub fn center(&self) -> (f64, f64) {
        (-self.a_y / (2.0 * self.a_yy), 0.0)
    }

    pub fn residual(&self, y: f64, z: f64) -> f64 {
        self.a_yy * y * y + self.a_zz * z * z + self.a_y * y + self.a_0
    }
}

const CASE1_LAMBDAS: [f64; 3] = [-0.87, -1.4, -1.0];

/// The projected conic of C_lambda in the plane x = 0 for the specially
/// analyzed parameters lambda in {-0.87, -1.4, -1}.
///
/// The implicit equation is
/// `4 (1 - lambda + lambda^2)^2 z^2 = lambda^2 (2y(lambda - 2) + 3 lambda)(2 y lambda - lambda + 2)`,
/// expanded into the stored coefficients; its center has
/// `y = -(lambda^2 + 2 lambda - 2) / (2 lambda (lambda - 2))`.
pub fn projection_conic_case1(lambda: f64) -> Result<ProjectionConic> {
    if !CASE1_LAMBDAS.iter().any(|&v| (lambda - v).abs() < 1e-12) {
        return Err(Error::UnsupportedLambda {
            op: "projection_conic_case1",
            lambda,
            supported: "-0.87, -1.4, -1",
        });
    }
    let l = lambda;
    let b = 1.0 - l + l * l;
    Ok(ProjectionConic {
        lambda: l,
        a_yy: -4.0 * l.powi(3) * (l - 2.0),
        a_zz: 4.0 * b * b,
        a_y: -l * l * (4.0 * l * l + 8.0 * l - 8.0),
        a_0: 3.0 * l.powi(3) * (l - 2.0),
    })
}

/// Maximal closed subintervals of the fundamental window (-2pi/3, 2pi] on
/// which [`gamma`] stays at least `inset` away (in the parameter) from every
/// pole. With no poles the whole window is returned in one piece; segments
/// squeezed to length below 1e-9 by colliding poles are dropped.
pub fn branch_segments(lambda: ExtendedParam, inset: f64) -> Vec<(f64, f64)> {
    let lo = -surface::T_MAX;
    let hi = TAU;
    let pole_set = match lambda {
        ExtendedParam::Infinity => Some(poles_inf()),
        ExtendedParam::Finite(l) => poles(l).ok(),
    };
    let Some(ps) = pole_set else {
        return vec![(lo, hi)];
    };
    let mut segments = vec![(lo, hi)];
    for a in ps.as_array() {
        let u = curve_param(a.radians());
        // A pole near one window end also blocks the aliased other end,
        // so each cut is applied together with its period shifts.
        for cut in [u - CURVE_PERIOD, u, u + CURVE_PERIOD] {
            let (block_lo, block_hi) = (cut - inset, cut + inset);
            let mut next = Vec::with_capacity(segments.len() + 1);
            for &(s0, s1) in &segments {
                if block_hi <= s0 || block_lo >= s1 {
                    next.push((s0, s1));
                } else {
                    if block_lo > s0 {
                        next.push((s0, block_lo));
                    }
                    if block_hi < s1 {
                        next.push((block_hi, s1));
                    }
                }
            }
            segments = next;
        }
    }
    segments.retain(|&(a, b)| b - a > 1e-9);
    segments
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{ruling_point, ZBranch, T_MAX};
    use approx::assert_abs_diff_eq;

    fn fin(l: f64) -> ExtendedParam {
        ExtendedParam::Finite(l)
    }

    #[test]
    fn psi_frozen_value() {
        assert_abs_diff_eq!(psi(0.5, 0.0.into()).unwrap(), 2.0 / 3.0, epsilon = 1e-15);
        // Contact sits on the circles for the degenerate ends.
        assert_abs_diff_eq!(psi(0.0, 0.8.into()).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(psi(1.0, 0.8.into()).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn kappa_frozen_point() {
        let p = kappa(0.5, 0.0.into()).unwrap();
        assert_abs_diff_eq!(p.x, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.y, -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(p.z, 3f64.sqrt() / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn curve_lies_on_the_rulings() {
        for &l in &[-0.6, 0.0, 0.3, 0.5, 0.8, 1.0, 1.5] {
            for i in 0..60 {
                let t = -T_MAX + 2.0 * T_MAX * (i as f64 + 0.5) / 60.0;
                let m = psi(l, t.into()).unwrap();
                let on = ruling_point(m, t.into(), ZBranch::Pos).unwrap();
                let k = kappa(l, t.into()).unwrap();
                assert!((on - k).norm() < 1e-12, "lambda = {l}, t = {t}");
            }
        }
    }

    #[test]
    fn gamma_normalizes_and_mirrors() {
        let l = fin(0.4);
        // Period 8pi/3.
        let a = gamma(l, 0.9.into()).unwrap();
        let b = gamma(l, (0.9 + CURVE_PERIOD).into()).unwrap();
        assert!((a.point - b.point).norm() < 1e-12);
        assert_eq!(a.branch, b.branch);
        // Second arc mirrors the first in z.
        let u = 2.8;
        let g2 = gamma(l, u.into()).unwrap();
        assert_eq!(g2.branch, CurveBranch::Gamma2);
        let g1 = gamma(l, (4.0 * PI / 3.0 - u).into()).unwrap();
        assert_eq!(g1.branch, CurveBranch::Gamma1);
        assert_abs_diff_eq!(g2.point.x, g1.point.x, epsilon = 1e-14);
        assert_abs_diff_eq!(g2.point.y, g1.point.y, epsilon = 1e-14);
        assert_abs_diff_eq!(g2.point.z, -g1.point.z, epsilon = 1e-14);
        // The window end 2pi and the window start alias the same point.
        let end = gamma(l, TAU.into()).unwrap();
        let start = gamma(l, (-T_MAX).into()).unwrap();
        assert!((end.point - start.point).norm() < 1e-9);
    }

    #[test]
    fn gamma_closes_across_the_seam() {
        // The z coordinate behaves like sqrt(T_MAX - t) near the seam, so the
        // gap at offset d scales like sqrt(d).
        for &l in &[0.0, 0.3, 1.0, 1.6] {
            let d = 1e-9;
            let before = gamma(fin(l), (T_MAX - d).into()).unwrap();
            let after = gamma(fin(l), (T_MAX + d).into()).unwrap();
            assert!(
                (before.point - after.point).norm() < 1e-3,
                "seam gap at lambda = {l}"
            );
            assert_eq!(before.branch, CurveBranch::Gamma1);
            assert_eq!(after.branch, CurveBranch::Gamma2);
        }
    }

    #[test]
    fn kappa_dot_frozen_values() {
        let v = kappa_dot(0.0, 0.0.into()).unwrap();
        assert_abs_diff_eq!(v.x, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.y, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.z, 0.0, epsilon = 1e-15);

        let w = kappa_dot(0.5, (PI / 2.0).into()).unwrap();
        assert_abs_diff_eq!(w.x, 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(w.y, 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(w.z, -0.25, epsilon = 1e-15);
    }

    #[test]
    fn kappa_dot_matches_finite_differences() {
        let h = 1e-6;
        for &l in &[-0.5, 0.3, 0.8, 1.4] {
            for &t in &[-1.5, -0.4, 0.0, 0.9, 1.8] {
                let v = kappa_dot(l, t.into()).unwrap();
                let p1 = kappa(l, (t + h).into()).unwrap();
                let p0 = kappa(l, (t - h).into()).unwrap();
                let fd = (p1 - p0) * (0.5 / h);
                assert!((v - fd).norm() < 1e-7, "lambda = {l}, t = {t}");
            }
        }
    }

    #[test]
    fn kappa_dot_rejects_the_boundary() {
        // acos(-1/2) rounds to a cosine just past -1/2, which the domain
        // snap maps onto the boundary itself.
        let t = (-0.5f64).acos();
        assert!(matches!(
            kappa_dot(0.4, t.into()),
            Err(Error::Boundary { .. })
        ));
    }

    #[test]
    fn tangent_direction_flips_on_second_arc() {
        let l = 0.45;
        let u = 2.6;
        let line2 = tangent_line(l, u.into()).unwrap();
        let kd = kappa_dot(l, (4.0 * PI / 3.0 - u).into()).unwrap();
        assert_abs_diff_eq!(line2.dir.x, -kd.x, epsilon = 1e-14);
        assert_abs_diff_eq!(line2.dir.y, -kd.y, epsilon = 1e-14);
        assert_abs_diff_eq!(line2.dir.z, kd.z, epsilon = 1e-14);
    }

    #[test]
    fn tangent_line_matches_secants() {
        let l = 0.7;
        for &t in &[-1.1, 0.3, 1.0, 2.2, 3.9] {
            let line = tangent_line(l, t.into()).unwrap();
            let h = 1e-5;
            let a = gamma(fin(l), (t - h).into()).unwrap().point;
            let b = gamma(fin(l), (t + h).into()).unwrap().point;
            let secant = (b - a) * (0.5 / h);
            let cross = secant.cross(line.dir).norm() / line.dir.norm().max(1e-300);
            assert!(cross < 1e-4, "t = {t}: cross {cross}");
            assert!(line.distance_to(a) < 1e-4);
        }
    }

    #[test]
    fn poles_inside_the_closed_range_are_rejected() {
        for &l in &[-0.99, 0.0, 0.5, 1.0, 1.99] {
            assert!(matches!(poles(l), Err(Error::NoPoles { .. })));
        }
    }

    #[test]
    fn pole_positions_for_boundary_and_infinite_members() {
        let p = poles(-1.0).unwrap();
        assert_abs_diff_eq!(p.t1.radians(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.t2.radians(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.t3.radians(), 4.0 * PI / 3.0, epsilon = 1e-12);

        let q = poles(2.0).unwrap();
        assert_abs_diff_eq!(q.t2.radians(), 2.0 * PI / 3.0, epsilon = 1e-12);

        let inf = poles_inf();
        assert_abs_diff_eq!(inf.t2.radians(), PI / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(inf.t3.radians(), 5.0 * PI / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(inf.t4.radians(), 11.0 * PI / 6.0, epsilon = 1e-15);

        // Large finite lambda approaches the infinite pole layout.
        let big = poles(1e9).unwrap();
        assert_abs_diff_eq!(big.t2.radians(), PI / 2.0, epsilon = 1e-8);
    }

    #[test]
    fn kappa_near_poles_blows_up() {
        let l = 4.0;
        let p = poles(l).unwrap();
        let t = p.t2.radians() + 1e-7;
        let v = kappa(l, t.into()).unwrap();
        assert!(v.norm_inf() > 1e5);
    }

    #[test]
    fn asymptote_frozen_line_for_lambda_four() {
        let line = asymptote(fin(4.0), 1).unwrap();
        let p0 = Point3::new(-13.0 * 15f64.sqrt() / 40.0, -11.0 / 8.0, 0.0);
        let p1 = Point3::new(0.0, 1.0 / 30.0, 13.0 * 2f64.sqrt() / 15.0);
        assert!(line.distance_to(p0) < 1e-12);
        assert!(line.distance_to(p1) < 1e-12);
        // The four lines pair up under the two mirror symmetries.
        let a2 = asymptote(fin(4.0), 2).unwrap();
        assert!(a2.distance_to(p0.mirror_x()) < 1e-12);
        let a4 = asymptote(fin(4.0), 4).unwrap();
        assert!(a4.distance_to(p1.mirror_z()) < 1e-12);
    }

    #[test]
    fn asymptote_rejects_bounded_and_boundary_parameters() {
        for &l in &[-1.0, -0.3, 0.5, 1.0, 2.0] {
            assert!(asymptote(fin(l), 1).is_err(), "lambda = {l}");
        }
        assert!(asymptote(fin(4.0), 0).is_err());
        assert!(asymptote(fin(4.0), 5).is_err());
        // The infinite member delegates to the ruled-surface asymptotes.
        let a = asymptote(ExtendedParam::Infinity, 1).unwrap();
        assert!(a.distance_to(Point3::new(-1.0, -0.5, 0.0)) < 1e-12);
        assert!(a.distance_to(Point3::new(0.0, 0.5, 1.0)) < 1e-12);
    }

    #[test]
    fn axis_points_frozen_values() {
        let at0 = axis_points(fin(0.0));
        assert_eq!(at0.x1.unwrap(), Point3::new(0.0, -1.5, 0.0));
        let z0 = at0.z1.unwrap();
        assert_abs_diff_eq!(z0.x, 3f64.sqrt() / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(z0.y, 0.0, epsilon = 1e-15);

        let at2 = axis_points(fin(2.0));
        let x = at2.x1.unwrap();
        assert_abs_diff_eq!(x.y, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(x.z, 2.0 * 3f64.sqrt() / 3.0, epsilon = 1e-15);
        assert!(at2.z1.is_none() && at2.z2.is_none());

        let atm1 = axis_points(fin(-1.0));
        assert!(atm1.x1.is_none());
        let zm1 = atm1.z1.unwrap();
        assert_abs_diff_eq!(zm1.x, 2.0 / 3f64.sqrt(), epsilon = 1e-14);
        assert_abs_diff_eq!(zm1.y, -0.5, epsilon = 1e-15);

        let inf = axis_points(ExtendedParam::Infinity);
        assert_eq!(inf.x1.unwrap(), Point3::new(0.0, 1.5, 3f64.sqrt()));
        assert_eq!(inf.z2.unwrap(), Point3::new(-(3f64.sqrt()), -1.5, 0.0));
    }

    #[test]
    fn axis_points_sit_on_the_touching_curve() {
        use crate::pencil::{f_lambda, f_lambda_d1};
        for &l in &[-0.6, 0.3, 0.9, 1.7, 3.0] {
            let ap = axis_points(fin(l));
            for p in [ap.x1, ap.x2, ap.z1, ap.z2].into_iter().flatten() {
                assert!(
                    f_lambda(fin(l), p).unwrap().abs() < 1e-12,
                    "f residual at lambda = {l}"
                );
                assert!(
                    f_lambda_d1(l, p).unwrap().abs() < 1e-11,
                    "f' residual at lambda = {l}"
                );
            }
        }
    }

    #[test]
    fn star_curve_projections_vanish() {
        for i in 0..40 {
            let t = -1.45 + 2.9 * i as f64 / 39.0;
            let p = kappa_star(t.into()).unwrap();
            let r = projection_residuals_inf(p);
            assert!(r.max_abs() < 1e-10, "t = {t}: {r:?}");
        }
    }

    #[test]
    fn minus_one_projections_vanish() {
        for i in 0..40 {
            let u = 0.35 + (4.0 * PI / 3.0 - 0.7) * i as f64 / 39.0;
            let p = gamma(fin(-1.0), u.into()).unwrap().point;
            let r = projection_residuals_minus_one(p);
            assert!(r.max_abs() < 1e-8, "u = {u}: {r:?}");
        }
    }

    #[test]
    fn projection_conic_centers_are_exact_rationals() {
        let c87 = projection_conic_case1(-0.87).unwrap();
        assert_abs_diff_eq!(c87.center().0, 29831.0 / 49938.0, epsilon = 1e-12);
        let c14 = projection_conic_case1(-1.4).unwrap();
        assert_abs_diff_eq!(c14.center().0, 71.0 / 238.0, epsilon = 1e-12);
        let cm1 = projection_conic_case1(-1.0).unwrap();
        assert_abs_diff_eq!(cm1.center().0, 0.5, epsilon = 1e-15);
        assert!(matches!(
            projection_conic_case1(0.4),
            Err(Error::UnsupportedLambda { .. })
        ));
    }

    #[test]
    fn projection_conic_contains_the_projected_curve() {
        for &l in &[-0.87, -1.4] {
            let conic = projection_conic_case1(l).unwrap();
            for i in 0..30 {
                let t = -1.2 + 2.4 * i as f64 / 29.0;
                let p = kappa(l, t.into()).unwrap();
                let r = conic.residual(p.y, p.z);
                assert!(r.abs() < 1e-9, "lambda = {l}, t = {t}: {r}");
            }
        }
    }

    #[test]
    fn branch_segments_avoid_poles() {
        let segs = branch_segments(fin(4.0), 0.05);
        assert_eq!(segs.len(), 5);
        let ps = poles(4.0).unwrap();
        for &(a, b) in &segs {
            assert!(a < b);
            for pole in ps.as_array() {
                let t = curve_param(pole.radians());
                let dist = if t < a {
                    a - t
                } else if t > b {
                    t - b
                } else {
                    0.0
                };
                assert!(dist > 0.049, "pole {t} too close to [{a}, {b}]");
            }
        }
        // Bounded members keep the whole window.
        let whole = branch_segments(fin(0.5), 0.05);
        assert_eq!(whole.len(), 1);
        // Collapsed double poles drop the empty middle segments.
        let m1 = branch_segments(fin(-1.0), 0.02);
        assert_eq!(m1.len(), 3);
    }

    #[test]
    fn curve_param_is_periodic_and_in_window() {
        for i in -12..=12 {
            let t = 0.37 + i as f64 * 1.91;
            let u = curve_param(t);
            assert!(u > -T_MAX - 1e-12 && u <= TAU + 1e-12);
            let v = curve_param(t + CURVE_PERIOD);
            assert_abs_diff_eq!(u, v, epsilon = 1e-9);
        }
        assert_abs_diff_eq!(curve_param(TAU), TAU, epsilon = 0.0);
        assert_abs_diff_eq!(curve_param(-T_MAX), TAU, epsilon = 1e-12);
    }
}
