//! The edge of regression of the ruled surface.
//!
//! As the ruling parameter t varies, consecutive rulings intersect in the
//! limit along a curve R, the edge of regression; every ruling is tangent
//! to it. On the ruling at t the tangency sits at the affine coordinate
//! m = (2 + sec t)/3, giving the curve point
//!
//! ```text
//! g_1 = (sin t - tan t) / 3
//! g_2 = (2 + 3 cos t - 3 cos^2 t - 2 cos^3 t) / (6 (1 + cos t) cos t)
//! g_3 = +- (1 + 2 cos t)^(3/2) / (3 (1 + cos t) cos t)
//! ```
//!
//! with poles at t = -+pi/2 and cusps at t = 0 and the domain ends. R can
//! equally be indexed by the pencil parameter: the member Q_lambda has
//! second-order contact with the surface at the four points `r(lambda, .)`,
//! one per symmetry quadrant, where lambda and t are linked by
//! `lambda = phi(t) = (1 + 2 cos t) / ((2 + cos t) cos t)`. The curve has
//! four straight asymptotes, which are also the large-lambda limits of the
//! touching-curve asymptotes.

use crate::error::{Error, Result};
use crate::geom::{Line3, Point3};
use crate::surface::{self, Angle, ZBranch};

/// Sign pair selecting one of the four symmetry quadrants (x sign, z sign).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadrantSigns {
    sx: i8,
    sz: i8,
}

impl QuadrantSigns {
    pub const PP: Self = Self { sx: 1, sz: 1 };
    pub const MP: Self = Self { sx: -1, sz: 1 };
    pub const MM: Self = Self { sx: -1, sz: -1 };
    pub const PM: Self = Self { sx: 1, sz: -1 };

    pub fn new(sx: i8, sz: i8) -> Result<Self> {
        if sx.abs() != 1 {
            return Err(Error::Domain {
                op: "QuadrantSigns",
                requirement: "sx in {-1, +1}",
                got: sx as f64,
            });
        }
        if sz.abs() != 1 {
            return Err(Error::Domain {
                op: "QuadrantSigns",
                requirement: "sz in {-1, +1}",
                got: sz as f64,
            });
        }
        Ok(Self { sx, sz })
    }

    pub fn sx(self) -> f64 {
        self.sx as f64
    }

    pub fn sz(self) -> f64 {
        self.sz as f64
    }
}

/// The pencil parameter of the quadric osculating the surface along the
/// ruling at t. Defined on the ruling interval except the poles -+pi/2.
pub fn phi(t: Angle) -> Result<f64> {
    let (w, c, q) = surface::ruling_domain("phi", t)?;
    if c == 0.0 {
        return Err(Error::Pole {
            op: "phi",
            what: "cos t",
            at: w,
        });
    }
    crate::numeric::finite_or_pole("phi", "cos t", w, q / ((2.0 + c) * c))
}

/// sgn(lambda) sqrt(1 - lambda + lambda^2), the signed root that linearizes
/// the inverse of [`phi`].
pub fn rho(lambda: f64) -> f64 {
    lambda.signum() * (1.0 - lambda + lambda * lambda).sqrt()
}

/// The two preimages of lambda under [`phi`]: `ZBranch::Neg` picks
/// -arccos((1 - lambda + rho)/lambda) in (-2pi/3, 0), `ZBranch::Pos` the
/// mirrored value in (0, 2pi/3). Requires lambda outside [0, 1], the range
/// phi never attains away from its boundary.
pub fn phi_inverse(lambda: f64, side: ZBranch) -> Result<f64> {
    if (0.0..=1.0).contains(&lambda) {
        return Err(Error::Domain {
            op: "phi_inverse",
            requirement: "lambda outside [0, 1]",
            got: lambda,
        });
    }
    let arg = (1.0 - lambda + rho(lambda)) / lambda;
    let t = arg.clamp(-1.0, 1.0).acos();
    Ok(match side {
        ZBranch::Neg => -t,
        ZBranch::Pos => t,
    })
}

/// Point of the edge of regression over the ruling at t, on the chosen
/// ruling family. Poles at t = -+pi/2.
pub fn g(t: Angle, zb: ZBranch) -> Result<Point3> {
    let (w, c, q) = surface::ruling_domain("g", t)?;
    if c == 0.0 {
        return Err(Error::Pole {
            op: "g",
            what: "cos t",
            at: w,
        });
    }
    let s = w.sin();
    let denom = 3.0 * (1.0 + c) * c;
    let p = Point3::new(
        (s - s / c) / 3.0,
        (2.0 + 3.0 * c - 3.0 * c * c - 2.0 * c * c * c) / (2.0 * denom),
        zb.sign() * q.powf(1.5) / denom,
    );
    if !p.is_finite() {
        return Err(Error::Pole {
            op: "g",
            what: "cos t",
            at: w,
        });
    }
    Ok(p)
}

/// Point of the edge of regression indexed by the pencil parameter, in the
/// quadrant chosen by `q`. Requires lambda outside [0, 1].
///
/// `r(lambda, PP)` equals `kappa(lambda, phi_inverse(lambda, Neg))`; the
/// other quadrants are its mirror images.
pub fn r(lambda: f64, q: QuadrantSigns) -> Result<Point3> {
    if (0.0..=1.0).contains(&lambda) {
        return Err(Error::Domain {
            op: "r",
            requirement: "lambda outside [0, 1]",
            got: lambda,
        });
    }
    let rh = rho(lambda);
    let den = 2.0 - lambda + rh;
    let lm1 = lambda - 1.0;
    let rad1 = lm1 * lm1 * lm1 * (2.0 - lambda + 2.0 * rh);
    let r1 = rad1.max(0.0).sqrt() / (lambda * den);
    let r2 = (lambda * lambda + 2.0 * lambda - 2.0 + (lambda - 2.0) * rh) / (2.0 * lambda * den);
    let rad3 = lambda * (2.0 - lambda + 2.0 * rh);
    let r3 = lambda.signum() * rad3.max(0.0).sqrt() / den;
    Ok(Point3::new(q.sx() * r1, r2, q.sz() * r3))
}

/// The k-th straight asymptote of the edge of regression, k in 1..=4.
///
/// Parametrized so that `point_at(m)` reproduces the affine forms
/// `(+-(m - 1), m - 1/2, +-m)`; the four lines are images of each other
/// under the x and z mirrors.
pub fn regression_asymptote(k: u8) -> Result<Line3> {
    match k {
        1 => Ok(Line3::new(
            Point3::new(-1.0, -0.5, 0.0),
            crate::geom::Vec3::new(1.0, 1.0, 1.0),
        )),
        2 => Ok(Line3::new(
            Point3::new(1.0, -0.5, 0.0),
            crate::geom::Vec3::new(-1.0, 1.0, 1.0),
        )),
        3 => Ok(Line3::new(
            Point3::new(1.0, -0.5, 0.0),
            crate::geom::Vec3::new(-1.0, 1.0, -1.0),
        )),
        4 => Ok(Line3::new(
            Point3::new(-1.0, -0.5, 0.0),
            crate::geom::Vec3::new(1.0, 1.0, -1.0),
        )),
        _ => Err(Error::Domain {
            op: "regression_asymptote",
            requirement: "asymptote index k in 1..=4",
            got: k as f64,
        }),
    }
}

/// Pairwise intersections of consecutive regression asymptotes, in the
/// order S_12, S_23, S_34, S_41. Two of them are the top and bottom points
/// of the circle k_B; the other two lie on k_A.
pub fn asymptote_intersections() -> [Point3; 4] {
    [
        Point3::new(0.0, 0.5, 1.0),
        Point3::new(1.0, -0.5, 0.0),
        Point3::new(0.0, 0.5, -1.0),
        Point3::new(-1.0, -0.5, 0.0),
    ]
}

/// The four cusps of the edge of regression: two on the x axis (reached at
/// the ruling-domain ends) and two on the z axis (reached at t = 0 on the
/// two families).
pub fn cusps() -> [Point3; 4] {
    let s3h = 3f64.sqrt() / 2.0;
    [
        Point3::new(s3h, 0.0, 0.0),
        Point3::new(-s3h, 0.0, 0.0),
        Point3::new(0.0, 0.0, s3h),
        Point3::new(0.0, 0.0, -s3h),
    ]
}
