//! The two base circles and the ruled parametrization of the extended oloid.
//!
//! The surface is spanned by straight lines joining two interlocked unit
//! circles: `k_A` lies in the plane z = 0 with center (0, -1/2, 0) and `k_B`
//! lies in the plane x = 0 with center (0, 1/2, 0), so each circle passes
//! through the center of the other. With the common parameter t,
//!
//! ```text
//! A(t) = (sin t, -1/2 - cos t, 0)
//! B(t) = (0, 1/2 - cos t / (1 + cos t), +- sqrt(1 + 2 cos t) / (1 + cos t))
//! ```
//!
//! and the ruling at t is the line through A(t) and B(t). B(t) is real only
//! while 1 + 2 cos t >= 0, i.e. for t in [-2pi/3, 2pi/3] modulo full turns;
//! the sign choice in its z component selects one of the two mirror families
//! of rulings (`ZBranch`). The convex hull of the two circles (the classical
//! oloid) is the part swept for t in that interval; its surface area equals
//! 4 pi, which `oloid_area` reproduces by quadrature.

use crate::error::{Error, Result};
use crate::geom::{Line3, Point3, Vec3};
use crate::numeric;

/// Half-width of the admissible ruling interval: rulings exist for
/// t in [-T_MAX, T_MAX] (mod 2 pi).
pub const T_MAX: f64 = std::f64::consts::TAU / 3.0;

/// Inputs this close to the domain boundary 1 + 2 cos t = 0 are treated as
/// lying exactly on it, so that values mapped through periodic reductions
/// never get rejected by a one-ulp overshoot.
const BOUNDARY_SNAP: f64 = 1e-9;

/// A ruling parameter in radians.
///
/// Arbitrary reals are accepted; evaluation first wraps the value into
/// (-pi, pi] and then applies the domain check, so `t` and `t + 2 pi` always
/// behave identically. The raw value is preserved for display.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angle {
    radians: f64,
}

impl Angle {
    pub fn new(radians: f64) -> Self {
        Self { radians }
    }

    /// The raw value as given.
    pub fn radians(self) -> f64 {
        self.radians
    }

    /// The value wrapped into (-pi, pi].
    pub fn wrapped(self) -> f64 {
        let w = self.radians.rem_euclid(std::f64::consts::TAU);
        if w > std::f64::consts::PI {
            w - std::f64::consts::TAU
        } else {
            w
        }
    }
}

impl From<f64> for Angle {
    fn from(radians: f64) -> Self {
        Self::new(radians)
    }
}

/// Selects one of the two mirror-image ruling families (z -> -z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZBranch {
    Pos,
    Neg,
}

impl ZBranch {
    pub fn sign(self) -> f64 {
        match self {
            ZBranch::Pos => 1.0,
            ZBranch::Neg => -1.0,
        }
    }

    pub fn flipped(self) -> ZBranch {
        match self {
            ZBranch::Pos => ZBranch::Neg,
            ZBranch::Neg => ZBranch::Pos,
        }
    }
}

/// Wrap `t`, check the ruling domain, and hand back the wrapped angle with
/// its cosine and the (snapped) radicand q = 1 + 2 cos t.
pub(crate) fn ruling_domain(op: &'static str, t: Angle) -> Result<(f64, f64, f64)> {
    let w = t.wrapped();
    let c = w.cos();
    let q = 1.0 + 2.0 * c;
    if q < -BOUNDARY_SNAP {
        return Err(Error::Domain {
            op,
            requirement: "1 + 2 cos t >= 0 (t in [-2pi/3, 2pi/3] mod 2pi)",
            got: w,
        });
    }
    Ok((w, c, q.max(0.0)))
}

/// Point of the circle `k_A` at parameter t. Defined for every t.
pub fn circle_point_a(t: Angle) -> Point3 {
    let w = t.wrapped();
    Point3::new(w.sin(), -0.5 - w.cos(), 0.0)
}

/// Point of the circle `k_B` joined to `A(t)` by a ruling.
///
/// Fails with a domain error when 1 + 2 cos t < 0. The denominator
/// 1 + cos t stays >= 1/2 on the admissible interval, so the nominal pole of
/// the formula at cos t = -1 is unreachable once the domain check passes.
pub fn circle_point_b(t: Angle, zb: ZBranch) -> Result<Point3> {
    let (w, c, q) = ruling_domain("circle_point_b", t)?;
    let d = 1.0 + c;
    let p = Point3::new(0.0, 0.5 - c / d, zb.sign() * q.sqrt() / d);
    if !p.is_finite() {
        return Err(Error::Pole {
            op: "circle_point_b",
            what: "1 + cos t",
            at: w,
        });
    }
    Ok(p)
}

/// Point on the ruling at parameter t, at affine coordinate m along the
/// segment: m = 0 gives `A(t)`, m = 1 gives `B(t)`.
pub fn ruling_point(m: f64, t: Angle, zb: ZBranch) -> Result<Point3> {
    let a = circle_point_a(t);
    let b = circle_point_b(t, zb)?;
    Ok(a + (b - a) * m)
}

/// The full ruling line at parameter t, oriented from `A(t)` to `B(t)`.
///
/// `generating_line(t, zb).point_at(m)` coincides with
/// `ruling_point(m, t, zb)` bit for bit.
pub fn generating_line(t: Angle, zb: ZBranch) -> Result<Line3> {
    let a = circle_point_a(t);
    let b = circle_point_b(t, zb)?;
    Ok(Line3::through(a, b))
}

/// Partial derivatives (d/dm, d/dt) of the ruled chart at (m, t).
///
/// The t-derivative of the `B` component degenerates on the boundary
/// 1 + 2 cos t = 0, which is reported as a boundary error.
pub fn ruling_partials(m: f64, t: Angle, zb: ZBranch) -> Result<(Vec3, Vec3)> {
    let (w, c, q) = ruling_domain("ruling_partials", t)?;
    if q == 0.0 {
        return Err(Error::Boundary {
            op: "ruling_partials",
            t: w,
        });
    }
    let s = w.sin();
    let d = 1.0 + c;
    let root = q.sqrt();

    let a = circle_point_a(t);
    let b = Point3::new(0.0, 0.5 - c / d, zb.sign() * root / d);
    let dm = b - a;

    let da = Vec3::new(c, s, 0.0);
    let db = Vec3::new(
        0.0,
        s / (d * d),
        zb.sign() * s * c / (d * d * root),
    );
    let dt = da * (1.0 - m) + db * m;
    Ok((dm, dt))
}

/// Surface area of the oloid, i.e. of the convex hull of the two circles,
/// computed by Gauss-Legendre quadrature of the ruled area element.
///
/// The integrand has a square-root singularity in t at the domain boundary;
/// the tail is regularized by substituting u^2 = 1 + 2 cos t before applying
/// the rule, after which both pieces are smooth. The exact value is 4 pi.
pub fn oloid_area() -> Result<f64> {
    let rule = numeric::gauss_legendre(32);
    let strip = |t: f64| -> Result<f64> {
        let speed = |m: f64| -> Result<f64> {
            let (dm, dt) = ruling_partials(m, t.into(), ZBranch::Pos)?;
            Ok(dm.cross(dt).norm())
        };
        numeric::gauss_integrate(&rule, &speed, 0.0, 1.0)
    };

    // Smooth part: t in [0, pi/3].
    let head = numeric::gauss_integrate(&rule, &strip, 0.0, std::f64::consts::FRAC_PI_3)?;

    // Tail part: t in [pi/3, 2pi/3] with u = sqrt(1 + 2 cos t), so that
    // dt = 2u du / (2 sin t) and u runs from sqrt(2) down to 0.
    let tail_f = |u: f64| -> Result<f64> {
        let c = 0.5 * (u * u - 1.0);
        let t = c.acos();
        Ok(strip(t)? * u / t.sin())
    };
    let tail = numeric::gauss_integrate(&rule, &tail_f, 0.0, std::f64::consts::SQRT_2)?;

    // The quarter for t in [0, 2pi/3] with z > 0 is mirrored four ways.
    Ok(4.0 * (head + tail))
}
