//! The pencil of quadrics inscribed in the extended oloid.
//!
//! For a parameter lambda the member Q_lambda has the affine equation
//!
//! ```text
//! f_lambda(x, y, z) = x^2/(1 - lambda) + (y - lambda + 1/2)^2/(1 - lambda + lambda^2)
//!                     + z^2/lambda - 1 = 0,
//! ```
//!
//! which touches the surface along a closed curve for every regular member.
//! The parameter line is closed up with a single point at infinity
//! ([`ExtendedParam::Infinity`]): the limits lambda -> +inf and -inf give the
//! same hyperbolic paraboloid x^2 - z^2 + 2y = 0. At lambda = 0 and 1 the
//! member collapses onto the base circles, and two further degenerate
//! members are complex conics in the planes y = +-(sqrt(3)/2) i; all four
//! carry the base locus shared by every member of the pencil.
//!
//! The module also exposes the polarity of the pencil: the common self-polar
//! tetrahedron, polar planes, tangent planes, and the dual pencil spanned by
//! the tangential equations of the two base circles.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::geom::Point3;

/// Complex scalar used for projective computations.
pub type C64 = Complex<f64>;

/// A pencil parameter on the projectively closed lambda line.
///
/// Both signed infinities collapse to the single member
/// [`ExtendedParam::Infinity`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedParam {
    Finite(f64),
    Infinity,
}

impl ExtendedParam {
    pub fn finite(self) -> Option<f64> {
        match self {
            ExtendedParam::Finite(v) => Some(v),
            ExtendedParam::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtendedParam::Infinity)
    }
}

impl From<f64> for ExtendedParam {
    /// Finite values map to finite members; both float infinities map to
    /// the single infinite member. NaN is rejected by `FromStr`, not here.
    fn from(v: f64) -> Self {
        if v.is_infinite() {
            ExtendedParam::Infinity
        } else {
            ExtendedParam::Finite(v)
        }
    }
}

impl std::fmt::Display for ExtendedParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtendedParam::Finite(v) => write!(f, "{v}"),
            ExtendedParam::Infinity => write!(f, "inf"),
        }
    }
}

/// Error from parsing an [`ExtendedParam`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid pencil parameter {input:?}: expected a real number or \"inf\"")]
pub struct ParamParseError {
    pub input: String,
}

impl std::str::FromStr for ExtendedParam {
    type Err = ParamParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let trimmed = s.trim();
        let lower = trimmed.to_ascii_lowercase();
        if matches!(lower.as_str(), "inf" | "+inf" | "-inf" | "infinity" | "+infinity" | "-infinity") {
            return Ok(ExtendedParam::Infinity);
        }
        match trimmed.parse::<f64>() {
            Ok(v) if v.is_nan() => Err(ParamParseError { input: s.to_owned() }),
            Ok(v) => Ok(ExtendedParam::from(v)),
            Err(_) => Err(ParamParseError { input: s.to_owned() }),
        }
    }
}

/// Affine type of a pencil member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadricClass {
    /// The single member at lambda = infinity.
    HyperbolicParaboloid,
    /// lambda < 0; the gorge ellipse lies in the plane z = 0.
    HyperboloidOneSheetXy,
    /// lambda = 0; the member collapses onto the circle k_A.
    CircleKA,
    /// 0 < lambda < 1.
    Ellipsoid,
    /// lambda = 1; the member collapses onto the circle k_B.
    CircleKB,
    /// lambda > 1; the gorge ellipse lies in the plane x = 0.
    HyperboloidOneSheetYz,
}

/// Affine classification of the member Q_lambda.
pub fn classify(lambda: ExtendedParam) -> QuadricClass {
    match lambda {
        ExtendedParam::Infinity => QuadricClass::HyperbolicParaboloid,
        ExtendedParam::Finite(l) => {
            if l < 0.0 {
                QuadricClass::HyperboloidOneSheetXy
            } else if l == 0.0 {
                QuadricClass::CircleKA
            } else if l < 1.0 {
                QuadricClass::Ellipsoid
            } else if l == 1.0 {
                QuadricClass::CircleKB
            } else {
                QuadricClass::HyperboloidOneSheetYz
            }
        }
    }
}

fn require_regular(op: &'static str, lambda: f64) -> Result<()> {
    if lambda == 0.0 || lambda == 1.0 {
        Err(Error::Degenerate { op, lambda })
    } else {
        Ok(())
    }
}

/// Value of the pencil equation at `p`.
///
/// For the infinite member this evaluates x^2 - z^2 + 2y; finite degenerate
/// members (lambda = 0, 1) are rejected since their point equation collapses.
pub fn f_lambda(lambda: ExtendedParam, p: Point3) -> Result<f64> {
    match lambda {
        ExtendedParam::Infinity => Ok(p.x * p.x - p.z * p.z + 2.0 * p.y),
        ExtendedParam::Finite(l) => {
            require_regular("f_lambda", l)?;
            let b = 1.0 - l + l * l;
            let w = p.y - l + 0.5;
            Ok(p.x * p.x / (1.0 - l) + w * w / b + p.z * p.z / l - 1.0)
        }
    }
}

/// First derivative of `f_lambda` with respect to lambda at fixed `p`.
pub fn f_lambda_d1(lambda: f64, p: Point3) -> Result<f64> {
    require_regular("f_lambda_d1", lambda)?;
    let b = 1.0 - lambda + lambda * lambda;
    let w = p.y - lambda + 0.5;
    let om = 1.0 - lambda;
    Ok(p.x * p.x / (om * om) - 2.0 * w / b - (2.0 * lambda - 1.0) * w * w / (b * b)
        - p.z * p.z / (lambda * lambda))
}

/// Second derivative of `f_lambda` with respect to lambda at fixed `p`.
pub fn f_lambda_d2(lambda: f64, p: Point3) -> Result<f64> {
    require_regular("f_lambda_d2", lambda)?;
    let b = 1.0 - lambda + lambda * lambda;
    let w = p.y - lambda + 0.5;
    let om = 1.0 - lambda;
    let tl = 2.0 * lambda - 1.0;
    Ok(2.0 * p.x * p.x / (om * om * om)
        + 2.0 * p.z * p.z / (lambda * lambda * lambda)
        + 2.0 / b
        + 4.0 * tl * w / (b * b)
        + 6.0 * lambda * (lambda - 1.0) * w * w / (b * b * b))
}

/// A homogeneous element of complex projective 3-space, used both for
/// points [x0 : x1 : x2 : x3] and for planes [u0 : u1 : u2 : u3]. Elements
/// are defined up to a nonzero complex scale; [`HomElemC::projective_distance`]
/// compares two of them scale-free.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomElemC {
    pub coords: [C64; 4],
}

impl HomElemC {
    pub fn new(coords: [C64; 4]) -> Self {
        Self { coords }
    }

    pub fn from_real(r: [f64; 4]) -> Self {
        Self::new([
            C64::new(r[0], 0.0),
            C64::new(r[1], 0.0),
            C64::new(r[2], 0.0),
            C64::new(r[3], 0.0),
        ])
    }

    /// Homogeneous coordinates [1 : x : y : z] of an affine point.
    pub fn from_point(p: Point3) -> Self {
        Self::from_real([1.0, p.x, p.y, p.z])
    }

    pub fn is_null(&self) -> bool {
        self.coords.iter().all(|c| c.norm_sqr() == 0.0)
    }

    /// Index of the coordinate with the largest modulus (first on ties).
    fn pivot(&self) -> usize {
        let mut best = 0;
        for i in 1..4 {
            if self.coords[i].norm_sqr() > self.coords[best].norm_sqr() {
                best = i;
            }
        }
        best
    }

    /// Scale so that the coordinate of largest modulus becomes exactly 1.
    /// Dividing by the pivot coordinate (not its modulus) also removes the
    /// phase, so proportional elements normalize to identical tuples.
    pub fn normalized(&self) -> Self {
        let pivot = self.coords[self.pivot()];
        if pivot.norm_sqr() == 0.0 {
            return *self;
        }
        Self::new([
            self.coords[0] / pivot,
            self.coords[1] / pivot,
            self.coords[2] / pivot,
            self.coords[3] / pivot,
        ])
    }

    /// The bilinear pairing sum x_i u_i; a point lies on a plane iff this
    /// vanishes.
    pub fn incidence(&self, other: &HomElemC) -> C64 {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Largest coordinate gap between the two normalized representatives;
    /// zero exactly when the elements coincide projectively.
    pub fn projective_distance(&self, other: &HomElemC) -> f64 {
        match (self.is_null(), other.is_null()) {
            (true, true) => return 0.0,
            (true, false) | (false, true) => return f64::INFINITY,
            _ => {}
        }
        let a = self.normalized();
        let b = other.normalized();
        a.coords
            .iter()
            .zip(b.coords.iter())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }
}

/// The four degenerate members of the pencil. Each one is a conic carried by
/// a plane: the two base circles and a pair of conjugate complex ellipses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegenerateConic {
    /// The circle k_A in the plane z = 0 (lambda = 0).
    KA,
    /// The circle k_B in the plane x = 0 (lambda = 1).
    KB,
    /// The complex conic in the plane y = (sqrt(3)/2) i.
    L1,
    /// Its conjugate in the plane y = -(sqrt(3)/2) i.
    L2,
}

/// Residual of a point against a degenerate conic, split into the quadric
/// part and the carrying-plane part. The point lies on the conic iff both
/// vanish. The input is normalized first, so the residual is scale-free.
#[derive(Debug, Clone, Copy)]
pub struct ConicResidual {
    pub surface: C64,
    pub plane: C64,
}

impl ConicResidual {
    pub fn max_modulus(&self) -> f64 {
        self.surface.norm().max(self.plane.norm())
    }
}

/// Evaluate a homogeneous point against one of the degenerate members.
pub fn degenerate_conic_residual(which: DegenerateConic, p: &HomElemC) -> ConicResidual {
    let n = p.normalized();
    let [x0, x1, x2, x3] = n.coords;
    let half = C64::new(0.5, 0.0);
    let ai = C64::new(0.0, 3f64.sqrt() / 2.0);
    match which {
        DegenerateConic::KA => ConicResidual {
            surface: 3.0 * x0 * x0 - 4.0 * x0 * x2 - 4.0 * x1 * x1 - 4.0 * x2 * x2,
            plane: x3,
        },
        DegenerateConic::KB => ConicResidual {
            surface: 3.0 * x0 * x0 + 4.0 * x0 * x2 - 4.0 * x2 * x2 - 4.0 * x3 * x3,
            plane: x1,
        },
        DegenerateConic::L1 => ConicResidual {
            surface: (-half + ai) * x1 * x1 + (-half - ai) * x3 * x3 - x0 * x0,
            plane: x2 - ai * x0,
        },
        DegenerateConic::L2 => ConicResidual {
            surface: (-half - ai) * x1 * x1 + (-half + ai) * x3 * x3 - x0 * x0,
            plane: x2 + ai * x0,
        },
    }
}

/// The two degenerate members of the dual (tangential) pencil: the conic of
/// planes tangent to one of the base circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualCylinder {
    A,
    B,
}

fn dual_form(which: DualCylinder, u: &[C64; 4]) -> C64 {
    let [u0, u1, u2, u3] = *u;
    match which {
        // A plane [u0:u1:u2:u3] touches k_A iff (u0 - u2/2)^2 = u1^2 + u2^2,
        // scaled by 4; the form is independent of u3.
        DualCylinder::A => 4.0 * u0 * u0 - 4.0 * u0 * u2 - 4.0 * u1 * u1 - 3.0 * u2 * u2,
        DualCylinder::B => 4.0 * u0 * u0 + 4.0 * u0 * u2 - 3.0 * u2 * u2 - 4.0 * u3 * u3,
    }
}

/// Tangential equation of one base circle, evaluated on a plane. Vanishes
/// exactly on the planes tangent to that circle. The plane is normalized
/// first, so the residual is scale-free.
pub fn dual_cylinder_residual(which: DualCylinder, u: &HomElemC) -> C64 {
    dual_form(which, &u.normalized().coords)
}

/// The dual pencil combination (1 - lambda) F_A + lambda F_B, which vanishes
/// on every tangent plane of Q_lambda; the infinite member evaluates
/// F_B - F_A. The plane is normalized first.
pub fn tangential_pencil_residual(lambda: ExtendedParam, u: &HomElemC) -> C64 {
    let n = u.normalized().coords;
    let fa = dual_form(DualCylinder::A, &n);
    let fb = dual_form(DualCylinder::B, &n);
    match lambda {
        ExtendedParam::Finite(l) => (1.0 - l) * fa + l * fb,
        ExtendedParam::Infinity => fb - fa,
    }
}

/// The tetrahedron that is self-polar with respect to every regular member
/// of the pencil. `vertices[i]` is opposite `faces[i]`: each polarity maps
/// the vertex onto that face, and the vertex is incident with the other
/// three faces. Two vertices are real points at infinity (of the x and z
/// axes); the other two, and two of the faces, are complex conjugates.
#[derive(Debug, Clone)]
pub struct Tetrahedron {
    pub vertices: [HomElemC; 4],
    pub faces: [HomElemC; 4],
}

impl Tetrahedron {
    /// The face opposite `vertices[vertex]`.
    pub fn opposite_face(&self, vertex: usize) -> &HomElemC {
        &self.faces[vertex]
    }
}

/// The common self-polar tetrahedron of the pencil.
pub fn self_polar_tetrahedron() -> Tetrahedron {
    let ai = C64::new(0.0, 3f64.sqrt() / 2.0);
    let zero = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let x_inf = HomElemC::new([zero, one, zero, zero]);
    let z_inf = HomElemC::new([zero, zero, zero, one]);
    let p = HomElemC::new([one, zero, ai, zero]);
    let q = HomElemC::new([one, zero, -ai, zero]);

    // Planes: x = 0, z = 0, and the conjugate pair y = -+(sqrt(3)/2) i.
    let plane_x = HomElemC::new([zero, one, zero, zero]);
    let plane_z = HomElemC::new([zero, zero, zero, one]);
    let plane_i2 = HomElemC::new([ai, zero, one, zero]);
    let plane_i1 = HomElemC::new([-ai, zero, one, zero]);

    Tetrahedron {
        vertices: [x_inf, z_inf, p, q],
        faces: [plane_x, plane_z, plane_i2, plane_i1],
    }
}

/// Polar plane of a homogeneous point with respect to Q_lambda.
pub fn polar_plane(lambda: f64, point: &HomElemC) -> Result<HomElemC> {
    require_regular("polar_plane", lambda)?;
    let b = 1.0 - lambda + lambda * lambda;
    let w0 = 0.5 - lambda;
    let [x0, x1, x2, x3] = point.coords;
    // Symmetric matrix of the homogenized pencil equation.
    let u0 = (w0 * w0 / b - 1.0) * x0 + (w0 / b) * x2;
    let u1 = x1 / (1.0 - lambda);
    let u2 = (w0 / b) * x0 + x2 / b;
    let u3 = x3 / lambda;
    Ok(HomElemC::new([u0, u1, u2, u3]))
}

/// Tangent plane of Q_lambda at a point `p` assumed to lie on the quadric,
/// as homogeneous plane coordinates [-grad . p : grad].
pub fn tangent_plane(lambda: f64, p: Point3) -> Result<HomElemC> {
    require_regular("tangent_plane", lambda)?;
    let b = 1.0 - lambda + lambda * lambda;
    let gx = 2.0 * p.x / (1.0 - lambda);
    let gy = 2.0 * (p.y - lambda + 0.5) / b;
    let gz = 2.0 * p.z / lambda;
    let u0 = -(gx * p.x + gy * p.y + gz * p.z);
    Ok(HomElemC::from_real([u0, gx, gy, gz]))
}
