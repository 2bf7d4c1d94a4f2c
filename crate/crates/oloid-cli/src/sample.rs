//! Object samplers and the CSV/JSON emitters.
//!
//! Every sampler returns rows of a common shape. A row either carries
//! coordinates or is a gap marker: evaluation failed at that parameter, or
//! the point ran beyond [`COORD_LIMIT`] on its way to a pole. Hard
//! preconditions (an object that does not exist at the requested parameter
//! at all) surface as errors instead.

use oloid::development::{dev_regression, dev_touching};
use oloid::generators::common_generators;
use oloid::regression::{g, regression_asymptote};
use oloid::surface::ruling_point;
use oloid::touching::{gamma, CurveBranch};
use oloid::{Angle, ExtendedParam, Point3, ZBranch};

use std::f64::consts::TAU;
use std::io::Write;

/// Coordinates past this magnitude count as pole-adjacent and become gaps.
pub const COORD_LIMIT: f64 = 1e8;

const T23: f64 = TAU / 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Object {
    /// Curve m = const on the ruled surface (the rim circle at m = 0).
    Oloid,
    /// Principal sections of the member at lambda.
    Quadric,
    /// Touching curve of the member at lambda.
    Touching,
    /// Edge of regression.
    Regression,
    /// The four asymptotes of the edge of regression.
    Asymptotes,
    /// Common generating lines of the member at lambda.
    Generators,
    /// Planar development of the touching curve at lambda.
    DevTouching,
    /// Planar development of the edge of regression.
    DevRegression,
}

impl Object {
    pub fn name(self) -> &'static str {
        match self {
            Object::Oloid => "oloid",
            Object::Quadric => "quadric",
            Object::Touching => "touching",
            Object::Regression => "regression",
            Object::Asymptotes => "asymptotes",
            Object::Generators => "generators",
            Object::DevTouching => "dev-touching",
            Object::DevRegression => "dev-regression",
        }
    }

    /// Whether the object is a family member selected by lambda.
    pub fn takes_lambda(self) -> bool {
        matches!(
            self,
            Object::Quadric | Object::Touching | Object::Generators | Object::DevTouching
        )
    }

    /// Planar objects emit (xi, eta); the rest emit (x, y, z).
    pub fn is_planar(self) -> bool {
        matches!(self, Object::DevTouching | Object::DevRegression)
    }

    pub fn default_range(self) -> (f64, f64) {
        match self {
            Object::Oloid => (-T23, T23),
            Object::Quadric => (0.0, TAU),
            Object::Touching | Object::DevTouching => (-T23, TAU),
            Object::Regression | Object::DevRegression => (-T23 + 1e-6, T23 - 1e-6),
            Object::Asymptotes => (-2.5, 2.5),
            Object::Generators => (-2.0, 3.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum BranchChoice {
    Pos,
    Neg,
    Both,
}

impl BranchChoice {
    fn z_branches(self) -> &'static [ZBranch] {
        match self {
            BranchChoice::Pos => &[ZBranch::Pos],
            BranchChoice::Neg => &[ZBranch::Neg],
            BranchChoice::Both => &[ZBranch::Pos, ZBranch::Neg],
        }
    }
}

fn branch_name(zb: ZBranch) -> &'static str {
    match zb {
        ZBranch::Pos => "pos",
        ZBranch::Neg => "neg",
    }
}

/// One sampled point, or a gap marker when `coords` is `None`.
#[derive(Debug, Clone)]
pub struct Row {
    pub object: &'static str,
    pub lambda: Option<ExtendedParam>,
    pub branch: &'static str,
    pub t: f64,
    pub coords: Option<Vec<f64>>,
}

pub struct Grid {
    pub t_min: f64,
    pub t_max: f64,
    pub n: usize,
}

impl Grid {
    fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let step = if self.n > 1 {
            (self.t_max - self.t_min) / (self.n - 1) as f64
        } else {
            0.0
        };
        (0..self.n).map(move |i| self.t_min + step * i as f64)
    }
}

fn point_row(
    object: &'static str,
    lambda: Option<ExtendedParam>,
    branch: &'static str,
    t: f64,
    point: oloid::Result<Point3>,
) -> Row {
    let coords = match point {
        Ok(p) if p.is_finite() && p.norm_inf() <= COORD_LIMIT => Some(vec![p.x, p.y, p.z]),
        _ => None,
    };
    Row {
        object,
        lambda,
        branch: if coords.is_some() { branch } else { "gap" },
        t,
        coords,
    }
}

pub fn sample(
    object: Object,
    lambdas: &[ExtendedParam],
    grid: &Grid,
    branch: BranchChoice,
    m: f64,
) -> oloid::Result<Vec<Row>> {
    let mut rows = Vec::new();
    match object {
        Object::Oloid => {
            for &zb in branch.z_branches() {
                for t in grid.points() {
                    rows.push(point_row(
                        object.name(),
                        None,
                        branch_name(zb),
                        t,
                        ruling_point(m, Angle::new(t), zb),
                    ));
                }
            }
        }
        Object::Quadric => {
            for &lam in lambdas {
                sample_quadric(lam, grid, &mut rows)?;
            }
        }
        Object::Touching => {
            for &lam in lambdas {
                for t in grid.points() {
                    let row = match gamma(lam, Angle::new(t)) {
                        Ok(cp) => {
                            let name = match cp.branch {
                                CurveBranch::Gamma1 => "gamma1",
                                CurveBranch::Gamma2 => "gamma2",
                            };
                            point_row(object.name(), Some(lam), name, t, Ok(cp.point))
                        }
                        Err(e) => point_row(object.name(), Some(lam), "gap", t, Err(e)),
                    };
                    rows.push(row);
                }
            }
        }
        Object::Regression => {
            for &zb in branch.z_branches() {
                for t in grid.points() {
                    rows.push(point_row(
                        object.name(),
                        None,
                        branch_name(zb),
                        t,
                        g(Angle::new(t), zb),
                    ));
                }
            }
        }
        Object::Asymptotes => {
            const NAMES: [&str; 4] = ["a1", "a2", "a3", "a4"];
            for k in 1..=4u8 {
                let line = regression_asymptote(k)?;
                for t in grid.points() {
                    rows.push(point_row(
                        object.name(),
                        None,
                        NAMES[k as usize - 1],
                        t,
                        Ok(line.point_at(t)),
                    ));
                }
            }
        }
        Object::Generators => {
            const NAMES: [&str; 4] = ["g1", "g2", "g3", "g4"];
            for &lam in lambdas {
                let lines = common_generators(lam)?;
                for (k, line) in lines.iter().enumerate() {
                    for t in grid.points() {
                        rows.push(point_row(
                            object.name(),
                            Some(lam),
                            NAMES[k],
                            t,
                            Ok(line.point_at(t)),
                        ));
                    }
                }
            }
        }
        Object::DevTouching => {
            for &lam in lambdas {
                for t in grid.points() {
                    rows.push(plane_row(object.name(), Some(lam), t, dev_touching(lam, t)));
                }
            }
        }
        Object::DevRegression => {
            for t in grid.points() {
                rows.push(plane_row(object.name(), None, t, dev_regression(t)));
            }
        }
    }
    Ok(rows)
}

fn plane_row(
    object: &'static str,
    lambda: Option<ExtendedParam>,
    t: f64,
    point: oloid::Result<oloid::development::PlanePoint>,
) -> Row {
    let coords = match point {
        Ok(p) if p.is_finite() && p.xi.abs().max(p.eta.abs()) <= COORD_LIMIT => {
            Some(vec![p.xi, p.eta])
        }
        _ => None,
    };
    Row {
        object,
        lambda,
        branch: if coords.is_some() { "dev" } else { "gap" },
        t,
        coords,
    }
}

/// Principal sections of the member, each swept by a polar angle around the
/// section's center. Where the radius is nonreal (hyperbolic sections) the
/// sweep produces gaps.
fn sample_quadric(lam: ExtendedParam, grid: &Grid, rows: &mut Vec<Row>) -> oloid::Result<()> {
    match lam {
        ExtendedParam::Finite(l) if l == 0.0 => {
            for t in grid.points() {
                let p = Point3::new(t.sin(), -0.5 - t.cos(), 0.0);
                rows.push(point_row("quadric", Some(lam), "circle", t, Ok(p)));
            }
        }
        ExtendedParam::Finite(l) if l == 1.0 => {
            for t in grid.points() {
                let p = Point3::new(0.0, 0.5 + t.cos(), t.sin());
                rows.push(point_row("quadric", Some(lam), "circle", t, Ok(p)));
            }
        }
        ExtendedParam::Finite(l) => {
            let b = 1.0 - l + l * l;
            let w0 = l - 0.5;
            // (plane, semi-axis denominators, embedding of the section plane)
            let sections: [(&'static str, f64, f64, fn(f64, f64, f64) -> Point3); 3] = [
                ("section-z0", 1.0 - l, b, |u, v, w0| Point3::new(u, w0 + v, 0.0)),
                ("section-x0", b, l, |u, v, w0| Point3::new(0.0, w0 + u, v)),
                ("section-y0", 1.0 - l, l, |u, v, w0| Point3::new(u, w0, v)),
            ];
            for (name, p, q, embed) in sections {
                for t in grid.points() {
                    let (s, c) = t.sin_cos();
                    let denom = c * c / p + s * s / q;
                    let point = if denom > 0.0 {
                        let r = denom.recip().sqrt();
                        Ok(embed(r * c, r * s, w0))
                    } else {
                        Err(oloid::Error::Domain {
                            op: "sample_quadric",
                            requirement: "a real section radius",
                            got: denom,
                        })
                    };
                    rows.push(point_row("quadric", Some(lam), name, t, point));
                }
            }
        }
        ExtendedParam::Infinity => {
            // x^2 - z^2 + 2y = 0: two parabolic sections and the pair of
            // lines in the plane y = 0, parametrized by the coordinate.
            type Section = (&'static str, fn(f64) -> Point3);
            let sections: [Section; 4] = [
                ("section-z0", |t| Point3::new(t, -0.5 * t * t, 0.0)),
                ("section-x0", |t| Point3::new(0.0, 0.5 * t * t, t)),
                ("section-y0a", |t| Point3::new(t, 0.0, t)),
                ("section-y0b", |t| Point3::new(t, 0.0, -t)),
            ];
            for (name, f) in sections {
                for t in grid.points() {
                    rows.push(point_row("quadric", Some(lam), name, t, Ok(f(t))));
                }
            }
        }
    }
    Ok(())
}

fn lambda_field(lambda: Option<ExtendedParam>) -> String {
    match lambda {
        None => String::new(),
        Some(lam) => lam.to_string(),
    }
}

pub fn write_csv<W: Write>(mut out: W, planar: bool, rows: &[Row]) -> std::io::Result<()> {
    if planar {
        writeln!(out, "object,lambda,branch,t,xi,eta")?;
    } else {
        writeln!(out, "object,lambda,branch,t,x,y,z")?;
    }
    let dims = if planar { 2 } else { 3 };
    for row in rows {
        write!(
            out,
            "{},{},{},{:.16e}",
            row.object,
            lambda_field(row.lambda),
            row.branch,
            row.t
        )?;
        match &row.coords {
            Some(c) => {
                for v in c {
                    write!(out, ",{v:.16e}")?;
                }
            }
            None => {
                for _ in 0..dims {
                    write!(out, ",")?;
                }
            }
        }
        writeln!(out)?;
    }
    Ok(())
}

pub fn write_json<W: Write>(mut out: W, rows: &[Row]) -> std::io::Result<()> {
    let items: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            let lambda = match row.lambda {
                None => serde_json::Value::Null,
                Some(ExtendedParam::Infinity) => serde_json::Value::from("inf"),
                Some(ExtendedParam::Finite(l)) => serde_json::Value::from(l),
            };
            serde_json::json!({
                "object": row.object,
                "lambda": lambda,
                "branch": row.branch,
                "t": row.t,
                "coords": row.coords,
            })
        })
        .collect();
    writeln!(out, "{}", serde_json::Value::from(items))
}
