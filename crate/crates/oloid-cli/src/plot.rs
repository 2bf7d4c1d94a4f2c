//! Deterministic SVG projection plots.
//!
//! A plot spec names an object, optionally a lambda list, and optionally a
//! style: `object[@lambda[,lambda...]][:style]`, for example
//! `touching@0.3:thick` or `asymptotes:dashed`. Spatial objects are
//! projected along a coordinate axis; planar developments use the plane
//! projection. Identical inputs produce byte-identical output.

use crate::sample::{sample, BranchChoice, Grid, Object, Row};
use oloid::ExtendedParam;

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Projection {
    /// View along the x axis: (y, z).
    X,
    /// View along the y axis: (x, z).
    Y,
    /// View along the z axis: (x, y).
    Z,
    /// The development plane: (xi, eta).
    Plane,
}

impl Projection {
    fn axis_labels(self) -> (&'static str, &'static str) {
        match self {
            Projection::X => ("y", "z"),
            Projection::Y => ("x", "z"),
            Projection::Z => ("x", "y"),
            Projection::Plane => ("xi", "eta"),
        }
    }

    fn apply(self, coords: &[f64]) -> (f64, f64) {
        match self {
            Projection::X => (coords[1], coords[2]),
            Projection::Y => (coords[0], coords[2]),
            Projection::Z => (coords[0], coords[1]),
            Projection::Plane => (coords[0], coords[1]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Solid,
    Dashed,
    Thick,
    Thin,
}

impl Style {
    fn parse(s: &str) -> Option<Style> {
        match s {
            "solid" => Some(Style::Solid),
            "dashed" => Some(Style::Dashed),
            "thick" => Some(Style::Thick),
            "thin" => Some(Style::Thin),
            _ => None,
        }
    }

    fn stroke_attrs(self) -> &'static str {
        match self {
            Style::Solid => r#"stroke-width="1.3""#,
            Style::Dashed => r#"stroke-width="1.3" stroke-dasharray="7 5""#,
            Style::Thick => r#"stroke-width="2.6""#,
            Style::Thin => r#"stroke-width="0.7""#,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PlotSpec {
    pub object: Object,
    pub lambdas: Vec<ExtendedParam>,
    pub style: Style,
}

impl PlotSpec {
    /// Parse `object[@lambda[,lambda...]][:style]`.
    pub fn parse(text: &str) -> Result<PlotSpec, String> {
        let (head, style) = match text.rsplit_once(':') {
            Some((head, style_text)) => {
                let style = Style::parse(style_text).ok_or_else(|| {
                    format!("unknown style {style_text:?}; expected solid, dashed, thick, or thin")
                })?;
                (head, style)
            }
            None => (text, Style::Solid),
        };
        let (name, lambda_text) = match head.split_once('@') {
            Some((name, rest)) => (name, Some(rest)),
            None => (head, None),
        };
        let object = clap::ValueEnum::from_str(name, true)
            .map_err(|_| format!("unknown object {name:?} in plot spec {text:?}"))?;
        let lambdas = match lambda_text {
            None => Vec::new(),
            Some(list) => crate::parse_lambda_list(list)?,
        };
        Ok(PlotSpec {
            object,
            lambdas,
            style,
        })
    }
}

const SIZE: f64 = 640.0;
const MARGIN: f64 = 40.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
];

/// Points per polyline; dense enough that curvature is invisible at 640 px.
const PLOT_SAMPLES: usize = 600;

struct Mapper {
    window: f64,
}

impl Mapper {
    fn to_px(&self, u: f64, v: f64) -> (f64, f64) {
        let scale = (SIZE - 2.0 * MARGIN) / (2.0 * self.window);
        let px = MARGIN + (u + self.window) * scale;
        let py = MARGIN + (self.window - v) * scale;
        (px, py)
    }
}

pub fn render(specs: &[PlotSpec], projection: Projection, window: f64) -> Result<String, String> {
    if !(window > 0.0 && window.is_finite()) {
        return Err(format!("window must be positive and finite, got {window}"));
    }
    for spec in specs {
        let planar = spec.object.is_planar();
        if planar != (projection == Projection::Plane) {
            return Err(format!(
                "object {} needs the {} projection",
                spec.object.name(),
                if planar { "plane" } else { "x, y, or z" }
            ));
        }
        if spec.object.takes_lambda() && spec.lambdas.is_empty() {
            return Err(format!(
                "object {} needs a lambda list, e.g. {}@0.3",
                spec.object.name(),
                spec.object.name()
            ));
        }
    }

    let mapper = Mapper { window };
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );
    let inner = SIZE - 2.0 * MARGIN;
    let _ = writeln!(
        svg,
        r#"<clipPath id="box"><rect x="{MARGIN}" y="{MARGIN}" width="{inner}" height="{inner}"/></clipPath>"#
    );
    let _ = writeln!(
        svg,
        r##"<rect x="{MARGIN}" y="{MARGIN}" width="{inner}" height="{inner}" fill="none" stroke="#404040" stroke-width="1"/>"##
    );
    // Coordinate axes through the origin.
    let (x0, y0) = mapper.to_px(0.0, 0.0);
    let _ = writeln!(
        svg,
        r##"<g stroke="#c0c0c0" stroke-width="0.8"><line x1="{MARGIN}" y1="{y0:.2}" x2="{m2}" y2="{y0:.2}"/><line x1="{x0:.2}" y1="{MARGIN}" x2="{x0:.2}" y2="{m2}"/></g>"##,
        m2 = SIZE - MARGIN
    );
    let (hl, vl) = projection.axis_labels();
    let _ = writeln!(
        svg,
        r#"<text x="{tx:.2}" y="{ty:.2}" font-family="monospace" font-size="14">{hl}</text>"#,
        tx = SIZE - MARGIN + 6.0,
        ty = y0 + 4.0,
    );
    let _ = writeln!(
        svg,
        r#"<text x="{tx:.2}" y="{ty:.2}" font-family="monospace" font-size="14">{vl}</text>"#,
        tx = x0 - 4.0,
        ty = MARGIN - 8.0,
    );
    let _ = writeln!(
        svg,
        r#"<text x="{MARGIN}" y="{ty:.2}" font-family="monospace" font-size="12">window &#177;{window}</text>"#,
        ty = SIZE - MARGIN + 18.0,
    );

    let mut color_index = 0usize;
    let _ = writeln!(svg, r#"<g clip-path="url(#box)" fill="none">"#);
    for spec in specs {
        let lambdas: Vec<Option<ExtendedParam>> = if spec.object.takes_lambda() {
            spec.lambdas.iter().copied().map(Some).collect()
        } else {
            vec![None]
        };
        for lam in lambdas {
            let (t0, t1) = spec.object.default_range();
            let grid = Grid {
                t_min: t0,
                t_max: t1,
                n: PLOT_SAMPLES,
            };
            let rows = sample(
                spec.object,
                lam.as_slice(),
                &grid,
                BranchChoice::Both,
                0.0,
            )
            .map_err(|e| e.to_string())?;
            let color = PALETTE[color_index % PALETTE.len()];
            color_index += 1;
            draw_rows(&mut svg, &rows, projection, &mapper, color, spec.style);
        }
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}

/// Emit one polyline per contiguous run of a branch, breaking at gaps and at
/// points far outside the window.
fn draw_rows(
    svg: &mut String,
    rows: &[Row],
    projection: Projection,
    mapper: &Mapper,
    color: &str,
    style: Style,
) {
    let mut run: Vec<(f64, f64)> = Vec::new();
    let mut run_branch = "";
    let limit = 4.0 * mapper.window;
    let mut flush = |run: &mut Vec<(f64, f64)>| {
        if run.len() >= 2 {
            let mut points = String::new();
            for &(px, py) in run.iter() {
                let _ = write!(points, "{px:.2},{py:.2} ");
            }
            let _ = writeln!(
                svg,
                r#"<polyline stroke="{color}" {} points="{}"/>"#,
                style.stroke_attrs(),
                points.trim_end()
            );
        }
        run.clear();
    };
    for row in rows {
        let projected = row.coords.as_ref().and_then(|c| {
            let (u, v) = projection.apply(c);
            (u.abs() <= limit && v.abs() <= limit).then_some((u, v))
        });
        match projected {
            Some((u, v)) => {
                if row.branch != run_branch {
                    flush(&mut run);
                    run_branch = row.branch;
                }
                run.push(mapper.to_px(u, v));
            }
            None => flush(&mut run),
        }
    }
    flush(&mut run);
}
