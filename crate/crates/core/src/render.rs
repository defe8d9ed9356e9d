//! Deterministic SVG pictures of rank-2 x-rays.
//!
//! Small grey dots mark the weight lattice, thick segments the one-dimensional
//! images and large black dots the fixed-point images. Slices are drawn dashed.

use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exactgeom::{int, GeomError, Halfplane, Point, Polytope, Scalar, Sense};
use crate::surgery::SliceSpec;
use crate::xray::XRay;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderStyle {
    /// Pixels per lattice unit.
    pub scale: i64,
    pub lattice_radius: i64,
    pub fixed_radius: i64,
    pub edge_width: i64,
    pub slice_width: i64,
    pub dash: (i64, i64),
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            scale: 40,
            lattice_radius: 2,
            fixed_radius: 6,
            edge_width: 3,
            slice_width: 2,
            dash: (8, 6),
        }
    }
}

/// Exact decimal rendering of a rational, rounded half away from zero to two places.
fn px(v: &Scalar) -> String {
    let hundred = int(100);
    let scaled = v * &hundred;
    let half = Scalar::new(1.into(), 2.into());
    let r = if scaled.is_negative() {
        -((-scaled + half).floor())
    } else {
        (scaled + half).floor()
    };
    let n = r.to_integer();
    let (q, m) = n.abs().div_rem(&100.into());
    let sign = if n.is_negative() { "-" } else { "" };
    if m.is_zero() {
        format!("{sign}{q}")
    } else if (&m % 10u32).is_zero() {
        format!("{sign}{q}.{}", m / 10u32)
    } else {
        format!("{sign}{q}.{m:0>2}")
    }
}

struct Frame {
    xmin: Scalar,
    ymax: Scalar,
    scale: Scalar,
}

impl Frame {
    fn x(&self, p: &Point) -> String {
        px(&((&p.coords()[0] - &self.xmin) * &self.scale))
    }

    fn y(&self, p: &Point) -> String {
        px(&((&self.ymax - &p.coords()[1]) * &self.scale))
    }
}

pub fn render_svg(
    x: &XRay,
    style: &RenderStyle,
    overlays: &[SliceSpec],
) -> Result<Vec<u8>, GeomError> {
    if x.rank() != 2 {
        return Err(GeomError::UnsupportedRank(x.rank()));
    }
    let pts: Vec<&Point> = x
        .strata()
        .iter()
        .flat_map(|s| s.polytope.vertices())
        .collect();
    if pts.is_empty() {
        return Err(GeomError::EmptyInput);
    }
    let coord = |i: usize| pts.iter().map(move |p| p.coords()[i].clone());
    let (xmin, xmax) = (
        coord(0).min().unwrap().floor() - int(1),
        coord(0).max().unwrap().ceil() + int(1),
    );
    let (ymin, ymax) = (
        coord(1).min().unwrap().floor() - int(1),
        coord(1).max().unwrap().ceil() + int(1),
    );
    let scale = int(style.scale);
    let frame = Frame {
        xmin: xmin.clone(),
        ymax: ymax.clone(),
        scale: scale.clone(),
    };
    let width = px(&((&xmax - &xmin) * &scale));
    let height = px(&((&ymax - &ymin) * &scale));

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    );

    let _ = writeln!(out, r#"<g fill="grey">"#);
    let (x0, x1) = (xmin.to_integer(), xmax.to_integer());
    let (y0, y1) = (ymin.to_integer(), ymax.to_integer());
    let mut yv = y1.clone();
    while yv >= y0 {
        let mut xv = x0.clone();
        while xv <= x1 {
            let p = Point::new(vec![
                Scalar::from_integer(xv.clone()),
                Scalar::from_integer(yv.clone()),
            ]);
            let _ = writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="{}"/>"#,
                frame.x(&p),
                frame.y(&p),
                style.lattice_radius
            );
            xv += 1;
        }
        yv -= 1;
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(
        out,
        r#"<g stroke="black" stroke-width="{}" stroke-linecap="round">"#,
        style.edge_width
    );
    for s in x.strata().iter().filter(|s| s.polytope.dim() == 1) {
        let v = s.polytope.vertices();
        let _ = writeln!(
            out,
            r#"<line id="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            s.id,
            frame.x(&v[0]),
            frame.y(&v[0]),
            frame.x(&v[1]),
            frame.y(&v[1])
        );
    }
    let _ = writeln!(out, "</g>");

    let mut fixed: Vec<&Point> = x
        .fixed_indices()
        .into_iter()
        .map(|i| &x.stratum(i).polytope.vertices()[0])
        .collect();
    fixed.sort();
    fixed.dedup();
    let _ = writeln!(out, r#"<g fill="black">"#);
    for p in fixed {
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{}"/>"#,
            frame.x(p),
            frame.y(p),
            style.fixed_radius
        );
    }
    let _ = writeln!(out, "</g>");

    if !overlays.is_empty() {
        let bx = Polytope::hull(&[
            Point::new(vec![xmin.clone(), ymin.clone()]),
            Point::new(vec![xmax.clone(), ymin.clone()]),
            Point::new(vec![xmax.clone(), ymax.clone()]),
            Point::new(vec![xmin.clone(), ymax.clone()]),
        ])?;
        let _ = writeln!(
            out,
            r#"<g stroke="black" stroke-width="{}" stroke-dasharray="{} {}">"#,
            style.slice_width, style.dash.0, style.dash.1
        );
        for slice in overlays {
            if slice.normal().len() != 2 {
                return Err(GeomError::DimensionMismatch {
                    expected: 2,
                    found: slice.normal().len(),
                });
            }
            let le = Halfplane::new(slice.normal().to_vec(), slice.level().clone(), Sense::Le)?;
            let ge = Halfplane::new(slice.normal().to_vec(), slice.level().clone(), Sense::Ge)?;
            let seg = bx.clip(&le)?.clip(&ge)?;
            if seg.dim() == 1 {
                let v = seg.vertices();
                let _ = writeln!(
                    out,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    frame.x(&v[0]),
                    frame.y(&v[0]),
                    frame.x(&v[1]),
                    frame.y(&v[1])
                );
            }
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    Ok(out.into_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{fig2, segment};
    use crate::exactgeom::ratio;

    #[test]
    fn decimals() {
        assert_eq!(px(&int(40)), "40");
        assert_eq!(px(&ratio(1, 2)), "0.5");
        assert_eq!(px(&ratio(1, 3)), "0.33");
        assert_eq!(px(&ratio(-2, 3)), "-0.67");
        assert_eq!(px(&ratio(1, 200)), "0.01");
    }

    #[test]
    fn fig2_content() {
        let svg =
            String::from_utf8(render_svg(&fig2(), &RenderStyle::default(), &[]).unwrap()).unwrap();
        assert_eq!(svg.matches("<line ").count(), 9);
        assert_eq!(svg.matches(r#"r="6""#).count(), 6);
        assert_eq!(
            svg,
            String::from_utf8(render_svg(&fig2(), &RenderStyle::default(), &[]).unwrap()).unwrap()
        );
        assert!(render_svg(&segment(), &RenderStyle::default(), &[]).is_err());
    }
}
