//! Layered SVG export: a lattice grid under one styled layer per region.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::exact::{RatPoint, Region};

const SCALE: f64 = 20.0;
const PAD: i64 = 1;

/// Fill, stroke and dash style of the layers, cycled in input order. With the usual
/// `exact inner outer` argument order the exact region is blue, the inner rounding green and
/// the outer rounding a dashed red outline.
const STYLES: [(&str, &str, f64, &str); 4] = [
    ("#4a78c8", "#1f3f7a", 0.35, ""),
    ("#3c9a4a", "#1d5a28", 0.35, ""),
    ("none", "#c0392b", 0.0, "6 3"),
    ("#d9a400", "#7a5c00", 0.3, ""),
];

fn bounds(layers: &[(String, Region)]) -> (i64, i64, i64, i64) {
    let mut b: Option<(i64, i64, i64, i64)> = None;
    for (_, r) in layers {
        if let Some((lo, hi)) = r.bbox() {
            let lx = lo.x.floor().to_integer().to_i64().unwrap_or(0);
            let ly = lo.y.floor().to_integer().to_i64().unwrap_or(0);
            let hx = hi.x.ceil().to_integer().to_i64().unwrap_or(0);
            let hy = hi.y.ceil().to_integer().to_i64().unwrap_or(0);
            b = Some(match b {
                None => (lx, ly, hx, hy),
                Some((a, c, d, e)) => (a.min(lx), c.min(ly), d.max(hx), e.max(hy)),
            });
        }
    }
    let (x0, y0, x1, y1) = b.unwrap_or((0, 0, 1, 1));
    (x0 - PAD, y0 - PAD, x1 + PAD, y1 + PAD)
}

fn coord(v: &RatPoint, x0: i64, y1: i64) -> (f64, f64) {
    let (x, y) = v.to_f64();
    ((x - x0 as f64) * SCALE, (y1 as f64 - y) * SCALE)
}

/// Renders named regions as SVG layers over the grid that covers all of them.
pub fn render(layers: &[(String, Region)]) -> String {
    let (x0, y0, x1, y1) = bounds(layers);
    let (w, h) = ((x1 - x0) as f64 * SCALE, (y1 - y0) as f64 * SCALE);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(s, r##"<g id="grid" stroke="#d0d0d0" stroke-width="0.5">"##);
    for x in x0..=x1 {
        let px = (x - x0) as f64 * SCALE;
        let _ = writeln!(s, r#"<line x1="{px}" y1="0" x2="{px}" y2="{h}"/>"#);
    }
    for y in y0..=y1 {
        let py = (y1 - y) as f64 * SCALE;
        let _ = writeln!(s, r#"<line x1="0" y1="{py}" x2="{w}" y2="{py}"/>"#);
    }
    s.push_str("</g>\n");
    for (i, (name, region)) in layers.iter().enumerate() {
        let (fill, stroke, opacity, dash) = STYLES[i % STYLES.len()];
        let mut d = String::new();
        for ring in region.rings() {
            for (j, v) in ring.vertices().iter().enumerate() {
                let (px, py) = coord(v, x0, y1);
                let _ = write!(d, "{}{px:.3} {py:.3} ", if j == 0 { 'M' } else { 'L' });
            }
            d.push_str("Z ");
        }
        let dash_attr = if dash.is_empty() { String::new() } else { format!(r#" stroke-dasharray="{dash}""#) };
        let _ = writeln!(
            s,
            r#"<g id="layer-{i}" class="region"><title>{}</title><path d="{}" fill="{fill}" fill-opacity="{opacity}" fill-rule="evenodd" stroke="{stroke}" stroke-width="1.5"{dash_attr}/></g>"#,
            escape(name),
            d.trim_end()
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Ring;

    #[test]
    fn one_layer_per_region() {
        let sq = Region::from_rings([Ring::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)])]);
        let svg = render(&[("a".into(), sq.clone()), ("b".into(), sq.clone()), ("c".into(), sq)]);
        assert_eq!(svg.matches("class=\"region\"").count(), 3);
        assert!(svg.contains("id=\"grid\""));
    }

    #[test]
    fn empty_region_draws_grid_only() {
        let svg = render(&[("e".into(), Region::empty())]);
        assert!(svg.contains("id=\"grid\""));
        assert!(!svg.contains("M"));
    }
}
