//! SVG rendering of an instance and a matching.

use std::fmt::Write;

use crate::geometry::ConvexPointSet;
use crate::structure::Matching;

/// Renders the polygon boundary, the points and the matching segments.
///
/// The viewBox is fitted to the points with a 5% margin and the y axis points
/// up. The longest segment gets its own class and a label with its length.
pub fn render_svg(points: &ConvexPointSet, m: &Matching) -> String {
    let pts = points.points();
    let (min_x, max_x) = extent(pts.iter().map(|p| p.x));
    let (min_y, max_y) = extent(pts.iter().map(|p| p.y));
    let span = (max_x - min_x).max(max_y - min_y).max(f64::MIN_POSITIVE);
    let margin = 0.05 * span;
    let (vx, vy) = (min_x - margin, -max_y - margin);
    let (vw, vh) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
    let r = 0.008 * span;
    let stroke = 0.004 * span;

    let (sq, longest) = m.sq_bottleneck(points);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx} {vy} {vw} {vh}" width="800" height="{}">"#,
        (800.0 * vh / vw).round()
    );
    let _ = writeln!(
        out,
        r#"<style>.hull{{fill:none;stroke:#bbb}} .seg{{stroke:#1f5fa8}} .longest{{stroke:#d62728}} .pt{{fill:#222}} text{{fill:#d62728}}</style>"#
    );

    let mut hull = String::new();
    for p in pts.iter().chain(pts.first()) {
        let _ = write!(hull, "{},{} ", p.x, -p.y);
    }
    let _ = writeln!(
        out,
        r#"<polyline class="hull" stroke-width="{stroke}" points="{}"/>"#,
        hull.trim_end()
    );

    for &(a, b) in m.pairs() {
        if a >= pts.len() || b >= pts.len() {
            continue;
        }
        let class = if Some((a, b)) == longest { "longest" } else { "seg" };
        let w = if class == "longest" { 2.0 * stroke } else { stroke };
        let _ = writeln!(
            out,
            r#"<line class="{class}" stroke-width="{w}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            pts[a].x, -pts[a].y, pts[b].x, -pts[b].y
        );
    }

    for (i, p) in pts.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<circle class="pt" data-index="{i}" cx="{}" cy="{}" r="{r}"/>"#,
            p.x, -p.y
        );
    }

    if let Some((a, b)) = longest {
        let (mx, my) = (0.5 * (pts[a].x + pts[b].x), -0.5 * (pts[a].y + pts[b].y));
        let _ = writeln!(
            out,
            r#"<text x="{mx}" y="{my}" font-size="{}">{}</text>"#,
            0.04 * span,
            sig6(sq.sqrt())
        );
    }
    out.push_str("</svg>\n");
    out
}

fn extent(it: impl Iterator<Item = f64>) -> (f64, f64) {
    it.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
        (lo.min(x), hi.max(x))
    })
}

/// Formats `v` with 6 significant digits.
pub fn sig6(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let digits = 5 - v.abs().log10().floor() as i32;
    if (0..=20).contains(&digits) {
        format!("{:.*}", digits as usize, v)
    } else {
        format!("{v:.5e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(1.0), "1.00000");
        assert_eq!(sig6(1.969615506), "1.96962");
        assert_eq!(sig6(123.4567891), "123.457");
    }

    #[test]
    fn square_elements() {
        let p = ConvexPointSet::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let svg = render_svg(&p, &Matching::new(4, [(0, 1), (2, 3)]));
        assert_eq!(svg.matches("<circle").count(), 4);
        assert_eq!(svg.matches("<line").count(), 2);
        assert_eq!(svg.matches(r#"class="longest""#).count(), 1);
        assert!(svg.contains(">1.00000</text>"));
    }
}
