//! Static SVG 1.1 renderings: arc diagrams of permutations and Dyck paths
//! with their tunnels.

use std::fmt::Write;

use crate::dyck::{DyckPath, TunnelKind};

const STEP: f64 = 40.0;
const MARGIN: f64 = 30.0;

fn header(w: f64, h: f64) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\">\n"
    )
}

/// Points `1..n` on a line; `i → σ(i)` is drawn above when `i < σ(i)`,
/// below when `σ(i) < i`, and as a small loop for a fixed point.
pub fn arc_diagram(sigma: &[u32]) -> String {
    let n = sigma.len();
    let span = (n.max(1) - 1) as f64 * STEP;
    let half = span / 2.0 + STEP / 2.0;
    let w = span + 2.0 * MARGIN;
    let h = 2.0 * half + 2.0 * MARGIN;
    let base = MARGIN + half;
    let x = |i: usize| MARGIN + (i - 1) as f64 * STEP;
    let mut out = header(w, h);
    out.push_str("  <g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n");
    for (idx, &v) in sigma.iter().enumerate() {
        let i = idx + 1;
        let j = v as usize;
        if i == j {
            let _ = writeln!(
                out,
                "    <circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"8\"/>",
                x(i),
                base - 8.0
            );
            continue;
        }
        let r = (x(i) - x(j)).abs() / 2.0;
        // upper arcs run left to right above the line, lower arcs right to
        // left below it; sweep flag 1 is clockwise in screen coordinates
        let _ = writeln!(
            out,
            "    <path d=\"M {:.1} {base:.1} A {r:.1} {r:.1} 0 0 1 {:.1} {base:.1}\"/>",
            x(i),
            x(j)
        );
    }
    out.push_str("  </g>\n  <g fill=\"black\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n");
    for i in 1..=n {
        let _ = writeln!(out, "    <circle cx=\"{:.1}\" cy=\"{base:.1}\" r=\"3\"/>", x(i));
        let _ = writeln!(out, "    <text x=\"{:.1}\" y=\"{:.1}\">{i}</text>", x(i) + 8.0, base + 14.0);
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

/// The lattice path with unit steps; with `tunnels`, each matched pair of
/// steps gets a horizontal segment coloured by kind.
pub fn dyck_diagram(d: &DyckPath, tunnels: bool) -> String {
    let n = d.half_len();
    let unit = STEP / 2.0;
    let w = 2.0 * n as f64 * unit + 2.0 * MARGIN;
    let h = n as f64 * unit + 2.0 * MARGIN;
    let px = |i: usize| MARGIN + i as f64 * unit;
    let py = |height: i64| h - MARGIN - height as f64 * unit;
    let mut heights = vec![0i64];
    for &up in d.steps() {
        let last = *heights.last().expect("non-empty");
        heights.push(if up { last + 1 } else { last - 1 });
    }
    let mut out = header(w, h);
    let _ = writeln!(
        out,
        "  <line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>",
        px(n),
        MARGIN,
        px(n),
        h - MARGIN
    );
    let points: Vec<String> = heights
        .iter()
        .enumerate()
        .map(|(i, &y)| format!("{:.1},{:.1}", px(i), py(y)))
        .collect();
    let _ = writeln!(
        out,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>",
        points.join(" ")
    );
    if tunnels {
        for t in d.tunnels() {
            let colour = match t.kind {
                TunnelKind::Left => "#1f77b4",
                TunnelKind::Centered => "#2ca02c",
                TunnelKind::Right => "#d62728",
            };
            // the segment joins the midpoints of the two steps
            let y = py(heights[t.up_index]) - unit / 2.0;
            let _ = writeln!(
                out,
                "  <line class=\"tunnel-{}\" x1=\"{:.1}\" y1=\"{y:.1}\" x2=\"{:.1}\" y2=\"{y:.1}\" stroke=\"{colour}\" stroke-width=\"1.5\"/>",
                kind_name(t.kind),
                px(t.up_index) + unit / 2.0,
                px(t.down_index) + unit / 2.0
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn kind_name(k: TunnelKind) -> &'static str {
    match k {
        TunnelKind::Left => "left",
        TunnelKind::Centered => "centered",
        TunnelKind::Right => "right",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_diagram_has_one_shape_per_letter() {
        let s = arc_diagram(&[4, 7, 3, 5, 1, 2, 6]);
        assert!(s.starts_with("<?xml"));
        assert_eq!(s.matches("<path").count() + s.matches("r=\"8\"").count(), 7);
        assert!(s.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn tunnel_segments_by_kind() {
        let d: DyckPath = "ududuuuddudduudd".parse().unwrap();
        let s = dyck_diagram(&d, true);
        assert_eq!(s.matches("tunnel-left").count(), 4);
        assert_eq!(s.matches("tunnel-centered").count(), 1);
        assert_eq!(s.matches("tunnel-right").count(), 3);
        assert_eq!(dyck_diagram(&d, false).matches("tunnel-").count(), 0);
    }
}
