//! SVG step plots.

use std::fmt::Write as _;

/// Geometry of a step plot: jump positions in `(0, 1)` with their labels and
/// the plateau values between them.
#[derive(Clone, Debug, PartialEq)]
pub struct PlotData {
    pub jumps: Vec<f64>,
    pub labels: Vec<String>,
    pub plateaus: Vec<i64>,
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 320.0;
const MARGIN: f64 = 40.0;

/// Right-angled step plot on `[0, 1] × [min, max]`, jump points marked with
/// open circles at the averaged value.
pub fn svg_plot(data: &PlotData, title: &str) -> String {
    let lo = data.plateaus.iter().copied().min().unwrap_or(0).min(0) - 1;
    let hi = data.plateaus.iter().copied().max().unwrap_or(0).max(0) + 1;
    let sx = |x: f64| MARGIN + x * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - (y - lo as f64) / (hi - lo) as f64 * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, "<title>{}</title>", escape(title));
    let _ = writeln!(
        s,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray"/>"#,
        sx(0.0),
        sy(0.0),
        sx(1.0),
        sy(0.0)
    );
    let _ = writeln!(
        s,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray"/>"#,
        sx(0.0),
        sy(lo as f64),
        sx(0.0),
        sy(hi as f64)
    );
    for v in lo..=hi {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="end">{v}</text>"#,
            sx(0.0) - 4.0,
            sy(v as f64) + 3.0
        );
    }

    // the path starts and ends at the endpoint value 0
    let mut path = format!("M {:.2} {:.2}", sx(0.0), sy(0.0));
    let mut x0 = 0.0;
    for (i, &v) in data.plateaus.iter().enumerate() {
        let x1 = data.jumps.get(i).copied().unwrap_or(1.0);
        let _ = write!(path, " M {:.2} {:.2} H {:.2}", sx(x0), sy(v as f64), sx(x1));
        if i + 1 < data.plateaus.len() {
            let _ = write!(path, " V {:.2}", sy(data.plateaus[i + 1] as f64));
        }
        x0 = x1;
    }
    let _ = writeln!(s, r#"<path d="{path}" fill="none" stroke="black" stroke-width="1.5"/>"#);

    for (i, &x) in data.jumps.iter().enumerate() {
        let mid = (data.plateaus[i] + data.plateaus[i + 1]) as f64 / 2.0;
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="white" stroke="black"/>"#,
            sx(x),
            sy(mid)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="9" text-anchor="middle">{}</text>"#,
            sx(x),
            HEIGHT - MARGIN / 2.0,
            escape(&data.labels[i])
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plot_is_deterministic_and_well_formed() {
        let d = PlotData {
            jumps: vec![0.25, 0.75],
            labels: vec!["1/4".into(), "3/4".into()],
            plateaus: vec![0, 1, 0],
        };
        let a = svg_plot(&d, "S_{1/4}");
        assert_eq!(a, svg_plot(&d, "S_{1/4}"));
        assert!(a.starts_with("<svg"));
        assert!(a.trim_end().ends_with("</svg>"));
        assert_eq!(a.matches("<circle").count(), 2);
    }
}
