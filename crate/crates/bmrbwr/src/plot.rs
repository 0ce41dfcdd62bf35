//! Static SVG convergence plots.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::export::TraceRow;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;
const COLORS: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"];

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    /// `(iteration, value)` pairs in iteration order.
    pub points: Vec<(f64, f64)>,
}

impl Series {
    /// Mean best penalized fitness per iteration, over the runs that
    /// reached that iteration.
    pub fn mean_best(label: impl Into<String>, rows: &[TraceRow]) -> Self {
        let mut acc: BTreeMap<u64, (f64, usize)> = BTreeMap::new();
        for row in rows {
            let e = acc.entry(row.record.iteration).or_insert((0.0, 0));
            e.0 += row.record.best_penalized;
            e.1 += 1;
        }
        let points = acc.into_iter().map(|(it, (sum, n))| (it as f64, sum / n as f64)).collect();
        Series { label: label.into(), points }
    }
}

struct Axis {
    lo: f64,
    hi: f64,
    log: bool,
}

impl Axis {
    fn fit(values: impl Iterator<Item = f64> + Clone, allow_log: bool) -> Self {
        let finite = values.filter(|v| v.is_finite());
        let log = allow_log && finite.clone().all(|v| v > 0.0) && finite.clone().next().is_some();
        let map = |v: f64| if log { v.log10() } else { v };
        let (mut lo, mut hi) =
            finite.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(map(v)), hi.max(map(v))));
        if !lo.is_finite() {
            (lo, hi) = (0.0, 1.0);
        }
        if hi - lo < 1e-12 * lo.abs().max(1.0) {
            (lo, hi) = (lo - 0.5, hi + 0.5);
        }
        Axis { lo, hi, log }
    }

    fn unit(&self, v: f64) -> f64 {
        let v = if self.log { v.log10() } else { v };
        (v - self.lo) / (self.hi - self.lo)
    }

    fn ticks(&self) -> Vec<(f64, String)> {
        (0..=4)
            .map(|i| {
                let t = self.lo + (self.hi - self.lo) * i as f64 / 4.0;
                let label = if self.log { format!("1e{t:.1}") } else { format_tick(t) };
                (i as f64 / 4.0, label)
            })
            .collect()
    }
}

fn format_tick(v: f64) -> String {
    if v != 0.0 && (v.abs() >= 1e5 || v.abs() < 1e-2) {
        format!("{v:.2e}")
    } else {
        format!("{v:.2}")
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Renders one polyline per series. A series with a single point also gets
/// a circle marker. The output depends only on the input.
pub fn render(title: &str, series: &[Series]) -> String {
    let xs = Axis::fit(series.iter().flat_map(|s| s.points.iter().map(|p| p.0)), false);
    let ys = Axis::fit(series.iter().flat_map(|s| s.points.iter().map(|p| p.1)), true);
    let (pw, ph) = (WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM);
    let px = |x: f64| LEFT + pw * xs.unit(x);
    let py = |y: f64| TOP + ph * (1.0 - ys.unit(y));

    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(w, r#"<title>{}</title>"#, escape(title));
    let _ = writeln!(w, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="18" text-anchor="middle" font-size="14">{}</text>"#,
        LEFT + pw / 2.0,
        escape(title)
    );
    let _ = writeln!(
        w,
        r#"<g class="axes" stroke="black" fill="none"><line x1="{LEFT}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/><line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{:.2}"/></g>"#,
        TOP + ph,
        LEFT + pw,
        TOP + ph,
        TOP + ph
    );
    for (u, label) in xs.ticks() {
        let x = LEFT + pw * u;
        let _ = writeln!(
            w,
            r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{label}</text>"#,
            TOP + ph,
            TOP + ph + 5.0,
            TOP + ph + 20.0
        );
    }
    for (u, label) in ys.ticks() {
        let y = TOP + ph * (1.0 - u);
        let _ = writeln!(
            w,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{LEFT}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{label}</text>"#,
            LEFT - 5.0,
            LEFT - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">Iteration</text>"#,
        LEFT + pw / 2.0,
        HEIGHT - 15.0
    );
    let ylabel = if ys.log { "Mean best penalized fitness (log scale)" } else { "Mean best penalized fitness" };
    let _ = writeln!(
        w,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">{ylabel}</text>"#,
        TOP + ph / 2.0,
        TOP + ph / 2.0
    );

    for (i, s) in series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let pts: Vec<String> =
            s.points.iter().filter(|p| p.1.is_finite()).map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y))).collect();
        let _ = writeln!(
            w,
            r#"<polyline class="series" data-label="{}" fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            escape(&s.label),
            pts.join(" ")
        );
        if let [(x, y)] = s.points[..] {
            let _ = writeln!(w, r#"<circle class="marker" cx="{:.2}" cy="{:.2}" r="4" fill="{color}"/>"#, px(x), py(y));
        }
        let ly = TOP + 10.0 + 20.0 * i as f64;
        let lx = LEFT + pw + 15.0;
        let _ = writeln!(
            w,
            r#"<g class="legend"><line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/><text x="{:.2}" y="{:.2}">{}</text></g>"#,
            lx + 20.0,
            lx + 25.0,
            ly + 4.0,
            escape(&s.label)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bmrbwr_core::IterationRecord;

    fn series(label: &str, ys: &[f64]) -> Series {
        Series { label: label.into(), points: ys.iter().enumerate().map(|(i, &y)| (i as f64, y)).collect() }
    }

    #[test]
    fn one_polyline_per_series() {
        let svg = render("t", &[series("BMR", &[10.0, 1.0, 0.1]), series("BWR", &[8.0, 0.5, 0.01])]);
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches(r#"class="legend""#).count(), 2);
        assert!(svg.contains("log scale"));
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg, render("t", &[series("BMR", &[10.0, 1.0, 0.1]), series("BWR", &[8.0, 0.5, 0.01])]));
    }

    #[test]
    fn single_point_gets_a_marker() {
        let svg = render("one", &[series("BMR", &[3.0])]);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(!svg.contains("NaN"));
    }

    #[test]
    fn negative_values_use_linear_axis() {
        let svg = render("easom", &[series("BWR", &[-0.2, -1.0])]);
        assert!(!svg.contains("log scale"));
        assert!(!svg.contains("NaN") && !svg.contains("inf"));
    }

    #[test]
    fn escapes_labels() {
        let svg = render("a<b", &[series("x&y", &[1.0, 2.0])]);
        assert!(svg.contains("a&lt;b") && svg.contains("x&amp;y"));
    }

    #[test]
    fn mean_best_averages_runs() {
        let row = |run_id, iteration, best| TraceRow {
            run_id,
            record: IterationRecord { iteration, fe_count: 0, best_penalized: best, mean_penalized: 0.0 },
        };
        let s = Series::mean_best("BMR", &[row(0, 0, 4.0), row(1, 0, 2.0), row(0, 1, 1.0), row(1, 1, 0.0)]);
        assert_eq!(s.points, vec![(0.0, 3.0), (1.0, 0.5)]);
    }
}
