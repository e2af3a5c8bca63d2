use std::fmt::Write;

use crate::engine::{Bar, BarKind};
use crate::scalar::GradeScalar;

const WIDTH: f64 = 640.0;
const LEFT: f64 = 48.0;
const RIGHT: f64 = 24.0;
const TOP: f64 = 16.0;
const ROW: f64 = 10.0;
const AXIS_GAP: f64 = 36.0;

const INF_COLOR: &str = "#2ca02c";
const HAT_COLOR: &str = "#1f77b4";

/// Horizontal range of the plot in grade units. Infinite bars run to the right
/// edge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GradeAxis {
    pub min: f64,
    pub max: f64,
}

impl GradeAxis {
    /// From zero to the largest finite endpoint, or `[0, 1]` with none.
    pub fn fit<T: GradeScalar>(bars: &[Bar<T>]) -> Self {
        let max = bars
            .iter()
            .flat_map(|b| [b.birth, b.death])
            .filter_map(|g| g.finite())
            .map(|v| v.to_real())
            .fold(0.0, f64::max);
        Self {
            min: 0.0,
            max: if max > 0.0 { max * 1.1 } else { 1.0 },
        }
    }

    fn x(&self, value: f64) -> f64 {
        let span = (self.max - self.min).max(f64::MIN_POSITIVE);
        let frac = ((value - self.min) / span).clamp(0.0, 1.0);
        LEFT + frac * (WIDTH - LEFT - RIGHT)
    }
}

/// Deterministic SVG barcode: one row per bar ordered by `(dim, kind, birth)`.
pub fn render_svg<T: GradeScalar>(bars: &[Bar<T>], axis: GradeAxis) -> String {
    let mut bars: Vec<&Bar<T>> = bars.iter().collect();
    bars.sort();
    let height = TOP + ROW * bars.len() as f64 + AXIS_GAP;
    let axis_y = TOP + ROW * bars.len() as f64 + 8.0;
    let right_edge = WIDTH - RIGHT;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    let mut last_dim = None;
    for (row, bar) in bars.iter().enumerate() {
        let y = TOP + ROW * row as f64 + ROW / 2.0;
        let color = match bar.kind {
            BarKind::Inf => INF_COLOR,
            BarKind::Hat => HAT_COLOR,
        };
        if last_dim != Some(bar.dim) {
            last_dim = Some(bar.dim);
            writeln!(
                s,
                r#"<text x="4" y="{:.2}" font-family="sans-serif" font-size="9">H{}</text>"#,
                y + 3.0,
                bar.dim
            )
            .unwrap();
        }
        let x0 = axis.x(bar.birth.to_real());
        let x1 = if bar.is_infinite() {
            right_edge - 6.0
        } else {
            axis.x(bar.death.to_real())
        };
        writeln!(
            s,
            r#"<line x1="{x0:.2}" y1="{y:.2}" x2="{x1:.2}" y2="{y:.2}" stroke="{color}" stroke-width="3" class="{}"/>"#,
            bar.kind.as_str()
        )
        .unwrap();
        if bar.is_infinite() {
            writeln!(
                s,
                r#"<polygon points="{:.2},{:.2} {right_edge:.2},{y:.2} {:.2},{:.2}" fill="{color}" class="arrow"/>"#,
                x1,
                y - 4.0,
                x1,
                y + 4.0
            )
            .unwrap();
        }
    }

    writeln!(
        s,
        r#"<line x1="{LEFT:.2}" y1="{axis_y:.2}" x2="{right_edge:.2}" y2="{axis_y:.2}" stroke="black" stroke-width="1"/>"#
    )
    .unwrap();
    for i in 0..=4 {
        let value = axis.min + (axis.max - axis.min) * i as f64 / 4.0;
        let x = axis.x(value);
        writeln!(
            s,
            r#"<line x1="{x:.2}" y1="{axis_y:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#,
            axis_y + 4.0
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{x:.2}" y="{:.2}" font-family="sans-serif" font-size="9" text-anchor="middle">{value:.3}</text>"#,
            axis_y + 15.0
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Grade;

    #[test]
    fn empty_has_axis_only() {
        let svg = render_svg::<f64>(&[], GradeAxis::fit::<f64>(&[]));
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(!svg.contains("class=\"inf\""));
        assert!(svg.contains("stroke=\"black\""));
    }

    #[test]
    fn infinite_bar_gets_arrow() {
        let bars = [Bar::new(0, BarKind::Inf, Grade::Finite(0.0), Grade::Infinite).unwrap()];
        let svg = render_svg(&bars, GradeAxis::fit(&bars));
        assert_eq!(svg.matches("class=\"arrow\"").count(), 1);
        assert_eq!(svg.matches(INF_COLOR).count(), 2);
    }

    #[test]
    fn deterministic_and_order_free() {
        let a = Bar::new(1, BarKind::Hat, Grade::Finite(0.5), Grade::Finite(1.0)).unwrap();
        let b = Bar::new(1, BarKind::Inf, Grade::Finite(0.7), Grade::Infinite).unwrap();
        let axis = GradeAxis { min: 0.0, max: 2.0 };
        assert_eq!(render_svg(&[a, b], axis), render_svg(&[b, a], axis));
    }
}
