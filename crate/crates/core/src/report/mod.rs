//! Summary statistics, bar file exports and SVG barcode plots.

mod export;
mod stats;
mod svg;

pub use export::{read_bars_csv, read_bars_json, write_bars_csv, write_bars_json, BARS_HEADER};
pub use stats::{betti_at, length_histogram, stats, HistogramBin, Ratio, StatsSummary};
pub use svg::{render_svg, GradeAxis};
