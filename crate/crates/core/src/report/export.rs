use serde::{Deserialize, Serialize};

use crate::engine::{Bar, BarKind};
use crate::error::{Error, Result};
use crate::scalar::{parse_real_grade, Grade, GradeScalar};

pub const BARS_HEADER: &str = "dim,kind,birth,death";

pub fn write_bars_csv<T: GradeScalar>(bars: &[Bar<T>]) -> String {
    let mut out = String::from(BARS_HEADER);
    out.push('\n');
    for b in bars {
        out.push_str(&format!("{},{},{},{}\n", b.dim, b.kind.as_str(), b.birth, b.death));
    }
    out
}

pub fn read_bars_csv(text: &str) -> Result<Vec<Bar<f64>>> {
    let mut bars = Vec::new();
    let mut seen_header = false;
    for (n, line) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !seen_header {
            seen_header = true;
            if line == BARS_HEADER {
                continue;
            }
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let [dim, kind, birth, death] = fields[..] else {
            return Err(Error::parse(line_no, format!("expected 4 fields, found {}", fields.len())));
        };
        let dim = dim
            .parse()
            .map_err(|_| Error::parse(line_no, format!("invalid dimension `{dim}`")))?;
        let kind: BarKind = kind.parse().map_err(|e: Error| Error::parse(line_no, e.to_string()))?;
        let grade = |s: &str| {
            parse_real_grade(s).ok_or_else(|| Error::parse(line_no, format!("invalid grade `{s}`")))
        };
        let bar = Bar::new(dim, kind, grade(birth)?, grade(death)?)
            .map_err(|e| Error::parse(line_no, e.to_string()))?;
        bars.push(bar);
    }
    Ok(bars)
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonGrade {
    Finite(f64),
    Infinite(String),
}

#[derive(Serialize, Deserialize)]
struct JsonBar {
    dim: usize,
    kind: BarKind,
    birth: JsonGrade,
    death: JsonGrade,
}

fn to_json<T: GradeScalar>(g: Grade<T>) -> JsonGrade {
    match g {
        Grade::Finite(v) => JsonGrade::Finite(v.to_real()),
        Grade::Infinite => JsonGrade::Infinite("inf".into()),
    }
}

fn from_json(g: JsonGrade) -> Result<Grade<f64>> {
    match g {
        JsonGrade::Finite(v) if v.is_finite() && v >= 0.0 => Ok(Grade::Finite(v)),
        JsonGrade::Infinite(s) if s == "inf" => Ok(Grade::Infinite),
        JsonGrade::Finite(v) => Err(Error::InvalidGrade(v.to_string())),
        JsonGrade::Infinite(s) => Err(Error::InvalidGrade(s)),
    }
}

/// A JSON array of `{dim, kind, birth, death}` with `"inf"` for `∞`.
pub fn write_bars_json<T: GradeScalar>(bars: &[Bar<T>]) -> String {
    let records: Vec<JsonBar> = bars
        .iter()
        .map(|b| JsonBar {
            dim: b.dim,
            kind: b.kind,
            birth: to_json(b.birth),
            death: to_json(b.death),
        })
        .collect();
    serde_json::to_string_pretty(&records).expect("plain data serializes")
}

pub fn read_bars_json(text: &str) -> Result<Vec<Bar<f64>>> {
    let records: Vec<JsonBar> =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    records
        .into_iter()
        .map(|r| Bar::new(r.dim, r.kind, from_json(r.birth)?, from_json(r.death)?))
        .collect()
}
