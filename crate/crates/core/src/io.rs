//! Text formats for filtrations and point clouds.
//!
//! Filtration file:
//!
//! ```text
//! hyperedge,grade
//! A,0
//! A|B,0
//! A|B|C,0.287682072
//! D|E,inf
//! ```
//!
//! Members are `|`-joined in roster order, grades carry 9 significant digits,
//! rows are sorted by grade and then lexicographically by member list.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::hypergraph::{Hyperedge, Roster};
use crate::rips::PointCloud;
use crate::scalar::{parse_real_grade, Grade, GradeScalar};

pub const FILTRATION_HEADER: &str = "hyperedge,grade";

pub fn write_filtration<T: GradeScalar>(f: &Filtration<T>) -> String {
    let mut rows: Vec<(Grade<T>, Hyperedge)> = f
        .finite_entries()
        .into_iter()
        .map(|(e, g)| (Grade::Finite(g), e))
        .collect();
    rows.extend(
        f.explicit_entries()
            .filter(|(_, g)| !g.is_finite())
            .map(|(e, g)| (*g, e.clone())),
    );
    rows.sort();
    let mut out = String::from(FILTRATION_HEADER);
    out.push('\n');
    for (g, e) in rows {
        out.push_str(&f.roster().render(&e));
        out.push(',');
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// Reads a filtration file. The tracked dimension cap is the larger of
/// `min_max_dim` and the largest hyperedge dimension present.
pub fn read_filtration(text: &str, min_max_dim: usize) -> Result<Filtration<f64>> {
    let mut rows: Vec<(usize, Vec<&str>, Grade<f64>)> = Vec::new();
    let mut seen_header = false;
    for (n, line) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !seen_header {
            seen_header = true;
            if line == FILTRATION_HEADER {
                continue;
            }
        }
        let (edge, grade) = line
            .split_once(',')
            .ok_or_else(|| Error::parse(line_no, "expected `hyperedge,grade`"))?;
        let members: Vec<&str> = edge.split('|').map(str::trim).collect();
        if members.iter().any(|m| m.is_empty()) {
            return Err(Error::parse(line_no, format!("empty member in `{edge}`")));
        }
        let grade = parse_real_grade(grade)
            .ok_or_else(|| Error::parse(line_no, format!("invalid grade `{}`", grade.trim())))?;
        rows.push((line_no, members, grade));
    }
    let roster = Roster::canonical(rows.iter().flat_map(|(_, m, _)| m.iter().copied()));
    let top = rows.iter().map(|(_, m, _)| m.len() - 1).max().unwrap_or(0);
    let mut f = Filtration::new(roster, top.max(min_max_dim));
    let mut seen = BTreeSet::new();
    for (line_no, members, grade) in rows {
        let e = f
            .roster()
            .edge(&members)
            .map_err(|e| Error::parse(line_no, e.to_string()))?;
        if !seen.insert(e.clone()) {
            return Err(Error::parse(line_no, "duplicate hyperedge"));
        }
        f.set(e, grade).map_err(|e| Error::parse(line_no, e.to_string()))?;
    }
    Ok(f)
}

/// Whitespace-separated coordinates, one point per line.
pub fn read_points(text: &str) -> Result<PointCloud<f64>> {
    let mut points = Vec::new();
    let mut dim = None;
    for (n, line) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let coords = line
            .split_ascii_whitespace()
            .map(|c| {
                c.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| Error::parse(line_no, format!("invalid coordinate `{c}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        match dim {
            None => dim = Some(coords.len()),
            Some(d) if d != coords.len() => {
                return Err(Error::parse(
                    line_no,
                    format!("expected {d} coordinates, found {}", coords.len()),
                ))
            }
            _ => {}
        }
        points.push(coords);
    }
    PointCloud::new(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::meeting_filtration;

    #[test]
    fn worked_example_file() {
        let text = write_filtration(&meeting_filtration());
        let expected = "\
hyperedge,grade
A,0
A|B,0
B,0
C,0
D,0
E,0
F,0
A|B|C,0.287682072
D|F,0.287682072
C|D,0.693147181
C|F,0.693147181
D|E|F,0.693147181
A|C,1.38629436
B|C,1.38629436
";
        assert_eq!(text, expected);
    }

    #[test]
    fn read_back_preserves_order() {
        let f = meeting_filtration();
        let g = read_filtration(&write_filtration(&f), 0).unwrap();
        assert_eq!(g.roster(), f.roster());
        assert_eq!(g.max_dim(), 2);
        for (e, grade) in f.finite_entries() {
            let back = g.grade(&e).finite().unwrap();
            assert!((back - crate::scalar::GradeScalar::to_real(&grade)).abs() < 1e-8);
        }
        assert_eq!(write_filtration(&g), write_filtration(&f));
    }

    #[test]
    fn explicit_infinity_rows() {
        let g = read_filtration("hyperedge,grade\nA|B,inf\nA|B|C,1\n", 0).unwrap();
        let text = write_filtration(&g);
        assert!(text.ends_with("A|B|C,1\nA|B,inf\n"));
    }

    #[test]
    fn read_errors_carry_line_numbers() {
        assert!(matches!(read_filtration("hyperedge,grade\nA|B\n", 0), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_filtration("A|B,x\n", 0), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_filtration("A|B,-1\n", 0), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_filtration("A|A,1\n", 0), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_filtration("A|B,1\nB|A,2\n", 0), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_filtration("A||B,1\n", 0), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn points() {
        let cloud = read_points("# square\n0 0\n1 0\n\n1 1\n").unwrap();
        assert_eq!(cloud.len(), 3);
        assert_eq!(cloud.dim(), 2);
        assert!(matches!(read_points("0 0\n1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_points("0 x\n"), Err(Error::Parse { line: 1, .. })));
    }
}
