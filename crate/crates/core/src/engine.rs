//! Barcodes of a hypergraph filtration by boundary-matrix pivoting.
//!
//! For each dimension `k` the rows of the matrix are `k`-hyperedges sorted by
//! grade, latest first, and the columns are finite `(k+1)`-hyperedges sorted
//! by grade, earliest first. Pivots are computed row by row. A row paired with
//! a column yields `(birth, death) = (f(row), f(column))`; an unpaired row
//! dies at `∞`. Pairs with `birth < death` are embedded-homology bars, pairs
//! with `birth > death` are additional hat bars `(death, birth)`.
//!
//! Within equal grades, columns are sorted by ascending member list and rows by
//! descending member list, so the row order of dimension `k` is exactly the
//! reverse of the column order of dimension `k − 1`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::gf2::{BitMatrix, BitVector};
use crate::hypergraph::Hyperedge;
use crate::scalar::{Grade, GradeScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BarKind {
    /// Persistent embedded homology.
    Inf,
    /// Additional persistent hat homology.
    Hat,
}

impl BarKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            BarKind::Inf => "inf",
            BarKind::Hat => "hat",
        }
    }
}

impl std::str::FromStr for BarKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" => Ok(BarKind::Inf),
            "hat" => Ok(BarKind::Hat),
            other => Err(Error::Invalid(format!("unknown bar kind `{other}`"))),
        }
    }
}

/// A half-open interval `[birth, death)` in dimension `dim`.
#[derive(Clone, Copy, Debug)]
pub struct Bar<T> {
    pub dim: usize,
    pub kind: BarKind,
    pub birth: Grade<T>,
    pub death: Grade<T>,
}

impl<T: GradeScalar> Bar<T> {
    pub fn new(dim: usize, kind: BarKind, birth: Grade<T>, death: Grade<T>) -> Result<Self> {
        if birth >= death {
            return Err(Error::Invalid(format!(
                "bar birth {birth} is not before death {death}"
            )));
        }
        Ok(Self {
            dim,
            kind,
            birth,
            death,
        })
    }

    /// Alive over the whole window: born by `t`, still alive after `r`.
    pub fn spans(&self, t: Grade<T>, r: Grade<T>) -> bool {
        self.birth <= t && self.death > r
    }

    pub fn is_infinite(&self) -> bool {
        !self.death.is_finite()
    }

    pub fn map<U: GradeScalar>(self, f: impl Fn(T) -> U) -> Bar<U> {
        Bar {
            dim: self.dim,
            kind: self.kind,
            birth: self.birth.map(&f),
            death: self.death.map(&f),
        }
    }
}

impl<T: GradeScalar> PartialEq for Bar<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: GradeScalar> Eq for Bar<T> {}

impl<T: GradeScalar> PartialOrd for Bar<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: GradeScalar> Ord for Bar<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dim, self.kind, self.birth, self.death).cmp(&(
            other.dim,
            other.kind,
            other.birth,
            other.death,
        ))
    }
}

/// Which rows emit bars.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Rows that were pivot columns one dimension down are skipped.
    #[default]
    Filtered,
    /// Every row emits, including those that killed a lower-dimensional class.
    Literal,
}

/// Boundary matrix of one dimension with its ordered row and column hyperedges.
#[derive(Clone, Debug)]
pub struct DimMatrix<T> {
    pub k: usize,
    pub rows: Vec<(Hyperedge, Grade<T>)>,
    pub cols: Vec<(Hyperedge, T)>,
    pub matrix: BitMatrix,
}

/// Builds the dimension-`k` matrix.
///
/// Rows are the finite `k`-hyperedges plus every face of a column; other
/// `k`-hyperedges have no entries and infinite birth, so they never emit.
pub fn build_dim_matrix<T: GradeScalar>(f: &Filtration<T>, k: usize) -> Result<DimMatrix<T>> {
    if k + 1 > f.max_dim() {
        return Err(Error::DimensionOverCap {
            dim: k + 1,
            cap: f.max_dim(),
        });
    }
    let mut cols = f.finite_edges(k + 1);
    cols.sort_by(|(ea, ga), (eb, gb)| {
        Grade::Finite(*ga)
            .cmp(&Grade::Finite(*gb))
            .then_with(|| ea.cmp(eb))
    });

    let mut universe: BTreeSet<Hyperedge> = f.finite_edges(k).into_iter().map(|(e, _)| e).collect();
    for (c, _) in &cols {
        universe.extend(c.faces());
    }
    let mut rows: Vec<(Hyperedge, Grade<T>)> = universe
        .into_iter()
        .map(|e| {
            let g = f.grade(&e);
            (e, g)
        })
        .collect();
    rows.sort_by(|(ea, ga), (eb, gb)| gb.cmp(ga).then_with(|| eb.cmp(ea)));

    let row_index: HashMap<&Hyperedge, usize> =
        rows.iter().enumerate().map(|(i, (e, _))| (e, i)).collect();
    let columns = cols
        .iter()
        .map(|(c, _)| BitVector::from_support(rows.len(), c.faces().iter().map(|face| row_index[face])))
        .collect();
    let matrix = BitMatrix::from_columns(rows.len(), columns)?;
    Ok(DimMatrix { k, rows, cols, matrix })
}

/// Pivot pairs `(row, column)` with the number of column additions applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotSet {
    pub pairs: Vec<(usize, usize)>,
    pub row_pivot: Vec<Option<usize>>,
    pub col_pivot: Vec<Option<usize>>,
    pub additions: Vec<u32>,
}

impl PivotSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Row-by-row pivoting.
///
/// For each row in order: take the smallest non-pivot column with a one in
/// that row, record the pivot, then add that column to every later non-pivot
/// column with a one in the row.
///
/// Once row `i` is processed no non-pivot column has a one in rows `≤ i`, so
/// the columns with a one in row `i` are exactly the non-pivot columns whose
/// lowest set row is `i`; they are kept in per-row buckets.
pub fn compute_pivot(m: &BitMatrix) -> PivotSet {
    let n_rows = m.rows();
    let n_cols = m.cols();
    let mut columns: Vec<BitVector> = m.columns().to_vec();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n_rows];
    for (j, c) in columns.iter().enumerate() {
        if let Some(low) = c.lowest() {
            buckets[low].push(j);
        }
    }
    let mut set = PivotSet {
        pairs: Vec::new(),
        row_pivot: vec![None; n_rows],
        col_pivot: vec![None; n_cols],
        additions: vec![0; n_cols],
    };
    for i in 0..n_rows {
        let mut candidates = std::mem::take(&mut buckets[i]);
        if candidates.is_empty() {
            continue;
        }
        candidates.sort_unstable();
        let j = candidates[0];
        set.pairs.push((i, j));
        set.row_pivot[i] = Some(j);
        set.col_pivot[j] = Some(i);
        let pivot_column = std::mem::replace(&mut columns[j], BitVector::zeros(0));
        for &c in &candidates[1..] {
            columns[c].add_assign(&pivot_column);
            set.additions[c] += 1;
            if let Some(low) = columns[c].lowest() {
                debug_assert!(low > i);
                buckets[low].push(c);
            }
        }
        columns[j] = pivot_column;
    }
    set
}

/// `k`-hyperedges that are pivot columns of the dimension `k − 1` matrix.
pub fn negative_rows<T: GradeScalar>(f: &Filtration<T>, k: usize) -> Result<BTreeSet<Hyperedge>> {
    if k == 0 {
        return Ok(BTreeSet::new());
    }
    let below = build_dim_matrix(f, k - 1)?;
    let pivots = compute_pivot(&below.matrix);
    Ok(pivot_columns(&below, &pivots))
}

fn pivot_columns<T>(m: &DimMatrix<T>, pivots: &PivotSet) -> BTreeSet<Hyperedge> {
    pivots
        .pairs
        .iter()
        .map(|&(_, j)| m.cols[j].0.clone())
        .collect()
}

/// Reads bars off the pivots, one candidate pair per row.
pub fn extract_bars<T: GradeScalar>(
    m: &DimMatrix<T>,
    pivots: &PivotSet,
    mode: Mode,
    negative: &BTreeSet<Hyperedge>,
) -> Vec<Bar<T>> {
    let mut bars = Vec::new();
    for (i, (edge, birth)) in m.rows.iter().enumerate() {
        if mode == Mode::Filtered && negative.contains(edge) {
            continue;
        }
        let birth = *birth;
        let death = match pivots.row_pivot[i] {
            Some(j) => Grade::Finite(m.cols[j].1),
            None => Grade::Infinite,
        };
        match birth.cmp(&death) {
            Ordering::Less => bars.push(Bar {
                dim: m.k,
                kind: BarKind::Inf,
                birth,
                death,
            }),
            Ordering::Greater => bars.push(Bar {
                dim: m.k,
                kind: BarKind::Hat,
                birth: death,
                death: birth,
            }),
            // zero length, including (∞, ∞)
            Ordering::Equal => {}
        }
    }
    bars
}

/// Bars of dimensions `0..=max_k`, sorted by `(dim, kind, birth, death)`.
pub fn compute_barcodes<T: GradeScalar>(
    f: &Filtration<T>,
    max_k: usize,
    mode: Mode,
) -> Result<Vec<Bar<T>>> {
    if max_k + 1 > f.max_dim() {
        return Err(Error::DimensionOverCap {
            dim: max_k + 1,
            cap: f.max_dim(),
        });
    }
    let mut bars = Vec::new();
    let mut negative = BTreeSet::new();
    for k in 0..=max_k {
        let m = build_dim_matrix(f, k)?;
        let pivots = compute_pivot(&m.matrix);
        bars.extend(extract_bars(&m, &pivots, mode, &negative));
        negative = pivot_columns(&m, &pivots);
    }
    bars.sort();
    Ok(bars)
}

/// A summand of the graded module decomposition, indexed by critical grades.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ModuleSummand {
    /// `Σ^start R[t]`.
    Free { start: usize },
    /// `Σ^start R[t]/(t^length)`.
    Torsion { start: usize, length: usize },
}

fn index_of<T: GradeScalar>(g: &Grade<T>, critical: &[T]) -> Result<usize> {
    critical
        .iter()
        .position(|c| Grade::Finite(*c) == *g)
        .ok_or_else(|| Error::NotCriticalGrade(g.to_string()))
}

/// Free summands for infinite bars, torsion summands for finite ones.
pub fn decompose<T: GradeScalar>(bars: &[Bar<T>], critical: &[T]) -> Result<Vec<ModuleSummand>> {
    bars.iter()
        .map(|b| {
            let start = index_of(&b.birth, critical)?;
            Ok(match b.death {
                Grade::Infinite => ModuleSummand::Free { start },
                death => ModuleSummand::Torsion {
                    start,
                    length: index_of(&death, critical)? - start,
                },
            })
        })
        .collect()
}

/// Inverse of [`decompose`] for a given dimension and kind.
pub fn recompose<T: GradeScalar>(
    summands: &[ModuleSummand],
    critical: &[T],
    dim: usize,
    kind: BarKind,
) -> Result<Vec<Bar<T>>> {
    let at = |i: usize| {
        critical
            .get(i)
            .map(|g| Grade::Finite(*g))
            .ok_or_else(|| Error::Invalid(format!("grade index {i} out of range")))
    };
    summands
        .iter()
        .map(|s| match *s {
            ModuleSummand::Free { start } => Bar::new(dim, kind, at(start)?, Grade::Infinite),
            ModuleSummand::Torsion { start, length } => {
                Bar::new(dim, kind, at(start)?, at(start + length)?)
            }
        })
        .collect()
}
