//! Brute-force persistent homology straight from the subspace definitions.
//!
//! Every snapshot `𝓗^t` is materialised as subspaces of the ambient chain
//! groups; persistent Betti numbers are dimensions of kernels and
//! intersections. Bars are recovered from the rank tables by inclusion and
//! exclusion. Nothing here shares code with the pivoting engine, and no
//! tolerance is used anywhere.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::engine::{Bar, BarKind};
use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::gf2::{self, Subspace};
use crate::hypergraph::{Ambient, Hyperedge};
use crate::scalar::{Grade, GradeScalar};

/// Subspaces of one snapshot, per dimension `0..=max_n + 1`.
#[derive(Clone, Debug)]
pub struct GradeSnapshot<T> {
    pub t: Grade<T>,
    /// `𝓗ₙ^t`
    pub chains: Vec<Subspace>,
    pub inf: Vec<Subspace>,
    pub sup: Vec<Subspace>,
}

/// Materialises the snapshot at `t` up to dimension `max_n + 1`.
pub fn snapshot<T: GradeScalar>(f: &Filtration<T>, t: Grade<T>, max_n: usize) -> Result<GradeSnapshot<T>> {
    Ambient::new(f.roster().len())?;
    let h = f.hypergraph_at(t);
    let top = max_n + 1;
    let chains = (0..=top).map(|n| h.chain_space(n)).collect::<Result<_>>()?;
    let inf = (0..=top).map(|n| h.inf_chain_space(n)).collect::<Result<_>>()?;
    let sup = (0..=top).map(|n| h.sup_chain_space(n)).collect::<Result<_>>()?;
    Ok(GradeSnapshot { t, chains, inf, sup })
}

/// Cycle and boundary spaces needed for persistent Betti numbers in dimension `n`.
struct Pieces {
    inf_cycles: Subspace,
    sup_cycles: Subspace,
    inf_boundaries: Subspace,
}

fn pieces<T: GradeScalar>(f: &Filtration<T>, n: usize, t: Grade<T>) -> Result<Pieces> {
    let amb = Ambient::new(f.roster().len())?;
    let h = f.hypergraph_at(t);
    let cycles = gf2::kernel_basis(&amb.boundary_matrix(n));
    Ok(Pieces {
        inf_cycles: gf2::subspace_intersection(&h.inf_chain_space(n)?, &cycles)?,
        sup_cycles: gf2::subspace_intersection(&h.sup_chain_space(n)?, &cycles)?,
        inf_boundaries: h.inf_chain_space(n + 1)?.image(&amb.boundary_matrix(n + 1))?,
    })
}

fn persistent(cycles: &Subspace, boundaries: &Subspace) -> Result<usize> {
    Ok(cycles.dim() - gf2::subspace_intersection(cycles, boundaries)?.dim())
}

/// `dim ker(∂ₙ on infₙ^t) − dim(ker ∩ ∂(infₙ₊₁^r))`.
pub fn persistent_betti_inf<T: GradeScalar>(
    f: &Filtration<T>,
    n: usize,
    t: Grade<T>,
    r: Grade<T>,
) -> Result<usize> {
    if t > r {
        return Err(Error::ReversedWindow);
    }
    let at_t = pieces(f, n, t)?;
    let at_r = pieces(f, n, r)?;
    persistent(&at_t.inf_cycles, &at_r.inf_boundaries)
}

/// `dim ker(∂ₙ on supₙ^t) − dim(ker ∩ ∂(infₙ₊₁^r))`.
pub fn persistent_betti_hat<T: GradeScalar>(
    f: &Filtration<T>,
    n: usize,
    t: Grade<T>,
    r: Grade<T>,
) -> Result<usize> {
    if t > r {
        return Err(Error::ReversedWindow);
    }
    let at_t = pieces(f, n, t)?;
    let at_r = pieces(f, n, r)?;
    persistent(&at_t.sup_cycles, &at_r.inf_boundaries)
}

/// Persistent Betti numbers over every pair of critical grades.
///
/// Column index `grades.len()` stands for `r = ∞`. Entries with `r < t` are
/// unused and stored as zero.
#[derive(Clone, Debug, PartialEq)]
pub struct PersistentBettiTable<T> {
    pub dim: usize,
    pub grades: Vec<T>,
    pub inf: Vec<Vec<usize>>,
    pub hat: Vec<Vec<usize>>,
}

impl<T: GradeScalar> PersistentBettiTable<T> {
    /// Grade for a column index, `∞` past the end.
    pub fn column_grade(&self, j: usize) -> Grade<T> {
        self.grades.get(j).map_or(Grade::Infinite, |g| Grade::Finite(*g))
    }

    /// `β_hat − β_inf`, entrywise.
    pub fn additional(&self) -> Result<Vec<Vec<usize>>> {
        self.hat
            .iter()
            .zip(&self.inf)
            .enumerate()
            .map(|(i, (h, b))| {
                h.iter()
                    .zip(b)
                    .enumerate()
                    .map(|(j, (h, b))| {
                        h.checked_sub(*b).ok_or_else(|| {
                            Error::NonRealizable(format!("hat below inf at ({i}, {j})"))
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

/// Computes the table for dimension `n`.
pub fn betti_table<T: GradeScalar>(f: &Filtration<T>, n: usize) -> Result<PersistentBettiTable<T>> {
    Ambient::new(f.roster().len())?;
    let grades = f.critical_grades();
    let m = grades.len();
    let mut at: Vec<Grade<T>> = grades.iter().map(|g| Grade::Finite(*g)).collect();
    at.push(Grade::Infinite);
    let per_grade: Vec<Pieces> = at
        .par_iter()
        .map(|g| pieces(f, n, *g))
        .collect::<Result<_>>()?;
    let rows: Vec<(Vec<usize>, Vec<usize>)> = (0..m)
        .into_par_iter()
        .map(|i| {
            let mut inf = vec![0; m + 1];
            let mut hat = vec![0; m + 1];
            for j in i..=m {
                inf[j] = persistent(&per_grade[i].inf_cycles, &per_grade[j].inf_boundaries)?;
                hat[j] = persistent(&per_grade[i].sup_cycles, &per_grade[j].inf_boundaries)?;
            }
            Ok((inf, hat))
        })
        .collect::<Result<_>>()?;
    let (inf, hat) = rows.into_iter().unzip();
    Ok(PersistentBettiTable { dim: n, grades, inf, hat })
}

/// Count of bars born by `grades[i]` and alive past column `j` (`j = m` means
/// still alive at `∞`).
pub fn rank_function<T: GradeScalar>(bars: &[Bar<T>], grades: &[T], i: usize, j: usize) -> usize {
    let t = Grade::Finite(grades[i]);
    bars.iter()
        .filter(|b| {
            b.birth <= t
                && match grades.get(j) {
                    Some(r) => b.death > Grade::Finite(*r),
                    None => b.is_infinite(),
                }
        })
        .count()
}

/// Recovers the unique bar multiset with the given rank table.
pub fn bars_from_table<T: GradeScalar>(
    table: &[Vec<usize>],
    grades: &[T],
    dim: usize,
    kind: BarKind,
) -> Result<Vec<Bar<T>>> {
    let m = grades.len();
    let beta = |i: isize, j: usize| -> i64 {
        if i < 0 {
            0
        } else {
            table[i as usize][j] as i64
        }
    };
    let mut bars = Vec::new();
    for i in 0..m {
        let ii = i as isize;
        for j in (i + 1)..=m {
            let mult = if j == m {
                beta(ii, m) - beta(ii - 1, m)
            } else {
                beta(ii, j - 1) - beta(ii - 1, j - 1) - beta(ii, j) + beta(ii - 1, j)
            };
            if mult < 0 {
                return Err(Error::NonRealizable(format!(
                    "negative multiplicity {mult} for birth index {i}, death index {j}"
                )));
            }
            let death = grades.get(j).map_or(Grade::Infinite, |g| Grade::Finite(*g));
            for _ in 0..mult {
                bars.push(Bar {
                    dim,
                    kind,
                    birth: Grade::Finite(grades[i]),
                    death,
                });
            }
        }
    }
    for i in 0..m {
        for j in i..=m {
            if rank_function(&bars, grades, i, j) != table[i][j] {
                return Err(Error::NonRealizable(format!(
                    "recovered bars disagree with the table at ({i}, {j})"
                )));
            }
        }
    }
    Ok(bars)
}

/// Embedded-homology bars and additional hat bars recovered from the table.
pub fn bars_from_betti<T: GradeScalar>(table: &PersistentBettiTable<T>) -> Result<(Vec<Bar<T>>, Vec<Bar<T>>)> {
    let inf = bars_from_table(&table.inf, &table.grades, table.dim, BarKind::Inf)?;
    let additional = bars_from_table(&table.additional()?, &table.grades, table.dim, BarKind::Hat)?;
    Ok((inf, additional))
}

/// Oracle bars for dimensions `0..=max_n`, sorted.
pub fn oracle_bars<T: GradeScalar>(f: &Filtration<T>, max_n: usize) -> Result<Vec<Bar<T>>> {
    let mut bars = Vec::new();
    for n in 0..=max_n {
        let (inf, hat) = bars_from_betti(&betti_table(f, n)?)?;
        bars.extend(inf);
        bars.extend(hat);
    }
    bars.sort();
    Ok(bars)
}

/// Which side of a comparison holds an unmatched bar.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    EngineOnly,
    OracleOnly,
}

#[derive(Clone, Debug)]
pub struct Discrepancy<T> {
    pub bar: Bar<T>,
    pub side: Side,
}

/// Multiset difference between two bar lists.
#[derive(Clone, Debug)]
pub struct DiffReport<T> {
    pub entries: Vec<Discrepancy<T>>,
}

impl<T> DiffReport<T> {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<T: GradeScalar> fmt::Display for DiffReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "no discrepancies");
        }
        for d in &self.entries {
            let side = match d.side {
                Side::EngineOnly => "engine-only",
                Side::OracleOnly => "oracle-only",
            };
            writeln!(
                f,
                "{side}: dim {} {} [{}, {})",
                d.bar.dim,
                d.bar.kind.as_str(),
                d.bar.birth,
                d.bar.death
            )?;
        }
        Ok(())
    }
}

pub fn compare<T: GradeScalar>(engine: &[Bar<T>], oracle: &[Bar<T>]) -> DiffReport<T> {
    let mut counts: BTreeMap<Bar<T>, i64> = BTreeMap::new();
    for b in engine {
        *counts.entry(*b).or_default() += 1;
    }
    for b in oracle {
        *counts.entry(*b).or_default() -= 1;
    }
    let mut entries = Vec::new();
    for (bar, c) in counts {
        let side = if c > 0 { Side::EngineOnly } else { Side::OracleOnly };
        for _ in 0..c.unsigned_abs() {
            entries.push(Discrepancy { bar, side });
        }
    }
    DiffReport { entries }
}

/// Textbook persistence of a simplicial filtration.
///
/// All finite simplices are ordered by `(grade, dimension, members)` into a
/// single boundary matrix, columns are reduced left to right with the
/// largest row index as pivot, and each pivot pair `(σ, τ)` is read as a
/// bar `[f(σ), f(τ))` in dimension `dim σ`.
pub fn classical_bars<T: GradeScalar>(f: &Filtration<T>, max_k: usize) -> Result<Vec<Bar<T>>> {
    if !f.is_simplicial() {
        return Err(Error::Invalid("filtration is not simplicial".into()));
    }
    let mut simplices: Vec<(Grade<T>, usize, Hyperedge)> = f
        .finite_entries()
        .into_iter()
        .filter(|(e, _)| e.dim() <= max_k + 1)
        .map(|(e, g)| (Grade::Finite(g), e.dim(), e))
        .collect();
    simplices.sort();
    let position: HashMap<Hyperedge, usize> = simplices
        .iter()
        .enumerate()
        .map(|(i, (_, _, e))| (e.clone(), i))
        .collect();

    let mut columns: Vec<Vec<usize>> = simplices
        .iter()
        .map(|(_, _, e)| {
            let mut rows: Vec<usize> = e.faces().iter().map(|face| position[face]).collect();
            rows.sort_unstable();
            rows
        })
        .collect();
    let mut low_owner: HashMap<usize, usize> = HashMap::new();
    let mut paired = vec![false; simplices.len()];
    let mut bars = Vec::new();
    for j in 0..columns.len() {
        while let Some(&low) = columns[j].last() {
            match low_owner.get(&low) {
                Some(&k) => {
                    let other = columns[k].clone();
                    columns[j] = symmetric_difference(&columns[j], &other);
                }
                None => {
                    low_owner.insert(low, j);
                    paired[low] = true;
                    paired[j] = true;
                    let (birth, dim, _) = &simplices[low];
                    let death = simplices[j].0;
                    if *birth < death && *dim <= max_k {
                        bars.push(Bar {
                            dim: *dim,
                            kind: BarKind::Inf,
                            birth: *birth,
                            death,
                        });
                    }
                    break;
                }
            }
        }
    }
    for (i, (g, dim, _)) in simplices.iter().enumerate() {
        if !paired[i] && columns[i].is_empty() && *dim <= max_k {
            bars.push(Bar {
                dim: *dim,
                kind: BarKind::Inf,
                birth: *g,
                death: Grade::Infinite,
            });
        }
    }
    bars.sort();
    Ok(bars)
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
