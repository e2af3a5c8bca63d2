//! Hypergraph filtrations: a grade for every subset of the roster.
//!
//! Only explicitly graded hyperedges are stored. Singletons default to the
//! origin grade, every other hyperedge defaults to `+∞`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph, Roster};
use crate::scalar::{Grade, GradeScalar};

#[derive(Clone, Debug)]
pub struct Filtration<T> {
    roster: Roster,
    max_dim: usize,
    /// Explicit grades, indexed by hyperedge dimension.
    by_dim: Vec<BTreeMap<Hyperedge, Grade<T>>>,
}

impl<T: GradeScalar> Filtration<T> {
    /// Empty filtration tracking hyperedges up to dimension `max_dim`.
    pub fn new(roster: Roster, max_dim: usize) -> Self {
        Self {
            roster,
            max_dim,
            by_dim: vec![BTreeMap::new(); max_dim + 1],
        }
    }

    pub fn roster(&self) -> &Roster {
        &self.roster
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    /// Raises the tracked dimension cap.
    pub fn with_max_dim(mut self, max_dim: usize) -> Self {
        if max_dim > self.max_dim {
            self.by_dim.resize(max_dim + 1, BTreeMap::new());
            self.max_dim = max_dim;
        }
        self
    }

    pub fn set(&mut self, e: Hyperedge, grade: Grade<T>) -> Result<()> {
        if e.dim() > self.max_dim {
            return Err(Error::DimensionOverCap {
                dim: e.dim(),
                cap: self.max_dim,
            });
        }
        if let Some(&m) = e.members().iter().find(|&&m| m as usize >= self.roster.len()) {
            return Err(Error::InvalidHyperedge(format!(
                "member {m} outside the roster of {}",
                self.roster.len()
            )));
        }
        if let Grade::Finite(v) = grade {
            if !v.is_admissible() {
                return Err(Error::InvalidGrade(format!("{v:?}")));
            }
        }
        self.by_dim[e.dim()].insert(e, grade);
        Ok(())
    }

    /// Sets a grade from vertex labels.
    pub fn set_labels<S: AsRef<str>>(&mut self, labels: &[S], grade: Grade<T>) -> Result<()> {
        let e = self.roster.edge(labels)?;
        self.set(e, grade)
    }

    pub fn grade(&self, e: &Hyperedge) -> Grade<T> {
        if let Some(g) = self.by_dim.get(e.dim()).and_then(|m| m.get(e)) {
            return *g;
        }
        if e.size() == 1 && (e.members()[0] as usize) < self.roster.len() {
            Grade::origin()
        } else {
            Grade::Infinite
        }
    }

    /// Finite-grade hyperedges of dimension `k`, in lexicographic order.
    pub fn finite_edges(&self, k: usize) -> Vec<(Hyperedge, T)> {
        if k == 0 {
            return (0..self.roster.len() as u32)
                .map(Hyperedge::vertex)
                .filter_map(|v| self.grade(&v).finite().map(|g| (v, g)))
                .collect();
        }
        match self.by_dim.get(k) {
            Some(m) => m
                .iter()
                .filter_map(|(e, g)| g.finite().map(|v| (e.clone(), v)))
                .collect(),
            None => Vec::new(),
        }
    }

    /// All finite-grade hyperedges with their grades, dimension ascending.
    pub fn finite_entries(&self) -> Vec<(Hyperedge, T)> {
        (0..=self.max_dim).flat_map(|k| self.finite_edges(k)).collect()
    }

    /// Explicitly stored entries, including explicit `∞`.
    pub fn explicit_entries(&self) -> impl Iterator<Item = (&Hyperedge, &Grade<T>)> {
        self.by_dim.iter().flat_map(|m| m.iter())
    }

    /// Sorted distinct finite grades of all tracked hyperedges.
    pub fn critical_grades(&self) -> Vec<T> {
        let mut grades: Vec<Grade<T>> = self
            .finite_entries()
            .into_iter()
            .map(|(_, g)| Grade::Finite(g))
            .collect();
        grades.sort();
        grades.dedup();
        grades.into_iter().filter_map(|g| g.finite()).collect()
    }

    /// True iff every finite-grade face is graded no later than its cofaces.
    pub fn is_simplicial(&self) -> bool {
        self.finite_entries().iter().all(|(e, g)| {
            e.faces()
                .iter()
                .all(|f| self.grade(f) <= Grade::Finite(*g))
        })
    }

    /// The hypergraph `{e : f(e) ≤ t}`.
    pub fn hypergraph_at(&self, t: Grade<T>) -> Hypergraph {
        let edges: BTreeSet<Hyperedge> = self
            .finite_entries()
            .into_iter()
            .filter(|(_, g)| Grade::Finite(*g) <= t)
            .map(|(e, _)| e)
            .collect();
        Hypergraph::new(self.roster.clone(), edges).expect("members validated on insert")
    }

    /// Re-keys every grade. `f` must be monotone for the result to describe
    /// the same filtration order.
    pub fn map_grades<U: GradeScalar>(&self, f: impl Fn(T) -> U) -> Filtration<U> {
        Filtration {
            roster: self.roster.clone(),
            max_dim: self.max_dim,
            by_dim: self
                .by_dim
                .iter()
                .map(|m| m.iter().map(|(e, g)| (e.clone(), g.map(&f))).collect())
                .collect(),
        }
    }
}
