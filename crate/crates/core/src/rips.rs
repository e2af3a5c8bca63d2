//! Rips filtrations of point clouds.
//!
//! A simplex enters at the largest pairwise distance among its vertices, so
//! it belongs to the Rips complex at radius `r` exactly when its grade is
//! below `r`.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::hypergraph::{Hyperedge, Roster};
use crate::scalar::{Grade, GradeScalar};

#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud<T> {
    dim: usize,
    points: Vec<Vec<T>>,
}

impl<T: Float> PointCloud<T> {
    pub fn new(points: Vec<Vec<T>>) -> Result<Self> {
        let dim = points.first().map_or(0, Vec::len);
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::Invalid(format!(
                    "point {i} has {} coordinates, expected {dim}",
                    p.len()
                )));
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(Error::Invalid(format!("point {i} has a non-finite coordinate")));
            }
        }
        Ok(Self { dim, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn squared_distance(&self, a: usize, b: usize) -> T {
        self.points[a]
            .iter()
            .zip(&self.points[b])
            .fold(T::zero(), |acc, (x, y)| acc + (*x - *y) * (*x - *y))
    }

    pub fn scaled(&self, factor: T) -> Self {
        Self {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(|c| *c * factor).collect())
                .collect(),
        }
    }
}

/// Simplices up to dimension `max_dim` with grade below `r_max`.
///
/// Vertices are labelled `0..n` and enter at zero.
pub fn rips_filtration<T>(cloud: &PointCloud<T>, r_max: T, max_dim: usize) -> Result<Filtration<T>>
where
    T: Float + GradeScalar,
{
    if cloud.is_empty() {
        return Err(Error::Empty("point cloud"));
    }
    if r_max.is_nan() || r_max <= T::zero() {
        return Err(Error::Invalid("r_max must be positive".into()));
    }
    let n = cloud.len();
    let roster = Roster::new((0..n).map(|i| i.to_string()))?;
    let mut f = Filtration::new(roster, max_dim);
    let cutoff = r_max * r_max;
    let sq: Vec<Vec<T>> = (0..n)
        .map(|a| (0..n).map(|b| cloud.squared_distance(a, b)).collect())
        .collect();

    // grow simplices by appending larger vertex indices
    let mut stack: Vec<(Vec<u32>, T)> = (0..n as u32).map(|v| (vec![v], T::zero())).collect();
    while let Some((members, max_sq)) = stack.pop() {
        f.set(
            Hyperedge::new(members.clone())?,
            Grade::Finite(max_sq.sqrt()),
        )?;
        if members.len() > max_dim {
            continue;
        }
        let last = *members.last().expect("non-empty") as usize;
        for next in last + 1..n {
            let widest = members
                .iter()
                .map(|&m| sq[m as usize][next])
                .fold(max_sq, |acc, d| if d > acc { d } else { acc });
            if widest < cutoff {
                let mut grown = members.clone();
                grown.push(next as u32);
                stack.push((grown, widest));
            }
        }
    }
    Ok(f)
}
