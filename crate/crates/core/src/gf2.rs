//! Linear algebra over the two-element field.
//!
//! Vectors are dense bit-packed words. Addition is XOR. Subspaces are kept in
//! a canonical reduced echelon form: basis vectors sorted by their pivot (the
//! lowest set index), and every pivot index set in exactly one basis vector.
//! Two subspaces are equal iff their bases compare equal.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A vector over GF(2) with a fixed basis size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index);
        v
    }

    /// Builds a vector from its support. Repeated indices cancel in pairs.
    pub fn from_support(len: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in support {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        debug_assert!(index < self.len);
        (self.words[index / WORD] >> (index % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize) {
        assert!(index < self.len, "index {index} out of range {}", self.len);
        self.words[index / WORD] |= 1 << (index % WORD);
    }

    #[inline]
    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len, "index {index} out of range {}", self.len);
        self.words[index / WORD] ^= 1 << (index % WORD);
    }

    /// `self += other` in characteristic 2.
    #[inline]
    pub fn add_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Smallest set index.
    pub fn lowest(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Set indices in increasing order.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(i * WORD + bit)
            })
        })
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({}; ", self.len)?;
        f.debug_set().entries(self.support()).finish()?;
        write!(f, ")")
    }
}

/// Column-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: usize,
    columns: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            columns: vec![BitVector::zeros(rows); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            columns: (0..n).map(|i| BitVector::unit(n, i)).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch {
                expected: rows,
                found: bad.len(),
            });
        }
        Ok(Self { rows, columns })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &BitVector {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[BitVector] {
        &self.columns
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.columns[j].get(i)
    }

    /// Matrix–vector product.
    pub fn apply(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.cols() {
            return Err(Error::DimensionMismatch {
                expected: self.cols(),
                found: x.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows);
        for j in x.support() {
            out.add_assign(&self.columns[j]);
        }
        Ok(out)
    }
}

/// Column reduction bookkeeping shared by rank and kernel.
struct Reduction {
    reduced: Vec<BitVector>,
    combos: Option<Vec<BitVector>>,
}

fn reduce_columns(m: &BitMatrix, track: bool) -> Reduction {
    let n = m.cols();
    let mut reduced = m.columns.clone();
    let mut combos = track.then(|| (0..n).map(|j| BitVector::unit(n, j)).collect::<Vec<_>>());
    let mut owner: Vec<Option<usize>> = vec![None; m.rows()];
    for j in 0..n {
        while let Some(low) = reduced[j].lowest() {
            match owner[low] {
                Some(k) => {
                    let (head, tail) = reduced.split_at_mut(j);
                    tail[0].add_assign(&head[k]);
                    if let Some(c) = combos.as_mut() {
                        let (head, tail) = c.split_at_mut(j);
                        tail[0].add_assign(&head[k]);
                    }
                }
                None => {
                    owner[low] = Some(j);
                    break;
                }
            }
        }
    }
    Reduction { reduced, combos }
}

/// Dimension of the column span.
pub fn rank(m: &BitMatrix) -> usize {
    reduce_columns(m, false)
        .reduced
        .iter()
        .filter(|c| !c.is_zero())
        .count()
}

/// Basis of `{x : Mx = 0}`, as a subspace of the column space.
pub fn kernel_basis(m: &BitMatrix) -> Subspace {
    let Reduction { reduced, combos } = reduce_columns(m, true);
    let combos = combos.expect("tracked");
    let generators = reduced
        .iter()
        .zip(combos)
        .filter(|(r, _)| r.is_zero())
        .map(|(_, c)| c);
    Subspace::span(m.cols(), generators).expect("kernel vectors live in the column space")
}

/// A linear subspace of `GF(2)^ambient` in canonical reduced echelon form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<BitVector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: (0..ambient).map(|i| BitVector::unit(ambient, i)).collect(),
        }
    }

    /// Span of arbitrary generators.
    pub fn span(ambient: usize, generators: impl IntoIterator<Item = BitVector>) -> Result<Self> {
        // keyed by pivot, echelon but not yet fully reduced
        let mut by_pivot: Vec<Option<BitVector>> = vec![None; ambient];
        for mut v in generators {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            while let Some(p) = v.lowest() {
                match &by_pivot[p] {
                    Some(b) => v.add_assign(b),
                    None => {
                        by_pivot[p] = Some(v);
                        break;
                    }
                }
            }
        }
        let pivots: Vec<usize> = (0..ambient).filter(|&p| by_pivot[p].is_some()).collect();
        let mut basis: Vec<BitVector> = pivots
            .iter()
            .map(|&p| by_pivot[p].take().expect("pivot present"))
            .collect();
        // back-substitution, highest pivot first
        for i in (0..basis.len()).rev() {
            let p = pivots[i];
            for j in 0..i {
                if basis[j].get(p) {
                    let (head, tail) = basis.split_at_mut(i);
                    head[j].add_assign(&tail[0]);
                }
            }
        }
        Ok(Self { ambient, basis })
    }

    /// Span of unit vectors.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        Self {
            ambient,
            basis: idx.into_iter().map(|i| BitVector::unit(ambient, i)).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.basis.iter().map(|b| b.lowest().expect("basis vectors are nonzero"))
    }

    /// Representative of `v` modulo the subspace; zero iff `v` is a member.
    /// The map is linear.
    pub fn normal_form(&self, v: &BitVector) -> BitVector {
        let mut out = v.clone();
        for b in &self.basis {
            let p = b.lowest().expect("basis vectors are nonzero");
            if out.get(p) {
                out.add_assign(b);
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.ambient && self.normal_form(v).is_zero()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Image of the subspace under `m`.
    pub fn image(&self, m: &BitMatrix) -> Result<Subspace> {
        let images = self
            .basis
            .iter()
            .map(|b| m.apply(b))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(m.rows(), images)
    }
}

/// `A + B`.
pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.check_ambient(b)?;
    Subspace::span(a.ambient, a.basis.iter().chain(&b.basis).cloned())
}

/// `A ∩ B`, from the kernel of the stacked generator matrix `[A | B]`.
pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.check_ambient(b)?;
    let stacked = BitMatrix::from_columns(
        a.ambient,
        a.basis.iter().chain(&b.basis).cloned().collect(),
    )?;
    let kernel = kernel_basis(&stacked);
    let da = a.dim();
    let members = kernel.basis.iter().map(|x| {
        let mut v = BitVector::zeros(a.ambient);
        for i in x.support().take_while(|&i| i < da) {
            v.add_assign(&a.basis[i]);
        }
        v
    });
    Subspace::span(a.ambient, members)
}

/// `{x : Mx ∈ S}`.
pub fn preimage_space(m: &BitMatrix, s: &Subspace) -> Result<Subspace> {
    if s.ambient != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: s.ambient,
        });
    }
    let projected = m.columns.iter().map(|c| s.normal_form(c)).collect();
    Ok(kernel_basis(&BitMatrix::from_columns(m.rows(), projected)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(len: usize, support: &[usize]) -> BitVector {
        BitVector::from_support(len, support.iter().copied())
    }

    /// Boundary of the triangle: rows A,B,C; columns AB, AC, BC.
    fn triangle_boundary() -> BitMatrix {
        BitMatrix::from_columns(3, vec![v(3, &[0, 1]), v(3, &[0, 2]), v(3, &[1, 2])]).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&BitMatrix::zeros(3, 3)), 0);
        assert_eq!(rank(&BitMatrix::identity(3)), 3);
        assert_eq!(rank(&triangle_boundary()), 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&BitMatrix::identity(3)).dim(), 0);
        assert_eq!(kernel_basis(&BitMatrix::zeros(2, 4)), Subspace::full(4));
        let k = kernel_basis(&triangle_boundary());
        assert_eq!(k.basis(), &[v(3, &[0, 1, 2])]);
    }

    #[test]
    fn sum_examples() {
        let e1 = Subspace::coordinate(3, [0]);
        let e2 = Subspace::coordinate(3, [1]);
        assert_eq!(subspace_sum(&e1, &e2).unwrap().dim(), 2);
        assert_eq!(subspace_sum(&e1, &e1).unwrap(), e1);
        let a = Subspace::span(3, [v(3, &[0, 1])]).unwrap();
        let b = Subspace::span(3, [v(3, &[1, 2])]).unwrap();
        let s = subspace_sum(&a, &b).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(3, &[0, 2])));
        assert!(!s.contains(&v(3, &[0])));
    }

    #[test]
    fn intersection_examples() {
        let a = Subspace::coordinate(3, [0, 1]);
        let b = Subspace::coordinate(3, [1, 2]);
        assert_eq!(subspace_intersection(&a, &a).unwrap(), a);
        assert_eq!(
            subspace_intersection(&Subspace::coordinate(3, [0]), &Subspace::coordinate(3, [1]))
                .unwrap(),
            Subspace::zero(3)
        );
        assert_eq!(
            subspace_intersection(&a, &b).unwrap(),
            Subspace::coordinate(3, [1])
        );
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::zero(3);
        let b = Subspace::zero(4);
        assert!(subspace_sum(&a, &b).is_err());
        assert!(subspace_intersection(&a, &b).is_err());
        assert!(preimage_space(&BitMatrix::zeros(2, 2), &a).is_err());
    }

    #[test]
    fn preimage_examples() {
        let m = triangle_boundary();
        assert_eq!(preimage_space(&m, &Subspace::full(3)).unwrap(), Subspace::full(3));
        assert_eq!(
            preimage_space(&m, &Subspace::zero(3)).unwrap(),
            kernel_basis(&m)
        );
    }

    /// Edges of C_1 on {A..F} in lexicographic order; ∂₂ restricted to ABC, DEF.
    #[test]
    fn preimage_of_present_edges() {
        let pairs: Vec<(usize, usize)> = (0..6)
            .flat_map(|a| ((a + 1)..6).map(move |b| (a, b)))
            .collect();
        let idx = |a: usize, b: usize| pairs.iter().position(|&p| p == (a, b)).unwrap();
        let abc = v(15, &[idx(0, 1), idx(0, 2), idx(1, 2)]);
        let def = v(15, &[idx(3, 4), idx(3, 5), idx(4, 5)]);
        let m = BitMatrix::from_columns(15, vec![abc, def]).unwrap();
        // AB, DF, CD, CF, AC, BC
        let present = Subspace::coordinate(
            15,
            [idx(0, 1), idx(3, 5), idx(2, 3), idx(2, 5), idx(0, 2), idx(1, 2)],
        );
        let pre = preimage_space(&m, &present).unwrap();
        assert_eq!(pre, Subspace::coordinate(2, [0]));
    }

    #[test]
    fn canonical_form_is_reduced() {
        let s = Subspace::span(4, [v(4, &[0, 1, 2]), v(4, &[1, 2]), v(4, &[2, 3])]).unwrap();
        let pivots: Vec<usize> = s.pivots().collect();
        assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        for (i, b) in s.basis().iter().enumerate() {
            for (j, &p) in pivots.iter().enumerate() {
                assert_eq!(b.get(p), i == j);
            }
        }
    }

    fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
        (1..=max_rows, 0..=max_cols).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), r), c).prop_map(
                move |cols| {
                    let columns = cols
                        .into_iter()
                        .map(|bits| {
                            BitVector::from_support(
                                r,
                                bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i),
                            )
                        })
                        .collect();
                    BitMatrix::from_columns(r, columns).unwrap()
                },
            )
        })
    }

    fn arb_subspace(ambient: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), ambient), 0..ambient + 2)
            .prop_map(move |gens| {
                Subspace::span(
                    ambient,
                    gens.into_iter().map(|bits| {
                        BitVector::from_support(
                            ambient,
                            bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i),
                        )
                    }),
                )
                .unwrap()
            })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix(12, 12)) {
            let k = kernel_basis(&m);
            prop_assert_eq!(k.dim() + rank(&m), m.cols());
            for x in k.basis() {
                prop_assert!(m.apply(x).unwrap().is_zero());
            }
        }

        #[test]
        fn grassmann(a in arb_subspace(9), b in arb_subspace(9)) {
            let s = subspace_sum(&a, &b).unwrap();
            let i = subspace_intersection(&a, &b).unwrap();
            prop_assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
            prop_assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
            prop_assert!(a.is_subspace_of(&s) && b.is_subspace_of(&s));
        }

        #[test]
        fn preimage_of_zero_is_kernel(m in arb_matrix(10, 10)) {
            prop_assert_eq!(preimage_space(&m, &Subspace::zero(m.rows())).unwrap(), kernel_basis(&m));
        }

        #[test]
        fn preimage_membership(m in arb_matrix(8, 8), seed in any::<u64>()) {
            // S = span of the first few unit vectors chosen from the seed
            let s = Subspace::coordinate(m.rows(), (0..m.rows()).filter(|i| seed >> i & 1 == 1));
            let pre = preimage_space(&m, &s).unwrap();
            for bits in 0u32..(1 << m.cols()) {
                let x = BitVector::from_support(m.cols(), (0..m.cols()).filter(|j| bits >> j & 1 == 1));
                prop_assert_eq!(pre.contains(&x), s.contains(&m.apply(&x).unwrap()));
            }
        }

        #[test]
        fn span_is_order_independent(a in arb_subspace(8)) {
            let mut gens: Vec<BitVector> = a.basis().to_vec();
            gens.reverse();
            if gens.len() > 1 {
                let first = gens[0].clone();
                gens[1].add_assign(&first);
            }
            prop_assert_eq!(Subspace::span(8, gens).unwrap(), a);
        }
    }
}
