//! Hypergraphs, the boundary operator and static (non-persistent) homology.
//!
//! Chains live in the ambient complex on the full vertex roster: the basis of
//! `C_k` is every `(k+1)`-subset of the roster in lexicographic order. That is
//! only feasible for small rosters, so every ambient computation is guarded by
//! [`MAX_AMBIENT_VERTICES`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, BitVector, Subspace};

/// Largest roster for which ambient chain spaces are enumerated.
pub const MAX_AMBIENT_VERTICES: usize = 12;

/// Vertex labels with their canonical ordinals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Roster {
    ids: Vec<String>,
    index: HashMap<String, u32>,
}

impl Roster {
    /// Keeps the given order. Fails on duplicate ids.
    pub fn new<S: Into<String>>(ids: impl IntoIterator<Item = S>) -> Result<Self> {
        let ids: Vec<String> = ids.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(ids.len());
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i as u32).is_some() {
                return Err(Error::Invalid(format!("duplicate vertex id `{id}`")));
            }
        }
        Ok(Self { ids, index })
    }

    /// Deduplicates and sorts ids: numerically when every id is an unsigned
    /// integer, lexicographically otherwise.
    pub fn canonical<S: Into<String>>(ids: impl IntoIterator<Item = S>) -> Self {
        let set: BTreeSet<String> = ids.into_iter().map(Into::into).collect();
        let mut ids: Vec<String> = set.into_iter().collect();
        if ids.iter().all(|s| s.parse::<u64>().is_ok()) {
            ids.sort_by_key(|s| s.parse::<u64>().expect("checked numeric"));
        }
        Self::new(ids).expect("deduplicated")
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, index: u32) -> &str {
        &self.ids[index as usize]
    }

    pub fn index_of(&self, id: &str) -> Option<u32> {
        self.index.get(id).copied()
    }

    /// Hyperedge from vertex labels in any order.
    pub fn edge<S: AsRef<str>>(&self, labels: &[S]) -> Result<Hyperedge> {
        let members = labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Hyperedge::from_unsorted(members)
    }

    /// `A|B|C` rendering.
    pub fn render(&self, e: &Hyperedge) -> String {
        e.members()
            .iter()
            .map(|&m| self.id(m))
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// A non-empty, strictly sorted set of vertex indices.
///
/// The derived ordering is lexicographic on the member list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperedge(Vec<u32>);

impl Hyperedge {
    pub fn new(members: Vec<u32>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidHyperedge("empty hyperedge".into()));
        }
        if !members.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidHyperedge(format!(
                "members {members:?} are not strictly increasing"
            )));
        }
        Ok(Self(members))
    }

    pub fn from_unsorted(mut members: Vec<u32>) -> Result<Self> {
        members.sort_unstable();
        let before = members.len();
        members.dedup();
        if members.len() != before {
            return Err(Error::InvalidHyperedge("repeated member".into()));
        }
        Self::new(members)
    }

    pub fn vertex(v: u32) -> Self {
        Self(vec![v])
    }

    pub fn members(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// `|e| − 1`.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Codimension-one faces, in lexicographic order. Empty for a vertex.
    pub fn faces(&self) -> Vec<Hyperedge> {
        if self.0.len() < 2 {
            return Vec::new();
        }
        let mut faces: Vec<Hyperedge> = (0..self.0.len())
            .map(|skip| {
                Hyperedge(
                    self.0
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .map(|(_, m)| *m)
                        .collect(),
                )
            })
            .collect();
        faces.sort();
        faces
    }

    /// Every non-empty subset, including `self`.
    pub fn subsets(&self) -> impl Iterator<Item = Hyperedge> + '_ {
        let n = self.0.len();
        assert!(n < 32, "hyperedge too large to enumerate subsets");
        (1u32..(1 << n)).map(move |mask| {
            Hyperedge(
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    pub fn is_subset_of(&self, other: &Hyperedge) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|m| it.any(|o| o == m))
    }
}

impl fmt::Debug for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `(V, E)` with an explicit roster; vertices need not appear in any hyperedge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    roster: Roster,
    edges: BTreeSet<Hyperedge>,
}

impl Hypergraph {
    pub fn new(roster: Roster, edges: impl IntoIterator<Item = Hyperedge>) -> Result<Self> {
        let edges: BTreeSet<Hyperedge> = edges.into_iter().collect();
        let n = roster.len() as u32;
        if let Some(bad) = edges.iter().find(|e| e.members().iter().any(|&m| m >= n)) {
            return Err(Error::InvalidHyperedge(format!(
                "{bad:?} references a vertex outside the roster of {n}"
            )));
        }
        Ok(Self { roster, edges })
    }

    /// Builds from label lists, e.g. `&[&["A", "B"], &["A", "B", "C"]]`.
    pub fn from_labels(roster: Roster, edges: &[&[&str]]) -> Result<Self> {
        let edges = edges
            .iter()
            .map(|labels| roster.edge(labels))
            .collect::<Result<Vec<_>>>()?;
        Self::new(roster, edges)
    }

    pub fn roster(&self) -> &Roster {
        &self.roster
    }

    pub fn edges(&self) -> &BTreeSet<Hyperedge> {
        &self.edges
    }

    pub fn contains(&self, e: &Hyperedge) -> bool {
        self.edges.contains(e)
    }

    pub fn edges_of_dim(&self, dim: usize) -> impl Iterator<Item = &Hyperedge> {
        self.edges.iter().filter(move |e| e.dim() == dim)
    }

    pub fn is_simplicial(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.faces().iter().all(|f| self.edges.contains(f)))
    }

    /// Downward closure: every non-empty subset of some hyperedge.
    pub fn delta_closure(&self) -> Hypergraph {
        let edges = self.edges.iter().flat_map(|e| e.subsets()).collect();
        Hypergraph {
            roster: self.roster.clone(),
            edges,
        }
    }

    /// Hyperedges all of whose non-empty subsets are hyperedges.
    pub fn lower_delta(&self) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .filter(|e| e.subsets().all(|s| self.edges.contains(&s)))
            .cloned()
            .collect();
        Hypergraph {
            roster: self.roster.clone(),
            edges,
        }
    }

    fn ambient(&self) -> Result<Ambient> {
        Ambient::new(self.roster.len())
    }

    /// Span of the hyperedges of dimension `n` inside `C_n`.
    pub fn chain_space(&self, n: usize) -> Result<Subspace> {
        let amb = self.ambient()?;
        Ok(amb.span_of(n, self.edges_of_dim(n)))
    }

    /// `∂ₙ⁻¹(𝓗ₙ₋₁) ∩ 𝓗ₙ`; equals `𝓗₀` at `n = 0`.
    pub fn inf_chain_space(&self, n: usize) -> Result<Subspace> {
        let amb = self.ambient()?;
        let here = amb.span_of(n, self.edges_of_dim(n));
        if n == 0 {
            return Ok(here);
        }
        let below = amb.span_of(n - 1, self.edges_of_dim(n - 1));
        let pre = gf2::preimage_space(&amb.boundary_matrix(n), &below)?;
        gf2::subspace_intersection(&pre, &here)
    }

    /// `𝓗ₙ + ∂ₙ₊₁(𝓗ₙ₊₁)`.
    pub fn sup_chain_space(&self, n: usize) -> Result<Subspace> {
        let amb = self.ambient()?;
        let here = amb.span_of(n, self.edges_of_dim(n));
        let above = amb.span_of(n + 1, self.edges_of_dim(n + 1));
        let boundaries = above.image(&amb.boundary_matrix(n + 1))?;
        gf2::subspace_sum(&here, &boundaries)
    }

    /// Homology dimensions of the infimum and supremum complexes at `n`.
    pub fn homology_sides(&self, n: usize) -> Result<HomologySides> {
        let amb = self.ambient()?;
        let cycles = gf2::kernel_basis(&amb.boundary_matrix(n));
        let up = amb.boundary_matrix(n + 1);
        let inf_cycles = gf2::subspace_intersection(&self.inf_chain_space(n)?, &cycles)?;
        let sup_cycles = gf2::subspace_intersection(&self.sup_chain_space(n)?, &cycles)?;
        let inf_bounds = self.inf_chain_space(n + 1)?.image(&up)?;
        let sup_bounds = self.sup_chain_space(n + 1)?.image(&up)?;
        Ok(HomologySides {
            inf: inf_cycles.dim() - inf_bounds.dim(),
            sup: sup_cycles.dim() - sup_bounds.dim(),
            hat: sup_cycles.dim() - inf_bounds.dim(),
        })
    }

    /// Dimension of the embedded homology `Hₙ^inf`.
    ///
    /// Both the infimum and the supremum complex are computed; they must agree.
    pub fn embedded_betti(&self, n: usize) -> Result<usize> {
        let sides = self.homology_sides(n)?;
        assert_eq!(
            sides.inf, sides.sup,
            "infimum and supremum homology disagree at dimension {n}"
        );
        Ok(sides.inf)
    }

    /// Dimension of `Ĥₙ = ker ∂ₙ^sup / img ∂ₙ₊₁^inf`.
    pub fn hat_betti(&self, n: usize) -> Result<usize> {
        Ok(self.homology_sides(n)?.hat)
    }
}

/// Homology dimensions computed from the two chain complexes and the mixed one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomologySides {
    pub inf: usize,
    pub sup: usize,
    pub hat: usize,
}

/// A chain of the ambient complex. Dimension `-1` is the zero group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub dim: isize,
    pub vector: BitVector,
}

impl Chain {
    pub fn is_zero(&self) -> bool {
        self.vector.is_zero()
    }
}

/// The full simplex on `n` vertices, with lexicographic chain bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ambient {
    n: usize,
}

impl Ambient {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_AMBIENT_VERTICES {
            return Err(Error::RosterTooLarge {
                size: n,
                cap: MAX_AMBIENT_VERTICES,
            });
        }
        Ok(Self { n })
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    /// All subsets of the given size in lexicographic order.
    pub fn basis(&self, size: usize) -> Vec<Hyperedge> {
        let mut out = Vec::new();
        if size == 0 || size > self.n {
            return out;
        }
        let mut current: Vec<u32> = (0..size as u32).collect();
        loop {
            out.push(Hyperedge(current.clone()));
            // advance to the next combination
            let mut i = size;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if (current[i] as usize) < self.n - size + i {
                    break;
                }
            }
            current[i] += 1;
            for j in i + 1..size {
                current[j] = current[j - 1] + 1;
            }
        }
    }

    /// Number of basis elements of `C_k`.
    pub fn rank_of(&self, k: usize) -> usize {
        binomial(self.n, k + 1)
    }

    /// Position of `e` in the lexicographic basis of its size.
    pub fn index_of(&self, e: &Hyperedge) -> usize {
        // count the subsets that precede e lexicographically
        let m = e.size();
        let mut index = 0;
        let mut prev: i64 = -1;
        for (pos, &member) in e.members().iter().enumerate() {
            for skipped in (prev + 1) as u32..member {
                index += binomial(self.n - skipped as usize - 1, m - pos - 1);
            }
            prev = member as i64;
        }
        index
    }

    /// `∂ₖ : C_k → C_{k−1}`. Zero rows at `k = 0`.
    pub fn boundary_matrix(&self, k: usize) -> BitMatrix {
        let cols = self.basis(k + 1);
        let rows = if k == 0 { 0 } else { self.rank_of(k - 1) };
        let columns = cols
            .iter()
            .map(|e| {
                if k == 0 {
                    BitVector::zeros(0)
                } else {
                    BitVector::from_support(rows, e.faces().iter().map(|f| self.index_of(f)))
                }
            })
            .collect();
        BitMatrix::from_columns(rows, columns).expect("faces index the row basis")
    }

    pub fn span_of<'a>(&self, k: usize, edges: impl IntoIterator<Item = &'a Hyperedge>) -> Subspace {
        Subspace::coordinate(self.rank_of(k), edges.into_iter().map(|e| self.index_of(e)))
    }

    /// Chain of dimension `k` with the given hyperedges as support.
    pub fn chain<'a>(&self, k: usize, edges: impl IntoIterator<Item = &'a Hyperedge>) -> Chain {
        Chain {
            dim: k as isize,
            vector: BitVector::from_support(
                self.rank_of(k),
                edges.into_iter().map(|e| {
                    assert_eq!(e.dim(), k, "hyperedge dimension differs from chain dimension");
                    self.index_of(e)
                }),
            ),
        }
    }

    /// Sum of codimension-one faces; no signs in characteristic 2.
    pub fn boundary_of_edge(&self, e: &Hyperedge) -> Chain {
        let k = e.dim();
        if k == 0 {
            return Chain {
                dim: -1,
                vector: BitVector::zeros(0),
            };
        }
        self.chain(k - 1, e.faces().iter())
    }

    pub fn boundary(&self, c: &Chain) -> Chain {
        if c.dim <= 0 {
            return Chain {
                dim: -1,
                vector: BitVector::zeros(0),
            };
        }
        let m = self.boundary_matrix(c.dim as usize);
        Chain {
            dim: c.dim - 1,
            vector: m.apply(&c.vector).expect("chain matches basis"),
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A map from one roster to another, total on the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    images: Vec<u32>,
}

impl VertexMap {
    pub fn new(images: Vec<u32>) -> Self {
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n as u32).collect())
    }

    /// From `(source label, target label)` pairs.
    pub fn from_labels(source: &Roster, target: &Roster, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut images = vec![None; source.len()];
        for (s, t) in pairs {
            let si = source
                .index_of(s)
                .ok_or_else(|| Error::UnknownVertex(s.to_string()))?;
            let ti = target
                .index_of(t)
                .ok_or_else(|| Error::UnknownVertex(t.to_string()))?;
            images[si as usize] = Some(ti);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, t)| {
                t.ok_or_else(|| Error::Invalid(format!("vertex `{}` has no image", source.id(i as u32))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { images })
    }

    pub fn image_of(&self, e: &Hyperedge) -> Hyperedge {
        let mut members: Vec<u32> = e.members().iter().map(|&m| self.images[m as usize]).collect();
        members.sort_unstable();
        members.dedup();
        Hyperedge(members)
    }

    pub fn is_injective(&self) -> bool {
        let set: BTreeSet<u32> = self.images.iter().copied().collect();
        set.len() == self.images.len()
    }
}

/// Classification of a vertex map between hypergraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorphismCheck {
    pub morphism: bool,
    pub injective: bool,
    pub embedding: bool,
}

/// Checks whether `phi` sends every hyperedge of `h` to a hyperedge of `k`.
pub fn validate_morphism(phi: &VertexMap, h: &Hypergraph, k: &Hypergraph) -> Result<MorphismCheck> {
    if phi.images.len() != h.roster.len() {
        return Err(Error::DimensionMismatch {
            expected: h.roster.len(),
            found: phi.images.len(),
        });
    }
    if let Some(&bad) = phi.images.iter().find(|&&t| t as usize >= k.roster.len()) {
        return Err(Error::Invalid(format!("image {bad} outside the target roster")));
    }
    let images: Vec<Hyperedge> = h.edges.iter().map(|e| phi.image_of(e)).collect();
    let morphism = images.iter().all(|e| k.contains(e));
    let injective = morphism && phi.is_injective();
    let distinct: BTreeSet<&Hyperedge> = images.iter().collect();
    let embedding = injective && distinct.len() == images.len();
    Ok(MorphismCheck {
        morphism,
        injective,
        embedding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(n: usize) -> Roster {
        Roster::new((0..n).map(|i| ((b'A' + i as u8) as char).to_string())).unwrap()
    }

    /// The six-person worked-example hypergraph with every hyperedge present.
    pub(crate) fn meeting_example() -> Hypergraph {
        Hypergraph::from_labels(
            letters(6),
            &[
                &["A"], &["B"], &["C"], &["D"], &["E"], &["F"],
                &["A", "B"], &["D", "F"], &["C", "D"], &["C", "F"], &["A", "C"], &["B", "C"],
                &["A", "B", "C"], &["D", "E", "F"],
            ],
        )
        .unwrap()
    }

    fn labels(h: &Hypergraph) -> BTreeSet<String> {
        h.edges().iter().map(|e| h.roster().render(e)).collect()
    }

    #[test]
    fn boundary_examples() {
        let r = letters(3);
        let amb = Ambient::new(3).unwrap();
        let ab = r.edge(&["A", "B"]).unwrap();
        let abc = r.edge(&["A", "B", "C"]).unwrap();
        let a = r.edge(&["A"]).unwrap();
        let b = r.edge(&["B"]).unwrap();
        assert_eq!(amb.boundary_of_edge(&ab), amb.chain(0, [&a, &b]));
        let faces = [&["A", "B"][..], &["A", "C"], &["B", "C"]].map(|l| r.edge(l).unwrap());
        assert_eq!(amb.boundary_of_edge(&abc), amb.chain(1, faces.iter()));
        assert!(amb.boundary(&amb.boundary_of_edge(&abc)).is_zero());
        assert!(amb.boundary_of_edge(&a).is_zero());
    }

    #[test]
    fn boundary_squares_to_zero() {
        let amb = Ambient::new(6).unwrap();
        for k in 1..5 {
            let d_k = amb.boundary_matrix(k);
            let d_k1 = amb.boundary_matrix(k + 1);
            for c in d_k1.columns() {
                assert!(d_k.apply(c).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn lexicographic_ranking_matches_enumeration() {
        for n in 0..=8 {
            let amb = Ambient::new(n).unwrap();
            for size in 1..=n {
                let basis = amb.basis(size);
                assert_eq!(basis.len(), binomial(n, size));
                assert!(basis.windows(2).all(|w| w[0] < w[1]));
                for (i, e) in basis.iter().enumerate() {
                    assert_eq!(amb.index_of(e), i);
                }
            }
        }
    }

    #[test]
    fn ambient_cap() {
        assert!(matches!(
            Ambient::new(13),
            Err(Error::RosterTooLarge { size: 13, cap: 12 })
        ));
    }

    #[test]
    fn delta_closure_examples() {
        let r = letters(3);
        let h = Hypergraph::from_labels(r, &[&["A", "B", "C"]]).unwrap();
        let closed = h.delta_closure();
        assert_eq!(
            labels(&closed),
            ["A", "B", "C", "A|B", "A|C", "B|C", "A|B|C"]
                .into_iter()
                .map(String::from)
                .collect()
        );
        assert_eq!(closed.delta_closure(), closed);

        let meeting = meeting_example();
        let added: BTreeSet<String> = labels(&meeting.delta_closure())
            .difference(&labels(&meeting))
            .cloned()
            .collect();
        assert_eq!(added, ["D|E", "E|F"].into_iter().map(String::from).collect());
    }

    #[test]
    fn lower_delta_examples() {
        let meeting = meeting_example();
        let lower = meeting.lower_delta();
        let removed: BTreeSet<String> = labels(&meeting).difference(&labels(&lower)).cloned().collect();
        assert_eq!(removed, ["D|E|F".to_string()].into_iter().collect());

        let simplex = Hypergraph::from_labels(letters(3), &[&["A", "B", "C"]])
            .unwrap()
            .delta_closure();
        assert_eq!(simplex.lower_delta(), simplex);

        let bare = Hypergraph::from_labels(letters(3), &[&["A", "B", "C"]]).unwrap();
        assert!(bare.lower_delta().edges().is_empty());
    }

    #[test]
    fn inf_and_sup_spaces_on_meeting_example() {
        let meeting = meeting_example();
        let amb = Ambient::new(6).unwrap();
        let abc = meeting.roster().edge(&["A", "B", "C"]).unwrap();
        assert_eq!(meeting.inf_chain_space(2).unwrap(), amb.span_of(2, [&abc]));
        assert_eq!(meeting.inf_chain_space(0).unwrap().dim(), 6);
        assert_eq!(meeting.sup_chain_space(1).unwrap().dim(), 7);
    }

    #[test]
    fn simplicial_complex_has_equal_spaces() {
        let h = meeting_example().lower_delta();
        for n in 0..3 {
            let here = h.chain_space(n).unwrap();
            assert_eq!(h.inf_chain_space(n).unwrap(), here);
            assert_eq!(h.sup_chain_space(n).unwrap(), here);
        }
    }

    #[test]
    fn betti_examples() {
        let meeting = meeting_example();
        assert_eq!(meeting.embedded_betti(0).unwrap(), 2);
        assert_eq!(meeting.embedded_betti(1).unwrap(), 1);
        assert_eq!(meeting.hat_betti(1).unwrap(), 2);

        let hollow = Hypergraph::from_labels(
            letters(3),
            &[&["A"], &["B"], &["C"], &["A", "B"], &["A", "C"], &["B", "C"]],
        )
        .unwrap();
        assert_eq!(hollow.embedded_betti(1).unwrap(), 1);
        assert_eq!(hollow.hat_betti(1).unwrap(), 1);

        let anti = Hypergraph::from_labels(letters(3), &[&["A"], &["B"], &["C"], &["A", "B", "C"]])
            .unwrap();
        assert_eq!(anti.hat_betti(1).unwrap(), 1);
        assert_eq!(anti.embedded_betti(1).unwrap(), 0);
    }

    #[test]
    fn morphism_examples() {
        let r = letters(3);
        let h = Hypergraph::from_labels(r.clone(), &[&["A", "B"]]).unwrap();
        let id = validate_morphism(&VertexMap::identity(3), &h, &h).unwrap();
        assert!(id.morphism && id.injective && id.embedding);

        let swap = VertexMap::from_labels(&r, &r, &[("A", "B"), ("B", "A"), ("C", "C")]).unwrap();
        assert!(validate_morphism(&swap, &h, &h).unwrap().embedding);

        let k = Hypergraph::from_labels(r, &[&["A", "C"]]).unwrap();
        let check = validate_morphism(&VertexMap::identity(3), &h, &k).unwrap();
        assert!(!check.morphism && !check.embedding);
    }

    #[test]
    fn collapsing_map_is_a_morphism_but_not_injective() {
        let r = letters(3);
        let h = Hypergraph::from_labels(r.clone(), &[&["A", "B"], &["A"]]).unwrap();
        let k = Hypergraph::from_labels(r.clone(), &[&["A"]]).unwrap();
        let collapse = VertexMap::new(vec![0, 0, 0]);
        let check = validate_morphism(&collapse, &h, &k).unwrap();
        assert!(check.morphism && !check.injective && !check.embedding);
    }

    #[test]
    fn roster_canonical_order() {
        let r = Roster::canonical(["10", "2", "1", "2"]);
        assert_eq!(r.ids(), &["1", "2", "10"]);
        let r = Roster::canonical(["b", "a"]);
        assert_eq!(r.ids(), &["a", "b"]);
        assert!(Roster::new(["a", "a"]).is_err());
    }

    #[test]
    fn hyperedge_validation() {
        assert!(Hyperedge::new(vec![]).is_err());
        assert!(Hyperedge::new(vec![2, 1]).is_err());
        assert!(Hyperedge::from_unsorted(vec![1, 1]).is_err());
        assert!(Hypergraph::new(letters(2), [Hyperedge::vertex(5)]).is_err());
    }
}
