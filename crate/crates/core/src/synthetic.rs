//! Seeded synthetic contact streams for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::contact::{ContactRecord, DEFAULT_WINDOW};
use crate::filtration::Filtration;
use crate::hypergraph::{Hyperedge, Roster};
use crate::rips::PointCloud;
use crate::scalar::Grade;

/// Shape of a clustered contact stream.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StreamShape {
    pub individuals: usize,
    pub contacts: usize,
    /// Individuals per community. Groups form inside a community.
    pub cluster_size: usize,
    /// Largest group meeting in one window.
    pub max_group: usize,
    /// Chance that a group draws one member from another community.
    pub mixing: f64,
}

impl StreamShape {
    /// Roughly the scale of a multi-day conference recording.
    pub fn conference() -> Self {
        Self {
            individuals: 400,
            contacts: 70_000,
            cluster_size: 12,
            max_group: 4,
            mixing: 0.1,
        }
    }
}

/// Draws groups window after window until `shape.contacts` records exist.
/// Every pair of a group is one record, so each group is a clique.
pub fn clustered_stream(shape: StreamShape, seed: u64) -> Vec<ContactRecord> {
    assert!(shape.individuals >= 2 && shape.max_group >= 2 && shape.cluster_size >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ids: Vec<usize> = (0..shape.individuals).collect();
    let clusters: Vec<&[usize]> = ids.chunks(shape.cluster_size).filter(|c| c.len() >= 2).collect();
    let mut out = Vec::with_capacity(shape.contacts + shape.max_group * shape.max_group);
    let mut window = 0u64;
    while out.len() < shape.contacts {
        window += 1;
        let t = window * DEFAULT_WINDOW;
        let groups = rng.gen_range(1..=clusters.len().min(8));
        for cluster in clusters.choose_multiple(&mut rng, groups) {
            let size = rng.gen_range(2..=shape.max_group.min(cluster.len()));
            let mut members: Vec<usize> = cluster.choose_multiple(&mut rng, size).copied().collect();
            if rng.gen_bool(shape.mixing) {
                let outsider = rng.gen_range(0..shape.individuals);
                if !members.contains(&outsider) {
                    members[0] = outsider;
                }
            }
            for (x, &a) in members.iter().enumerate() {
                for &b in &members[x + 1..] {
                    out.push(ContactRecord {
                        t,
                        i: a.to_string(),
                        j: b.to_string(),
                    });
                }
            }
        }
    }
    out
}

/// Two communities `a*` and `b*` that never meet each other.
pub fn two_cluster_stream(per_cluster: usize, windows: u64, seed: u64) -> Vec<ContactRecord> {
    assert!(per_cluster >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for w in 0..windows {
        let t = w * DEFAULT_WINDOW;
        for prefix in ["a", "b"] {
            // a path through the community keeps it connected over the stream
            let i = (w as usize) % per_cluster;
            let j = (i + 1) % per_cluster;
            out.push(ContactRecord {
                t,
                i: format!("{prefix}{i}"),
                j: format!("{prefix}{j}"),
            });
            let x = rng.gen_range(0..per_cluster);
            let y = rng.gen_range(0..per_cluster);
            if x != y {
                out.push(ContactRecord {
                    t,
                    i: format!("{prefix}{x}"),
                    j: format!("{prefix}{y}"),
                });
            }
        }
    }
    out
}

/// Renders records as `t i j` lines.
pub fn to_text(records: &[ContactRecord]) -> String {
    let mut s = String::with_capacity(records.len() * 16);
    for r in records {
        s.push_str(&format!("{} {} {}\n", r.t, r.i, r.j));
    }
    s
}

/// A random hypergraph filtration with integer grades.
///
/// Between one and `max_vertices` vertices; every subset of dimension
/// `1..=max_dim` is tracked with probability one half and gets a grade in
/// `0..levels` or, one time in five, an explicit `∞`. Vertices usually stay at
/// zero but may enter late or never.
pub fn random_filtration(seed: u64, max_vertices: usize, max_dim: usize, levels: u32) -> Filtration<u32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices);
    let roster = Roster::new((0..n).map(|i| format!("v{i}"))).expect("distinct ids");
    let mut f = Filtration::new(roster, max_dim);
    let grade = |rng: &mut ChaCha8Rng| {
        if rng.gen_ratio(1, 5) {
            Grade::Infinite
        } else {
            Grade::Finite(rng.gen_range(0..levels))
        }
    };
    for v in 0..n as u32 {
        if rng.gen_ratio(1, 4) {
            let g = grade(&mut rng);
            f.set(Hyperedge::vertex(v), g).expect("vertex in roster");
        }
    }
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 || size > max_dim + 1 || !rng.gen_bool(0.5) {
            continue;
        }
        let members = (0..n as u32).filter(|v| mask & (1 << v) != 0).collect();
        let g = grade(&mut rng);
        f.set(Hyperedge::new(members).expect("sorted"), g).expect("within cap");
    }
    f
}

/// Up to `max_points` points on a coarse grid in the plane, so that equal
/// distances and hence simultaneous entries are common.
pub fn random_cloud(seed: u64, max_points: usize) -> PointCloud<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_points);
    let points = (0..n)
        .map(|_| vec![rng.gen_range(0..8) as f64 / 2.0, rng.gen_range(0..8) as f64 / 2.0])
        .collect();
    PointCloud::new(points).expect("finite coordinates")
}
