//! From timestamped face-to-face contacts to a meeting filtration.
//!
//! Records are bucketed into fixed tumbling windows. In every window each
//! inclusion-maximal clique of the contact graph is one group meeting; only
//! the whole group is counted, never its subgroups. A hyperedge met in `T_e`
//! windows gets grade `log(max T) − log(T_e)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::BufRead;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::hypergraph::{Hyperedge, Roster};
use crate::scalar::{Grade, LogRatio};

/// Sensor period of the published contact datasets, in seconds.
pub const DEFAULT_WINDOW: u64 = 20;

/// Largest tracked group size.
pub const DEFAULT_SIZE_CAP: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactRecord {
    pub t: u64,
    pub i: String,
    pub j: String,
}

/// Parses `t i j [ignored...]` lines. Blank lines and `#` comments are skipped.
pub fn parse_contacts(text: &str) -> Result<Vec<ContactRecord>> {
    parse_contacts_reader(text.as_bytes())
}

pub fn parse_contacts_reader(reader: impl BufRead) -> Result<Vec<ContactRecord>> {
    let mut out = Vec::new();
    for (n, line) in reader.lines().enumerate() {
        let line_no = n + 1;
        let line = line.map_err(|e| Error::parse(line_no, e.to_string()))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_ascii_whitespace();
        let (Some(t), Some(i), Some(j)) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::parse(line_no, "expected `<t> <i> <j>`"));
        };
        let t: u64 = t
            .parse()
            .map_err(|_| Error::parse(line_no, format!("timestamp `{t}` is not a non-negative integer")))?;
        if i == j {
            return Err(Error::parse(line_no, format!("self-contact of `{i}`")));
        }
        out.push(ContactRecord {
            t,
            i: i.to_string(),
            j: j.to_string(),
        });
    }
    Ok(out)
}

/// Every id appearing in the records, in canonical order.
pub fn roster_of(records: &[ContactRecord]) -> Roster {
    Roster::canonical(records.iter().flat_map(|r| [r.i.as_str(), r.j.as_str()]))
}

/// Contact graph of one window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowGraph {
    pub window: u64,
    /// Pairs `(a, b)` of roster indices with `a < b`.
    pub edges: BTreeSet<(u32, u32)>,
}

/// Buckets records into windows `⌊(t − t₀) / window_len⌋`, `t₀` the earliest
/// timestamp. Only non-empty windows are returned, in window order.
pub fn window_graphs(roster: &Roster, records: &[ContactRecord], window_len: u64) -> Result<Vec<WindowGraph>> {
    if window_len == 0 {
        return Err(Error::Invalid("window length must be positive".into()));
    }
    let Some(t0) = records.iter().map(|r| r.t).min() else {
        return Ok(Vec::new());
    };
    let mut windows: BTreeMap<u64, BTreeSet<(u32, u32)>> = BTreeMap::new();
    for r in records {
        let a = roster
            .index_of(&r.i)
            .ok_or_else(|| Error::UnknownVertex(r.i.clone()))?;
        let b = roster
            .index_of(&r.j)
            .ok_or_else(|| Error::UnknownVertex(r.j.clone()))?;
        windows
            .entry((r.t - t0) / window_len)
            .or_default()
            .insert((a.min(b), a.max(b)));
    }
    Ok(windows
        .into_iter()
        .map(|(window, edges)| WindowGraph { window, edges })
        .collect())
}

/// Maximal cliques of one window, after applying the size cap.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CliqueSet {
    pub cliques: BTreeSet<Hyperedge>,
    /// Some clique exceeded the cap and was replaced by its cap-sized subsets.
    pub truncated: bool,
}

/// Inclusion-maximal cliques of size at least two (Bron–Kerbosch with pivoting).
///
/// Cliques larger than `size_cap` are reported as all of their
/// `size_cap`-subsets.
pub fn maximal_cliques(g: &WindowGraph, size_cap: usize) -> CliqueSet {
    assert!(size_cap >= 2, "size cap must be at least 2");
    let mut local: Vec<u32> = g.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    local.sort_unstable();
    local.dedup();
    let pos: HashMap<u32, usize> = local.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); local.len()];
    for &(a, b) in &g.edges {
        adj[pos[&a]].push(pos[&b]);
        adj[pos[&b]].push(pos[&a]);
    }
    for n in &mut adj {
        n.sort_unstable();
    }

    let mut found: Vec<Vec<usize>> = Vec::new();
    bron_kerbosch(&adj, &mut Vec::new(), (0..local.len()).collect(), Vec::new(), &mut found);

    let mut out = CliqueSet::default();
    for clique in found.into_iter().filter(|c| c.len() >= 2) {
        let members: Vec<u32> = clique.iter().map(|&i| local[i]).collect();
        if members.len() <= size_cap {
            out.cliques
                .insert(Hyperedge::from_unsorted(members).expect("distinct vertices"));
        } else {
            out.truncated = true;
            for subset in combinations(&members, size_cap) {
                out.cliques
                    .insert(Hyperedge::from_unsorted(subset).expect("distinct vertices"));
            }
        }
    }
    out
}

fn bron_kerbosch(
    adj: &[Vec<usize>],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // pivot with the most neighbours in P
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|v| adj[u].binary_search(v).is_ok()).count())
        .expect("P is non-empty");
    let candidates: Vec<usize> = p
        .iter()
        .copied()
        .filter(|v| adj[pivot].binary_search(v).is_err())
        .collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let nv = &adj[v];
        let p_next = p.iter().copied().filter(|u| nv.binary_search(u).is_ok()).collect();
        let x_next = x.iter().copied().filter(|u| nv.binary_search(u).is_ok()).collect();
        r.push(v);
        bron_kerbosch(adj, r, p_next, x_next, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

fn combinations(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(items: &[u32], k: usize, start: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - current.len() {
                break;
            }
            current.push(items[i]);
            go(items, k, i + 1, current, out);
            current.pop();
        }
    }
    go(items, k, 0, &mut current, &mut out);
    out
}

/// `T_e` for every group that met at least once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetingTally {
    pub roster: Roster,
    pub counts: BTreeMap<Hyperedge, u64>,
    pub size_cap: usize,
    pub truncated_windows: usize,
}

impl MeetingTally {
    pub fn max_count(&self) -> Option<u64> {
        self.counts.values().copied().max()
    }

    /// `T_e` by vertex labels; zero if never met.
    pub fn count_of<S: AsRef<str>>(&self, labels: &[S]) -> u64 {
        self.roster
            .edge(labels)
            .ok()
            .and_then(|e| self.counts.get(&e).copied())
            .unwrap_or(0)
    }
}

/// Each maximal clique of each window adds one to its own count only.
pub fn tally_meetings(roster: &Roster, windows: &[WindowGraph], size_cap: usize) -> Result<MeetingTally> {
    if size_cap < 2 {
        return Err(Error::Invalid("size cap must be at least 2".into()));
    }
    let (counts, truncated_windows) = windows
        .par_iter()
        .map(|w| maximal_cliques(w, size_cap))
        .fold(
            || (BTreeMap::<Hyperedge, u64>::new(), 0usize),
            |(mut counts, mut truncated), set| {
                for c in set.cliques {
                    *counts.entry(c).or_default() += 1;
                }
                truncated += set.truncated as usize;
                (counts, truncated)
            },
        )
        .reduce(
            || (BTreeMap::new(), 0),
            |(mut a, ta), (b, tb)| {
                for (e, c) in b {
                    *a.entry(e).or_default() += c;
                }
                (a, ta + tb)
            },
        );
    Ok(MeetingTally {
        roster: roster.clone(),
        counts,
        size_cap,
        truncated_windows,
    })
}

/// Grades `log(max T / T_e)`; every roster vertex at grade zero; unseen
/// hyperedges at `∞`.
pub fn build_filtration(tally: &MeetingTally) -> Result<Filtration<LogRatio>> {
    let max_t = tally.max_count().ok_or(Error::Empty("meeting tally"))?;
    let mut f = Filtration::new(tally.roster.clone(), tally.size_cap - 1);
    for v in 0..tally.roster.len() as u32 {
        f.set(Hyperedge::vertex(v), Grade::origin())?;
    }
    for (e, &count) in &tally.counts {
        let grade = LogRatio::new(max_t, count).expect("count bounded by the maximum");
        f.set(e.clone(), Grade::Finite(grade))?;
    }
    Ok(f)
}

/// Parse, window, tally and grade in one go.
pub fn ingest(text: &str, window_len: u64, size_cap: usize) -> Result<(MeetingTally, Filtration<LogRatio>)> {
    let records = parse_contacts(text)?;
    if records.is_empty() {
        return Err(Error::Empty("contact records"));
    }
    let roster = roster_of(&records);
    let windows = window_graphs(&roster, &records, window_len)?;
    let tally = tally_meetings(&roster, &windows, size_cap)?;
    let filtration = build_filtration(&tally)?;
    Ok((tally, filtration))
}
