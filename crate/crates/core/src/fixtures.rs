//! The six-person worked example, as contacts and as a hand-entered filtration.

use crate::filtration::Filtration;
use crate::hypergraph::Roster;
use crate::scalar::{Grade, LogRatio};

/// Nine 20-second periods of contacts among A–F, one record per drawn edge.
pub const MEETING_CONTACTS: &str = "\
# t i j
20 A B
20 B C
20 A C
20 D E
20 E F
20 D F
40 A B
40 B C
40 A C
40 D F
60 A B
60 C D
80 A C
80 D F
100 B C
100 D E
100 E F
100 D F
120 A B
120 B C
120 A C
120 D F
140 A B
140 C D
160 A B
160 C F
180 A B
180 C F
";

/// Meeting counts of the worked example.
pub const MEETING_COUNTS: [(&[&str], u64); 8] = [
    (&["A", "B"], 4),
    (&["D", "F"], 3),
    (&["C", "D"], 2),
    (&["C", "F"], 2),
    (&["A", "C"], 1),
    (&["B", "C"], 1),
    (&["A", "B", "C"], 3),
    (&["D", "E", "F"], 2),
];

/// The worked-example filtration entered directly from the count table.
pub fn meeting_filtration() -> Filtration<LogRatio> {
    let roster = Roster::new(["A", "B", "C", "D", "E", "F"]).expect("distinct ids");
    let mut f = Filtration::new(roster, 4);
    for (labels, count) in MEETING_COUNTS {
        f.set_labels(labels, Grade::Finite(LogRatio::new(4, count).expect("count ≤ 4")))
            .expect("valid hyperedge");
    }
    f
}
