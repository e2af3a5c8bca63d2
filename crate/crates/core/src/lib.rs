//! Persistent homology of hypergraph filtrations.
//!
//! A filtration assigns each hyperedge a grade; [`engine::compute_barcodes`]
//! turns it into embedded-homology (`inf`) and additional (`hat`) bars.
//! [`oracle`] recomputes the same invariants from subspace arithmetic and is
//! used to check the engine. [`contact`] builds filtrations from contact
//! streams and [`rips`] from point clouds.
//!
//! Everything is generic over the grade scalar; the aliases below fix the
//! common choices.

pub mod contact;
pub mod engine;
pub mod error;
pub mod filtration;
pub mod fixtures;
pub mod gf2;
pub mod hypergraph;
pub mod io;
pub mod oracle;
pub mod report;
pub mod rips;
pub mod scalar;
pub mod synthetic;

pub use engine::{compute_barcodes, Bar, BarKind, Mode};
pub use error::{Error, Result};
pub use filtration::Filtration;
pub use hypergraph::{Hyperedge, Hypergraph, Roster};
pub use scalar::{Grade, GradeScalar, LogRatio};

pub type Filtration64 = Filtration<f64>;
pub type Filtration32 = Filtration<f32>;
/// Exact grades `log(a / b)` as produced by contact ingest.
pub type ContactFiltration = Filtration<LogRatio>;
/// Integer grades, handy for exhaustive tests.
pub type NaturalFiltration = Filtration<u32>;

pub type Bar64 = Bar<f64>;
pub type Bar32 = Bar<f32>;
pub type ContactBar = Bar<LogRatio>;
pub type NaturalBar = Bar<u32>;
