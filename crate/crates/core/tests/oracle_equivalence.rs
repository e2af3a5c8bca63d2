//! The pivoting engine against the subspace oracle on random hypergraph
//! filtrations.

use hyperbar::engine::{compute_barcodes, BarKind, Mode};
use hyperbar::oracle::{betti_table, compare, oracle_bars, rank_function};
use hyperbar::synthetic::random_filtration;
use hyperbar::NaturalFiltration;
use proptest::prelude::*;

fn check_rank_tables(f: &NaturalFiltration) -> Result<(), TestCaseError> {
    let bars = compute_barcodes(f, 1, Mode::Filtered).unwrap();
    for n in 0..=1 {
        let table = betti_table(f, n).unwrap();
        let additional = table.additional().unwrap();
        let of_kind = |kind| -> Vec<_> {
            bars.iter().filter(|b| b.dim == n && b.kind == kind).copied().collect()
        };
        let (inf, hat) = (of_kind(BarKind::Inf), of_kind(BarKind::Hat));
        let m = table.grades.len();
        for i in 0..m {
            for j in i..=m {
                prop_assert_eq!(rank_function(&inf, &table.grades, i, j), table.inf[i][j], "inf n={} ({}, {})", n, i, j);
                prop_assert_eq!(rank_function(&hat, &table.grades, i, j), additional[i][j], "hat n={} ({}, {})", n, i, j);
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn engine_rank_function_matches_oracle(seed in any::<u64>()) {
        let f = random_filtration(seed, 6, 2, 5);
        check_rank_tables(&f)?;
    }

    #[test]
    fn engine_bars_match_oracle_bars(seed in any::<u64>()) {
        let f = random_filtration(seed, 5, 2, 4);
        let engine = compute_barcodes(&f, 1, Mode::Filtered).unwrap();
        let oracle = oracle_bars(&f, 1).unwrap();
        let diff = compare(&engine, &oracle);
        prop_assert!(diff.is_empty(), "{}", diff);
    }
}

#[test]
fn float_grades_agree_with_integer_grades() {
    for seed in 0..30 {
        let f = random_filtration(seed, 5, 2, 6);
        let g = f.map_grades(|x| x as f64 * 0.5);
        let a: Vec<_> = compute_barcodes(&f, 1, Mode::Filtered)
            .unwrap()
            .into_iter()
            .map(|b| b.map(|x| x as f64 * 0.5))
            .collect();
        assert_eq!(a, compute_barcodes(&g, 1, Mode::Filtered).unwrap());
    }
}
