use serde::{Deserialize, Serialize};

use crate::engine::{Bar, BarKind};
use crate::scalar::GradeScalar;

/// An exact proportion. `0/0` is read as zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub numerator: u64,
    pub denominator: u64,
}

impl Ratio {
    pub fn value(&self) -> f64 {
        if self.denominator == 0 {
            0.0
        } else {
            self.numerator as f64 / self.denominator as f64
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HistogramBin {
    pub lower: f64,
    pub upper: f64,
    pub count: u64,
}

/// Bar counts of one dimension.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsSummary {
    pub dim: usize,
    /// Embedded-homology bars.
    #[serde(rename = "N")]
    pub n_total: u64,
    /// Embedded-homology bars that never die.
    #[serde(rename = "n")]
    pub n_infinite: u64,
    #[serde(rename = "N_hat")]
    pub hat_total: u64,
    #[serde(rename = "n_hat")]
    pub hat_infinite: u64,
    pub prop_inf: f64,
    pub prop_hat: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length_histogram: Option<Vec<HistogramBin>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti_at: Option<Vec<(f64, u64, u64)>>,
}

impl StatsSummary {
    pub fn from_counts(dim: usize, n_total: u64, n_infinite: u64, hat_total: u64, hat_infinite: u64) -> Self {
        let mut s = Self {
            dim,
            n_total,
            n_infinite,
            hat_total,
            hat_infinite,
            prop_inf: 0.0,
            prop_hat: 0.0,
            length_histogram: None,
            betti_at: None,
        };
        s.prop_inf = s.prop_inf_exact().value();
        s.prop_hat = s.prop_hat_exact().value();
        s
    }

    pub fn prop_inf_exact(&self) -> Ratio {
        Ratio {
            numerator: self.n_infinite,
            denominator: self.n_total + self.hat_total,
        }
    }

    pub fn prop_hat_exact(&self) -> Ratio {
        Ratio {
            numerator: self.hat_infinite,
            denominator: self.n_total + self.hat_total,
        }
    }
}

pub fn stats<T: GradeScalar>(bars: &[Bar<T>], dim: usize) -> StatsSummary {
    let count = |kind: BarKind, infinite_only: bool| {
        bars.iter()
            .filter(|b| b.dim == dim && b.kind == kind && (!infinite_only || b.is_infinite()))
            .count() as u64
    };
    StatsSummary::from_counts(
        dim,
        count(BarKind::Inf, false),
        count(BarKind::Inf, true),
        count(BarKind::Hat, false),
        count(BarKind::Hat, true),
    )
}

/// Equal-width histogram of finite embedded-bar lengths in `dim`.
pub fn length_histogram<T: GradeScalar>(bars: &[Bar<T>], dim: usize, bins: usize) -> Vec<HistogramBin> {
    let lengths: Vec<f64> = bars
        .iter()
        .filter(|b| b.dim == dim && b.kind == BarKind::Inf && !b.is_infinite())
        .map(|b| b.death.to_real() - b.birth.to_real())
        .collect();
    if bins == 0 || lengths.is_empty() {
        return Vec::new();
    }
    let top = lengths.iter().copied().fold(0.0, f64::max);
    let width = if top > 0.0 { top / bins as f64 } else { 1.0 };
    let mut out: Vec<HistogramBin> = (0..bins)
        .map(|i| HistogramBin {
            lower: width * i as f64,
            upper: width * (i + 1) as f64,
            count: 0,
        })
        .collect();
    for l in lengths {
        let i = ((l / width) as usize).min(bins - 1);
        out[i].count += 1;
    }
    out
}

/// `(embedded, additional)` bars of `dim` alive at `grade`.
pub fn betti_at<T: GradeScalar>(bars: &[Bar<T>], dim: usize, grade: f64) -> (u64, u64) {
    let alive = |kind| {
        bars.iter()
            .filter(|b| b.dim == dim && b.kind == kind)
            .filter(|b| b.birth.to_real() <= grade && b.death.to_real() > grade)
            .count() as u64
    };
    (alive(BarKind::Inf), alive(BarKind::Hat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Grade;

    #[test]
    fn published_rows() {
        let baboon = StatsSummary::from_counts(1, 78, 14, 0, 0);
        assert!((baboon.prop_inf - 0.1795).abs() < 5e-5);
        assert_eq!(baboon.prop_hat, 0.0);
        let conference = StatsSummary::from_counts(1, 7733, 7290, 1363, 1072);
        assert_eq!(conference.prop_inf_exact(), Ratio { numerator: 7290, denominator: 9096 });
        assert!((conference.prop_hat - 0.1179).abs() < 5e-5);
    }

    #[test]
    fn empty_is_zero() {
        let s = stats::<f64>(&[], 1);
        assert_eq!(s, StatsSummary::from_counts(1, 0, 0, 0, 0));
        assert_eq!(s.prop_inf, 0.0);
    }

    #[test]
    fn json_keys() {
        let json = serde_json::to_string(&StatsSummary::from_counts(1, 2, 1, 2, 0)).unwrap();
        assert_eq!(
            json,
            r#"{"dim":1,"N":2,"n":1,"N_hat":2,"n_hat":0,"prop_inf":0.25,"prop_hat":0.0}"#
        );
    }

    #[test]
    fn counts_by_kind() {
        let bars = vec![
            Bar::new(1, BarKind::Inf, Grade::Finite(1.0), Grade::Infinite).unwrap(),
            Bar::new(1, BarKind::Inf, Grade::Finite(1.0), Grade::Finite(2.0)).unwrap(),
            Bar::new(1, BarKind::Hat, Grade::Finite(0.5), Grade::Infinite).unwrap(),
            Bar::new(0, BarKind::Inf, Grade::Finite(0.0), Grade::Infinite).unwrap(),
        ];
        let s = stats(&bars, 1);
        assert_eq!((s.n_total, s.n_infinite, s.hat_total, s.hat_infinite), (2, 1, 1, 1));
        assert_eq!(betti_at(&bars, 1, 1.5), (2, 1));
        assert_eq!(betti_at(&bars, 1, 2.0), (1, 1));
        let h = length_histogram(&bars, 1, 2);
        assert_eq!(h.iter().map(|b| b.count).collect::<Vec<_>>(), vec![0, 1]);
    }
}
