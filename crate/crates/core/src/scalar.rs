//! Grade scalars.
//!
//! Every filtration, bar and oracle table is generic over the scalar used to
//! key grades. Any `num-traits` number works (`f64`, `f32`, `u32`, ...), and
//! [`LogRatio`] gives exact ordering for grades of the form `log(a / b)`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Num, ToPrimitive};

/// A scalar usable as a filtration grade.
///
/// Values must be totally ordered on the admissible domain (non-negative and
/// finite); infinity is represented separately by [`Grade::Infinite`].
pub trait GradeScalar: Copy + PartialOrd + fmt::Debug + Send + Sync + 'static {
    /// The grade of the empty hyperedge and of default singletons.
    fn origin() -> Self;

    /// Real value used for rendering. Ordering is never decided on this value.
    fn to_real(&self) -> f64;

    /// Non-negative, finite and comparable.
    fn is_admissible(&self) -> bool {
        matches!(
            self.partial_cmp(&Self::origin()),
            Some(Ordering::Greater | Ordering::Equal)
        ) && self.to_real().is_finite()
    }
}

impl<T> GradeScalar for T
where
    T: Num + PartialOrd + Copy + fmt::Debug + ToPrimitive + Send + Sync + 'static,
{
    fn origin() -> Self {
        T::zero()
    }

    fn to_real(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// A finite grade or `+∞`.
#[derive(Clone, Copy, Debug)]
pub enum Grade<T> {
    Finite(T),
    Infinite,
}

impl<T: GradeScalar> Grade<T> {
    pub fn origin() -> Self {
        Grade::Finite(T::origin())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Grade::Finite(_))
    }

    pub fn finite(&self) -> Option<T> {
        match self {
            Grade::Finite(v) => Some(*v),
            Grade::Infinite => None,
        }
    }

    pub fn to_real(&self) -> f64 {
        match self {
            Grade::Finite(v) => v.to_real(),
            Grade::Infinite => f64::INFINITY,
        }
    }

    pub fn map<U: GradeScalar>(self, f: impl FnOnce(T) -> U) -> Grade<U> {
        match self {
            Grade::Finite(v) => Grade::Finite(f(v)),
            Grade::Infinite => Grade::Infinite,
        }
    }
}

impl<T: GradeScalar> From<T> for Grade<T> {
    fn from(value: T) -> Self {
        Grade::Finite(value)
    }
}

impl<T: GradeScalar> PartialEq for Grade<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: GradeScalar> Eq for Grade<T> {}

impl<T: GradeScalar> PartialOrd for Grade<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: GradeScalar> Ord for Grade<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Grade::Infinite, Grade::Infinite) => Ordering::Equal,
            (Grade::Infinite, Grade::Finite(_)) => Ordering::Greater,
            (Grade::Finite(_), Grade::Infinite) => Ordering::Less,
            (Grade::Finite(a), Grade::Finite(b)) => a
                .partial_cmp(b)
                .expect("grades are admissible and therefore comparable"),
        }
    }
}

impl<T: GradeScalar> fmt::Display for Grade<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grade::Finite(v) => f.write_str(&render_real(v.to_real())),
            Grade::Infinite => f.write_str("inf"),
        }
    }
}

/// Exact grade `ln(numerator / denominator)` with `numerator ≥ denominator ≥ 1`.
///
/// Meeting grades `log(max T) − log(T_e)` are exactly of this shape. Ordering
/// and equality compare the ratios by cross multiplication, so equal counts
/// always tie and distinct counts never do.
#[derive(Clone, Copy, Debug)]
pub struct LogRatio {
    numerator: u64,
    denominator: u64,
}

impl LogRatio {
    pub fn new(numerator: u64, denominator: u64) -> Option<Self> {
        (denominator >= 1 && numerator >= denominator).then_some(Self {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// `log_base(numerator / denominator)`.
    pub fn to_real_base(&self, base: f64) -> f64 {
        self.to_real() / base.ln()
    }
}

impl PartialEq for LogRatio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for LogRatio {}

impl PartialOrd for LogRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LogRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numerator as u128 * other.denominator as u128;
        let rhs = other.numerator as u128 * self.denominator as u128;
        lhs.cmp(&rhs)
    }
}

impl GradeScalar for LogRatio {
    fn origin() -> Self {
        Self {
            numerator: 1,
            denominator: 1,
        }
    }

    fn to_real(&self) -> f64 {
        (self.numerator as f64 / self.denominator as f64).ln()
    }
}

/// Renders a real with 9 significant digits, trailing zeros trimmed.
///
/// `0.6931471805599453` → `0.693147181`, `1.0` → `1`, `∞` → `inf`.
pub fn render_real(value: f64) -> String {
    if value.is_infinite() && value > 0.0 {
        return "inf".to_string();
    }
    if value == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.8e}", value);
    let (mantissa, exponent) = sci.split_once('e').expect("scientific format");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exponent < 0 {
        out.push_str("0.");
        for _ in 0..(-exponent - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    } else {
        let int_len = exponent as usize + 1;
        if digits.len() <= int_len {
            out.push_str(&digits);
            for _ in digits.len()..int_len {
                out.push('0');
            }
        } else {
            out.push_str(&digits[..int_len]);
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    }
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    out
}

/// Parses a rendered grade: a non-negative real or `inf`.
pub fn parse_real_grade(text: &str) -> Option<Grade<f64>> {
    let text = text.trim();
    if text.eq_ignore_ascii_case("inf") || text.eq_ignore_ascii_case("infinity") {
        return Some(Grade::Infinite);
    }
    let value: f64 = text.parse().ok()?;
    (value.is_finite() && value >= 0.0).then_some(Grade::Finite(value))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_nine_significant_digits() {
        assert_eq!(render_real(2f64.ln()), "0.693147181");
        assert_eq!(render_real((4f64 / 3.0).ln()), "0.287682072");
        assert_eq!(render_real(4f64.ln()), "1.38629436");
        assert_eq!(render_real(1.0), "1");
        assert_eq!(render_real(0.0), "0");
        assert_eq!(render_real(f64::INFINITY), "inf");
        assert_eq!(render_real(1234.5), "1234.5");
        assert_eq!(render_real(0.000123), "0.000123");
        assert_eq!(render_real(2f64.sqrt()), "1.41421356");
    }

    #[test]
    fn log_ratio_orders_exactly() {
        let a = LogRatio::new(4, 3).unwrap();
        let b = LogRatio::new(8, 6).unwrap();
        let c = LogRatio::new(2, 1).unwrap();
        assert_eq!(a, b);
        assert!(a < c);
        assert_eq!(LogRatio::new(5, 5).unwrap(), LogRatio::origin());
        assert!(LogRatio::new(1, 2).is_none());
        assert!(LogRatio::new(1, 0).is_none());
    }

    #[test]
    fn grade_order_puts_infinity_last() {
        let g: Vec<Grade<u32>> = vec![Grade::Infinite, Grade::Finite(3), Grade::Finite(0)];
        let mut sorted = g.clone();
        sorted.sort();
        assert_eq!(sorted, vec![Grade::Finite(0), Grade::Finite(3), Grade::Infinite]);
    }

    #[test]
    fn admissibility() {
        assert!(1.5f64.is_admissible());
        assert!(!(-1.0f64).is_admissible());
        assert!(!f64::NAN.is_admissible());
        assert!(!f64::INFINITY.is_admissible());
        assert!(0u32.is_admissible());
        assert!(LogRatio::new(7, 2).unwrap().is_admissible());
    }

    #[test]
    fn parse_grades() {
        assert_eq!(parse_real_grade("inf"), Some(Grade::Infinite));
        assert_eq!(parse_real_grade("0.5"), Some(Grade::Finite(0.5)));
        assert_eq!(parse_real_grade("-1"), None);
        assert_eq!(parse_real_grade("x"), None);
    }
}
