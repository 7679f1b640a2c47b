//! Exact Gaussian integers `a + bi` with overflow-checked `i64` parts.
//!
//! Every character sum over characters of order dividing four lands here, so
//! arithmetic panics on overflow instead of wrapping.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl From<(i64, i64)> for GaussianInt {
    fn from((re, im): (i64, i64)) -> Self {
        Self { re, im }
    }
}

impl From<GaussianInt> for (i64, i64) {
    fn from(z: GaussianInt) -> Self {
        (z.re, z.im)
    }
}

impl From<i64> for GaussianInt {
    fn from(re: i64) -> Self {
        Self { re, im: 0 }
    }
}

impl GaussianInt {
    pub const ZERO: Self = Self { re: 0, im: 0 };
    pub const ONE: Self = Self { re: 1, im: 0 };
    pub const I: Self = Self { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    /// `i^k` for any integer `k`.
    pub const fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::ONE,
            1 => Self::I,
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }

    pub const fn conj(self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }

    /// `|z|^2`.
    pub fn norm(self) -> i64 {
        self.checked_norm().expect("GaussianInt norm overflow")
    }

    pub fn checked_norm(self) -> Option<i64> {
        self.re
            .checked_mul(self.re)?
            .checked_add(self.im.checked_mul(self.im)?)
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        Some(Self {
            re: self.re.checked_add(rhs.re)?,
            im: self.im.checked_add(rhs.im)?,
        })
    }

    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        Some(Self {
            re: self.re.checked_sub(rhs.re)?,
            im: self.im.checked_sub(rhs.im)?,
        })
    }

    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        let re = self
            .re
            .checked_mul(rhs.re)?
            .checked_sub(self.im.checked_mul(rhs.im)?)?;
        let im = self
            .re
            .checked_mul(rhs.im)?
            .checked_add(self.im.checked_mul(rhs.re)?)?;
        Some(Self { re, im })
    }

    pub fn scale(self, k: i64) -> Self {
        self * Self::from(k)
    }

    pub fn is_real(self) -> bool {
        self.im == 0
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re as f64, self.im as f64)
    }
}

impl Add for GaussianInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs)
            .expect("GaussianInt addition overflow")
    }
}

impl AddAssign for GaussianInt {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs)
            .expect("GaussianInt subtraction overflow")
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs)
            .expect("GaussianInt multiplication overflow")
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::ZERO - self
    }
}

impl Sum for GaussianInt {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

/// Formats as `-1+4i`, `10`, `-6-24i`, `4i`.
impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, im: i64| match im {
            1 => write!(f, "i"),
            -1 => write!(f, "-i"),
            _ => write!(f, "{im}i"),
        };
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => imag(f, im),
            (re, im) => {
                write!(f, "{re}")?;
                if im > 0 {
                    write!(f, "+")?;
                }
                imag(f, im)
            }
        }
    }
}

/// Sums of fourth roots of unity kept as four counters, so a character sum
/// never touches `GaussianInt` arithmetic in its inner loop.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QuarterCounts([i64; 4]);

impl QuarterCounts {
    /// Adds `i^k`.
    #[inline]
    pub fn push(&mut self, k: u64) {
        self.0[(k & 3) as usize] += 1;
    }

    /// Adds `c * i^k`.
    #[inline]
    pub fn push_times(&mut self, k: u64, c: i64) {
        self.0[(k & 3) as usize] += c;
    }

    pub fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a += b;
        }
        self
    }

    pub fn value(self) -> GaussianInt {
        let [c0, c1, c2, c3] = self.0;
        GaussianInt::new(c0 - c2, c1 - c3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_matches_table_style() {
        assert_eq!(GaussianInt::new(-1, 4).to_string(), "-1+4i");
        assert_eq!(GaussianInt::new(-6, -24).to_string(), "-6-24i");
        assert_eq!(GaussianInt::new(10, 0).to_string(), "10");
        assert_eq!(GaussianInt::new(0, -1).to_string(), "-i");
        assert_eq!(GaussianInt::new(3, 1).to_string(), "3+i");
    }

    #[test]
    fn serializes_as_pair() {
        let z = GaussianInt::new(-17, 68);
        assert_eq!(serde_json::to_string(&z).unwrap(), "[-17,68]");
        let back: GaussianInt = serde_json::from_str("[-17,68]").unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(GaussianInt::I * GaussianInt::I, GaussianInt::from(-1));
        assert_eq!(GaussianInt::i_pow(-1), GaussianInt::new(0, -1));
        assert_eq!(GaussianInt::new(-1, 4).norm(), 17);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_panics() {
        let _ = GaussianInt::new(i64::MAX, 0) + GaussianInt::ONE;
    }

    #[test]
    fn quarter_counts() {
        let mut acc = QuarterCounts::default();
        for k in [0, 1, 1, 2, 7, 5] {
            acc.push(k);
        }
        // 1 + 2i - 1 - i + i
        assert_eq!(acc.value(), GaussianInt::new(0, 2));
    }

    fn small() -> impl Strategy<Value = GaussianInt> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| GaussianInt::new(a, b))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small(), b in small(), c in small()) {
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!((a * b).conj(), a.conj() * b.conj());
            prop_assert_eq!((a * b).norm(), a.norm() * b.norm());
            prop_assert_eq!(a - a, GaussianInt::ZERO);
        }
    }
}
