//! Dirichlet characters modulo `n` for cyclic `Z_n^*`.
//!
//! A character is stored as an exponent `e` mod `φ(n)` so that
//! `χ(g^k) = ζ^(e·k)` with `ζ = exp(2πi/φ(n))`. Values stay as exponents until
//! a sum needs them; characters of order dividing 4 evaluate exactly in `Z[i]`.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::ring::{gcd, UnitGroup};

#[derive(Clone, Copy)]
pub struct DirichletCharacter<'g> {
    group: &'g UnitGroup,
    exponent: u64,
}

impl fmt::Debug for DirichletCharacter<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirichletCharacter")
            .field("modulus", &self.group.modulus())
            .field("exponent", &self.exponent)
            .finish()
    }
}

impl PartialEq for DirichletCharacter<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.exponent == other.exponent
    }
}

impl Eq for DirichletCharacter<'_> {}

impl<'g> DirichletCharacter<'g> {
    /// The character with `χ(g) = ζ^e`; `e` is reduced mod `φ(n)`.
    pub fn from_exponent(group: &'g UnitGroup, e: i64) -> Self {
        let phi = group.phi() as i64;
        Self {
            group,
            exponent: e.rem_euclid(phi) as u64,
        }
    }

    pub fn trivial(group: &'g UnitGroup) -> Self {
        Self { group, exponent: 0 }
    }

    /// The order-4 character normalized by `χ₄(g) = i`.
    pub fn chi4(group: &'g UnitGroup) -> Result<Self> {
        if !group.phi().is_multiple_of(4) {
            return Err(Error::Domain(format!(
                "no character of order 4 mod {}: 4 does not divide phi = {}",
                group.modulus(),
                group.phi()
            )));
        }
        Ok(Self {
            group,
            exponent: group.phi() / 4,
        })
    }

    /// The quadratic character, `χ₄²` whenever `χ₄` exists.
    pub fn quadratic(group: &'g UnitGroup) -> Self {
        Self {
            group,
            exponent: group.phi() / 2,
        }
    }

    /// Iterates the whole dual group, `e = 0..φ(n)`.
    pub fn all(group: &'g UnitGroup) -> impl Iterator<Item = Self> + 'g {
        (0..group.phi()).map(move |exponent| Self { group, exponent })
    }

    pub fn group(&self) -> &'g UnitGroup {
        self.group
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        let phi = self.group.phi();
        phi / gcd(self.exponent, phi)
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent == 0
    }

    pub fn conj(self) -> Self {
        Self::from_exponent(self.group, -(self.exponent as i64))
    }

    pub fn pow(self, k: i64) -> Self {
        let phi = self.group.phi() as i128;
        let e = (self.exponent as i128 * k as i128).rem_euclid(phi);
        Self {
            group: self.group,
            exponent: e as u64,
        }
    }

    /// Value exponent of `χ(x)` mod `φ(n)`, or `None` (the value 0) when `x`
    /// is not a unit.
    #[inline]
    pub fn eval(&self, x: u64) -> Option<u64> {
        let k = self.group.dlog(x)?;
        Some(((self.exponent as u128 * k as u128) % self.group.phi() as u128) as u64)
    }

    /// Same as [`eval`](Self::eval) for a signed representative.
    #[inline]
    pub fn eval_signed(&self, x: i64) -> Option<u64> {
        self.eval(self.group.reduce(x))
    }

    pub fn divides_four(&self) -> bool {
        4 % self.order() == 0
    }

    /// Writes `χ` as `χ₄^t` and returns `t` in `0..4`.
    pub fn quartic_power(&self) -> Result<u8> {
        if !self.divides_four() {
            return Err(Error::Domain(format!(
                "character of order {} does not have order dividing 4",
                self.order()
            )));
        }
        if !self.group.phi().is_multiple_of(4) {
            // Order 1 or 2 without an order-4 character available.
            return Err(Error::Domain(format!(
                "4 does not divide phi = {}; no order-4 reference character",
                self.group.phi()
            )));
        }
        Ok((self.exponent / (self.group.phi() / 4)) as u8)
    }

    /// Exact value in `{0, 1, i, -1, -i}` for characters of order dividing 4.
    pub fn eval_z4(&self, x: u64) -> Result<GaussianInt> {
        if !self.divides_four() {
            return Err(Error::Domain(format!(
                "exact evaluation needs order dividing 4, got order {}",
                self.order()
            )));
        }
        Ok(match self.eval(x) {
            None => GaussianInt::ZERO,
            // k·4/φ is an integer because the order divides 4.
            Some(k) => GaussianInt::i_pow((k * 4 / self.group.phi()) as i64),
        })
    }

    /// Floating-point value as a complex root of unity (or 0).
    pub fn value(&self, x: u64) -> Complex64 {
        match self.eval(x) {
            None => Complex64::new(0.0, 0.0),
            Some(k) => Complex64::from_polar(1.0, TAU * k as f64 / self.group.phi() as f64),
        }
    }

    pub fn value_signed(&self, x: i64) -> Complex64 {
        self.value(self.group.reduce(x))
    }

    /// `χ(-1)`, always `±1`.
    pub fn at_minus_one(&self) -> i64 {
        let k = self.eval(self.group.modulus() - 1).expect("-1 is a unit");
        if k == 0 {
            1
        } else {
            debug_assert_eq!(2 * k, self.group.phi());
            -1
        }
    }

    pub(crate) fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.group.modulus() == other.group.modulus() && self.group == other.group {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "characters are defined mod {} and mod {}",
                self.group.modulus(),
                other.group.modulus()
            )))
        }
    }
}

impl<'g> Mul for DirichletCharacter<'g> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        assert!(
            self.same_modulus(&rhs).is_ok(),
            "product of characters with different moduli"
        );
        Self::from_exponent(self.group, (self.exponent + rhs.exponent) as i64)
    }
}

/// Precomputed `ζ^k` for `k = 0..φ`, used by the floating dual-group sums.
#[derive(Debug, Clone)]
pub struct RootsOfUnity {
    roots: Vec<Complex64>,
}

impl RootsOfUnity {
    pub fn new(order: u64) -> Self {
        let roots = (0..order)
            .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / order as f64))
            .collect();
        Self { roots }
    }

    #[inline]
    pub fn get(&self, k: u64) -> Complex64 {
        self.roots[(k % self.roots.len() as u64) as usize]
    }
}

/// `dlog(x) mod 4` for every residue, so `χ₄^t(x) = i^(t·class(x))`.
#[derive(Debug, Clone)]
pub struct QuarticTable {
    class: Vec<u8>,
    n: u64,
}

impl QuarticTable {
    const NON_UNIT: u8 = 4;

    pub fn new(group: &UnitGroup) -> Result<Self> {
        if !group.phi().is_multiple_of(4) {
            return Err(Error::Domain(format!(
                "4 does not divide phi = {}; quartic characters undefined",
                group.phi()
            )));
        }
        let class = (0..group.modulus())
            .map(|x| group.dlog(x).map_or(Self::NON_UNIT, |k| (k & 3) as u8))
            .collect();
        Ok(Self {
            class,
            n: group.modulus(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Class of `x` mod `n`, or `None` for a non-unit.
    #[inline]
    pub fn class(&self, x: u64) -> Option<u64> {
        match self.class[(x % self.n) as usize] {
            Self::NON_UNIT => None,
            c => Some(c as u64),
        }
    }

    #[inline]
    pub fn class_signed(&self, x: i64) -> Option<u64> {
        self.class(x.rem_euclid(self.n as i64) as u64)
    }

    /// Exponent `k` of `χ₄^t(x) = i^k`, or `None` for a non-unit.
    #[inline]
    pub fn eval(&self, t: u8, x: u64) -> Option<u64> {
        self.class(x).map(|c| (c * t as u64) & 3)
    }

    #[inline]
    pub fn eval_signed(&self, t: u8, x: i64) -> Option<u64> {
        self.class_signed(x).map(|c| (c * t as u64) & 3)
    }

    /// `χ₄^t(-1)` as `±1`.
    pub fn sign(&self, t: u8) -> i64 {
        match self.eval(t, self.n - 1) {
            Some(0) => 1,
            Some(2) => -1,
            other => unreachable!("χ(-1) must be ±1, got i^{other:?}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q17() -> UnitGroup {
        UnitGroup::new(17, 1, false).unwrap()
    }

    #[test]
    fn named_characters() {
        let g = q17();
        assert!(DirichletCharacter::from_exponent(&g, 0).is_trivial());
        let chi4 = DirichletCharacter::chi4(&g).unwrap();
        assert_eq!(chi4.exponent(), 4);
        assert_eq!(chi4.eval_z4(3).unwrap(), GaussianInt::I);
        let phi = DirichletCharacter::quadratic(&g);
        assert_eq!(phi.exponent(), 8);
        assert_eq!(phi.order(), 2);
        assert_eq!(chi4 * chi4, phi);
        let g289 = UnitGroup::new(17, 2, false).unwrap();
        assert_eq!(DirichletCharacter::chi4(&g289).unwrap().exponent(), 68);
    }

    #[test]
    fn chi4_requires_four_dividing_phi() {
        let g = UnitGroup::new(7, 1, false).unwrap();
        assert!(matches!(
            DirichletCharacter::chi4(&g),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn evaluation_examples() {
        let g = q17();
        let chi4 = DirichletCharacter::chi4(&g).unwrap();
        // dlog(13) = 4, so the value exponent is 16 ≡ 0.
        assert_eq!(chi4.eval(13), Some(0));
        assert_eq!(chi4.eval(0), None);
        assert_eq!(DirichletCharacter::trivial(&g).eval(5), Some(0));
        assert_eq!(chi4.eval_z4(16).unwrap(), GaussianInt::ONE);
        assert_eq!(chi4.eval_z4(0).unwrap(), GaussianInt::ZERO);
        assert_eq!(
            DirichletCharacter::quadratic(&g).eval_z4(3).unwrap(),
            GaussianInt::from(-1)
        );
        let order8 = DirichletCharacter::from_exponent(&g, 2);
        assert!(matches!(order8.eval_z4(3), Err(Error::Domain(_))));
    }

    #[test]
    fn conjugate_and_powers() {
        let g = q17();
        let chi4 = DirichletCharacter::chi4(&g).unwrap();
        assert_eq!(chi4.conj().exponent(), 12);
        assert_eq!(chi4.pow(4), DirichletCharacter::trivial(&g));
        assert_eq!(chi4.conj().quartic_power().unwrap(), 3);
    }

    #[test]
    fn complete_multiplicativity() {
        let g = UnitGroup::new(41, 1, false).unwrap();
        for chi in DirichletCharacter::all(&g) {
            for a in [2u64, 5, 40] {
                for b in [3u64, 7, 39] {
                    let lhs = chi.eval(g.mul(a, b)).unwrap();
                    let rhs = (chi.eval(a).unwrap() + chi.eval(b).unwrap()) % g.phi();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn orthogonality_and_zero_on_non_units() {
        let g = UnitGroup::new(17, 1, true).unwrap();
        for chi in DirichletCharacter::all(&g) {
            let sum: Complex64 = (0..g.modulus()).map(|x| chi.value(x)).sum();
            let expected = if chi.is_trivial() {
                g.phi() as f64
            } else {
                0.0
            };
            assert!((sum - Complex64::new(expected, 0.0)).norm() < 1e-9 * g.phi() as f64);
            for x in (0..g.modulus()).filter(|x| x % 2 == 0 || x % 17 == 0) {
                assert_eq!(chi.eval(x), None);
            }
        }
    }

    #[test]
    fn dual_group_is_complete() {
        let g = q17();
        let vectors: Vec<Vec<Option<u64>>> = DirichletCharacter::all(&g)
            .map(|chi| (0..g.modulus()).map(|x| chi.eval(x)).collect())
            .collect();
        for i in 0..vectors.len() {
            for j in 0..i {
                assert_ne!(vectors[i], vectors[j]);
            }
        }
    }

    #[test]
    fn chi4_has_period_p_mod_289() {
        let g = UnitGroup::new(17, 2, false).unwrap();
        let chi4 = DirichletCharacter::chi4(&g).unwrap();
        for x in 0..g.modulus() {
            assert_eq!(chi4.eval(x), chi4.eval((x + 17) % g.modulus()), "x = {x}");
        }
    }

    #[test]
    fn quartic_table_matches_characters() {
        let g = UnitGroup::new(17, 2, false).unwrap();
        let table = QuarticTable::new(&g).unwrap();
        let chi4 = DirichletCharacter::chi4(&g).unwrap();
        for t in 0..4u8 {
            let chi = chi4.pow(t as i64);
            for x in 0..g.modulus() {
                let exact = chi.eval_z4(x).unwrap();
                let via_table = table
                    .eval(t, x)
                    .map_or(GaussianInt::ZERO, |k| GaussianInt::i_pow(k as i64));
                assert_eq!(exact, via_table);
            }
            assert_eq!(table.sign(t), chi.at_minus_one());
        }
    }
}
