//! Jacobi sums, binomial coefficients of characters, and the closed-form
//! quartic character-sum tables used by the 4-clique count.
//!
//! Sums run over every `x` in `Z_q` and lean on characters vanishing at
//! non-units. Brute-force sums are returned next to their closed forms so
//! callers can assert exact equality.

use num_complex::Complex64;
use serde::Serialize;

use crate::character::{DirichletCharacter, QuarticTable, RootsOfUnity};
use crate::error::{Error, Result};
use crate::gaussian::{GaussianInt, QuarterCounts};
use crate::ring::UnitGroup;

/// `J(A, B) = Σ_x A(x) B(1 - x)`, exact for characters of order dividing 4.
pub fn jacobi_exact(a: DirichletCharacter<'_>, b: DirichletCharacter<'_>) -> Result<GaussianInt> {
    a.same_modulus(&b)?;
    for chi in [a, b] {
        if !chi.divides_four() {
            return Err(Error::Domain(format!(
                "exact Jacobi sum needs orders dividing 4, got order {}",
                chi.order()
            )));
        }
    }
    let group = a.group();
    let phi = group.phi();
    let mut acc = QuarterCounts::default();
    for x in 0..group.modulus() {
        let (Some(ka), Some(kb)) = (a.eval(x), b.eval_signed(1 - x as i64)) else {
            continue;
        };
        acc.push((ka + kb) % phi * 4 / phi);
    }
    Ok(acc.value())
}

/// Floating-point Jacobi sum for arbitrary characters.
pub fn jacobi_general(a: DirichletCharacter<'_>, b: DirichletCharacter<'_>) -> Result<Complex64> {
    a.same_modulus(&b)?;
    let roots = RootsOfUnity::new(a.group().phi());
    Ok(jacobi_with_roots(a, b, &roots))
}

pub(crate) fn jacobi_with_roots(
    a: DirichletCharacter<'_>,
    b: DirichletCharacter<'_>,
    roots: &RootsOfUnity,
) -> Complex64 {
    let group = a.group();
    let mut sum = Complex64::new(0.0, 0.0);
    for x in 0..group.modulus() {
        if let (Some(ka), Some(kb)) = (a.eval(x), b.eval_signed(1 - x as i64)) {
            sum += roots.get(ka + kb);
        }
    }
    sum
}

/// `q · binom(A, B) = B(-1) J(A, B̄)`; the `1/q` is never materialized.
pub fn qbinom(a: DirichletCharacter<'_>, b: DirichletCharacter<'_>) -> Result<GaussianInt> {
    Ok(jacobi_exact(a, b.conj())?.scale(b.at_minus_one()))
}

/// Floating `q · binom(A, B)` for arbitrary characters.
pub fn qbinom_general(
    a: DirichletCharacter<'_>,
    b: DirichletCharacter<'_>,
    roots: &RootsOfUnity,
) -> Complex64 {
    jacobi_with_roots(a, b.conj(), roots) * b.at_minus_one() as f64
}

fn require_prime_power(group: &UnitGroup) -> Result<()> {
    if group.is_doubled() {
        Err(Error::Domain(format!(
            "operation is defined for q = p^alpha only, not n = {}",
            group.modulus()
        )))
    } else {
        Ok(())
    }
}

/// Residual `|LHS - RHS|` of the point expansion
/// `A(1+x) = Σ_t A(1+tp) δ_{tp}(x) + (1/φ) Σ_χ J(A, χ̄) χ(-x)`.
pub fn point_expansion_residual(a: DirichletCharacter<'_>, x: u64) -> Result<f64> {
    let group = a.group();
    require_prime_power(group)?;
    let q = group.modulus();
    let p = group.prime();
    let x = x % q;
    let roots = RootsOfUnity::new(group.phi());

    let lhs = a.value((1 + x) % q);

    let mut rhs = Complex64::new(0.0, 0.0);
    if x.is_multiple_of(p) {
        rhs += a.value((1 + x) % q);
    }
    let minus_x = (q - x) % q;
    let mut spectral = Complex64::new(0.0, 0.0);
    for chi in DirichletCharacter::all(group) {
        if let Some(k) = chi.eval(minus_x) {
            spectral += jacobi_with_roots(a, chi.conj(), &roots) * roots.get(k);
        }
    }
    rhs += spectral / group.phi() as f64;
    Ok((lhs - rhs).norm())
}

/// Precomputed quartic character data for one modulus `q = p^α`, with the
/// canonical `χ₄` (`χ₄(g) = i`), `ρ = J(χ₄, χ₄)` and `ξ = J(χ₄, φ)`.
#[derive(Debug, Clone)]
pub struct QuarticSums<'g> {
    group: &'g UnitGroup,
    table: QuarticTable,
    rho: GaussianInt,
    xi: GaussianInt,
}

/// Exponent sign triples of the first character-sum table, in row order.
pub const LEMSEC1_TRIPLES: [(i8, i8, i8); 10] = [
    (0, 0, 0),
    (0, 0, 1),
    (0, 1, 0),
    (1, 0, 0),
    (0, 1, 1),
    (1, 0, 1),
    (1, 1, 0),
    (0, -1, 1),
    (-1, 0, 1),
    (-1, 1, 0),
];

/// Exponent sign triples of the double-sum table.
pub const LEMA1_TRIPLES: [(i8, i8, i8); 4] = [(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)];

/// Row sign triples `(i1, i2, i3)` of the weighted double-sum table, `w = 1..8`.
pub const CORR_ROWS: [(i8, i8, i8); 8] = [
    (1, 1, 1),
    (1, 1, -1),
    (1, -1, 1),
    (1, -1, -1),
    (-1, 1, 1),
    (-1, 1, -1),
    (-1, -1, 1),
    (-1, -1, -1),
];

/// Weight `A_x` of the weighted double-sum table, `z = 1..4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CorrColumn {
    /// `χ₄(x)`
    Chi4AtX,
    /// `χ̄₄(x)`
    Chi4BarAtX,
    /// `χ₄(1-x)`
    Chi4AtOneMinusX,
    /// `χ̄₄(1-x)`
    Chi4BarAtOneMinusX,
}

pub const CORR_COLUMNS: [CorrColumn; 4] = [
    CorrColumn::Chi4AtX,
    CorrColumn::Chi4BarAtX,
    CorrColumn::Chi4AtOneMinusX,
    CorrColumn::Chi4BarAtOneMinusX,
];

/// Reference to `S_k` or its conjugate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SRef {
    pub index: u8,
    pub conjugated: bool,
}

const fn s(index: u8) -> SRef {
    SRef {
        index,
        conjugated: false,
    }
}

const fn sbar(index: u8) -> SRef {
    SRef {
        index,
        conjugated: true,
    }
}

/// The 8×4 grid of the weighted double-sum table.
pub const CORR_GRID: [[SRef; 4]; 8] = [
    [s(1), s(1), s(1), s(1)],
    [s(2), sbar(2), s(2), sbar(2)],
    [s(3), s(6), s(5), sbar(4)],
    [s(4), sbar(5), s(6), s(3)],
    [s(5), sbar(4), s(3), s(6)],
    [s(6), s(3), s(4), sbar(5)],
    [s(2), sbar(2), s(2), sbar(2)],
    [sbar(1), sbar(1), sbar(1), sbar(1)],
];

/// Closed-form values `S₁..S₆` and the grid they populate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCorrTable {
    pub rho: GaussianInt,
    pub xi: GaussianInt,
    /// `s[k-1] = S_k`.
    pub s: [GaussianInt; 6],
    pub grid: [[SRef; 4]; 8],
}

impl LemmaCorrTable {
    pub fn new(rho: GaussianInt, xi: GaussianInt, p_pow: i64) -> Self {
        let pp = GaussianInt::from(p_pow);
        let pp2 = GaussianInt::from(p_pow * p_pow);
        let s = [
            -(pp * (rho + xi)),
            pp2 - pp * rho,
            GaussianInt::from(rho.norm()) + pp2,
            pp2 - pp * xi,
            rho * rho - pp * xi.conj(),
            pp2.scale(2),
        ];
        Self {
            rho,
            xi,
            s,
            grid: CORR_GRID,
        }
    }

    pub fn resolve(&self, r: SRef) -> GaussianInt {
        let v = self.s[(r.index - 1) as usize];
        if r.conjugated {
            v.conj()
        } else {
            v
        }
    }

    /// Entry at 1-based row `w` and column `z`.
    pub fn entry(&self, w: usize, z: usize) -> Result<GaussianInt> {
        check_corr_index(w, z)?;
        Ok(self.resolve(self.grid[w - 1][z - 1]))
    }
}

fn check_corr_index(w: usize, z: usize) -> Result<()> {
    if (1..=8).contains(&w) && (1..=4).contains(&z) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "table index ({w}, {z}) outside 1..=8 × 1..=4"
        )))
    }
}

/// `χ₄^i` exponent for `i ∈ {-1, 0, 1}`.
fn power(i: i8) -> u8 {
    (i as i32).rem_euclid(4) as u8
}

impl<'g> QuarticSums<'g> {
    pub fn new(group: &'g UnitGroup) -> Result<Self> {
        require_prime_power(group)?;
        let table = QuarticTable::new(group)?;
        let chi4 = DirichletCharacter::chi4(group)?;
        let rho = jacobi_exact(chi4, chi4)?;
        let xi = jacobi_exact(chi4, chi4 * chi4)?;
        Ok(Self {
            group,
            table,
            rho,
            xi,
        })
    }

    pub fn group(&self) -> &'g UnitGroup {
        self.group
    }

    pub fn table(&self) -> &QuarticTable {
        &self.table
    }

    /// `ρ = J(χ₄, χ₄)`.
    pub fn rho(&self) -> GaussianInt {
        self.rho
    }

    /// `ξ = J(χ₄, φ)`.
    pub fn xi(&self) -> GaussianInt {
        self.xi
    }

    fn p_pow(&self) -> i64 {
        self.group.p_pow_alpha_minus_one() as i64
    }

    fn chi(&self, t: u8, x: i64) -> GaussianInt {
        self.table
            .eval_signed(t, x)
            .map_or(GaussianInt::ZERO, |k| GaussianInt::i_pow(k as i64))
    }

    fn admissible_pair(&self, x: u64) -> bool {
        self.table.class(x).is_some() && self.table.class_signed(1 - x as i64).is_some()
    }

    /// Single sum over `y` with `y, 1-y, x-y` all units of
    /// `χ₄^{i1}(x-y) χ₄^{i2}(1-y) χ₄^{i3}(y)`, against its closed form.
    pub fn lemsec1_eval(&self, x: u64, triple: (i8, i8, i8)) -> Result<(GaussianInt, GaussianInt)> {
        let x = x % self.group.modulus();
        if !self.admissible_pair(x) {
            return Err(Error::Domain(format!(
                "need x and 1-x to be units, got x = {x}"
            )));
        }
        let closed = self.lemsec1_closed(x, triple)?;
        let (i1, i2, i3) = (power(triple.0), power(triple.1), power(triple.2));
        let mut acc = QuarterCounts::default();
        let xi = x as i64;
        for y in 0..self.group.modulus() as i64 {
            let (Some(a), Some(b), Some(c)) = (
                self.table.eval_signed(i1, xi - y),
                self.table.eval_signed(i2, 1 - y),
                self.table.eval_signed(i3, y),
            ) else {
                continue;
            };
            acc.push(a + b + c);
        }
        Ok((acc.value(), closed))
    }

    fn lemsec1_closed(&self, x: u64, triple: (i8, i8, i8)) -> Result<GaussianInt> {
        let x = x as i64;
        let pp = GaussianInt::from(self.p_pow());
        let p = self.group.prime() as i64;
        let one = GaussianInt::ONE;
        let c = |t: u8, v: i64| self.chi(t, v);
        let value = match triple {
            (0, 0, 0) => pp.scale(p - 3),
            (0, 0, 1) => -(pp * (one + c(1, x))),
            (0, 1, 0) => -(pp * (one + c(1, 1 - x))),
            (1, 0, 0) => -(pp * (c(1, 1 - x) + c(1, x))),
            (0, 1, 1) => self.rho - pp * c(1, 1 - x) * c(1, x),
            (1, 0, 1) => c(2, x) * self.rho - pp * c(1, 1 - x),
            (1, 1, 0) => c(2, x - 1) * self.rho - pp * c(1, x),
            (0, -1, 1) => -(pp * (one + c(3, 1 - x) * c(1, x))),
            (-1, 0, 1) => -(pp * (one + c(3, 1 - x))),
            (-1, 1, 0) => -(pp * (one + c(3, x))),
            other => {
                return Err(Error::Domain(format!(
                    "exponent triple {other:?} is not tabulated"
                )))
            }
        };
        Ok(value)
    }

    /// Inner sum `Σ_y χ₄^{i1}(y) χ₄^{i2}(1-y) χ₄^{i3}(x-y)` for nonzero exponents.
    fn inner_triple_sum(&self, x: i64, (i1, i2, i3): (u8, u8, u8)) -> QuarterCounts {
        let mut acc = QuarterCounts::default();
        for y in 0..self.group.modulus() as i64 {
            let (Some(a), Some(b), Some(c)) = (
                self.table.eval_signed(i1, y),
                self.table.eval_signed(i2, 1 - y),
                self.table.eval_signed(i3, x - y),
            ) else {
                continue;
            };
            acc.push(a + b + c);
        }
        acc
    }

    /// Double sum over admissible `x` and `y` of
    /// `χ₄^{i1}(y) χ₄^{i2}(1-y) χ₄^{i3}(x-y)`, against its closed form.
    pub fn lema1_eval(&self, triple: (i8, i8, i8)) -> Result<(GaussianInt, GaussianInt)> {
        let pp = GaussianInt::from(self.p_pow());
        let closed = match triple {
            (1, 1, 1) => -(self.xi * pp).scale(2),
            (1, 1, -1) => (pp * pp).scale(2),
            (1, -1, 1) => -(pp * (self.xi.conj() - pp)),
            (1, -1, -1) => -(pp * (self.xi - pp)),
            other => {
                return Err(Error::Domain(format!(
                    "exponent triple {other:?} is not tabulated"
                )))
            }
        };
        let powers = (power(triple.0), power(triple.1), power(triple.2));
        let mut acc = QuarterCounts::default();
        for x in 0..self.group.modulus() {
            if self.admissible_pair(x) {
                acc = acc.merge(self.inner_triple_sum(x as i64, powers));
            }
        }
        Ok((acc.value(), closed))
    }

    pub fn corr_table(&self) -> LemmaCorrTable {
        LemmaCorrTable::new(self.rho, self.xi, self.p_pow())
    }

    /// Weighted double sum at 1-based row `w` and column `z`, against the
    /// tabulated `S` value.
    pub fn corr_eval(&self, w: usize, z: usize) -> Result<(GaussianInt, GaussianInt)> {
        check_corr_index(w, z)?;
        let closed = self.corr_table().entry(w, z)?;
        let (i1, i2, i3) = CORR_ROWS[w - 1];
        let powers = (power(i1), power(i2), power(i3));
        let column = CORR_COLUMNS[z - 1];
        let mut total = GaussianInt::ZERO;
        for x in 0..self.group.modulus() {
            if !self.admissible_pair(x) {
                continue;
            }
            let xi = x as i64;
            let weight = match column {
                CorrColumn::Chi4AtX => self.chi(1, xi),
                CorrColumn::Chi4BarAtX => self.chi(3, xi),
                CorrColumn::Chi4AtOneMinusX => self.chi(1, 1 - xi),
                CorrColumn::Chi4BarAtOneMinusX => self.chi(3, 1 - xi),
            };
            total += weight * self.inner_triple_sum(xi, powers).value();
        }
        Ok((total, closed))
    }
}
