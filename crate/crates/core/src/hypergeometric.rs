//! Hypergeometric functions whose parameters are Dirichlet characters mod
//! `q = p^α`, the seven parameter transformations, and the group they
//! generate on quartic parameter tuples.
//!
//! Exact values are always carried scaled: `q·₂F₁` and `q²·₃F₂` live in
//! `Z[i]` when every parameter is a power of `χ₄`. The dual-group forms are
//! floating point and only serve as cross-checks.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::character::{DirichletCharacter, QuarticTable, RootsOfUnity};
use crate::charsums::qbinom_general;
use crate::error::{Error, Result};
use crate::gaussian::{GaussianInt, QuarterCounts};
use crate::ring::UnitGroup;

/// Largest `φ(q)` for which the dual-group sums are attempted.
pub const CHARSUM_PHI_LIMIT: u64 = 10_000;

/// `(t₁, …, t₅) ∈ Z₄⁵`, naming `q²·₃F₂(χ₄^t₁, χ₄^t₂, χ₄^t₃; χ₄^t₄, χ₄^t₅ | 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "[u8; 5]")]
pub struct HypTuple([u8; 5]);

impl From<HypTuple> for [u8; 5] {
    fn from(t: HypTuple) -> Self {
        t.0
    }
}

impl fmt::Display for HypTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = self.0;
        write!(f, "({a},{b},{c},{d},{e})")
    }
}

impl HypTuple {
    /// Reduces every entry mod 4.
    pub fn new(t: [i64; 5]) -> Self {
        Self(t.map(|v| v.rem_euclid(4) as u8))
    }

    pub fn entries(&self) -> [u8; 5] {
        self.0
    }

    /// Membership in `X`: `t₁, t₂, t₃ ∉ {0, t₄, t₅}` and `t₁+t₂+t₃ ≠ t₄+t₅`.
    pub fn in_domain(&self) -> bool {
        let [t1, t2, t3, t4, t5] = self.0;
        [t1, t2, t3].iter().all(|&t| t != 0 && t != t4 && t != t5)
            && (t1 + t2 + t3) % 4 != (t4 + t5) % 4
    }

    /// All of `X` in lexicographic order.
    pub fn domain() -> Vec<Self> {
        (0..1024u32)
            .map(|code| {
                let mut t = [0u8; 5];
                for (i, slot) in t.iter_mut().enumerate() {
                    *slot = ((code >> (2 * (4 - i))) & 3) as u8;
                }
                Self(t)
            })
            .filter(Self::in_domain)
            .collect()
    }

    /// Sum of entries mod 4, the exponent of `ABCDE`.
    fn total(&self) -> u8 {
        self.0.iter().sum::<u8>() % 4
    }
}

fn require_domain(t: HypTuple) -> Result<()> {
    if t.in_domain() {
        Ok(())
    } else {
        Err(Error::Domain(format!("tuple {t} is not in X")))
    }
}

/// Applies generator `f_i` (`i = 1..=7`) without checking membership in `X`.
pub fn apply_generator(i: u8, t: HypTuple) -> Result<HypTuple> {
    let [t1, t2, t3, t4, t5] = t.0.map(i64::from);
    let image = match i {
        1 => [t2 - t4, t1 - t4, t3 - t4, -t4, t5 - t4],
        2 => [t1, t1 - t4, t1 - t5, t1 - t2, t1 - t3],
        3 => [t2 - t4, t2, t2 - t5, t2 - t1, t2 - t3],
        4 => [t1, t2, t5 - t3, t1 + t2 - t4, t5],
        5 => [t1, t4 - t2, t3, t4, t1 + t3 - t5],
        6 => [t4 - t1, t2, t3, t4, t2 + t3 - t5],
        7 => [t4 - t1, t4 - t2, t3, t4, t4 + t5 - t1 - t2],
        _ => {
            return Err(Error::Domain(format!(
                "transformation index {i} outside 1..=7"
            )))
        }
    };
    Ok(HypTuple::new(image))
}

/// `f_i(t)` for `t ∈ X`.
pub fn transform(i: u8, t: HypTuple) -> Result<HypTuple> {
    require_domain(t)?;
    let image = apply_generator(i, t)?;
    if !image.in_domain() {
        return Err(Error::Consistency(format!(
            "f{i} maps {t} outside X to {image}"
        )));
    }
    Ok(image)
}

/// The `±1` factor `s` in `ℓ(t) = s · ℓ(f_i(t))`, computed from the
/// characters' values at `-1`.
pub fn transform_sign(i: u8, t: HypTuple, table: &QuarticTable) -> Result<i64> {
    let [a, b, _c, d, e] = t.0;
    let exponent = match i {
        1 => 0,
        2 | 3 => t.total(),
        4 => a + e,
        5 => a + d,
        6 => b,
        7 => a + b,
        _ => {
            return Err(Error::Domain(format!(
                "transformation index {i} outside 1..=7"
            )))
        }
    };
    Ok(table.sign(exponent % 4))
}

/// An element of the group generated by `f₁..f₇`, stored as a permutation
/// of `X` (indices into [`HypTuple::domain`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleMap {
    pub name: String,
    images: Vec<u16>,
}

impl TupleMap {
    pub fn apply(&self, t: HypTuple, index: &DomainIndex) -> Option<HypTuple> {
        index
            .position(t)
            .map(|i| index.tuples[self.images[i] as usize])
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let images = other
            .images
            .iter()
            .map(|&j| self.images[j as usize])
            .collect();
        let name = match (self.is_identity(), other.is_identity()) {
            (true, _) => other.name.clone(),
            (_, true) => self.name.clone(),
            _ => format!("{}∘{}", self.name, other.name),
        };
        Self { name, images }
    }

    pub fn same_action(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

/// `X` with a reverse lookup.
#[derive(Debug, Clone)]
pub struct DomainIndex {
    tuples: Vec<HypTuple>,
    position: HashMap<HypTuple, usize>,
}

impl Default for DomainIndex {
    fn default() -> Self {
        Self::new()
    }
}

impl DomainIndex {
    pub fn new() -> Self {
        let tuples = HypTuple::domain();
        let position = tuples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        Self { tuples, position }
    }

    pub fn tuples(&self) -> &[HypTuple] {
        &self.tuples
    }

    pub fn position(&self, t: HypTuple) -> Option<usize> {
        self.position.get(&t).copied()
    }

    pub fn identity(&self) -> TupleMap {
        TupleMap {
            name: "f0".into(),
            images: (0..self.tuples.len() as u16).collect(),
        }
    }

    /// Generator `f_i` as a permutation of `X`.
    pub fn generator(&self, i: u8) -> Result<TupleMap> {
        let images = self
            .tuples
            .iter()
            .map(|&t| {
                let image = transform(i, t)?;
                Ok(self.position(image).expect("image lies in X") as u16)
            })
            .collect::<Result<Vec<_>>>()?;
        let map = TupleMap {
            name: format!("f{i}"),
            images,
        };
        let distinct: BTreeSet<u16> = map.images.iter().copied().collect();
        if distinct.len() != self.tuples.len() {
            return Err(Error::Consistency(format!("f{i} is not a bijection of X")));
        }
        Ok(map)
    }

    /// Closes `{f₁..f₇}` under composition. Elements come out in
    /// breadth-first order, so each carries a shortest word as its name.
    pub fn group_closure(&self) -> Result<Vec<TupleMap>> {
        let generators = (1..=7)
            .map(|i| self.generator(i))
            .collect::<Result<Vec<_>>>()?;
        let mut seen: HashMap<Vec<u16>, usize> = HashMap::new();
        let mut elements = vec![self.identity()];
        seen.insert(elements[0].images.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for f in &generators {
                let next = f.compose(&elements[k]);
                if !seen.contains_key(&next.images) {
                    seen.insert(next.images.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(elements)
    }

    /// Orbit of `t` under `group`, sorted.
    pub fn orbit(&self, t: HypTuple, group: &[TupleMap]) -> Result<Vec<HypTuple>> {
        require_domain(t)?;
        let members: BTreeSet<HypTuple> = group.iter().filter_map(|m| m.apply(t, self)).collect();
        Ok(members.into_iter().collect())
    }

    /// Partition of `X` into orbits, each sorted, ordered by smallest member.
    pub fn orbits(&self, group: &[TupleMap]) -> Result<Vec<Vec<HypTuple>>> {
        let mut assigned = BTreeSet::new();
        let mut out = Vec::new();
        for &t in &self.tuples {
            if assigned.contains(&t) {
                continue;
            }
            let orbit = self.orbit(t, group)?;
            assigned.extend(orbit.iter().copied());
            out.push(orbit);
        }
        Ok(out)
    }
}

/// The group generated by `f₁..f₇` acting on `X`.
pub fn group_closure() -> Result<Vec<TupleMap>> {
    DomainIndex::new().group_closure()
}

/// Orbit of `t` under the generated group.
pub fn orbit(t: HypTuple) -> Result<Vec<HypTuple>> {
    let index = DomainIndex::new();
    let group = index.group_closure()?;
    index.orbit(t, &group)
}

/// Orbit representatives `M₁..M₅` of the terms in the 4-clique count.
pub const CLIQUE_ORBIT_REPRESENTATIVES: [[u8; 5]; 5] = [
    [1, 1, 1, 0, 0],
    [3, 3, 3, 0, 0],
    [1, 3, 3, 2, 0],
    [3, 1, 1, 2, 0],
    [1, 1, 3, 0, 0],
];

/// JSON shape of one orbit: representative, members and common value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitListing {
    pub representative: HypTuple,
    pub members: Vec<HypTuple>,
    pub value: GaussianInt,
}

/// Every orbit of `X` with its `q²·₃F₂` value. Fails if an orbit is not
/// value-constant.
pub fn orbit_listing(group: &UnitGroup) -> Result<Vec<OrbitListing>> {
    let index = DomainIndex::new();
    let maps = index.group_closure()?;
    let evaluator = F32Evaluator::new(group)?;
    index
        .orbits(&maps)?
        .into_iter()
        .map(|members| {
            let value = evaluator.value(members[0]);
            if let Some(bad) = members.iter().find(|&&t| evaluator.value(t) != value) {
                return Err(Error::Consistency(format!(
                    "orbit of {} is not value-constant at {bad}",
                    members[0]
                )));
            }
            Ok(OrbitListing {
                representative: members[0],
                members,
                value,
            })
        })
        .collect()
}

fn prime_power_group(group: &UnitGroup) -> Result<()> {
    if group.is_doubled() {
        return Err(Error::Domain(format!(
            "hypergeometric functions are defined mod p^alpha, not mod {}",
            group.modulus()
        )));
    }
    Ok(())
}

/// Quarter-turn exponent `k` with `χ(x) = i^k`, for `χ` of order dividing 4.
#[inline]
fn quarter(chi: &DirichletCharacter<'_>, x: i64) -> Option<u64> {
    let phi = chi.group().phi();
    chi.eval_signed(x).map(|k| k * 4 / phi)
}

fn require_quartic(chars: &[DirichletCharacter<'_>]) -> Result<()> {
    let first = chars[0];
    for chi in chars {
        first.same_modulus(chi)?;
        if !chi.divides_four() {
            return Err(Error::Domain(format!(
                "exact evaluation needs characters in <χ₄>, got order {}",
                chi.order()
            )));
        }
    }
    Ok(())
}

/// `q·₂F₁(A, B; C | x) = ε(x) BC(-1) Σ_y B(y) B̄C(1-y) Ā(1-xy)`, exact.
pub fn f21_scaled(
    a: DirichletCharacter<'_>,
    b: DirichletCharacter<'_>,
    c: DirichletCharacter<'_>,
    x: u64,
) -> Result<GaussianInt> {
    require_quartic(&[a, b, c])?;
    let group = a.group();
    prime_power_group(group)?;
    let x = (x % group.modulus()) as i64;
    if !group.is_unit(x as u64) {
        return Ok(GaussianInt::ZERO);
    }
    let (a_bar, b_bar_c) = (a.conj(), b.conj() * c);
    let q = group.modulus() as i64;
    let mut acc = QuarterCounts::default();
    for y in 0..q {
        let (Some(k1), Some(k2), Some(k3)) = (
            quarter(&b, y),
            quarter(&b_bar_c, 1 - y),
            quarter(&a_bar, 1 - (x * y) % q),
        ) else {
            continue;
        };
        acc.push(k1 + k2 + k3);
    }
    Ok(acc.value().scale((b * c).at_minus_one()))
}

/// Unscaled `₂F₁(A, B; C | x)` from its defining sum, any characters.
pub fn f21_general(
    a: DirichletCharacter<'_>,
    b: DirichletCharacter<'_>,
    c: DirichletCharacter<'_>,
    x: u64,
) -> Result<Complex64> {
    a.same_modulus(&b)?;
    a.same_modulus(&c)?;
    let group = a.group();
    prime_power_group(group)?;
    let roots = RootsOfUnity::new(group.phi());
    Ok(f21_direct(a, b, c, x, &roots))
}

fn f21_direct(
    a: DirichletCharacter<'_>,
    b: DirichletCharacter<'_>,
    c: DirichletCharacter<'_>,
    x: u64,
    roots: &RootsOfUnity,
) -> Complex64 {
    let group = a.group();
    let q = group.modulus() as i64;
    let x = (x % group.modulus()) as i64;
    if !group.is_unit(x as u64) {
        return Complex64::new(0.0, 0.0);
    }
    let (a_bar, b_bar_c) = (a.conj(), b.conj() * c);
    let mut sum = Complex64::new(0.0, 0.0);
    for y in 0..q {
        if let (Some(k1), Some(k2), Some(k3)) = (
            b.eval_signed(y),
            b_bar_c.eval_signed(1 - y),
            a_bar.eval_signed(1 - (x * y) % q),
        ) {
            sum += roots.get(k1 + k2 + k3);
        }
    }
    sum * (b * c).at_minus_one() as f64 / q as f64
}

fn charsum_guard(group: &UnitGroup) -> Result<()> {
    prime_power_group(group)?;
    if group.phi() > CHARSUM_PHI_LIMIT {
        return Err(Error::Domain(format!(
            "dual-group sum refused: phi = {} exceeds {CHARSUM_PHI_LIMIT}",
            group.phi()
        )));
    }
    Ok(())
}

/// `|₂F₁ from the dual-group sum - ₂F₁ from its definition|`.
pub fn f21_charsum_residual(
    a: DirichletCharacter<'_>,
    b: DirichletCharacter<'_>,
    c: DirichletCharacter<'_>,
    x: u64,
) -> Result<f64> {
    a.same_modulus(&b)?;
    a.same_modulus(&c)?;
    let group = a.group();
    charsum_guard(group)?;
    let roots = RootsOfUnity::new(group.phi());
    let q = group.modulus() as f64;
    let x = x % group.modulus();

    let mut spectral = Complex64::new(0.0, 0.0);
    for chi in DirichletCharacter::all(group) {
        let Some(k) = chi.eval(x) else { continue };
        spectral += qbinom_general(a * chi, chi, &roots)
            * qbinom_general(b * chi, c * chi, &roots)
            * roots.get(k);
    }
    // (q/φ) Σ binom·binom·χ(x), with each binom = qbinom / q.
    let spectral = spectral / (q * group.phi() as f64);

    let direct = if [a, b, c].iter().all(|chi| chi.divides_four()) {
        f21_scaled(a, b, c, x)?.to_complex() / q
    } else {
        f21_direct(a, b, c, x, &roots)
    };
    Ok((spectral - direct).norm())
}

/// Exact evaluator for `q²·₃F₂` on quartic tuples via the double-sum form
/// `BCDE(-1) Σ_{y,z} C(y) C̄E(1-y) B(z) B̄D(1-z) Ā(1-xyz)`.
#[derive(Debug, Clone)]
pub struct F32Evaluator<'g> {
    group: &'g UnitGroup,
    table: QuarticTable,
}

impl<'g> F32Evaluator<'g> {
    pub fn new(group: &'g UnitGroup) -> Result<Self> {
        prime_power_group(group)?;
        Ok(Self {
            group,
            table: QuarticTable::new(group)?,
        })
    }

    pub fn table(&self) -> &QuarticTable {
        &self.table
    }

    /// `q²·₃F₂(t | 1)`.
    pub fn value(&self, t: HypTuple) -> GaussianInt {
        self.value_at(t, 1)
    }

    /// `q²·₃F₂(t | x)`.
    pub fn value_at(&self, t: HypTuple, x: u64) -> GaussianInt {
        let q = self.group.modulus() as i64;
        let x = (x % self.group.modulus()) as i64;
        if self.table.class_signed(x).is_none() {
            return GaussianInt::ZERO;
        }
        let [a, b, c, d, e] = t.0;
        let neg = |v: u8| (4 - v) % 4;
        let weights = |head: u8, tail: u8| -> Vec<(i64, u64)> {
            (0..q)
                .filter_map(|y| {
                    let k1 = self.table.eval_signed(head, y)?;
                    let k2 = self.table.eval_signed(tail, 1 - y)?;
                    Some((y, k1 + k2))
                })
                .collect()
        };
        let ys = weights(c, (neg(c) + e) % 4);
        let zs = weights(b, (neg(b) + d) % 4);
        let a_bar = neg(a);
        let mut acc = QuarterCounts::default();
        for &(y, ky) in &ys {
            let xy = x * y % q;
            for &(z, kz) in &zs {
                if let Some(k) = self.table.eval_signed(a_bar, 1 - xy * z % q) {
                    acc.push(ky + kz + k);
                }
            }
        }
        acc.value().scale(self.table.sign((b + c + d + e) % 4))
    }
}

/// `q²·₃F₂(χ₄^t₁, χ₄^t₂, χ₄^t₃; χ₄^t₄, χ₄^t₅ | 1)`, exact.
pub fn f32_exact(t: HypTuple, group: &UnitGroup) -> Result<GaussianInt> {
    Ok(F32Evaluator::new(group)?.value(t))
}

/// `q²·₃F₂` at `x = 1` from the dual-group binomial-product definition.
pub fn f32_charsum(t: HypTuple, group: &UnitGroup) -> Result<Complex64> {
    charsum_guard(group)?;
    let chi4 = DirichletCharacter::chi4(group)?;
    let [a, b, c, d, e] = t.0.map(|v| chi4.pow(v as i64));
    let roots = RootsOfUnity::new(group.phi());
    let mut sum = Complex64::new(0.0, 0.0);
    for chi in DirichletCharacter::all(group) {
        sum += qbinom_general(a * chi, chi, &roots)
            * qbinom_general(b * chi, d * chi, &roots)
            * qbinom_general(c * chi, e * chi, &roots);
    }
    // q² · (q/φ) · Σ Π (qbinom/q) = (1/φ) Σ Π qbinom.
    Ok(sum / group.phi() as f64)
}

/// Unscaled `ₙ₊₁Fₙ(A₀..Aₙ; B₁..Bₙ | x)` by peeling off the last parameter
/// pair, `ₙ₊₁Fₙ(x) = AₙBₙ(-1)/q Σ_y ₙFₙ₋₁(xy) Aₙ(y) ĀₙBₙ(1-y)`, down to ₂F₁.
pub fn fn_recursive(
    top: &[DirichletCharacter<'_>],
    bottom: &[DirichletCharacter<'_>],
    x: u64,
) -> Result<Complex64> {
    if bottom.is_empty() || top.len() != bottom.len() + 1 {
        return Err(Error::Domain(format!(
            "need n+1 upper and n lower parameters with n >= 1, got {} and {}",
            top.len(),
            bottom.len()
        )));
    }
    for chi in top.iter().chain(bottom) {
        top[0].same_modulus(chi)?;
    }
    let group = top[0].group();
    prime_power_group(group)?;
    let roots = RootsOfUnity::new(group.phi());
    Ok(recurse(top, bottom, x % group.modulus(), &roots))
}

fn recurse(
    top: &[DirichletCharacter<'_>],
    bottom: &[DirichletCharacter<'_>],
    x: u64,
    roots: &RootsOfUnity,
) -> Complex64 {
    let n = bottom.len();
    if n == 1 {
        return f21_direct(top[0], top[1], bottom[0], x, roots);
    }
    let group = top[0].group();
    let (an, bn) = (top[n], bottom[n - 1]);
    let an_bar_bn = an.conj() * bn;
    let mut sum = Complex64::new(0.0, 0.0);
    for y in 0..group.modulus() {
        let (Some(k1), Some(k2)) = (an.eval(y), an_bar_bn.eval_signed(1 - y as i64)) else {
            continue;
        };
        let inner = recurse(&top[..n], &bottom[..n - 1], group.mul(x, y), roots);
        sum += inner * roots.get(k1 + k2);
    }
    sum * (an * bn).at_minus_one() as f64 / group.modulus() as f64
}

/// `M₃ = q²·₃F₂(χ₄, χ̄₄, χ̄₄; φ, ε | 1)`.
pub fn m3(group: &UnitGroup) -> Result<GaussianInt> {
    f32_exact(HypTuple(CLIQUE_ORBIT_REPRESENTATIVES[2]), group)
}

/// `M₅ = q²·₃F₂(χ₄, χ₄, χ̄₄; ε, ε | 1)`, which must be real.
pub fn m5(group: &UnitGroup) -> Result<GaussianInt> {
    let value = f32_exact(HypTuple(CLIQUE_ORBIT_REPRESENTATIVES[4]), group)?;
    if !value.is_real() {
        return Err(Error::Consistency(format!(
            "M5 = {value} is not real mod {}",
            group.modulus()
        )));
    }
    Ok(value)
}
