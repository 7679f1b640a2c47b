//! Peisert-like graphs `G*(n)` on `Z_n`: vertices are residues and `x ~ y`
//! iff `x - y ∈ H = ⟨g⁴⟩ ∪ g⟨g⁴⟩`.
//!
//! Adjacency rows are bitsets, so neighbourhood intersections cost `n/64`
//! word operations. The closed-form clique counts live here as well, next to
//! the censuses they are checked against.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;

use crate::character::DirichletCharacter;
use crate::charsums::jacobi_exact;
use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::hypergeometric::{F32Evaluator, HypTuple, CLIQUE_ORBIT_REPRESENTATIVES};
use crate::ring::{is_prime, UnitGroup};

/// Largest `n` for which the dense adjacency matrix is built (~50 MB).
pub const MAX_GRAPH_ORDER: u64 = 20_000;

/// Fixed-width rows of `u64` words.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        Self {
            words,
            bits: vec![0; rows * words],
        }
    }

    #[inline]
    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    #[inline]
    fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }
}

/// `a ∧ b` restricted to bits strictly above `floor`, written into `out`.
#[inline]
fn and_above(a: &[u64], b: &[u64], floor: usize, out: &mut [u64]) {
    let first = (floor + 1) / 64;
    out[..first].fill(0);
    for k in first..out.len() {
        out[k] = a[k] & b[k];
    }
    if first < out.len() {
        out[first] &= !0u64 << ((floor + 1) % 64);
    }
}

#[inline]
fn popcount(words: &[u64]) -> u64 {
    words.iter().map(|w| w.count_ones() as u64).sum()
}

#[inline]
fn popcount_and_above(a: &[u64], b: &[u64], floor: usize) -> u64 {
    let first = (floor + 1) / 64;
    if first >= a.len() {
        return 0;
    }
    let head = (a[first] & b[first] & (!0u64 << ((floor + 1) % 64))).count_ones() as u64;
    head + a[first + 1..]
        .iter()
        .zip(&b[first + 1..])
        .map(|(x, y)| (x & y).count_ones() as u64)
        .sum::<u64>()
}

fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(k, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                k * 64 + bit
            })
        })
    })
}

/// `G*(n)` for `n = p^α` or `2p^α` with `p ≡ 1 (mod 8)`.
#[derive(Debug, Clone)]
pub struct PeisertLikeGraph {
    group: UnitGroup,
    connection: Vec<bool>,
    adj: BitMatrix,
}

fn validate_prime(p: u64) -> Result<()> {
    if !is_prime(p) || p % 8 != 1 {
        return Err(Error::Validation(format!(
            "p must be a prime ≡ 1 (mod 8), got {p}"
        )));
    }
    Ok(())
}

/// `⟨g⁴⟩ ∪ g⟨g⁴⟩` as a membership vector, for an arbitrary generator `g`.
fn connection_set(group: &UnitGroup, g: u64) -> Vec<bool> {
    let n = group.modulus();
    let g4 = group.mul(group.mul(g, g), group.mul(g, g));
    let mut member = vec![false; n as usize];
    let mut x = 1u64;
    for _ in 0..group.phi() / 4 {
        member[x as usize] = true;
        member[group.mul(g, x) as usize] = true;
        x = group.mul(x, g4);
    }
    member
}

/// Builds `G*(n)`, `n = p^α` (or `2p^α` when `doubled`).
pub fn build_graph(p: u64, alpha: u32, doubled: bool) -> Result<PeisertLikeGraph> {
    validate_prime(p)?;
    let group = UnitGroup::new(p, alpha, doubled)?;
    if group.modulus() > MAX_GRAPH_ORDER {
        return Err(Error::Validation(format!(
            "n = {} exceeds the dense-graph bound {MAX_GRAPH_ORDER}",
            group.modulus()
        )));
    }
    Ok(PeisertLikeGraph::from_group(group))
}

impl PeisertLikeGraph {
    fn from_group(group: UnitGroup) -> Self {
        let connection = connection_set(&group, group.generator());
        let n = group.modulus() as usize;
        let mut adj = BitMatrix::new(n, n);
        for x in 0..n {
            for (d, _) in connection.iter().enumerate().filter(|(_, &m)| m) {
                adj.set(x, (x + d) % n);
            }
        }
        Self {
            group,
            connection,
            adj,
        }
    }

    pub fn group(&self) -> &UnitGroup {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.group.modulus()
    }

    /// Members of `H` in increasing order.
    pub fn connection_set(&self) -> Vec<u64> {
        (0..self.order())
            .filter(|&x| self.connection[x as usize])
            .collect()
    }

    pub fn in_connection_set(&self, x: u64) -> bool {
        self.connection[(x % self.order()) as usize]
    }

    #[inline]
    pub fn adjacent(&self, x: u64, y: u64) -> bool {
        self.adj.get(x as usize, y as usize)
    }

    pub fn degree(&self, v: u64) -> u64 {
        popcount(self.adj.row(v as usize))
    }

    pub fn edge_count(&self) -> u64 {
        (0..self.order()).map(|v| self.degree(v)).sum::<u64>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (0..self.order() as usize).flat_map(move |u| {
            ones(self.adj.row(u))
                .filter(move |&v| v > u)
                .map(move |v| (u as u64, v as u64))
        })
    }

    /// Number of triangles.
    pub fn k3_brute(&self) -> u64 {
        let n = self.order() as usize;
        (0..n)
            .into_par_iter()
            .map(|u| {
                let row = self.adj.row(u);
                ones(row)
                    .filter(|&v| v > u)
                    .map(|v| popcount_and_above(row, self.adj.row(v), v))
                    .sum::<u64>()
            })
            .sum()
    }

    /// Number of 4-cliques, each found once at its two smallest vertices.
    pub fn k4_brute(&self) -> u64 {
        let n = self.order() as usize;
        (0..n)
            .into_par_iter()
            .map_init(
                || vec![0u64; self.adj.words],
                |common, u| {
                    let row = self.adj.row(u);
                    let mut count = 0;
                    for v in ones(row).filter(|&v| v > u) {
                        and_above(row, self.adj.row(v), v, common);
                        for w in ones(common) {
                            count += popcount_and_above(common, self.adj.row(w), w);
                        }
                    }
                    count
                },
            )
            .sum()
    }

    fn require_prime_power(&self) -> Result<()> {
        if self.group.is_doubled() {
            return Err(Error::Domain(format!(
                "the induced subgraph on H is only used for n = p^alpha, not n = {}",
                self.order()
            )));
        }
        Ok(())
    }

    /// Triangles of the subgraph induced on `H` that contain `v ∈ H`.
    pub fn k3_local_at(&self, v: u64) -> Result<u64> {
        self.require_prime_power()?;
        if !self.in_connection_set(v) {
            return Err(Error::Domain(format!("vertex {v} is not in H")));
        }
        let mut nbhd: Vec<u64> = self.adj.row(v as usize).to_vec();
        for x in ones(self.adj.row(v as usize)).collect::<Vec<_>>() {
            if !self.connection[x] {
                nbhd[x / 64] &= !(1 << (x % 64));
            }
        }
        let twice: u64 = ones(&nbhd)
            .map(|a| {
                self.adj
                    .row(a)
                    .iter()
                    .zip(&nbhd)
                    .map(|(x, y)| (x & y).count_ones() as u64)
                    .sum::<u64>()
            })
            .sum();
        Ok(twice / 2)
    }

    /// `k3(H_ind, v)` for `v ∈ {1, g}`.
    pub fn k3_local(&self, v: u64) -> Result<u64> {
        if v != 1 && v != self.group.generator() {
            return Err(Error::Domain(format!(
                "local count is taken at 1 or g = {}, got {v}",
                self.group.generator()
            )));
        }
        self.k3_local_at(v)
    }

    /// `k4` from the local counts: `k3(H_ind) = φ/12 · (k3(H_ind,1) + k3(H_ind,g))`
    /// and `k4 = q/4 · k3(H_ind)`.
    pub fn k4_from_local(&self) -> Result<u64> {
        let sum = self.k3_local(1)? + self.k3_local(self.group.generator())?;
        let numerator = self.order() as u128 * self.group.phi() as u128 * sum as u128;
        exact_quotient(numerator as i128, 48, "k4 from local triangle counts")
    }

    /// Checks that every translation by `a` maps edges to edges.
    pub fn translation_preserves_edges(&self, a: u64) -> bool {
        let n = self.order();
        self.edges()
            .all(|(u, v)| self.adjacent((u + a) % n, (v + a) % n))
    }

    /// Writes the graph in `format`.
    pub fn export(&self, format: ExportFormat, out: &mut impl Write) -> io::Result<()> {
        let mut out = io::BufWriter::new(out);
        match format {
            ExportFormat::EdgeList => {
                for (u, v) in self.edges() {
                    writeln!(out, "{u} {v}")?;
                }
            }
            ExportFormat::Dimacs => {
                writeln!(out, "p edge {} {}", self.order(), self.edge_count())?;
                for (u, v) in self.edges() {
                    writeln!(out, "e {} {}", u + 1, v + 1)?;
                }
            }
        }
        out.flush()
    }
}

/// Output formats for [`PeisertLikeGraph::export`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// `u v` per line, `u < v`, 0-based.
    EdgeList,
    /// `p edge n m` followed by 1-based `e u v` lines.
    Dimacs,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" => Ok(Self::EdgeList),
            "dimacs" => Ok(Self::Dimacs),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::EdgeList => "edgelist",
            Self::Dimacs => "dimacs",
        })
    }
}

/// Free-function form of [`PeisertLikeGraph::export`].
pub fn export_edgelist(
    graph: &PeisertLikeGraph,
    format: ExportFormat,
    out: &mut impl Write,
) -> io::Result<()> {
    graph.export(format, out)
}

fn exact_quotient(numerator: i128, denominator: i128, what: &str) -> Result<u64> {
    if numerator % denominator != 0 {
        return Err(Error::Consistency(format!(
            "{what}: {numerator}/{denominator} is not an integer"
        )));
    }
    u64::try_from(numerator / denominator).map_err(|_| {
        Error::Consistency(format!(
            "{what}: {numerator}/{denominator} is negative or too large"
        ))
    })
}

/// Triangle count `p^(3α-2) (p-1)(p-5) / 48` of `G*(p^α)`.
pub fn k3_formula(p: u64, alpha: u32) -> Result<u64> {
    validate_prime(p)?;
    let p = p as i128;
    let numerator = p
        .checked_pow(3 * alpha - 2)
        .and_then(|v| v.checked_mul((p - 1) * (p - 5)))
        .ok_or_else(|| Error::Validation("k3 formula overflows i128".into()))?;
    exact_quotient(numerator, 48, "k3 formula")
}

/// The quartic character data entering the 4-clique formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuarticInputs {
    pub rho: GaussianInt,
    pub xi: GaussianInt,
    pub m3: GaussianInt,
    pub m5: GaussianInt,
}

impl QuarticInputs {
    /// Computes `ρ, ξ, M₃, M₅` with `χ₄` (or with `χ̄₄` when `conjugate`).
    pub fn compute(group: &UnitGroup, conjugate: bool) -> Result<Self> {
        if group.is_doubled() {
            return Err(Error::Domain(format!(
                "clique formulas hold for n = p^alpha only, not n = {}",
                group.modulus()
            )));
        }
        let chi4 = DirichletCharacter::chi4(group)?;
        let chi = if conjugate { chi4.conj() } else { chi4 };
        let rho = jacobi_exact(chi, chi)?;
        let xi = jacobi_exact(chi, chi * chi)?;
        // Parameter χ^t is χ₄^(±t), so the conjugate run evaluates -t.
        let sign = if conjugate { -1 } else { 1 };
        let evaluator = F32Evaluator::new(group)?;
        let tuple = |r: [u8; 5]| HypTuple::new(r.map(|v| sign * v as i64));
        let m3 = evaluator.value(tuple(CLIQUE_ORBIT_REPRESENTATIVES[2]));
        let m5 = evaluator.value(tuple(CLIQUE_ORBIT_REPRESENTATIVES[4]));
        if !m5.is_real() {
            return Err(Error::Consistency(format!(
                "M5 = {m5} is not real mod {}",
                group.modulus()
            )));
        }
        Ok(Self { rho, xi, m3, m5 })
    }

    /// `p^(2α-1)(p-1)/3072 · [2p^(2α-2)(p²-20p+81) + 2Im(ρ)² + 4Im(ρ)Im(ξ) - Re(M₃) + 3M₅]`.
    pub fn k4(&self, p: u64, alpha: u32) -> Result<u64> {
        let p = p as i128;
        let pp = p.pow(alpha - 1);
        let bracket = 2 * pp * pp * (p * p - 20 * p + 81)
            + 2 * (self.rho.im as i128).pow(2)
            + 4 * self.rho.im as i128 * self.xi.im as i128
            - self.m3.re as i128
            + 3 * self.m5.re as i128;
        let numerator = pp * pp * p * (p - 1) * bracket;
        exact_quotient(numerator, 3072, "k4 formula")
    }
}

/// 4-clique count of `G*(p^α)` from the character-sum closed form.
pub fn k4_formula(p: u64, alpha: u32) -> Result<u64> {
    k4_formula_with_chi(p, alpha, false)
}

/// [`k4_formula`] recomputed with `χ₄` replaced by `χ̄₄` when `conjugate`.
pub fn k4_formula_with_chi(p: u64, alpha: u32, conjugate: bool) -> Result<u64> {
    validate_prime(p)?;
    let group = UnitGroup::new(p, alpha, false)?;
    QuarticInputs::compute(&group, conjugate)?.k4(p, alpha)
}

/// Closed forms for `k3(H_ind, 1)` and `k3(H_ind, g)` in terms of `ρ, ξ`
/// and the orbit values `M₁..M₅`.
pub fn k3_local_closed(group: &UnitGroup) -> Result<(u64, u64)> {
    let inputs = QuarticInputs::compute(group, false)?;
    let evaluator = F32Evaluator::new(group)?;
    let m: Vec<GaussianInt> = CLIQUE_ORBIT_REPRESENTATIVES
        .iter()
        .map(|&r| evaluator.value(HypTuple::new(r.map(i64::from))))
        .collect();
    let p = group.prime() as i64;
    let pp = group.p_pow_alpha_minus_one() as i64;
    let (rho, xi) = (inputs.rho, inputs.xi);
    let one = GaussianInt::ONE;
    let re = |z: GaussianInt| GaussianInt::from(z.re);

    let local = |h: GaussianInt, m_terms: GaussianInt| -> Result<u64> {
        let h2 = h * h;
        let h2rho = re(h2 * rho);
        let total = h2rho.scale(16 * (p - 9) * pp)
            + GaussianInt::from(32 * pp * pp * (p * p - 20 * p + 81))
            + re(rho * (h2.scale(8 * (p - 17) * pp) + (h2 + GaussianInt::from(4)).scale(4) * h2rho))
                .scale(2)
            + (h2rho * re(xi * h)).scale(32)
            + re(h2 * rho * rho).scale(16) + m_terms;
        if !total.is_real() {
            return Err(Error::Consistency(format!(
                "local triangle closed form is not real: {total}"
            )));
        }
        exact_quotient(total.re as i128, 2048, "local triangle closed form")
    };

    let h = GaussianInt::new(1, -1);
    let hb = h.conj();
    let at_one = (one - hb) * m[0] + (one - h) * m[1] - h * m[2] - hb * m[3];
    let at_g = (one - h) * m[0] + (one - hb) * m[1] - hb * m[2] - h * m[3];
    let m5 = m[4].scale(48);
    Ok((
        local(h, at_one.scale(8) + m5)?,
        local(hb, at_g.scale(8) + m5)?,
    ))
}

/// For every generator `h` of `Z_n^*`, checks that `G*(n)` built from `h`
/// equals the canonical graph (`dlog h ≡ 1 mod 4`) or is its image under
/// `x ↦ hx` (`dlog h ≡ 3 mod 4`).
pub fn generator_invariance_check(p: u64, alpha: u32, doubled: bool) -> Result<bool> {
    validate_prime(p)?;
    let group = UnitGroup::new(p, alpha, doubled)?;
    let canonical = connection_set(&group, group.generator());
    for h in group.generators() {
        let other = connection_set(&group, h);
        let ok = match group.dlog(h).expect("generator is a unit") % 4 {
            1 => other == canonical,
            3 => (0..group.modulus())
                .all(|d| canonical[d as usize] == other[group.mul(h, d) as usize]),
            r => {
                return Err(Error::Consistency(format!(
                    "generator {h} has even dlog class {r}"
                )))
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_cliques(g: &PeisertLikeGraph, k: usize) -> u64 {
        let n = g.order();
        let mut count = 0;
        let mut stack: Vec<u64> = Vec::new();
        fn extend(
            g: &PeisertLikeGraph,
            n: u64,
            k: usize,
            start: u64,
            stack: &mut Vec<u64>,
            count: &mut u64,
        ) {
            if stack.len() == k {
                *count += 1;
                return;
            }
            for v in start..n {
                if stack.iter().all(|&u| g.adjacent(u, v)) {
                    stack.push(v);
                    extend(g, n, k, v + 1, stack, count);
                    stack.pop();
                }
            }
        }
        extend(g, n, k, 0, &mut stack, &mut count);
        count
    }

    #[test]
    fn connection_set_mod_17() {
        let g = build_graph(17, 1, false).unwrap();
        assert_eq!(g.connection_set(), vec![1, 3, 4, 5, 12, 13, 14, 16]);
        assert!((0..17).all(|v| g.degree(v) == 8));
        assert_eq!(g.edge_count(), 68);
    }

    #[test]
    fn doubled_modulus_structure() {
        let g = build_graph(17, 1, true).unwrap();
        let h = g.connection_set();
        assert_eq!(h.len(), 8);
        assert!(h.iter().all(|x| x % 2 == 1));
        assert_eq!(g.edge_count(), 136);
        assert_eq!(g.k3_brute(), 0);
    }

    #[test]
    fn degree_at_289() {
        let g = build_graph(17, 2, false).unwrap();
        assert!((0..289).all(|v| g.degree(v) == 136));
    }

    #[test]
    fn rejects_bad_primes() {
        for p in [15, 13, 7, 2] {
            assert!(matches!(
                build_graph(p, 1, false),
                Err(Error::Validation(_))
            ));
        }
        assert!(matches!(k3_formula(13, 1), Err(Error::Validation(_))));
    }

    #[test]
    fn connection_set_is_symmetric_and_contains_one() {
        for (p, a, d) in [(17, 1, false), (41, 1, true), (17, 2, false)] {
            let g = build_graph(p, a, d).unwrap();
            let n = g.order();
            assert!(g.in_connection_set(1));
            assert!((0..n).all(|x| g.in_connection_set(x) == g.in_connection_set(n - x)));
            assert_eq!(g.connection_set().len() as u64, g.group().phi() / 2);
        }
    }

    #[test]
    fn censuses_match_naive_enumeration() {
        for (p, d) in [(17, false), (17, true), (41, false)] {
            let g = build_graph(p, 1, d).unwrap();
            assert_eq!(g.k3_brute(), naive_cliques(&g, 3));
            assert_eq!(g.k4_brute(), naive_cliques(&g, 4));
        }
    }

    #[test]
    fn clique_counts_small() {
        let g17 = build_graph(17, 1, false).unwrap();
        assert_eq!(g17.k3_brute(), 68);
        assert_eq!(g17.k4_brute(), 17);
        assert_eq!(k3_formula(17, 1).unwrap(), 68);
        assert_eq!(k3_formula(41, 1).unwrap(), 1230);
        assert_eq!(k3_formula(17, 2).unwrap(), 334_084);
        assert_eq!(k4_formula(17, 1).unwrap(), 17);
        assert_eq!(k4_formula(41, 1).unwrap(), 1025);
        assert_eq!(build_graph(41, 1, false).unwrap().k4_brute(), 1025);
    }

    #[test]
    fn local_counts_and_chain() {
        let g = build_graph(17, 1, false).unwrap();
        assert_eq!((g.k3_local(1).unwrap(), g.k3_local(3).unwrap()), (2, 1));
        // Second representatives of the cosets of 1 and g in H.
        assert_eq!(g.k3_local_at(13).unwrap(), 2);
        assert_eq!(g.k3_local_at(5).unwrap(), 1);
        assert_eq!(g.k4_from_local().unwrap(), 17);
        assert!(matches!(g.k3_local(4), Err(Error::Domain(_))));
        assert_eq!(k3_local_closed(g.group()).unwrap(), (2, 1));
    }

    #[test]
    fn local_closed_form_at_41() {
        let g = build_graph(41, 1, false).unwrap();
        let brute = (
            g.k3_local(1).unwrap(),
            g.k3_local(g.group().generator()).unwrap(),
        );
        assert_eq!(brute, (17, 13));
        assert_eq!(k3_local_closed(g.group()).unwrap(), brute);
    }

    #[test]
    fn k4_formula_conjugate_invariant() {
        for (p, a) in [(17, 1), (41, 1), (73, 1)] {
            assert_eq!(
                k4_formula_with_chi(p, a, true).unwrap(),
                k4_formula(p, a).unwrap()
            );
        }
    }

    #[test]
    fn translations_are_automorphisms() {
        let g = build_graph(41, 1, false).unwrap();
        for a in [1, 7, 23, 40] {
            assert!(g.translation_preserves_edges(a));
        }
    }

    #[test]
    fn generator_invariance() {
        assert!(generator_invariance_check(17, 1, false).unwrap());
        assert!(generator_invariance_check(41, 1, false).unwrap());
        assert!(generator_invariance_check(17, 2, false).unwrap());
        assert!(generator_invariance_check(17, 1, true).unwrap());
    }

    #[test]
    fn export_formats() {
        let g = build_graph(17, 1, false).unwrap();
        let mut buf = Vec::new();
        g.export(ExportFormat::EdgeList, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("0 1"));
        assert_eq!(text.lines().count(), 68);
        assert!(text.ends_with('\n'));

        let mut buf = Vec::new();
        g.export(ExportFormat::Dimacs, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("p edge 17 68"));
        assert_eq!(text.lines().nth(1), Some("e 1 2"));

        assert_eq!(
            "dimacs".parse::<ExportFormat>().unwrap(),
            ExportFormat::Dimacs
        );
        assert!(matches!(
            "graphml".parse::<ExportFormat>(),
            Err(Error::UnknownFormat(_))
        ));
    }

    #[test]
    fn bit_helpers() {
        let a = [u64::MAX, u64::MAX];
        let b = [u64::MAX, 1];
        assert_eq!(popcount_and_above(&a, &b, 62), 2);
        assert_eq!(popcount_and_above(&a, &b, 63), 1);
        assert_eq!(popcount_and_above(&a, &b, 127), 0);
        let mut out = [0u64; 2];
        and_above(&a, &b, 63, &mut out);
        assert_eq!(out, [0, 1]);
        assert_eq!(ones(&[0b101, 1]).collect::<Vec<_>>(), vec![0, 2, 64]);
    }
}
