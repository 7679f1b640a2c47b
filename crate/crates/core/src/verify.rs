//! Named invariant suites, each a list of exact (or toleranced) checks.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::character::DirichletCharacter;
use crate::charsums::{
    point_expansion_residual, qbinom, QuarticSums, LEMA1_TRIPLES, LEMSEC1_TRIPLES,
};
use crate::error::{Error, Result};
use crate::graph::{
    build_graph, generator_invariance_check, k3_formula, k3_local_closed, k4_formula,
};
use crate::hypergeometric::{transform, transform_sign, DomainIndex, F32Evaluator};
use crate::ring::UnitGroup;

/// Absolute tolerance for floating residuals.
pub const FLOAT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Binomials,
    Lemma51,
    Lemma61,
    Lemma62,
    Lemma63,
    Transforms,
    Orbits,
    Graph,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Binomials,
        Suite::Lemma51,
        Suite::Lemma61,
        Suite::Lemma62,
        Suite::Lemma63,
        Suite::Transforms,
        Suite::Orbits,
        Suite::Graph,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Binomials => "binomials",
            Suite::Lemma51 => "lemma51",
            Suite::Lemma61 => "lemma61",
            Suite::Lemma62 => "lemma62",
            Suite::Lemma63 => "lemma63",
            Suite::Transforms => "transforms",
            Suite::Orbits => "orbits",
            Suite::Graph => "graph",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown suite `{s}`")))
    }
}

/// One named check and whether it held.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }

    fn equal<T: PartialEq + fmt::Display>(name: impl Into<String>, lhs: T, rhs: T) -> Self {
        let pass = lhs == rhs;
        Self::new(name, pass, format!("{lhs} vs {rhs}"))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({})", self.name, self.detail)
    }
}

/// Runs `suite` for `q = p^α`.
pub fn run_suite(suite: Suite, p: u64, alpha: u32) -> Result<Vec<Check>> {
    if suite == Suite::Graph {
        return graph_suite(p, alpha);
    }
    let group = UnitGroup::new(p, alpha, false)?;
    match suite {
        Suite::Binomials => binomials(&group),
        Suite::Lemma51 => lemma51(&group),
        Suite::Lemma61 => lemma61(&group),
        Suite::Lemma62 => lemma62(&group),
        Suite::Lemma63 => lemma63(&group),
        Suite::Transforms => transforms(&group),
        Suite::Orbits => orbits(&group),
        Suite::Graph => unreachable!(),
    }
}

fn quartic_characters(group: &UnitGroup) -> Result<Vec<DirichletCharacter<'_>>> {
    let chi4 = DirichletCharacter::chi4(group)?;
    Ok((0..4).map(|t| chi4.pow(t)).collect())
}

/// The three symmetries of `q·binom(A, B)` over all pairs in `⟨χ₄⟩²`.
pub fn binomials(group: &UnitGroup) -> Result<Vec<Check>> {
    let chars = quartic_characters(group)?;
    let mut out = Vec::new();
    for (s, &a) in chars.iter().enumerate() {
        for (t, &b) in chars.iter().enumerate() {
            let base = qbinom(a, b)?;
            let tag = format!("(χ₄^{s}, χ₄^{t})");
            out.push(Check::equal(
                format!("swap-bottom {tag}"),
                base,
                qbinom(a, a * b.conj())?,
            ));
            out.push(Check::equal(
                format!("swap-top {tag}"),
                base,
                qbinom(a.conj() * b, b)?.scale(b.at_minus_one()),
            ));
            out.push(Check::equal(
                format!("reflect {tag}"),
                base,
                qbinom(b.conj(), a.conj())?.scale((a * b).at_minus_one()),
            ));
        }
    }
    Ok(out)
}

/// Point expansion of `A(1+x)` for every `A ∈ ⟨χ₄⟩` and every `x`.
pub fn lemma51(group: &UnitGroup) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (t, a) in quartic_characters(group)?.into_iter().enumerate() {
        let mut worst = 0.0f64;
        for x in 0..group.modulus() {
            worst = worst.max(point_expansion_residual(a, x)?);
        }
        out.push(Check::new(
            format!("point expansion χ₄^{t}, all x"),
            worst <= FLOAT_TOLERANCE,
            format!("max residual {worst:.3e}"),
        ));
    }
    Ok(out)
}

/// Every row of the single-sum table at every admissible `x`.
pub fn lemma61(group: &UnitGroup) -> Result<Vec<Check>> {
    let sums = QuarticSums::new(group)?;
    let admissible: Vec<u64> = (0..group.modulus())
        .filter(|&x| group.is_unit(x) && group.is_unit(group.reduce(1 - x as i64)))
        .collect();
    let mut out = Vec::new();
    for triple in LEMSEC1_TRIPLES {
        let mut bad = None;
        for &x in &admissible {
            let (brute, closed) = sums.lemsec1_eval(x, triple)?;
            if brute != closed {
                bad = Some(format!("x = {x}: {brute} vs {closed}"));
                break;
            }
        }
        let detail = bad
            .clone()
            .unwrap_or_else(|| format!("{} values of x", admissible.len()));
        out.push(Check::new(
            format!("single sum {triple:?}"),
            bad.is_none(),
            detail,
        ));
    }
    Ok(out)
}

/// The four double sums.
pub fn lemma62(group: &UnitGroup) -> Result<Vec<Check>> {
    let sums = QuarticSums::new(group)?;
    LEMA1_TRIPLES
        .iter()
        .map(|&triple| {
            let (brute, closed) = sums.lema1_eval(triple)?;
            Ok(Check::equal(
                format!("double sum {triple:?}"),
                brute,
                closed,
            ))
        })
        .collect()
}

/// All 32 cells of the weighted double-sum table.
pub fn lemma63(group: &UnitGroup) -> Result<Vec<Check>> {
    let sums = QuarticSums::new(group)?;
    let mut out = Vec::new();
    for w in 1..=8 {
        for z in 1..=4 {
            let (brute, closed) = sums.corr_eval(w, z)?;
            out.push(Check::equal(
                format!("weighted sum ({w},{z})"),
                brute,
                closed,
            ));
        }
    }
    Ok(out)
}

/// `ℓ(t) = s·ℓ(f_i(t))` for every generator and every `t ∈ X`.
pub fn transforms(group: &UnitGroup) -> Result<Vec<Check>> {
    let index = DomainIndex::new();
    let evaluator = F32Evaluator::new(group)?;
    let values: Vec<_> = index.tuples().iter().map(|&t| evaluator.value(t)).collect();
    let value = |t| values[index.position(t).expect("tuple in X")];
    let mut out = Vec::new();
    for i in 1..=7u8 {
        let mut failures = 0;
        for &t in index.tuples() {
            let image = transform(i, t)?;
            let sign = transform_sign(i, t, evaluator.table())?;
            if value(t) != value(image).scale(sign) {
                failures += 1;
            }
        }
        out.push(Check::new(
            format!("f{i} over X"),
            failures == 0,
            format!("{} tuples, {failures} failures", index.tuples().len()),
        ));
    }
    Ok(out)
}

/// Size of the generated group and constancy of values on each orbit.
pub fn orbits(group: &UnitGroup) -> Result<Vec<Check>> {
    let index = DomainIndex::new();
    let maps = index.group_closure()?;
    let evaluator = F32Evaluator::new(group)?;
    let orbits = index.orbits(&maps)?;
    let mut out = vec![Check::equal("group order", maps.len(), 24)];
    let inconstant = orbits
        .iter()
        .filter(|orbit| {
            let v = evaluator.value(orbit[0]);
            orbit.iter().any(|&t| evaluator.value(t) != v)
        })
        .count();
    out.push(Check::new(
        "orbit-value constancy",
        inconstant == 0,
        format!("{} orbits, {inconstant} not constant", orbits.len()),
    ));
    Ok(out)
}

/// Structure, clique censuses against formulas, local-count chain.
pub fn graph_suite(p: u64, alpha: u32) -> Result<Vec<Check>> {
    let graph = build_graph(p, alpha, false)?;
    let group = graph.group();
    let n = graph.order();
    let half_phi = group.phi() / 2;
    let mut out = Vec::new();
    let irregular = (0..n).filter(|&v| graph.degree(v) != half_phi).count();
    out.push(Check::new(
        "degree",
        irregular == 0,
        format!("expected {half_phi}, {irregular} vertices differ"),
    ));
    out.push(Check::equal(
        "edges",
        graph.edge_count(),
        n * group.phi() / 4,
    ));
    out.push(Check::equal("k3", graph.k3_brute(), k3_formula(p, alpha)?));
    let k4 = graph.k4_brute();
    out.push(Check::equal("k4", k4, k4_formula(p, alpha)?));
    out.push(Check::equal("k4 local chain", graph.k4_from_local()?, k4));
    let brute = (graph.k3_local(1)?, graph.k3_local(group.generator())?);
    let closed = k3_local_closed(group)?;
    out.push(Check::new(
        "local triangle closed forms",
        brute == closed,
        format!("{brute:?} vs {closed:?}"),
    ));
    out.push(Check::new(
        "generator invariance",
        generator_invariance_check(p, alpha, false)?,
        "",
    ));
    Ok(out)
}
