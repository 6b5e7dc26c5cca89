//! Checks the partial-domination inequalities against exact solver values.
//!
//! Each check records both sides of its inequality. Checks whose graph
//! hypotheses (connectivity of `G`, and of its complement for the
//! Nordhaus–Gaddum bound) fail are kept in the report with
//! `hypothesis_met = false` and no verdict.
//!
//! Random graphs come from ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`).
//! Pairs `u < v` are visited in lexicographic order and each edge is kept when
//! `gen_range(0..den) < num` for edge probability `num/den`.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::engine::{big_gamma_p_exact, gamma_exact, gamma_p_exact};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::proportion::Proportion;

/// Rejection rounds before [`sample_connected_coconnected`] gives up.
pub const MAX_REJECTION_ROUNDS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckTag {
    /// γ_p ≤ γ_q for p < q.
    MonotoneInP,
    /// γ_p ≤ γ.
    DominationBound,
    /// γ_{i/j} ≤ ⌈(i/j)·γ⌉ on connected graphs.
    CeilingBound,
    /// γ_{1/2} ≤ ⌈γ/2⌉ on connected graphs.
    HalfBound,
    /// γ_{i/j}(G) + γ_{i/j}(Ḡ) ≤ ⌈(i/j)(⌊n/2⌋+2)⌉ + 1 when G and Ḡ are connected.
    NordhausGaddum,
    /// At p = 1/2 the general right-hand side equals ⌈⌊n/2⌋/2⌉ + 2.
    NordhausGaddumForms,
    /// γ_p ≤ Γ_p.
    UpperDomination,
    /// |γ_{1/2}-witness ∩ γ-witness|; informational.
    WitnessOverlap,
}

impl std::fmt::Display for CheckTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant serializes");
        f.write_str(s.as_str().expect("string tag"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// `holds` is `lhs <= rhs`.
    Inequality,
    /// `holds` is `lhs == rhs`.
    Equality,
    /// No verdict, values only.
    Observation,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub tag: CheckTag,
    pub kind: CheckKind,
    pub params: String,
    pub lhs: u64,
    pub rhs: u64,
    pub hypothesis_met: bool,
    pub holds: Option<bool>,
    pub note: Option<String>,
}

impl Check {
    fn inequality(
        tag: CheckTag,
        params: String,
        lhs: usize,
        rhs: usize,
        hypothesis_met: bool,
    ) -> Self {
        Self {
            tag,
            kind: CheckKind::Inequality,
            params,
            lhs: lhs as u64,
            rhs: rhs as u64,
            hypothesis_met,
            holds: hypothesis_met.then_some(lhs <= rhs),
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn skipped(tag: CheckTag, params: String, reason: String) -> Self {
        Self {
            tag,
            kind: CheckKind::Observation,
            params,
            lhs: 0,
            rhs: 0,
            hypothesis_met: true,
            holds: None,
            note: Some(format!("skipped: {reason}")),
        }
    }

    pub fn is_violation(&self) -> bool {
        self.holds == Some(false)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub graph_id: String,
    pub n: usize,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
}

impl AuditReport {
    pub fn violations(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.is_violation())
    }

    pub fn all_hold(&self) -> bool {
        self.violations().next().is_none()
    }

    /// One `key=value` record per line: a header, one line per check, and a
    /// summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let seed = self.seed.map_or("-".to_string(), |s| s.to_string());
        writeln!(
            out,
            "audit graph={} n={} seed={}",
            self.graph_id, self.n, seed
        )
        .unwrap();
        for c in &self.checks {
            let verdict = match c.holds {
                Some(true) => "holds",
                Some(false) => "violated",
                None => "none",
            };
            writeln!(
                out,
                "check tag={} kind={} params={} lhs={} rhs={} hypothesis={} verdict={} note={}",
                c.tag,
                serde_json::to_value(c.kind).unwrap().as_str().unwrap(),
                c.params,
                c.lhs,
                c.rhs,
                if c.hypothesis_met { "met" } else { "unmet" },
                verdict,
                c.note.as_deref().unwrap_or("-").replace(' ', "_"),
            )
            .unwrap();
        }
        let holds = self.checks.iter().filter(|c| c.holds == Some(true)).count();
        let unmet = self.checks.iter().filter(|c| !c.hypothesis_met).count();
        writeln!(
            out,
            "summary checks={} holds={} violated={} hypothesis-unmet={}",
            self.checks.len(),
            holds,
            self.violations().count(),
            unmet
        )
        .unwrap();
        out
    }
}

/// One entry per adjacent pair of `ps` (sorted ascending); equal pairs are
/// skipped. Pairs with γ_p = γ_q are noted as `equal`.
pub fn check_monotonicity(g: &Graph, ps: &[Proportion]) -> Vec<Check> {
    debug_assert!(
        ps.windows(2).all(|w| w[0] <= w[1]),
        "proportions must be sorted"
    );
    ps.windows(2)
        .filter(|w| w[0] != w[1])
        .map(|w| {
            let (lo, hi) = (
                gamma_p_exact(g, w[0]).cardinality,
                gamma_p_exact(g, w[1]).cardinality,
            );
            let c = Check::inequality(
                CheckTag::MonotoneInP,
                format!("{}<{}", w[0], w[1]),
                lo,
                hi,
                true,
            );
            if lo == hi {
                c.with_note("equal")
            } else {
                c
            }
        })
        .collect()
}

pub fn check_domination_bound(g: &Graph, p: Proportion) -> Check {
    let lhs = gamma_p_exact(g, p).cardinality;
    let rhs = gamma_exact(g).cardinality;
    Check::inequality(CheckTag::DominationBound, format!("p={p}"), lhs, rhs, true)
}

/// γ_{i/j}(G) ≤ ⌈i·γ(G)/j⌉, gated on connectivity.
pub fn check_ceiling_bound(g: &Graph, p: Proportion) -> Check {
    ceiling(g, p, CheckTag::CeilingBound)
}

pub fn check_half_bound(g: &Graph) -> Check {
    ceiling(g, Proportion::HALF, CheckTag::HalfBound)
}

fn ceiling(g: &Graph, p: Proportion, tag: CheckTag) -> Check {
    let lhs = gamma_p_exact(g, p).cardinality;
    let gamma = gamma_exact(g).cardinality;
    let rhs = p.ceil_mul(gamma as u64) as usize;
    Check::inequality(tag, format!("p={p}"), lhs, rhs, g.is_connected())
        .with_note(format!("gamma={gamma}"))
}

/// Right-hand side ⌈(i/j)(⌊n/2⌋ + 2)⌉ + 1.
pub fn nordhaus_gaddum_rhs(n: usize, p: Proportion) -> usize {
    p.ceil_mul((n / 2 + 2) as u64) as usize + 1
}

/// The same bound as printed for p = 1/2: ⌈⌊n/2⌋/2⌉ + 2.
pub fn nordhaus_gaddum_half_rhs(n: usize) -> usize {
    (n / 2).div_ceil(2) + 2
}

/// γ_p(G) + γ_p(Ḡ) against the Nordhaus–Gaddum bound, gated on both `G` and
/// `Ḡ` being connected. At p = 1/2 a second entry compares the two forms of
/// the right-hand side.
pub fn check_nordhaus_gaddum(g: &Graph, p: Proportion) -> Vec<Check> {
    let co = g.complement();
    let hypothesis = g.is_connected() && co.is_connected();
    let (a, b) = (
        gamma_p_exact(g, p).cardinality,
        gamma_p_exact(&co, p).cardinality,
    );
    let rhs = nordhaus_gaddum_rhs(g.n(), p);
    let mut out = vec![Check::inequality(
        CheckTag::NordhausGaddum,
        format!("p={p}"),
        a + b,
        rhs,
        hypothesis,
    )
    .with_note(format!("g={a} complement={b}"))];
    if p == Proportion::HALF {
        let alt = nordhaus_gaddum_half_rhs(g.n());
        out.push(Check {
            tag: CheckTag::NordhausGaddumForms,
            kind: CheckKind::Equality,
            params: format!("n={}", g.n()),
            lhs: rhs as u64,
            rhs: alt as u64,
            hypothesis_met: true,
            holds: Some(rhs == alt),
            note: None,
        });
    }
    out
}

/// γ_p ≤ Γ_p, noting whether the inequality is strict.
pub fn check_big_gamma(g: &Graph, p: Proportion) -> Result<Check> {
    let upper = big_gamma_p_exact(g, p)?.cardinality;
    let lower = gamma_p_exact(g, p).cardinality;
    let c = Check::inequality(
        CheckTag::UpperDomination,
        format!("p={p}"),
        lower,
        upper,
        true,
    );
    Ok(c.with_note(if lower < upper { "strict" } else { "equality" }))
}

/// Overlap between the canonical γ_{1/2}-set and the canonical γ-set.
pub fn check_witness_overlap(g: &Graph) -> Check {
    let half = gamma_p_exact(g, Proportion::HALF).witness;
    let full = gamma_exact(g).witness;
    let overlap = half.intersection_len(&full);
    Check {
        tag: CheckTag::WitnessOverlap,
        kind: CheckKind::Observation,
        params: format!("half={half};gamma={full}").replace(' ', ""),
        lhs: overlap as u64,
        rhs: 0,
        hypothesis_met: true,
        holds: None,
        note: Some(
            if overlap == 0 {
                "disjoint"
            } else {
                "overlapping"
            }
            .into(),
        ),
    }
}

/// Samples `G(n, p)` until both the graph and its complement are connected.
pub fn sample_connected_coconnected(
    n: usize,
    edge_probability: Proportion,
    seed: u64,
) -> Result<Graph> {
    if n < 4 {
        return Err(Error::invalid(
            "graphs with connected complements need n >= 4 (n = 1 aside)",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_REJECTION_ROUNDS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_range(0..edge_probability.den()) < edge_probability.num() {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() && g.complement().is_connected() {
            return Ok(g);
        }
    }
    Err(Error::SamplingFailure {
        n,
        probability: edge_probability.to_string(),
        rounds: MAX_REJECTION_ROUNDS,
    })
}

/// Runs every applicable check. `ps` need not be sorted.
pub fn audit_suite(g: &Graph, graph_id: impl Into<String>, ps: &[Proportion]) -> AuditReport {
    let mut ps = ps.to_vec();
    ps.sort();
    ps.dedup();

    let mut checks = check_monotonicity(g, &ps);
    for &p in &ps {
        checks.push(check_domination_bound(g, p));
        checks.push(check_ceiling_bound(g, p));
        checks.extend(check_nordhaus_gaddum(g, p));
        match check_big_gamma(g, p) {
            Ok(c) => checks.push(c),
            Err(e) => checks.push(Check::skipped(
                CheckTag::UpperDomination,
                format!("p={p}"),
                e.to_string(),
            )),
        }
    }
    checks.push(check_half_bound(g));
    checks.push(check_witness_overlap(g));

    AuditReport {
        graph_id: graph_id.into(),
        n: g.n(),
        seed: None,
        checks,
    }
}
