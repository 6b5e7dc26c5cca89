//! Closed-form 1/2-domination numbers for paths, cycles, complete
//! multipartite graphs, grids and tori, each with a constructive witness.
//!
//! Every witness is checked with [`is_p_dominating`] before it is returned.
//! Grid and torus witnesses come from plus-shaped (pentomino) packings; if no
//! packing reaches the threshold, the value falls back to the exact solver and
//! [`FormulaResult::fallback`] is set.

use serde::Serialize;

use crate::engine::{coverage, gamma_p_exact, is_p_dominating};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::proportion::Proportion;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Serialize)]
pub struct FormulaResult {
    pub value: usize,
    pub witness: Option<VertexSet>,
    pub family: FamilySpec,
    /// Coverage of the witness, when present.
    pub covered: Option<usize>,
    /// True when the construction failed and the exact solver supplied the
    /// witness instead.
    pub fallback: bool,
}

impl FormulaResult {
    fn checked(g: &Graph, family: FamilySpec, value: usize, witness: VertexSet) -> Result<Self> {
        if witness.len() == value && is_p_dominating(g, &witness, Proportion::HALF) {
            return Ok(Self {
                value,
                covered: Some(coverage(g, &witness)),
                witness: Some(witness),
                family,
                fallback: false,
            });
        }
        Self::from_solver(g, family, value)
    }

    fn from_solver(g: &Graph, family: FamilySpec, value: usize) -> Result<Self> {
        let exact = gamma_p_exact(g, Proportion::HALF);
        if exact.cardinality != value {
            return Err(Error::Unsupported(format!(
                "closed form gives {value} for {family} but the exact solver finds {}",
                exact.cardinality
            )));
        }
        Ok(Self {
            value,
            covered: Some(exact.covered),
            witness: Some(exact.witness),
            family,
            fallback: true,
        })
    }
}

/// γ_{1/2}(C_n) = ⌈n/6⌉, witnessed by every third vertex from 0 across half the cycle.
pub fn gamma_half_cycle(n: usize) -> Result<FormulaResult> {
    if n < 3 {
        return Err(Error::invalid("cycle requires n >= 3"));
    }
    let family = FamilySpec::Cycle(n);
    let g = family.build()?;
    let value = n.div_ceil(6);
    let witness = VertexSet::from_vertices(n, (0..value).map(|i| 3 * i));
    FormulaResult::checked(&g, family, value, witness)
}

/// γ_{1/2}(P_n) = ⌈n/6⌉. The cycle construction shifted by one keeps the
/// picks off the edge `{n-1, 0}`, which is then deleted.
pub fn gamma_half_path(n: usize) -> Result<FormulaResult> {
    if n < 1 {
        return Err(Error::invalid("path requires n >= 1"));
    }
    let family = FamilySpec::Path(n);
    let g = family.build()?;
    let value = n.div_ceil(6);
    let witness = VertexSet::from_vertices(n, (0..value).map(|i| (3 * i + 1).min(n - 1)));
    FormulaResult::checked(&g, family, value, witness)
}

/// γ_{1/2}(K_{m1,..,mk}) = 1, witnessed by the first vertex of a smallest part.
pub fn gamma_half_multipartite(parts: &[usize]) -> Result<FormulaResult> {
    let family = FamilySpec::CompleteMultipartite(parts.to_vec());
    let g = family.build()?;
    let smallest = (0..parts.len())
        .min_by_key(|&i| parts[i])
        .expect("at least two parts");
    let first: usize = parts[..smallest].iter().sum();
    FormulaResult::checked(&g, family, 1, VertexSet::from_vertices(g.n(), [first]))
}

/// γ_{1/2}(P_m □ P_n) for `1 <= m <= n`:
/// ⌈n/6⌉ for `m = 1`, ⌈n/4⌉ for `m = 2`, ⌈mn/10⌉ for `m >= 3`.
pub fn gamma_half_grid(m: usize, n: usize) -> Result<FormulaResult> {
    if !(1 <= m && m <= n) {
        return Err(Error::invalid("grid requires 1 <= m <= n"));
    }
    let family = FamilySpec::Grid(m, n);
    let g = family.build()?;
    match m {
        1 => {
            let path = gamma_half_path(n)?;
            let witness = path.witness.expect("path construction has a witness");
            FormulaResult::checked(&g, family, path.value, witness)
        }
        2 => {
            // Picks at columns 1, 3, 5, .. alternating between the two rows:
            // each has four private neighbors.
            let value = n.div_ceil(4);
            let witness = VertexSet::from_vertices(
                2 * n,
                (0..value).map(|i| (i % 2) * n + (2 * i + 1).min(n - 1)),
            );
            FormulaResult::checked(&g, family, value, witness)
        }
        _ => {
            let value = (m * n).div_ceil(10);
            match plus_packing(&g, m, n, value) {
                Some(witness) => FormulaResult::checked(&g, family, value, witness),
                None => FormulaResult::from_solver(&g, family, value),
            }
        }
    }
}

/// γ_{1/2}(C_m □ C_n) = ⌈mn/10⌉ for `3 <= m <= n`.
pub fn gamma_half_torus(m: usize, n: usize) -> Result<FormulaResult> {
    if m < 3 {
        return Err(Error::Unsupported(format!(
            "torus C_{m} x C_{n}: cycles of length < 3 are not simple graphs"
        )));
    }
    if m > n {
        return Err(Error::invalid("torus requires m <= n"));
    }
    let family = FamilySpec::Torus(m, n);
    let g = family.build()?;
    let value = (m * n).div_ceil(10);
    match plus_packing(&g, m, n, value) {
        Some(witness) => FormulaResult::checked(&g, family, value, witness),
        None => FormulaResult::from_solver(&g, family, value),
    }
}

/// Tries plus-shape packings on an `m x n` row-major layout and returns the
/// first that reaches half coverage with `count` centers.
///
/// Candidates are the two diagonal lattices `r + 2c ≡ s` and `r + 3c ≡ s`
/// (mod 5), which tile the plane with disjoint pluses, followed by the
/// stripe `r ≡ 1 (mod 3)`, `c ≡ s (mod 3)` for three-row strips. From each
/// candidate lattice, centers are taken greedily by marginal coverage.
fn plus_packing(g: &Graph, m: usize, n: usize, count: usize) -> Option<VertexSet> {
    let target = Proportion::HALF.threshold(g.n());
    let lattices = (0..5)
        .map(|shift| Lattice::Diagonal { slope: 2, shift })
        .chain((0..5).map(|shift| Lattice::Diagonal { slope: 3, shift }))
        .chain((0..3).map(|shift| Lattice::Stripe { shift }));

    for lattice in lattices {
        let mut cells: Vec<usize> = (0..m * n)
            .filter(|&v| lattice.contains(v / n, v % n))
            .collect();
        let mut covered = g.vertex_set();
        let mut chosen = g.vertex_set();
        for _ in 0..count {
            let best = cells
                .iter()
                .enumerate()
                .map(|(i, &v)| (i, g.closed(v).difference_len(&covered)))
                .fold(None, |best: Option<(usize, usize)>, cur| match best {
                    Some(b) if b.1 >= cur.1 => Some(b),
                    _ => Some(cur),
                });
            let Some((i, _)) = best else { break };
            let v = cells.remove(i);
            chosen.insert(v);
            covered.union_with(g.closed(v));
        }
        if chosen.len() == count && covered.len() >= target {
            return Some(chosen);
        }
    }
    None
}

#[derive(Debug, Clone, Copy)]
enum Lattice {
    Diagonal { slope: usize, shift: usize },
    Stripe { shift: usize },
}

impl Lattice {
    fn contains(self, r: usize, c: usize) -> bool {
        match self {
            Lattice::Diagonal { slope, shift } => (r + slope * c) % 5 == shift,
            Lattice::Stripe { shift } => r % 3 == 1 && c % 3 == shift,
        }
    }
}

/// γ(P_m □ P_n) = ⌊(m+2)(n+2)/5⌋ − 4 for `m, n >= 16` (a quoted result from
/// the grid domination literature, not checked by the solvers here).
pub fn gamma_grid_goncalves(m: usize, n: usize) -> Result<usize> {
    if m < 16 || n < 16 {
        return Err(Error::invalid(format!(
            "grid domination formula holds for m, n >= 16, got ({m}, {n})"
        )));
    }
    Ok((m + 2) * (n + 2) / 5 - 4)
}

/// γ_{1/2}(P_m □ P_n) / γ(P_m □ P_n) as an unreduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridRatio {
    pub half_domination: usize,
    pub domination: usize,
}

impl GridRatio {
    pub fn as_f64(self) -> f64 {
        self.half_domination as f64 / self.domination as f64
    }

    /// Exact comparison against 1/2.
    pub fn below_half(self) -> bool {
        2 * self.half_domination < self.domination
    }
}

impl std::fmt::Display for GridRatio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.half_domination, self.domination)
    }
}

/// The ratio for `m, n >= 16`, from closed forms only (no grid is built).
pub fn grid_ratio_report(m: usize, n: usize) -> Result<GridRatio> {
    let domination = gamma_grid_goncalves(m, n)?;
    let (lo, hi) = (m.min(n), m.max(n));
    let half_domination = (lo * hi).div_ceil(10);
    Ok(GridRatio {
        half_domination,
        domination,
    })
}
