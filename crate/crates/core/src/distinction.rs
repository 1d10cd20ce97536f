//! The folded-character equation.
//!
//! For a twisted involution `w` with normal multiset `S`, a nonzero
//! `H`-invariant functional in the Borel-equivariant picture forces an
//! identity `Σ n_j (α_j + w∘θ(α_j)) = τ` with `n_j ≥ 0`, where `τ` is the
//! real part of `χ + w∘θ(χ)`. For dominant `χ` the only solution is
//! `n = 0`, which in turn forces `χ⁻¹ = w∘θ(χ)`. This module solves the
//! equation exhaustively and cross-checks that conclusion.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::chars::CharacterOfT;
use crate::linalg::Weight;
use crate::normalspace::{normal_multiset, NormalFiberMultiset};
use crate::pairs::PairSpec;
use crate::rootsys::RootSystem;
use crate::weyl::TwistedInvolution;
use crate::{Budget, Error, Result};

/// `solve_fold_equation`: every `n ∈ ℕ^k` with `Σ n_j v_j = τ`, where
/// `v_1, …, v_k` are the deduplicated folded vectors of `s`. Assignments
/// are listed in lexicographic order.
///
/// `τ` must lie in the root span. Since every `v_j` has nonpositive simple
/// coordinates, not all zero, each `n_j` is bounded by `τ` and the scan is
/// exhaustive.
pub fn solve_fold_equation(
    rs: &RootSystem,
    s: &NormalFiberMultiset,
    tau: &Weight,
    budget: &Budget,
) -> Result<Vec<Vec<u64>>> {
    let coords = rs.simple_coords(tau)?;
    let vectors: Vec<Vec<i64>> = s
        .folded_vectors
        .iter()
        .map(|v| v.simple_coords.clone())
        .collect();
    if coords.iter().any(|c| !c.is_integer()) {
        return Ok(Vec::new());
    }
    let target: Vec<BigInt> = coords.iter().map(|c| c.to_integer()).collect();
    solve_in_coords(&vectors, &target, budget)
}

/// The same scan with everything already in simple-root coordinates.
pub fn solve_in_coords(
    vectors: &[Vec<i64>],
    target: &[BigInt],
    budget: &Budget,
) -> Result<Vec<Vec<u64>>> {
    for v in vectors {
        if v.len() != target.len() {
            return Err(Error::DimensionMismatch {
                expected: target.len(),
                found: v.len(),
            });
        }
        if v.iter().any(|&x| x > 0) || v.iter().all(|&x| x == 0) {
            return Err(Error::Internal(format!(
                "folded vector {v:?} is not a nonzero nonpositive combination"
            )));
        }
    }
    let mut solver = Solver {
        vectors,
        nodes: 0,
        limit: budget.max_search_nodes,
        current: vec![0; vectors.len()],
        found: Vec::new(),
    };
    if target.iter().any(Signed::is_positive) {
        return Ok(Vec::new());
    }
    if !solver.descend(0, target.to_vec()) {
        return Err(Error::SearchBudget {
            limit: budget.max_search_nodes,
            partial: vec![solver.found.len() as u128],
        });
    }
    Ok(solver.found)
}

struct Solver<'a> {
    vectors: &'a [Vec<i64>],
    nodes: u64,
    limit: u64,
    current: Vec<u64>,
    found: Vec<Vec<u64>>,
}

impl Solver<'_> {
    /// `remaining` stays coordinatewise `≤ 0` along every branch.
    fn descend(&mut self, j: usize, remaining: Vec<BigInt>) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            return false;
        }
        if j == self.vectors.len() {
            if remaining.iter().all(Zero::is_zero) {
                self.found.push(self.current.clone());
            }
            return true;
        }
        let v = &self.vectors[j];
        // n_j ≤ min over c with v[c] < 0 of remaining[c] / v[c].
        let bound = v
            .iter()
            .zip(&remaining)
            .filter(|(&x, _)| x < 0)
            .map(|(&x, r)| r / BigInt::from(x))
            .min()
            .expect("some coordinate is negative");
        let bound = bound.to_u64().unwrap_or(u64::MAX);
        let mut rem = remaining;
        for n in 0..=bound {
            self.current[j] = n;
            if n > 0 {
                for (r, &x) in rem.iter_mut().zip(v) {
                    *r -= x;
                }
                if rem.iter().any(Signed::is_positive) {
                    break;
                }
            }
            if !self.descend(j + 1, rem.clone()) {
                return false;
            }
        }
        self.current[j] = 0;
        true
    }
}

/// The verdict for one twisted involution.
#[derive(Debug, Clone)]
pub struct OrbitVerdict {
    pub w: TwistedInvolution,
    pub multiset: NormalFiberMultiset,
    /// `fold(χ)`.
    pub folded: CharacterOfT,
    /// Real part of `fold(χ)` projected to the root span.
    pub tau: Weight,
    /// Every solution of the folded equation over the deduplicated support.
    pub solutions: Vec<Vec<u64>>,
    /// The degree-0 term exists: `fold(χ)` is the trivial character.
    pub feasible: bool,
    /// `χ⁻¹ = w∘θ(χ)` as full characters.
    pub symmetry: bool,
    pub sym_dimension: u32,
    /// Set when a conclusion that should hold for dominant `χ` fails.
    pub violation: Option<String>,
}

impl OrbitVerdict {
    /// Number of support roots, i.e. `|S|` as a set.
    pub fn support_size(&self) -> usize {
        self.multiset.entries.len()
    }
}

#[derive(Debug, Clone)]
pub struct DistinctionReport {
    pub chi: CharacterOfT,
    pub verdicts: Vec<OrbitVerdict>,
    pub feasible_count: usize,
    /// Number of twisted involutions; it bounds the number of orbits on
    /// the symmetric variety, which bounds the multiplicity only for the
    /// full fixed-point group.
    pub orbit_representative_count: usize,
    pub violations: usize,
}

impl DistinctionReport {
    pub fn from_verdicts(chi: CharacterOfT, verdicts: Vec<OrbitVerdict>) -> Self {
        let feasible_count = verdicts.iter().filter(|v| v.feasible).count();
        let violations = verdicts.iter().filter(|v| v.violation.is_some()).count();
        DistinctionReport {
            chi,
            orbit_representative_count: verdicts.len(),
            verdicts,
            feasible_count,
            violations,
        }
    }
}

/// Fails unless `χ` is dominant for `rs`.
pub fn require_dominant(rs: &RootSystem, chi: &CharacterOfT) -> Result<()> {
    match chi.dominance_violation(rs)? {
        Some(simple) => Err(Error::NotDominant { simple }),
        None => Ok(()),
    }
}

/// The full check for one twisted involution. `χ` must be dominant.
pub fn check_orbit(
    pair: &PairSpec,
    chi: &CharacterOfT,
    w: &TwistedInvolution,
    budget: &Budget,
) -> Result<OrbitVerdict> {
    let multiset = normal_multiset(pair, w)?;
    check_orbit_with(pair, chi, multiset, budget)
}

/// [`check_orbit`] with the normal multiset already built, so that it can
/// be shared across many characters.
pub fn check_orbit_with(
    pair: &PairSpec,
    chi: &CharacterOfT,
    multiset: NormalFiberMultiset,
    budget: &Budget,
) -> Result<OrbitVerdict> {
    let rs = pair.root_system();
    let theta = pair.theta();
    require_dominant(rs, chi)?;
    let w = &multiset.w;
    let twisted = chi.twist(w.element(), theta)?;
    let folded = chi.compose(&twisted)?;
    let tau = rs.project_to_root_span(&folded.lambda_re)?;
    let solutions = solve_fold_equation(rs, &multiset, &tau, budget)?;
    let feasible = folded.is_trivial();
    let symmetry = chi.invert() == twisted;

    let mut problems = Vec::new();
    if solutions.iter().any(|n| n.iter().any(|&x| x > 0)) {
        problems.push("nonzero solution of the folded equation");
    }
    if feasible && solutions.is_empty() {
        problems.push("trivial fold without the zero solution");
    }
    if feasible != symmetry {
        problems.push("feasibility and symmetry disagree");
    }
    let violation = (!problems.is_empty()).then(|| problems.join("; "));
    Ok(OrbitVerdict {
        w: w.clone(),
        multiset,
        folded,
        tau,
        solutions,
        feasible,
        symmetry,
        sym_dimension: u32::from(feasible),
        violation,
    })
}

/// `check_distinction`: runs [`check_orbit`] for every twisted involution.
///
/// A non-dominant `χ` is rejected with [`Error::NotDominant`]; normalize it
/// first with [`crate::langlands::dominant_representative`].
pub fn check_distinction(
    pair: &PairSpec,
    chi: &CharacterOfT,
    budget: &Budget,
) -> Result<DistinctionReport> {
    require_dominant(pair.root_system(), chi)?;
    let verdicts = pair
        .twisted_involutions(budget)?
        .iter()
        .map(|w| check_orbit(pair, chi, w, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(DistinctionReport::from_verdicts(chi.clone(), verdicts))
}
