//! Involutions of a root system, symmetric-pair specifications, and the
//! verifier for the modular-character compatibility (⋆).
//!
//! (⋆) asks that `δ_{B^{θ_n}} = δ_B^{1/2}` on `B^{θ_n}` for every twisted
//! representative `n`. On the split torus this reduces to a statement about
//! roots: split `Σ⁺` under `α ↦ w∘θ(α)` into roots moved within `Σ⁺` (S1),
//! fixed roots (S2) and roots sent to `Σ⁻` (S3); (⋆) holds for `w` exactly
//! when `Σ_{α∈S3} (α + w∘θ(α)) = 0`.

use std::fmt;

use crate::error::check_dim;
use crate::linalg::{QMatrix, Weight};
use crate::rootsys::RootSystem;
use crate::weyl::{twisted_involutions, TwistedInvolution};
use crate::{Budget, Error, Result};

/// How `ψ_n` acts on a root space `g_α` with `w∘θ(α) = α`; this fixes the
/// multiplicity of such a root in the normal-space multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedRootMode {
    /// `θ` is semilinear (Galois): the −1 eigenspace is a real line.
    Semilinear,
    /// `ψ_n = +Id`: the root contributes nothing.
    LinearPlus,
    /// `ψ_n = −Id`: the whole complex line contributes.
    LinearMinus,
}

impl FixedRootMode {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "semilinear" => Ok(Self::Semilinear),
            "linear_plus" => Ok(Self::LinearPlus),
            "linear_minus" => Ok(Self::LinearMinus),
            other => Err(Error::InvalidInvolution(format!(
                "unknown fixed-root mode {other:?} (expected semilinear, linear_plus or linear_minus)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Semilinear => "semilinear",
            Self::LinearPlus => "linear_plus",
            Self::LinearMinus => "linear_minus",
        }
    }

    /// Multiplicity of a `w∘θ`-fixed root in the normal multiset.
    pub fn fixed_multiplicity(self) -> u8 {
        match self {
            Self::Semilinear => 1,
            Self::LinearPlus => 0,
            Self::LinearMinus => 2,
        }
    }
}

impl fmt::Display for FixedRootMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The involution `θ` as seen on the torus: a matrix on weights, a sign for
/// the compact parameters, and the fixed-root mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionSpec {
    matrix: QMatrix,
    epsilon: i8,
    mode: FixedRootMode,
}

impl InvolutionSpec {
    pub fn new(matrix: QMatrix, epsilon: i8, mode: FixedRootMode) -> Result<Self> {
        if epsilon != 1 && epsilon != -1 {
            return Err(Error::InvalidInvolution(format!(
                "epsilon must be +1 or -1, got {epsilon}"
            )));
        }
        if !matrix.mul(&matrix).is_identity() {
            return Err(Error::InvalidInvolution("matrix does not square to the identity".into()));
        }
        Ok(InvolutionSpec {
            matrix,
            epsilon,
            mode,
        })
    }

    /// `θ = id` acting linearly; fixed roots are handled as `linear_plus`.
    pub fn identity(dim: usize) -> Self {
        InvolutionSpec {
            matrix: QMatrix::identity(dim),
            epsilon: 1,
            mode: FixedRootMode::LinearPlus,
        }
    }

    /// Complex conjugation for the split real form: trivial on the split
    /// torus, inverting phases.
    pub fn galois_split(dim: usize) -> Self {
        InvolutionSpec {
            matrix: QMatrix::identity(dim),
            epsilon: -1,
            mode: FixedRootMode::Semilinear,
        }
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn epsilon(&self) -> i8 {
        self.epsilon
    }

    pub fn mode(&self) -> FixedRootMode {
        self.mode
    }

    /// Validates `θ` against `rs` and returns its permutation of the roots.
    pub fn root_permutation(&self, rs: &RootSystem) -> Result<Vec<u32>> {
        check_dim(rs.ambient_dim(), self.matrix.dim())?;
        let perm: Option<Vec<u32>> = rs
            .roots()
            .iter()
            .map(|x| rs.root_index(&self.matrix.apply_unchecked(x)).map(|k| k as u32))
            .collect();
        let perm = perm.ok_or_else(|| {
            Error::InvalidInvolution("matrix does not map the root set onto itself".into())
        })?;
        let form = rs.form();
        if self.matrix.transpose().mul(form).mul(&self.matrix) != *form {
            return Err(Error::InvalidInvolution(
                "matrix does not preserve the invariant form".into(),
            ));
        }
        Ok(perm)
    }
}

/// A root system together with a validated involution.
#[derive(Debug, Clone)]
pub struct PairSpec {
    rs: RootSystem,
    theta: InvolutionSpec,
    theta_perm: Vec<u32>,
    label: String,
}

impl PairSpec {
    pub fn new(rs: RootSystem, theta: InvolutionSpec, label: impl Into<String>) -> Result<Self> {
        let theta_perm = theta.root_permutation(&rs)?;
        Ok(PairSpec {
            rs,
            theta,
            theta_perm,
            label: label.into(),
        })
    }

    /// `galois_split_pair`.
    pub fn galois_split(rs: RootSystem) -> Self {
        let theta = InvolutionSpec::galois_split(rs.ambient_dim());
        Self::new(rs, theta, "galois-split").expect("identity is an automorphism")
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn theta(&self) -> &InvolutionSpec {
        &self.theta
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Index of `θ(roots[idx])`.
    pub fn theta_root(&self, idx: usize) -> usize {
        self.theta_perm[idx] as usize
    }

    pub fn twisted_involutions(&self, budget: &Budget) -> Result<Vec<TwistedInvolution>> {
        twisted_involutions(&self.rs, &self.theta, budget)
    }

    /// `verify_star` over every twisted involution.
    pub fn verify_star(&self, budget: &Budget) -> Result<StarReport> {
        let entries: Vec<StarEntry> = self
            .twisted_involutions(budget)?
            .into_iter()
            .map(|w| star_for(self, w))
            .collect();
        Ok(StarReport::from_entries(entries))
    }
}

/// The (⋆) check for one twisted involution.
#[derive(Debug, Clone)]
pub struct StarEntry {
    pub w: TwistedInvolution,
    /// Positive roots moved by `w∘θ` to another positive root.
    pub s1: Vec<usize>,
    /// Positive roots fixed by `w∘θ`.
    pub s2: Vec<usize>,
    /// Positive roots sent to `Σ⁻`.
    pub s3: Vec<usize>,
    /// `Σ_{α∈S3} (α + w∘θ(α))`.
    pub sum: Weight,
    /// `α ↦ −w∘θ(α)` maps S3 to itself.
    pub s3_closed: bool,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct StarReport {
    pub entries: Vec<StarEntry>,
    pub holds: bool,
}

impl StarReport {
    pub fn from_entries(entries: Vec<StarEntry>) -> Self {
        let holds = entries.iter().all(|e| e.holds);
        StarReport { entries, holds }
    }
}

/// Partitions `Σ⁺` under `w∘θ` and evaluates the S3 sum.
pub fn star_for(pair: &PairSpec, w: TwistedInvolution) -> StarEntry {
    let rs = pair.root_system();
    let (mut s1, mut s2, mut s3) = (Vec::new(), Vec::new(), Vec::new());
    for a in 0..rs.num_positive() {
        let img = w.twist_root(a);
        if img == a {
            s2.push(a);
        } else if rs.is_positive(img) {
            s1.push(a);
        } else {
            s3.push(a);
        }
    }
    let sum = s3.iter().fold(rs.zero_weight(), |acc, &a| {
        &(&acc + &rs.roots()[a]) + &rs.roots()[w.twist_root(a)]
    });
    let s3_closed = s3
        .iter()
        .all(|&a| s3.binary_search(&rs.negate(w.twist_root(a))).is_ok());
    let holds = sum.is_zero();
    StarEntry {
        w,
        s1,
        s2,
        s3,
        sum,
        s3_closed,
        holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::rootsys::Family;

    #[test]
    fn rejects_non_involutions_and_non_automorphisms() {
        let a2 = RootSystem::of_type(Family::A, 2).unwrap();
        let m = |rows: &[&[i64]]| {
            QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
                .unwrap()
        };
        assert!(InvolutionSpec::new(m(&[&[0, 1], &[-1, 0]]), -1, FixedRootMode::Semilinear).is_err());
        assert!(InvolutionSpec::new(m(&[&[1, 0], &[0, 1]]), 0, FixedRootMode::Semilinear).is_err());
        // An involution of the ambient space that scrambles the roots.
        let shear = InvolutionSpec::new(m(&[&[1, 0], &[0, -1]]), 1, FixedRootMode::LinearPlus)
            .unwrap();
        assert!(matches!(
            PairSpec::new(a2.clone(), shear, "bad"),
            Err(Error::InvalidInvolution(_))
        ));
        // The diagram automorphism of A2 is fine.
        let swap = InvolutionSpec::new(m(&[&[0, 1], &[1, 0]]), -1, FixedRootMode::Semilinear).unwrap();
        assert!(PairSpec::new(a2, swap, "quasi-split").is_ok());
    }

    #[test]
    fn identity_theta_identity_w() {
        let a2 = RootSystem::of_type(Family::A, 2).unwrap();
        let pair = PairSpec::new(a2, InvolutionSpec::identity(2), "identity").unwrap();
        let report = pair.verify_star(&Budget::default()).unwrap();
        let first = &report.entries[0];
        assert!(first.w.element().is_identity());
        assert!(first.s3.is_empty());
        assert!(first.sum.is_zero());
        assert!(first.holds);
    }

    #[test]
    fn galois_split_gl3_holds() {
        let pair = PairSpec::galois_split(RootSystem::gl(3).unwrap());
        assert!(pair.theta().matrix().mul(pair.theta().matrix()).is_identity());
        let report = pair.verify_star(&Budget::default()).unwrap();
        assert_eq!(report.entries.len(), 4);
        for e in &report.entries {
            assert!(e.holds && e.s3_closed);
            assert_eq!(e.s1.len() + e.s2.len() + e.s3.len(), 3);
        }
        assert!(report.holds);
    }

    #[test]
    fn mode_parsing() {
        assert_eq!(FixedRootMode::parse("linear_minus").unwrap(), FixedRootMode::LinearMinus);
        assert!(FixedRootMode::parse("other").is_err());
    }
}
