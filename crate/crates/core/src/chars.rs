//! Characters of the maximal torus of a complex reductive group.
//!
//! A character is written `χ(t) = ∏ |t_i|^{λ_i} (t_i/|t_i|)^{m_i}` with
//! complex `λ` (stored as real and imaginary rational parts) and integral
//! compact parameters `m`. The group law is written additively: composing
//! two characters adds all three vectors, inverting negates them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::check_dim;
use crate::linalg::Weight;
use crate::pairs::InvolutionSpec;
use crate::rational::serde_int_vec;
use crate::rootsys::RootSystem;
use crate::weyl::{TwistedInvolution, WeylElement, WeylGroup};
use crate::{Budget, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharacterOfT {
    pub lambda_re: Weight,
    pub lambda_im: Weight,
    #[serde(with = "serde_int_vec")]
    pub m: Vec<BigInt>,
}

impl CharacterOfT {
    pub fn new(lambda_re: Weight, lambda_im: Weight, m: Vec<BigInt>) -> Result<Self> {
        check_dim(lambda_re.dim(), lambda_im.dim())?;
        check_dim(lambda_re.dim(), m.len())?;
        Ok(CharacterOfT {
            lambda_re,
            lambda_im,
            m,
        })
    }

    pub fn trivial(dim: usize) -> Self {
        CharacterOfT {
            lambda_re: Weight::zeros(dim),
            lambda_im: Weight::zeros(dim),
            m: vec![BigInt::zero(); dim],
        }
    }

    /// Integer-valued convenience constructor.
    pub fn from_ints(re: &[i64], im: &[i64], m: &[i64]) -> Result<Self> {
        Self::new(
            Weight::from_ints(re),
            Weight::from_ints(im),
            m.iter().map(|&x| BigInt::from(x)).collect(),
        )
    }

    /// The root `α` viewed as a character of `T`: `λ = m = α`.
    pub fn of_root(rs: &RootSystem, idx: usize) -> Result<Self> {
        let root = &rs.roots()[idx];
        let m = root
            .coords()
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral(format!("root {root} has non-integral coordinates")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterOfT {
            lambda_re: root.clone(),
            lambda_im: Weight::zeros(root.dim()),
            m,
        })
    }

    pub fn dim(&self) -> usize {
        self.lambda_re.dim()
    }

    pub fn is_trivial(&self) -> bool {
        self.lambda_re.is_zero() && self.lambda_im.is_zero() && self.m.iter().all(Zero::is_zero)
    }

    /// `invert_char`.
    pub fn invert(&self) -> Self {
        CharacterOfT {
            lambda_re: -&self.lambda_re,
            lambda_im: -&self.lambda_im,
            m: self.m.iter().map(|x| -x).collect(),
        }
    }

    /// `compose_chars`: the pointwise product.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(CharacterOfT {
            lambda_re: &self.lambda_re + &other.lambda_re,
            lambda_im: &self.lambda_im + &other.lambda_im,
            m: self.m.iter().zip(&other.m).map(|(a, b)| a + b).collect(),
        })
    }

    /// Index of the first simple root with `⟨Re λ, α⟩ < 0`, if any.
    pub fn dominance_violation(&self, rs: &RootSystem) -> Result<Option<usize>> {
        check_dim(rs.ambient_dim(), self.dim())?;
        Ok(rs
            .simple_roots()
            .iter()
            .position(|a| rs.ip(&self.lambda_re, a) < Zero::zero()))
    }

    /// `is_dominant`: `⟨Re λ, α⟩ ≥ 0` for every simple root.
    pub fn is_dominant(&self, rs: &RootSystem) -> Result<bool> {
        Ok(self.dominance_violation(rs)?.is_none())
    }

    /// Strict inequalities at every simple root.
    pub fn is_strictly_dominant(&self, rs: &RootSystem) -> Result<bool> {
        check_dim(rs.ambient_dim(), self.dim())?;
        Ok(rs
            .simple_roots()
            .iter()
            .all(|a| rs.ip(&self.lambda_re, a) > Zero::zero()))
    }

    /// `weyl_act_char`: `(w.χ)(t) = χ(n⁻¹ t n)`; the matrix of `w` acts on
    /// all three vectors.
    pub fn weyl_act(&self, w: &WeylElement) -> Result<Self> {
        let mat = w.matrix();
        Ok(CharacterOfT {
            lambda_re: mat.apply(&self.lambda_re)?,
            lambda_im: mat.apply(&self.lambda_im)?,
            m: mat.apply_int(&self.m)?,
        })
    }

    /// `theta_act_char`: `λ ↦ Pλ`, `m ↦ ε·Pm`.
    pub fn theta_act(&self, theta: &InvolutionSpec) -> Result<Self> {
        let p = theta.matrix();
        let mut m = p.apply_int(&self.m)?;
        if theta.epsilon() < 0 {
            m.iter_mut().for_each(|x| *x = -&*x);
        }
        Ok(CharacterOfT {
            lambda_re: p.apply(&self.lambda_re)?,
            lambda_im: p.apply(&self.lambda_im)?,
            m,
        })
    }

    /// `w.θ(χ)`.
    pub fn twist(&self, w: &WeylElement, theta: &InvolutionSpec) -> Result<Self> {
        self.theta_act(theta)?.weyl_act(w)
    }

    /// `fold`: the folded character `χ · w∘θ(χ)`, which is what `χ` looks
    /// like on the subgroup `{nθ(t)n⁻¹t}` of `T^{θ_n}`.
    pub fn fold(&self, w: &TwistedInvolution, theta: &InvolutionSpec) -> Result<Self> {
        self.compose(&self.twist(w.element(), theta)?)
    }
}

impl fmt::Display for CharacterOfT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.m.iter().map(BigInt::to_string).collect();
        write!(
            f,
            "(re {}, im {}, m ({}))",
            self.lambda_re,
            self.lambda_im,
            m.join(", ")
        )
    }
}

/// `weyl_orbit_equivalent` over an already enumerated group; returns the
/// first witness in breadth-first order.
pub fn orbit_witness<'g>(
    group: &'g WeylGroup,
    a: &CharacterOfT,
    b: &CharacterOfT,
) -> Result<Option<&'g WeylElement>> {
    check_dim(a.dim(), b.dim())?;
    for w in group.iter() {
        if w.act(&a.lambda_re)? != b.lambda_re {
            continue;
        }
        if a.weyl_act(w)? == *b {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// `weyl_orbit_equivalent`: is `b = w.a` for some `w ∈ W`?
pub fn weyl_orbit_equivalent(
    rs: &RootSystem,
    a: &CharacterOfT,
    b: &CharacterOfT,
    budget: &Budget,
) -> Result<bool> {
    check_dim(rs.ambient_dim(), a.dim())?;
    let group = WeylGroup::enumerate(rs, budget)?;
    Ok(orbit_witness(&group, a, b)?.is_some())
}
