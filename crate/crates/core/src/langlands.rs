//! Parameters of principal series representations of complex groups.
//!
//! A parameter is a dominant character `χ` of `T`; the representation is
//! the unique irreducible quotient of the induced representation from `χ`.
//! Two parameters give the same representation exactly when they are
//! `W`-conjugate. The contragredient has parameter `w_0.(χ⁻¹)` and the
//! `θ`-twist has parameter `w'.θ(χ)` for any `w'` making it dominant.

use serde::Serialize;

use num_traits::Signed;

use crate::chars::{orbit_witness, CharacterOfT};
use crate::distinction::require_dominant;
use crate::error::check_dim;
use crate::pairs::InvolutionSpec;
use crate::rootsys::RootSystem;
use crate::weyl::{TwistedInvolution, WeylElement, WeylGroup};
use crate::{Budget, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LanglandsParameter {
    chi: CharacterOfT,
}

impl LanglandsParameter {
    /// Wraps an already dominant character.
    pub fn new(rs: &RootSystem, chi: CharacterOfT) -> Result<Self> {
        require_dominant(rs, &chi)?;
        Ok(LanglandsParameter { chi })
    }

    pub fn character(&self) -> &CharacterOfT {
        &self.chi
    }

    pub fn into_character(self) -> CharacterOfT {
        self.chi
    }

    /// Same representation: the characters are `W`-conjugate.
    pub fn equivalent(&self, group: &WeylGroup, other: &Self) -> Result<bool> {
        // A W-orbit meets the closed dominant chamber in a single point.
        if self.chi.lambda_re != other.chi.lambda_re {
            return Ok(false);
        }
        Ok(orbit_witness(group, &self.chi, &other.chi)?.is_some())
    }
}

/// `dominant_representative` over an enumerated group: the first `w` in
/// breadth-first order (length, then lexicographic word) with `Re(w.χ)`
/// dominant.
pub fn dominant_representative_in(
    rs: &RootSystem,
    group: &WeylGroup,
    chi: &CharacterOfT,
) -> Result<(LanglandsParameter, WeylElement)> {
    check_dim(rs.ambient_dim(), chi.dim())?;
    for w in group.iter() {
        let re = w.act(&chi.lambda_re)?;
        if rs.simple_roots().iter().all(|a| !rs.ip(&re, a).is_negative()) {
            let image = chi.weyl_act(w)?;
            return Ok((LanglandsParameter { chi: image }, w.clone()));
        }
    }
    Err(Error::Internal(
        "no Weyl element makes the character dominant".into(),
    ))
}

pub fn dominant_representative(
    rs: &RootSystem,
    chi: &CharacterOfT,
    budget: &Budget,
) -> Result<(LanglandsParameter, WeylElement)> {
    let group = WeylGroup::enumerate(rs, budget)?;
    dominant_representative_in(rs, &group, chi)
}

/// `contragredient_param`: `w_0.(χ⁻¹)`, which is dominant whenever `χ` is.
pub fn contragredient_param_in(
    rs: &RootSystem,
    group: &WeylGroup,
    p: &LanglandsParameter,
) -> Result<LanglandsParameter> {
    let image = p.chi.invert().weyl_act(group.longest())?;
    if !image.is_dominant(rs)? {
        return Err(Error::Internal(format!(
            "w0 applied to the inverse of {} is not dominant",
            p.chi
        )));
    }
    Ok(LanglandsParameter { chi: image })
}

pub fn contragredient_param(
    rs: &RootSystem,
    p: &LanglandsParameter,
    budget: &Budget,
) -> Result<LanglandsParameter> {
    let group = WeylGroup::enumerate(rs, budget)?;
    contragredient_param_in(rs, &group, p)
}

/// `theta_twist_param`: the dominant representative of `θ(χ)`.
pub fn theta_twist_param_in(
    rs: &RootSystem,
    group: &WeylGroup,
    theta: &InvolutionSpec,
    p: &LanglandsParameter,
) -> Result<LanglandsParameter> {
    theta.root_permutation(rs)?;
    let twisted = p.chi.theta_act(theta)?;
    Ok(dominant_representative_in(rs, group, &twisted)?.0)
}

pub fn theta_twist_param(
    rs: &RootSystem,
    theta: &InvolutionSpec,
    p: &LanglandsParameter,
    budget: &Budget,
) -> Result<LanglandsParameter> {
    let group = WeylGroup::enumerate(rs, budget)?;
    theta_twist_param_in(rs, &group, theta, p)
}

/// `check_conj_symmetry`: the first `w` (breadth-first order) with
/// `χ⁻¹ = w.θ(χ)` and `P w P⁻¹ = w⁻¹`.
pub fn check_conj_symmetry_in(
    rs: &RootSystem,
    group: &WeylGroup,
    theta: &InvolutionSpec,
    p: &LanglandsParameter,
) -> Result<Option<WeylElement>> {
    let theta_perm = theta.root_permutation(rs)?;
    let inverse = p.chi.invert();
    let twisted = p.chi.theta_act(theta)?;
    for w in group.iter() {
        if twisted.weyl_act(w)? != inverse {
            continue;
        }
        if TwistedInvolution::with_theta_perm(rs, theta, &theta_perm, w.clone()).is_ok() {
            return Ok(Some(w.clone()));
        }
    }
    Ok(None)
}

pub fn check_conj_symmetry(
    rs: &RootSystem,
    theta: &InvolutionSpec,
    p: &LanglandsParameter,
    budget: &Budget,
) -> Result<Option<WeylElement>> {
    let group = WeylGroup::enumerate(rs, budget)?;
    check_conj_symmetry_in(rs, &group, theta, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn ch(re: &[i64], im: &[i64], m: &[i64]) -> CharacterOfT {
        CharacterOfT::from_ints(re, im, m).unwrap()
    }

    fn gl(n: usize) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::gl(n).unwrap();
        let g = WeylGroup::enumerate(&rs, &Budget::default()).unwrap();
        (rs, g)
    }

    #[test]
    fn dominant_representatives() {
        let (rs, g) = gl(2);
        let c = ch(&[3, 1], &[1, 0], &[0, 5]);
        let (p, w) = dominant_representative_in(&rs, &g, &c).unwrap();
        assert!(w.is_identity());
        assert_eq!(p.character(), &c);

        let (p, w) = dominant_representative_in(&rs, &g, &ch(&[0, 1], &[0, 0], &[0, 0])).unwrap();
        assert_eq!(w.word(), [0]);
        assert_eq!(p.character(), &ch(&[1, 0], &[0, 0], &[0, 0]));

        let (_, w) = dominant_representative_in(&rs, &g, &ch(&[0, 0], &[4, 1], &[2, 7])).unwrap();
        assert!(w.is_identity());
        assert!(LanglandsParameter::new(&rs, ch(&[0, 1], &[0, 0], &[0, 0])).is_err());
    }

    #[test]
    fn contragredient() {
        let (rs, g) = gl(2);
        let p = LanglandsParameter::new(&rs, ch(&[1, 0], &[0, 0], &[2, 1])).unwrap();
        let q = contragredient_param_in(&rs, &g, &p).unwrap();
        assert_eq!(q.character(), &ch(&[0, -1], &[0, 0], &[-1, -2]));
        let back = contragredient_param_in(&rs, &g, &q).unwrap();
        assert!(back.equivalent(&g, &p).unwrap());

        let t = LanglandsParameter::new(&rs, CharacterOfT::trivial(2)).unwrap();
        assert_eq!(contragredient_param_in(&rs, &g, &t).unwrap(), t);
    }

    #[test]
    fn theta_twist() {
        let (rs, g) = gl(2);
        let p = LanglandsParameter::new(&rs, ch(&[1, 0], &[0, 0], &[3, 1])).unwrap();
        let split = InvolutionSpec::galois_split(2);
        let t = theta_twist_param_in(&rs, &g, &split, &p).unwrap();
        assert_eq!(t.character(), &ch(&[1, 0], &[0, 0], &[-3, -1]));
        let tt = theta_twist_param_in(&rs, &g, &split, &t).unwrap();
        assert!(tt.equivalent(&g, &p).unwrap());
        let same = theta_twist_param_in(&rs, &g, &InvolutionSpec::identity(2), &p).unwrap();
        assert_eq!(same, p);
    }

    #[test]
    fn conj_symmetry() {
        let (rs, g) = gl(2);
        let split = InvolutionSpec::galois_split(2);
        let p = LanglandsParameter::new(&rs, ch(&[3, -3], &[0, 0], &[5, 5])).unwrap();
        let w = check_conj_symmetry_in(&rs, &g, &split, &p).unwrap().unwrap();
        assert_eq!(w.word(), [0]);

        let t = LanglandsParameter::new(&rs, CharacterOfT::trivial(2)).unwrap();
        assert!(check_conj_symmetry_in(&rs, &g, &split, &t).unwrap().unwrap().is_identity());

        let p = LanglandsParameter::new(&rs, ch(&[2, 0], &[0, 0], &[0, 0])).unwrap();
        assert!(check_conj_symmetry_in(&rs, &g, &split, &p).unwrap().is_none());
    }

    #[test]
    fn strictly_dominant_witness_is_unique() {
        let rs = RootSystem::of_type(Family::B, 2).unwrap();
        let g = WeylGroup::enumerate(&rs, &Budget::default()).unwrap();
        let c = ch(&[-3, 1], &[0, 0], &[1, 1]);
        let (p, w) = dominant_representative_in(&rs, &g, &c).unwrap();
        assert!(p.character().is_strictly_dominant(&rs).unwrap());
        let hits = g
            .iter()
            .filter(|u| c.weyl_act(u).unwrap().is_dominant(&rs).unwrap())
            .count();
        assert_eq!(hits, 1);
        assert_eq!(p.character(), &c.weyl_act(&w).unwrap());
    }
}
