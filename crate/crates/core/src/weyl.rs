//! Weyl groups, their action on weights, and twisted involutions.
//!
//! A [`WeylElement`] carries its exact matrix on the ambient space together
//! with the permutation it induces on [`RootSystem::roots`]. The permutation
//! makes composition, length and equality tests cheap; the matrix is what
//! acts on characters.

use std::collections::HashMap;
use std::collections::VecDeque;

use num_traits::Zero;

use crate::error::check_dim;
use crate::linalg::{QMatrix, Weight};
use crate::pairs::InvolutionSpec;
use crate::rootsys::RootSystem;
use crate::{Budget, Error, Result};

#[derive(Debug, Clone)]
pub struct WeylElement {
    matrix: QMatrix,
    perm: Vec<u32>,
    word: Vec<usize>,
    length: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

fn count_inversions(rs: &RootSystem, perm: &[u32]) -> usize {
    perm[..rs.num_positive()]
        .iter()
        .filter(|&&img| !rs.is_positive(img as usize))
        .count()
}

fn simple_index(rs: &RootSystem, i: usize) -> usize {
    rs.root_index(&rs.simple_roots()[i]).expect("simple roots are roots")
}

/// Lexicographically least reduced word, peeling off the smallest left
/// descent at each step.
fn canonical_word(rs: &RootSystem, perm: &[u32]) -> Vec<usize> {
    let mut cur = perm.to_vec();
    let mut word = Vec::new();
    let simple: Vec<usize> = (0..rs.rank()).map(|i| simple_index(rs, i)).collect();
    loop {
        let mut inv = vec![0u32; cur.len()];
        for (b, &img) in cur.iter().enumerate() {
            inv[img as usize] = b as u32;
        }
        // s_i w < w  ⟺  w⁻¹(α_i) < 0
        let Some(i) = (0..rs.rank()).find(|&i| !rs.is_positive(inv[simple[i]] as usize)) else {
            break;
        };
        word.push(i);
        let s = rs.simple_perm(i);
        cur = cur.iter().map(|&img| s[img as usize]).collect();
    }
    word
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            matrix: QMatrix::identity(rs.ambient_dim()),
            perm: (0..rs.num_roots() as u32).collect(),
            word: Vec::new(),
            length: 0,
        }
    }

    /// The simple reflection `s_i`.
    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<Self> {
        rs.simple_root(i)?;
        Ok(Self::identity(rs).times_simple(rs, i))
    }

    /// Product `s_{w[0]} s_{w[1]} ⋯` of simple reflections.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(rs);
        for &i in word {
            rs.simple_root(i)?;
            w = w.times_simple(rs, i);
        }
        w.word = canonical_word(rs, &w.perm);
        Ok(w)
    }

    /// Builds an element from a matrix, which must permute the roots.
    /// Membership in the Weyl group is checked by reducing to the identity.
    pub fn from_matrix(rs: &RootSystem, matrix: QMatrix) -> Result<Self> {
        check_dim(rs.ambient_dim(), matrix.dim())?;
        let perm: Option<Vec<u32>> = rs
            .roots()
            .iter()
            .map(|x| rs.root_index(&matrix.apply_unchecked(x)).map(|k| k as u32))
            .collect();
        let perm = perm.ok_or_else(|| {
            Error::InvalidRootSystem("matrix does not permute the roots".into())
        })?;
        let word = canonical_word(rs, &perm);
        let candidate = Self::from_word(rs, &word)?;
        if candidate.matrix != matrix {
            return Err(Error::InvalidRootSystem(
                "matrix is not an element of the Weyl group".into(),
            ));
        }
        Ok(candidate)
    }

    /// `w · s_i`, with a rank-one update of the matrix:
    /// `w s_i (x) = w(x) − ⟨x, α_i^∨⟩ w(α_i)`.
    fn times_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let s = rs.simple_perm(i);
        let perm: Vec<u32> = s.iter().map(|&b| self.perm[b as usize]).collect();
        let image = &rs.roots()[self.perm[simple_index(rs, i)] as usize];
        let functional = rs.coroot_functional(i);
        let mut matrix = self.matrix.clone();
        let n = matrix.dim();
        for a in 0..n {
            if image.0[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if !functional.0[b].is_zero() {
                    *matrix.get_mut(a, b) -= &image.0[a] * &functional.0[b];
                }
            }
        }
        let mut word = self.word.clone();
        word.push(i);
        let length = count_inversions(rs, &perm);
        WeylElement {
            matrix,
            perm,
            word,
            length,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        let perm: Vec<u32> = other.perm.iter().map(|&b| self.perm[b as usize]).collect();
        let word = canonical_word(rs, &perm);
        WeylElement {
            matrix: self.matrix.mul(&other.matrix),
            length: word.len(),
            perm,
            word,
        }
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let mut perm = vec![0u32; self.perm.len()];
        for (b, &img) in self.perm.iter().enumerate() {
            perm[img as usize] = b as u32;
        }
        let word = canonical_word(rs, &perm);
        WeylElement {
            matrix: self.matrix.inverse().expect("Weyl elements are invertible"),
            length: word.len(),
            perm,
            word,
        }
    }

    /// `act`: the linear action on a weight.
    pub fn act(&self, x: &Weight) -> Result<Weight> {
        self.matrix.apply(x)
    }

    /// Index of `w(roots[idx])`.
    pub fn act_on_root(&self, idx: usize) -> usize {
        self.perm[idx] as usize
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn root_permutation(&self) -> &[u32] {
        &self.perm
    }

    /// Lexicographically least reduced word in the simple reflections.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Reduced word rendered 1-based, e.g. `s1 s2`; `e` for the identity.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word
                .iter()
                .map(|i| format!("s{}", i + 1))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

/// A fully enumerated Weyl group, in breadth-first order: by length, then
/// by lexicographically least reduced word.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    lookup: HashMap<Vec<u32>, usize>,
}

impl WeylGroup {
    /// `enumerate_weyl`: breadth-first closure under right multiplication by
    /// simple reflections.
    pub fn enumerate(rs: &RootSystem, budget: &Budget) -> Result<Self> {
        let order = rs.weyl_order()?;
        if order > u128::from(budget.max_weyl_order) {
            return Err(Error::WeylBudget {
                order,
                budget: budget.max_weyl_order,
            });
        }
        let id = WeylElement::identity(rs);
        let mut lookup = HashMap::with_capacity(order as usize);
        lookup.insert(id.perm.clone(), 0);
        let mut elements = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for i in 0..rs.rank() {
                let s = rs.simple_perm(i);
                let parent = &elements[k];
                let perm: Vec<u32> = s.iter().map(|&b| parent.perm[b as usize]).collect();
                if lookup.contains_key(&perm) {
                    continue;
                }
                let child = parent.times_simple(rs, i);
                debug_assert_eq!(child.perm, perm);
                lookup.insert(perm, elements.len());
                queue.push_back(elements.len());
                elements.push(child);
            }
        }
        if elements.len() as u128 != order {
            return Err(Error::Internal(format!(
                "enumerated {} Weyl elements, expected {order}",
                elements.len()
            )));
        }
        Ok(WeylGroup { elements, lookup })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, WeylElement> {
        self.elements.iter()
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    /// The unique element of maximal length.
    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("group is non-empty")
    }

    pub fn find_by_permutation(&self, perm: &[u32]) -> Option<&WeylElement> {
        self.lookup.get(perm).map(|&k| &self.elements[k])
    }
}

/// `longest_element`: `w_0`, which sends every positive root negative.
pub fn longest_element(rs: &RootSystem, budget: &Budget) -> Result<WeylElement> {
    let group = WeylGroup::enumerate(rs, budget)?;
    Ok(group.longest().clone())
}

/// A Weyl element `w` with `θ(w) = w⁻¹`, i.e. `P w P⁻¹ = w⁻¹` for the
/// matrix `P` of the involution.
#[derive(Debug, Clone)]
pub struct TwistedInvolution {
    element: WeylElement,
    composite: QMatrix,
    composite_perm: Vec<u32>,
}

impl TwistedInvolution {
    /// Checks `P w P = w⁻¹` on the roots and as matrices, and that `w∘θ`
    /// squares to the identity.
    pub fn new(rs: &RootSystem, theta: &InvolutionSpec, w: WeylElement) -> Result<Self> {
        let theta_perm = theta.root_permutation(rs)?;
        Self::with_theta_perm(rs, theta, &theta_perm, w)
    }

    pub(crate) fn with_theta_perm(
        rs: &RootSystem,
        theta: &InvolutionSpec,
        theta_perm: &[u32],
        w: WeylElement,
    ) -> Result<Self> {
        if !twisted_on_roots(&w.perm, theta_perm) {
            return Err(Error::NotTwisted);
        }
        let p = theta.matrix();
        let conj = p.mul(w.matrix()).mul(p);
        if conj.mul(w.matrix()) != QMatrix::identity(rs.ambient_dim()) {
            return Err(Error::NotTwisted);
        }
        let composite = w.matrix().mul(p);
        if !composite.mul(&composite).is_identity() {
            return Err(Error::Internal("w∘θ is not an involution".into()));
        }
        let composite_perm = theta_perm.iter().map(|&b| w.perm[b as usize]).collect();
        Ok(TwistedInvolution {
            element: w,
            composite,
            composite_perm,
        })
    }

    pub fn element(&self) -> &WeylElement {
        &self.element
    }

    /// Matrix of `w∘θ` on the ambient space.
    pub fn composite(&self) -> &QMatrix {
        &self.composite
    }

    /// Index of `w∘θ(roots[idx])`.
    pub fn twist_root(&self, idx: usize) -> usize {
        self.composite_perm[idx] as usize
    }

    pub fn twist_permutation(&self) -> &[u32] {
        &self.composite_perm
    }
}

/// `θ w θ = w⁻¹` as permutations of the roots, i.e. `(wθ)² = id`.
fn twisted_on_roots(w: &[u32], theta: &[u32]) -> bool {
    (0..w.len()).all(|b| {
        let once = w[theta[b] as usize] as usize;
        w[theta[once] as usize] as usize == b
    })
}

/// `twisted_involutions`: every `w` with `θ(w) = w⁻¹`, in breadth-first
/// order (length, then lexicographic reduced word).
pub fn twisted_involutions(
    rs: &RootSystem,
    theta: &InvolutionSpec,
    budget: &Budget,
) -> Result<Vec<TwistedInvolution>> {
    let group = WeylGroup::enumerate(rs, budget)?;
    twisted_involutions_in(rs, theta, &group)
}

pub fn twisted_involutions_in(
    rs: &RootSystem,
    theta: &InvolutionSpec,
    group: &WeylGroup,
) -> Result<Vec<TwistedInvolution>> {
    let theta_perm = theta.root_permutation(rs)?;
    group
        .iter()
        .filter(|w| twisted_on_roots(&w.perm, &theta_perm))
        .map(|w| TwistedInvolution::with_theta_perm(rs, theta, &theta_perm, w.clone()))
        .collect()
}
