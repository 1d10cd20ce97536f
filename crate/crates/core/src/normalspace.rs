//! Normal-space characters attached to a twisted involution.
//!
//! For a twisted involution `w` the normal space to the orbit decomposes
//! into eigenspaces indexed by the negative roots `α` with `w∘θ(α)` also
//! negative. [`normal_multiset`] records those roots with multiplicities and
//! the folded vectors `α + w∘θ(α)`; [`sym_eigen_count`] counts monomials in
//! the symmetric algebra whose folded character matches a given one.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chars::CharacterOfT;
use crate::linalg::{QMatrix, Weight};
use crate::pairs::PairSpec;
use crate::rational::q;
use crate::rootsys::RootSystem;
use crate::weyl::{TwistedInvolution, WeylElement};
use crate::{Budget, Error, Result};

/// One root of the support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalEntry {
    /// Index into [`RootSystem::roots`]; always a negative root.
    pub root: usize,
    /// Index of `w∘θ(root)`, also negative.
    pub image: usize,
    /// 0, 1 or 2. Zero-multiplicity roots stay in the support but never
    /// reach the folded vectors.
    pub multiplicity: u8,
    /// Index into [`NormalFiberMultiset::folded_vectors`].
    pub folded: Option<usize>,
}

/// A deduplicated folded vector `v = α + w∘θ(α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedVector {
    pub vector: Weight,
    /// Simple-root coordinates; all `≤ 0`, at least one `< 0`.
    pub simple_coords: Vec<i64>,
    /// Entries (indices into `entries`) producing this vector.
    pub entries: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct NormalFiberMultiset {
    pub w: TwistedInvolution,
    pub entries: Vec<NormalEntry>,
    pub folded_vectors: Vec<FoldedVector>,
}

impl NormalFiberMultiset {
    /// Total multiplicity, i.e. the dimension of the normal space.
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity as usize).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.root).collect()
    }
}

/// Checks that `w` is a twisted involution for the involution of `pair`.
fn check_twisted(pair: &PairSpec, w: &TwistedInvolution) -> Result<()> {
    let rs = pair.root_system();
    let expected = w.element().matrix().mul(pair.theta().matrix());
    let consistent = (0..rs.num_roots())
        .all(|a| w.twist_root(a) == w.element().act_on_root(pair.theta_root(a)));
    if *w.composite() != expected || !consistent {
        return Err(Error::NotTwisted);
    }
    Ok(())
}

/// `normal_multiset`: the support `Σ⁻ ∩ w∘θ(Σ⁻)` with multiplicities.
pub fn normal_multiset(pair: &PairSpec, w: &TwistedInvolution) -> Result<NormalFiberMultiset> {
    check_twisted(pair, w)?;
    let rs = pair.root_system();
    let fixed_mult = pair.theta().mode().fixed_multiplicity();
    let mut entries = Vec::new();
    let mut folded_vectors: Vec<FoldedVector> = Vec::new();
    let mut seen: HashMap<Weight, usize> = HashMap::new();
    for a in rs.num_positive()..rs.num_roots() {
        let img = w.twist_root(a);
        if rs.is_positive(img) {
            continue;
        }
        let multiplicity = if img == a { fixed_mult } else { 1 };
        let folded = if multiplicity == 0 {
            None
        } else {
            let v = &rs.roots()[a] + &rs.roots()[img];
            let next = folded_vectors.len();
            let slot = *seen.entry(v.clone()).or_insert(next);
            if slot == next {
                let simple_coords = folded_simple_coords(rs, a, img);
                folded_vectors.push(FoldedVector {
                    vector: v,
                    simple_coords,
                    entries: Vec::new(),
                });
            }
            folded_vectors[slot].entries.push(entries.len());
            Some(slot)
        };
        entries.push(NormalEntry {
            root: a,
            image: img,
            multiplicity,
            folded,
        });
    }
    Ok(NormalFiberMultiset {
        w: w.clone(),
        entries,
        folded_vectors,
    })
}

fn folded_simple_coords(rs: &RootSystem, a: usize, b: usize) -> Vec<i64> {
    rs.root_coords(a)
        .iter()
        .zip(rs.root_coords(b))
        .map(|(x, y)| x + y)
        .collect()
}

/// `glnOracle`: `I_w = {(i, j) : i > j, w(i) > w(j)}` for an involutive
/// permutation given 0-based.
pub fn gln_oracle(n: usize, w: &[usize]) -> Result<BTreeSet<(usize, usize)>> {
    check_permutation(n, w)?;
    if (0..n).any(|i| w[w[i]] != i) {
        return Err(Error::NotInvolutive(format!("{w:?} does not square to the identity")));
    }
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in 0..i {
            if w[i] > w[j] {
                out.insert((i, j));
            }
        }
    }
    Ok(out)
}

fn check_permutation(n: usize, w: &[usize]) -> Result<()> {
    if w.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: w.len(),
        });
    }
    let mut hit = vec![false; n];
    for &x in w {
        if x >= n {
            return Err(Error::IndexOutOfRange { index: x, bound: n });
        }
        if std::mem::replace(&mut hit[x], true) {
            return Err(Error::Parse(format!("{w:?} is not a permutation")));
        }
    }
    Ok(())
}

/// The Weyl element of `gl_n` permuting coordinates by `w` (0-based):
/// `e_j ↦ e_{w(j)}`.
pub fn gln_element(rs: &RootSystem, w: &[usize]) -> Result<WeylElement> {
    let n = rs.ambient_dim();
    check_permutation(n, w)?;
    let mut rows = vec![vec![q(0); n]; n];
    for (j, &i) in w.iter().enumerate() {
        rows[i][j] = q(1);
    }
    WeylElement::from_matrix(rs, QMatrix::from_rows(rows)?)
}

/// Index of the gl_n root `e_i − e_j` (0-based).
pub fn gln_root(rs: &RootSystem, i: usize, j: usize) -> Option<usize> {
    let n = rs.ambient_dim();
    if i >= n || j >= n || i == j {
        return None;
    }
    rs.root_index(&(&Weight::basis(n, i) - &Weight::basis(n, j)))
}

/// Result of [`sym_eigen_count`]. The counts are upper bounds for the true
/// dimensions: matching folded characters is necessary for equivariance
/// under the full fixed torus, not sufficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenCounts {
    /// `counts[k]` for `k = 0..=k_max`.
    pub counts: Vec<u128>,
}

/// `sym_eigen_count`: for each degree `k ≤ k_max`, the number of monomials
/// of degree `k` in the basis of the normal space (a root of multiplicity 2
/// contributes two basis vectors) whose folded character equals `fold(χ)`.
///
/// Exceeding `budget.max_search_nodes` yields [`Error::SearchBudget`] with
/// the counts found so far, which are then lower bounds.
pub fn sym_eigen_count(
    pair: &PairSpec,
    w: &TwistedInvolution,
    chi: &CharacterOfT,
    k_max: u32,
    budget: &Budget,
) -> Result<EigenCounts> {
    if k_max > budget.max_degree {
        return Err(Error::DegreeBudget {
            requested: k_max,
            budget: budget.max_degree,
        });
    }
    let rs = pair.root_system();
    let theta = pair.theta();
    let target = chi.fold(w, theta)?;
    let s = normal_multiset(pair, w)?;

    // Group basis vectors by their full folded character.
    let mut groups: Vec<(CharacterOfT, u64)> = Vec::new();
    for e in &s.entries {
        if e.multiplicity == 0 {
            continue;
        }
        let f = CharacterOfT::of_root(rs, e.root)?.fold(w, theta)?;
        match groups.iter_mut().find(|(g, _)| *g == f) {
            Some((_, size)) => *size += e.multiplicity as u64,
            None => groups.push((f, e.multiplicity as u64)),
        }
    }

    let mut counts = vec![0u128; k_max as usize + 1];
    if target.is_trivial() {
        counts[0] = 1;
    }
    let target_coords = match rs.simple_coords(&target.lambda_re) {
        Ok(c) => c,
        Err(Error::OutsideRootSpan) => return Ok(EigenCounts { counts }),
        Err(e) => return Err(e),
    };
    if target_coords.iter().any(|c| !c.is_integer() || c.is_positive()) {
        return Ok(EigenCounts { counts });
    }
    let group_coords: Vec<Vec<BigInt>> = groups
        .iter()
        .map(|(g, _)| {
            rs.simple_coords(&g.lambda_re)
                .map(|c| c.iter().map(|x| x.to_integer()).collect())
        })
        .collect::<Result<_>>()?;

    let mut search = EigenSearch {
        groups: &groups,
        coords: &group_coords,
        target: &target,
        k_max: k_max as u64,
        nodes: 0,
        limit: budget.max_search_nodes,
        choice: vec![0; groups.len()],
        counts,
    };
    let remaining: Vec<BigInt> = target_coords.iter().map(|c| c.to_integer()).collect();
    if !search.descend(0, &remaining, 0, 1) {
        return Err(Error::SearchBudget {
            limit: budget.max_search_nodes,
            partial: search.counts,
        });
    }
    Ok(EigenCounts {
        counts: search.counts,
    })
}

struct EigenSearch<'a> {
    groups: &'a [(CharacterOfT, u64)],
    coords: &'a [Vec<BigInt>],
    target: &'a CharacterOfT,
    k_max: u64,
    nodes: u64,
    limit: u64,
    choice: Vec<u64>,
    counts: Vec<u128>,
}

impl EigenSearch<'_> {
    /// Chooses how many basis vectors to take from group `g` onwards.
    /// Returns `false` once the node budget is spent.
    fn descend(&mut self, g: usize, remaining: &[BigInt], degree: u64, weight: u128) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            return false;
        }
        if g == self.groups.len() {
            // Degree 0 is settled by the caller.
            if degree > 0 && remaining.iter().all(Zero::is_zero) && self.matches() {
                let slot = &mut self.counts[degree as usize];
                *slot = slot.saturating_add(weight);
            }
            return true;
        }
        let size = self.groups[g].1;
        let mut rem = remaining.to_vec();
        let mut c = 0u64;
        loop {
            self.choice[g] = c;
            let w = weight.saturating_mul(multisets(size, c));
            if !self.descend(g + 1, &rem, degree + c, w) {
                return false;
            }
            c += 1;
            if degree + c > self.k_max {
                break;
            }
            for (r, x) in rem.iter_mut().zip(&self.coords[g]) {
                *r -= x;
            }
            if rem.iter().any(Signed::is_positive) {
                break;
            }
        }
        self.choice[g] = 0;
        true
    }

    fn matches(&self) -> bool {
        let mut acc = CharacterOfT::trivial(self.target.dim());
        for ((g, _), &c) in self.groups.iter().zip(&self.choice) {
            for _ in 0..c {
                acc = acc.compose(g).expect("same dimension");
            }
        }
        acc == *self.target
    }
}

/// Number of multisets of size `k` drawn from `n` kinds.
fn multisets(n: u64, k: u64) -> u128 {
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    // C(n + k − 1, k)
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = match acc.checked_mul(n as u128 + i) {
            Some(x) => x / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl_pair(n: usize) -> PairSpec {
        PairSpec::galois_split(RootSystem::gl(n).unwrap())
    }

    fn twisted(pair: &PairSpec, perm: &[usize]) -> TwistedInvolution {
        let rs = pair.root_system();
        TwistedInvolution::new(rs, pair.theta(), gln_element(rs, perm).unwrap()).unwrap()
    }

    fn support_pairs(pair: &PairSpec, s: &NormalFiberMultiset) -> BTreeSet<(usize, usize)> {
        let rs = pair.root_system();
        s.support()
            .into_iter()
            .map(|r| {
                let x = rs.roots()[r].coords();
                let i = x.iter().position(|c| c.is_positive()).unwrap();
                let j = x.iter().position(|c| c.is_negative()).unwrap();
                (i, j)
            })
            .collect()
    }

    #[test]
    fn gl3_examples() {
        let pair = gl_pair(3);
        let s = normal_multiset(&pair, &twisted(&pair, &[0, 1, 2])).unwrap();
        assert_eq!(
            support_pairs(&pair, &s),
            BTreeSet::from([(1, 0), (2, 0), (2, 1)])
        );
        assert!(s.entries.iter().all(|e| e.multiplicity == 1));

        let s = normal_multiset(&pair, &twisted(&pair, &[2, 1, 0])).unwrap();
        assert!(s.entries.is_empty());
        assert!(s.folded_vectors.is_empty());

        let s = normal_multiset(&pair, &twisted(&pair, &[1, 0, 2])).unwrap();
        assert_eq!(support_pairs(&pair, &s), BTreeSet::from([(2, 0), (2, 1)]));
        // The two roots form one orbit and share a folded vector.
        assert_eq!(s.folded_vectors.len(), 1);
        assert_eq!(s.folded_vectors[0].entries, vec![0, 1]);
        assert_eq!(s.folded_vectors[0].simple_coords, vec![-1, -2]);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            gln_oracle(3, &[0, 1, 2]).unwrap(),
            BTreeSet::from([(1, 0), (2, 0), (2, 1)])
        );
        assert!(gln_oracle(3, &[2, 1, 0]).unwrap().is_empty());
        assert_eq!(gln_oracle(3, &[1, 0, 2]).unwrap(), BTreeSet::from([(2, 0), (2, 1)]));
        assert!(matches!(gln_oracle(3, &[1, 2, 0]), Err(Error::NotInvolutive(_))));
        assert!(gln_oracle(3, &[0, 0, 1]).is_err());
        assert!(gln_oracle(3, &[0, 1]).is_err());
    }

    #[test]
    fn rejects_foreign_twisted_involution() {
        let pair = gl_pair(3);
        let rs = pair.root_system();
        // Twisted for the transpose-inverse involution but not for the split one.
        let p = QMatrix::from_rows(vec![
            vec![q(0), q(0), q(-1)],
            vec![q(0), q(-1), q(0)],
            vec![q(-1), q(0), q(0)],
        ])
        .unwrap();
        let theta = crate::pairs::InvolutionSpec::new(p, 1, crate::FixedRootMode::LinearPlus).unwrap();
        let s1 = WeylElement::simple_reflection(rs, 0).unwrap();
        let s2 = WeylElement::simple_reflection(rs, 1).unwrap();
        let w = s1.compose(rs, &s2);
        let tw = TwistedInvolution::new(rs, &theta, w).unwrap();
        assert!(matches!(normal_multiset(&pair, &tw), Err(Error::NotTwisted)));
    }

    #[test]
    fn fixed_root_modes() {
        use crate::pairs::{FixedRootMode, InvolutionSpec};
        let rs = RootSystem::gl(2).unwrap();
        for (mode, mult, folded) in [
            (FixedRootMode::Semilinear, 1, 1),
            (FixedRootMode::LinearPlus, 0, 0),
            (FixedRootMode::LinearMinus, 2, 1),
        ] {
            let theta = InvolutionSpec::new(QMatrix::identity(2), 1, mode).unwrap();
            let pair = PairSpec::new(rs.clone(), theta, "test").unwrap();
            let w = TwistedInvolution::new(&rs, pair.theta(), WeylElement::identity(&rs)).unwrap();
            let s = normal_multiset(&pair, &w).unwrap();
            assert_eq!(s.entries.len(), 1);
            assert_eq!(s.entries[0].multiplicity, mult);
            assert_eq!(s.folded_vectors.len(), folded);
            assert_eq!(s.total_multiplicity(), mult as usize);
        }
    }

    #[test]
    fn eigen_counts() {
        let b = Budget::default();
        let pair = gl_pair(3);
        let w0 = twisted(&pair, &[2, 1, 0]);
        let trivial = CharacterOfT::trivial(3);
        assert_eq!(sym_eigen_count(&pair, &w0, &trivial, 0, &b).unwrap().counts, vec![1]);

        let chi = CharacterOfT::from_ints(&[1, 0, -1], &[0, 0, 0], &[0, 0, 0]).unwrap();
        assert_eq!(
            sym_eigen_count(&pair, &w0, &chi, 5, &b).unwrap().counts,
            vec![1, 0, 0, 0, 0, 0]
        );
        let id = twisted(&pair, &[0, 1, 2]);
        let chi = CharacterOfT::from_ints(&[2, 1, 0], &[0, 0, 0], &[0, 0, 0]).unwrap();
        assert_eq!(sym_eigen_count(&pair, &id, &chi, 3, &b).unwrap().counts, vec![0; 4]);

        // Non-dominant characters can be matched: fold(α21) = 2·(−1, 1).
        let pair = gl_pair(2);
        let id = twisted(&pair, &[0, 1]);
        let chi = CharacterOfT::from_ints(&[-1, 1], &[0, 0], &[0, 0]).unwrap();
        assert_eq!(sym_eigen_count(&pair, &id, &chi, 3, &b).unwrap().counts, vec![0, 1, 0, 0]);
        let chi = CharacterOfT::from_ints(&[-2, 2], &[0, 0], &[0, 0]).unwrap();
        assert_eq!(sym_eigen_count(&pair, &id, &chi, 3, &b).unwrap().counts, vec![0, 0, 1, 0]);

        assert!(matches!(
            sym_eigen_count(&pair, &id, &chi, 300, &b),
            Err(Error::DegreeBudget { requested: 300, budget: 256 })
        ));
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(2, 0), 1);
        assert_eq!(multisets(2, 3), 4);
        assert_eq!(multisets(3, 2), 6);
        assert_eq!(multisets(0, 2), 0);
    }
}
