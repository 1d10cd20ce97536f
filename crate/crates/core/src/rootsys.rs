//! Root systems with exact rational coordinates.
//!
//! Two realizations are provided. The *standard* one works in simple-root
//! coordinates: the ambient space has dimension equal to the rank and the
//! bilinear form is the symmetrized Cartan matrix, normalized so that long
//! roots have squared length 2. The *gl_n* realization places the roots
//! `e_i − e_j` in an `n`-dimensional space with the dot product; the roots
//! span a hyperplane, which is how reductive (non-semisimple) groups enter.
//!
//! Cartan matrices follow the convention `a_ij = 2⟨α_i, α_j⟩ / ⟨α_i, α_i⟩`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::error::check_dim;
use crate::linalg::{is_positive_definite, rank, QMatrix, Root, Weight};
use crate::rational::{q, to_i64, Q};
use crate::{Error, Result};

/// Hard stop for the reflection closure; finite types never get close.
const MAX_ROOTS: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn parse(label: &str) -> Result<Family> {
        Ok(match label.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            other => return Err(Error::InvalidCartan(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// How a root system is specified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CartanSpec {
    Label { family: Family, rank: usize },
    /// Entries are kept rational so that non-integer input can be diagnosed.
    Matrix(Vec<Vec<Q>>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Realization {
    Standard,
    GlN { n: usize },
}

/// Cartan matrix of a labelled finite type.
pub fn cartan_matrix(family: Family, rank: usize) -> Result<Vec<Vec<i64>>> {
    let ok = match family {
        Family::A => rank >= 1,
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 4,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if !ok {
        return Err(Error::InvalidCartan(format!(
            "{family}{rank} is not a finite type"
        )));
    }
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match family {
        Family::A => (0..rank - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (0..rank - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(rank - 2, rank - 1, -1, -2);
        }
        Family::C => {
            (0..rank - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(rank - 2, rank - 1, -2, -1);
        }
        Family::D => {
            (0..rank - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(rank - 3, rank - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..rank - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -3, -1),
    }
    Ok(a)
}

/// Checks a Cartan matrix and returns its integer entries together with the
/// symmetrizing half-lengths `d_i = ⟨α_i, α_i⟩ / 2` (longest root of each
/// component normalized to `d = 1`).
pub fn validate_cartan(matrix: &[Vec<Q>]) -> Result<(Vec<Vec<i64>>, Vec<Q>)> {
    let r = matrix.len();
    if r == 0 {
        return Err(Error::InvalidCartan("empty matrix".into()));
    }
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != r {
            return Err(Error::InvalidCartan(format!(
                "row {} has {} entries, expected {r}",
                i + 1,
                row.len()
            )));
        }
        for (j, x) in row.iter().enumerate() {
            a[i][j] = to_i64(x).ok_or_else(|| {
                Error::InvalidCartan(format!("entry ({}, {}) = {} is not an integer", i + 1, j + 1, crate::rational::format_q(x)))
            })?;
        }
    }
    for i in 0..r {
        if a[i][i] != 2 {
            return Err(Error::InvalidCartan(format!(
                "diagonal entry ({0}, {0}) is {1}, expected 2",
                i + 1,
                a[i][i]
            )));
        }
        for j in 0..r {
            if i == j {
                continue;
            }
            if a[i][j] > 0 {
                return Err(Error::InvalidCartan(format!(
                    "off-diagonal entry ({}, {}) = {} is positive",
                    i + 1,
                    j + 1,
                    a[i][j]
                )));
            }
            if (a[i][j] == 0) != (a[j][i] == 0) {
                return Err(Error::InvalidCartan(format!(
                    "asymmetric zero pattern at ({}, {}) and ({}, {})",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
        }
    }

    // Symmetrize component by component: d_i a_ij = d_j a_ji.
    let mut d: Vec<Option<Q>> = vec![None; r];
    for start in 0..r {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(q(1));
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().expect("visited");
            for j in 0..r {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let dj = &di * q(a[i][j]) / q(a[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        comp.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) if *existing != dj => {
                        return Err(Error::InvalidCartan(
                            "matrix is not symmetrizable".into(),
                        ))
                    }
                    Some(_) => {}
                }
            }
        }
        let max = comp
            .iter()
            .map(|&i| d[i].clone().expect("visited"))
            .max()
            .expect("non-empty component");
        for &i in &comp {
            d[i] = Some(d[i].take().expect("visited") / &max);
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.expect("all visited")).collect();
    let sym = QMatrix::from_rows(
        (0..r)
            .map(|i| (0..r).map(|j| &d[i] * q(a[i][j])).collect())
            .collect(),
    )?;
    if !is_positive_definite(&sym) {
        return Err(Error::InvalidCartan(
            "symmetrized matrix is not positive definite (not of finite type)".into(),
        ));
    }
    Ok((a, d))
}

/// A finite reduced root system in an ambient rational space.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: String,
    realization: Realization,
    ambient_dim: usize,
    simple_roots: Vec<Root>,
    form: QMatrix,
    cartan: Vec<Vec<i64>>,
    /// Positive roots first, then their negatives in the same order.
    roots: Vec<Root>,
    simple_coords: Vec<Vec<i64>>,
    index: HashMap<Root, usize>,
    n_positive: usize,
    gram_inverse: QMatrix,
    coroot_functionals: Vec<Weight>,
    simple_perms: Vec<Vec<u32>>,
    rho2: Weight,
}

impl RootSystem {
    /// `build_root_system`: constructs a root system from a label or Cartan
    /// matrix in the requested realization.
    pub fn build(spec: &CartanSpec, realization: Realization) -> Result<Self> {
        let (a, d) = match spec {
            CartanSpec::Label { family, rank } => {
                let a = cartan_matrix(*family, *rank)?;
                let rows: Vec<Vec<Q>> = a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
                validate_cartan(&rows)?
            }
            CartanSpec::Matrix(m) => validate_cartan(m)?,
        };
        let r = a.len();
        let label = match spec {
            CartanSpec::Label { family, rank } => format!("{family}{rank}"),
            CartanSpec::Matrix(_) => "cartan".to_string(),
        };
        match realization {
            Realization::Standard => {
                let form = QMatrix::from_rows(
                    (0..r)
                        .map(|i| (0..r).map(|j| &d[i] * q(a[i][j])).collect())
                        .collect(),
                )?;
                let simple = (0..r).map(|i| Weight::basis(r, i)).collect();
                Self::from_parts(label, realization, simple, form)
            }
            Realization::GlN { n } => {
                let expected = cartan_matrix(Family::A, n.saturating_sub(1).max(1))?;
                if n < 2 || a != expected {
                    return Err(Error::InvalidCartan(format!(
                        "the gl_n realization with n = {n} needs the Cartan matrix of A{}",
                        n.saturating_sub(1)
                    )));
                }
                Self::gl(n)
            }
        }
    }

    /// Roots `e_i − e_j` of `gl_n` with the Borel of upper-triangular matrices.
    pub fn gl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRootSystem(format!(
                "gl_{n} has no roots; need n ≥ 2"
            )));
        }
        let simple = (0..n - 1)
            .map(|i| &Weight::basis(n, i) - &Weight::basis(n, i + 1))
            .collect();
        Self::from_parts(
            format!("gl_{n}"),
            Realization::GlN { n },
            simple,
            QMatrix::identity(n),
        )
    }

    pub fn of_type(family: Family, rank: usize) -> Result<Self> {
        Self::build(&CartanSpec::Label { family, rank }, Realization::Standard)
    }

    /// Builds the root system generated by `simple` under `form`, checking
    /// every structural invariant on the way.
    pub fn from_parts(
        label: String,
        realization: Realization,
        simple: Vec<Root>,
        form: QMatrix,
    ) -> Result<Self> {
        let dim = form.dim();
        let r = simple.len();
        if r == 0 {
            return Err(Error::InvalidRootSystem("no simple roots".into()));
        }
        for s in &simple {
            check_dim(dim, s.dim())?;
        }
        if form != form.transpose() || !is_positive_definite(&form) {
            return Err(Error::InvalidRootSystem(
                "form must be symmetric positive definite".into(),
            ));
        }
        if rank(&simple) != r {
            return Err(Error::InvalidRootSystem(
                "simple roots are linearly dependent".into(),
            ));
        }
        let ip = |x: &Weight, y: &Weight| x.dot(&form.apply_unchecked(y));
        let gram = QMatrix::from_rows(
            simple
                .iter()
                .map(|x| simple.iter().map(|y| ip(x, y)).collect())
                .collect(),
        )?;
        let gram_inverse = gram.inverse().ok_or_else(|| {
            Error::InvalidRootSystem("simple roots have a singular Gram matrix".into())
        })?;
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let c = q(2) * gram.get(i, j) / gram.get(i, i);
                cartan[i][j] = to_i64(&c).ok_or_else(|| {
                    Error::InvalidRootSystem(format!(
                        "Cartan number for simple roots {} and {} is not an integer",
                        i + 1,
                        j + 1
                    ))
                })?;
            }
        }
        let coroot_functionals: Vec<Weight> = simple
            .iter()
            .enumerate()
            .map(|(i, a)| form.apply_unchecked(a).scale(&(q(2) / gram.get(i, i))))
            .collect();
        let reflect = |i: usize, x: &Weight| -> Weight {
            let c = coroot_functionals[i].dot(x);
            x - &simple[i].scale(&c)
        };

        // Reflection closure of the simple roots.
        let mut seen: HashMap<Root, ()> = HashMap::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for s in &simple {
            if seen.insert(s.clone(), ()).is_none() {
                queue.push_back(s.clone());
            }
        }
        let mut all = Vec::new();
        while let Some(x) = queue.pop_front() {
            for i in 0..r {
                let y = reflect(i, &x);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
            all.push(x);
            if all.len() > MAX_ROOTS {
                return Err(Error::InvalidRootSystem(
                    "reflection closure does not terminate (not of finite type)".into(),
                ));
            }
        }

        // Simple-root coordinates; every root must be a same-signed integer combination.
        let coords_of = |x: &Weight| -> Vec<Q> {
            let pairings = Weight(simple.iter().map(|s| ip(x, s)).collect());
            gram_inverse.apply_unchecked(&pairings).0
        };
        let mut positive: Vec<(Root, Vec<i64>)> = Vec::new();
        for x in &all {
            let c = coords_of(x);
            let ints: Option<Vec<i64>> = c.iter().map(to_i64).collect();
            let ints = ints.ok_or_else(|| {
                Error::InvalidRootSystem(format!("root {x} is not in the root lattice"))
            })?;
            let pos = ints.iter().all(|&v| v >= 0);
            let neg = ints.iter().all(|&v| v <= 0);
            if !pos && !neg {
                return Err(Error::InvalidRootSystem(format!(
                    "root {x} is neither positive nor negative"
                )));
            }
            if pos {
                positive.push((x.clone(), ints));
            }
        }
        positive.sort_by(|(_, a), (_, b)| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_positive = positive.len();
        if 2 * n_positive != all.len() {
            return Err(Error::InvalidRootSystem(
                "root set is not the disjoint union of Σ⁺ and −Σ⁺".into(),
            ));
        }
        let mut roots = Vec::with_capacity(all.len());
        let mut simple_coords = Vec::with_capacity(all.len());
        for (x, c) in &positive {
            roots.push(x.clone());
            simple_coords.push(c.clone());
        }
        for (x, c) in &positive {
            roots.push(-x);
            simple_coords.push(c.iter().map(|v| -v).collect());
        }
        let index: HashMap<Root, usize> =
            roots.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        if index.len() != roots.len() {
            return Err(Error::InvalidRootSystem("duplicate roots".into()));
        }

        // Crystallographic condition on all pairs.
        let sq: Vec<Q> = roots.iter().map(|x| ip(x, x)).collect();
        for (i, x) in roots.iter().enumerate().take(n_positive) {
            for (j, y) in roots.iter().enumerate().take(n_positive) {
                let c = q(2) * ip(x, y) / &sq[j];
                if !c.is_integer() {
                    return Err(Error::InvalidRootSystem(format!(
                        "Cartan number of roots {} and {} is not an integer",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }

        let mut simple_perms = Vec::with_capacity(r);
        for i in 0..r {
            let perm: Option<Vec<u32>> = roots
                .iter()
                .map(|x| index.get(&reflect(i, x)).map(|&k| k as u32))
                .collect();
            simple_perms.push(perm.ok_or_else(|| {
                Error::InvalidRootSystem("root set not closed under a simple reflection".into())
            })?);
        }

        let sum_pos = roots[..n_positive]
            .iter()
            .fold(Weight::zeros(dim), |acc, x| &acc + x);
        let rho2 = sum_pos.scale(&q(2));

        Ok(RootSystem {
            label,
            realization,
            ambient_dim: dim,
            simple_roots: simple,
            form,
            cartan,
            roots,
            simple_coords,
            index,
            n_positive,
            gram_inverse,
            coroot_functionals,
            simple_perms,
            rho2,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn realization(&self) -> Realization {
        self.realization
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    pub fn simple_root(&self, i: usize) -> Result<&Root> {
        self.simple_roots.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            bound: self.rank(),
        })
    }

    /// All roots: positive roots ordered by height, then their negatives.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_positive]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_positive
    }

    pub fn form(&self) -> &QMatrix {
        &self.form
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Twice the sum of the positive roots: the differential of the modular
    /// character of the Borel on the split part, each restricted root space
    /// being two-dimensional over ℝ.
    pub fn rho2(&self) -> &Weight {
        &self.rho2
    }

    pub fn root_index(&self, x: &Weight) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.n_positive
    }

    /// Index of `−roots[idx]`.
    pub fn negate(&self, idx: usize) -> usize {
        if idx < self.n_positive {
            idx + self.n_positive
        } else {
            idx - self.n_positive
        }
    }

    /// Coordinates of `roots[idx]` in the basis of simple roots.
    pub fn root_coords(&self, idx: usize) -> &[i64] {
        &self.simple_coords[idx]
    }

    pub(crate) fn simple_perm(&self, i: usize) -> &[u32] {
        &self.simple_perms[i]
    }

    pub(crate) fn coroot_functional(&self, i: usize) -> &Weight {
        &self.coroot_functionals[i]
    }

    /// The invariant bilinear form `⟨x, y⟩`.
    pub fn inner_product(&self, x: &Weight, y: &Weight) -> Result<Q> {
        check_dim(self.ambient_dim, x.dim())?;
        check_dim(self.ambient_dim, y.dim())?;
        Ok(x.dot(&self.form.apply_unchecked(y)))
    }

    pub(crate) fn ip(&self, x: &Weight, y: &Weight) -> Q {
        x.dot(&self.form.apply_unchecked(y))
    }

    /// Simple reflection `s_i(x) = x − 2⟨x, α_i⟩/⟨α_i, α_i⟩ · α_i`.
    pub fn reflect(&self, i: usize, x: &Weight) -> Result<Weight> {
        self.simple_root(i)?;
        check_dim(self.ambient_dim, x.dim())?;
        let c = self.coroot_functionals[i].dot(x);
        Ok(x - &self.simple_roots[i].scale(&c))
    }

    /// Orthogonal projection onto the span of the roots.
    pub fn project_to_root_span(&self, x: &Weight) -> Result<Weight> {
        let c = self.span_coords(x)?;
        Ok(self
            .simple_roots
            .iter()
            .zip(&c)
            .fold(Weight::zeros(self.ambient_dim), |acc, (a, ci)| &acc + &a.scale(ci)))
    }

    /// Simple-root coordinates of the projection of `x` onto the root span.
    fn span_coords(&self, x: &Weight) -> Result<Vec<Q>> {
        check_dim(self.ambient_dim, x.dim())?;
        let pairings = Weight(self.simple_roots.iter().map(|s| self.ip(x, s)).collect());
        Ok(self.gram_inverse.apply_unchecked(&pairings).0)
    }

    /// Coordinates of `x` in the basis of simple roots; `x` must lie in
    /// their span.
    pub fn simple_coords(&self, x: &Weight) -> Result<Vec<Q>> {
        let c = self.span_coords(x)?;
        let back = self
            .simple_roots
            .iter()
            .zip(&c)
            .fold(Weight::zeros(self.ambient_dim), |acc, (a, ci)| &acc + &a.scale(ci));
        if &back != x {
            return Err(Error::OutsideRootSpan);
        }
        Ok(c)
    }

    /// Dimension of the span of all roots (the semisimple rank).
    pub fn root_span_dim(&self) -> usize {
        self.rank()
    }

    /// Connected components of the Dynkin diagram, as sets of simple indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let r = self.rank();
        let mut seen = vec![false; r];
        let mut out = Vec::new();
        for s in 0..r {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for j in 0..r {
                    if !seen[j] && self.cartan[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Order of the Weyl group, from the classification of each component.
    pub fn weyl_order(&self) -> Result<u128> {
        let mut order: u128 = 1;
        for comp in self.components() {
            let r = comp.len();
            let members: Vec<usize> = (0..self.n_positive)
                .filter(|&k| {
                    self.simple_coords[k]
                        .iter()
                        .enumerate()
                        .any(|(i, &c)| c != 0 && comp.contains(&i))
                })
                .collect();
            let n_roots = 2 * members.len();
            let first = self.ip(&self.roots[members[0]], &self.roots[members[0]]);
            let simply_laced = members
                .iter()
                .all(|&k| self.ip(&self.roots[k], &self.roots[k]) == first);
            let fact = |n: usize| (1..=n as u128).product::<u128>();
            let comp_order = match (simply_laced, r, n_roots) {
                (true, r, n) if n == r * (r + 1) => fact(r + 1),
                (true, r, n) if r >= 4 && n == 2 * r * (r - 1) => (1u128 << (r - 1)) * fact(r),
                (true, 6, 72) => 51_840,
                (true, 7, 126) => 2_903_040,
                (true, 8, 240) => 696_729_600,
                (false, 2, 12) => 12,
                (false, 4, 48) => 1152,
                (false, r, n) if n == 2 * r * r => (1u128 << r) * fact(r),
                _ => {
                    return Err(Error::Internal(format!(
                        "unclassified component of rank {r} with {n_roots} roots"
                    )))
                }
            };
            order *= comp_order;
        }
        Ok(order)
    }

    /// `standard_parabolic`: the data of the standard parabolic attached to
    /// a subset `subset` of simple-root indices.
    pub fn standard_parabolic(&self, subset: &[usize]) -> Result<ParabolicDatum> {
        let r = self.rank();
        let f: BTreeSet<usize> = subset.iter().copied().collect();
        if let Some(&bad) = f.iter().find(|&&i| i >= r) {
            return Err(Error::IndexOutOfRange { index: bad, bound: r });
        }
        let in_span =
            |k: usize| self.simple_coords[k].iter().enumerate().all(|(i, &c)| c == 0 || f.contains(&i));
        let sigma: Vec<usize> = (0..self.num_roots()).filter(|&k| in_span(k)).collect();
        let n_f: Vec<usize> = (0..self.n_positive).filter(|&k| !in_span(k)).collect();
        let n_mf: Vec<usize> = (0..self.n_positive).filter(|&k| in_span(k)).collect();
        let sigma_vectors: Vec<Weight> = sigma.iter().map(|&k| self.roots[k].clone()).collect();
        let levi_rank = rank(&sigma_vectors);
        Ok(ParabolicDatum {
            subset: f.into_iter().collect(),
            sigma,
            n_f,
            n_mf,
            a_f_dim: self.root_span_dim() - levi_rank,
            a_mf_dim: levi_rank,
        })
    }

    /// All `2^rank` standard parabolics, ordered by the bitmask of `F`.
    pub fn all_parabolics(&self) -> Vec<ParabolicDatum> {
        let r = self.rank();
        (0u64..1 << r)
            .map(|mask| {
                let subset: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
                self.standard_parabolic(&subset).expect("indices in range")
            })
            .collect()
    }

    /// `true` iff every simple coordinate of `x` (which must lie in the root
    /// span) is `≤ 0`.
    pub fn is_nonpositive_combination(&self, x: &Weight) -> Result<bool> {
        Ok(self.simple_coords(x)?.iter().all(|c| !c.is_positive()))
    }

    /// Human-readable name of a root: `α(i,j)` (1-based) in the gl_n
    /// realization, simple-root coordinates otherwise.
    pub fn root_name(&self, idx: usize) -> String {
        match self.realization {
            Realization::GlN { .. } => {
                let x = &self.roots[idx].0;
                let i = x.iter().position(|c| c.is_positive()).unwrap_or(0);
                let j = x.iter().position(|c| c.is_negative()).unwrap_or(0);
                format!("a({},{})", i + 1, j + 1)
            }
            Realization::Standard => {
                let c: Vec<String> = self.simple_coords[idx].iter().map(i64::to_string).collect();
                format!("[{}]", c.join(","))
            }
        }
    }

    pub(crate) fn zero_weight(&self) -> Weight {
        Weight::zeros(self.ambient_dim)
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.realization == other.realization
            && self.simple_roots == other.simple_roots
            && self.form == other.form
    }
}

impl Eq for RootSystem {}

/// Standard parabolic subgroup `Q_F` in combinatorial form. Root sets are
/// given as indices into [`RootSystem::roots`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicDatum {
    /// `F`, a subset of simple-root indices.
    pub subset: Vec<usize>,
    /// `Σ_F`: roots in the span of `F`.
    pub sigma: Vec<usize>,
    /// Positive roots outside `Σ_F` (the nilradical `n_F`).
    pub n_f: Vec<usize>,
    /// Positive roots inside `Σ_F` (`n_{M,F}`).
    pub n_mf: Vec<usize>,
    /// `dim a_F` inside the root span.
    pub a_f_dim: usize,
    pub a_mf_dim: usize,
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (rank {}, ambient dimension {}, {} roots)",
            self.label,
            self.rank(),
            self.ambient_dim,
            self.num_roots()
        )
    }
}
