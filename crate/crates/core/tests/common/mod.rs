//! Oracles and generators shared by the integration tests. Nothing here
//! calls into the solver or multiset code it is used to check.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symspace::langlands::dominant_representative_in;
use symspace::linalg::QMatrix;
use symspace::rootsys::Family;
use symspace::{
    CharacterOfT, FixedRootMode, InvolutionSpec, PairSpec, RootSystem, Weight, WeylGroup, Q,
};

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn matrix(rows: &[&[i64]]) -> QMatrix {
    QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|i| p[p[i]] == i))
        .collect()
}

/// `I_w` straight from its definition.
pub fn inversion_pairs(w: &[usize]) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i > j && w[i] > w[j] {
                out.push((i, j));
            }
        }
    }
    out.sort();
    out
}

/// Every assignment `n ≥ 0` with `Σ n_j ≤ cap` and `Σ n_j v_j = target`.
pub fn brute_force_solutions(vectors: &[Vec<i64>], target: &[i64], cap: u64) -> Vec<Vec<u64>> {
    fn go(
        j: usize,
        left: u64,
        vectors: &[Vec<i64>],
        acc: Vec<i64>,
        cur: &mut Vec<u64>,
        target: &[i64],
        out: &mut Vec<Vec<u64>>,
    ) {
        if j == vectors.len() {
            if acc == target {
                out.push(cur.clone());
            }
            return;
        }
        for n in 0..=left {
            let next: Vec<i64> = acc
                .iter()
                .zip(&vectors[j])
                .map(|(a, x)| a + x * n as i64)
                .collect();
            cur.push(n);
            go(j + 1, left - n, vectors, next, cur, target, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, cap, vectors, vec![0; target.len()], &mut Vec::new(), target, &mut out);
    out.sort();
    out
}

/// `P x` with plain nested loops.
pub fn mat_vec(m: &QMatrix, x: &[Q]) -> Vec<Q> {
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| m.get(i, j) * &x[j]).sum())
        .collect()
}

pub fn mat_vec_int(m: &QMatrix, x: &[BigInt]) -> Vec<Q> {
    let as_q: Vec<Q> = x.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    mat_vec(m, &as_q)
}

/// The pairs exercised by the randomized checks, all of rank at most 3.
pub fn sample_pairs() -> Vec<PairSpec> {
    let split = |f: Family, r: usize| PairSpec::galois_split(RootSystem::of_type(f, r).unwrap());
    let gl_split = |n: usize| PairSpec::galois_split(RootSystem::gl(n).unwrap());
    let mut pairs = vec![
        split(Family::A, 1),
        split(Family::A, 2),
        split(Family::A, 3),
        split(Family::B, 2),
        split(Family::B, 3),
        split(Family::C, 3),
        split(Family::G, 2),
        gl_split(2),
        gl_split(3),
        gl_split(4),
    ];
    // Diagram automorphism of A2, acting on the compact part with a sign.
    let a2 = RootSystem::of_type(Family::A, 2).unwrap();
    let swap = InvolutionSpec::new(matrix(&[&[0, 1], &[1, 0]]), -1, FixedRootMode::Semilinear).unwrap();
    pairs.push(PairSpec::new(a2, swap, "a2-diagram").unwrap());
    // x ↦ (x^T)^{-1} on gl_3 in coordinates: λ ↦ −λ.
    let gl3 = RootSystem::gl(3).unwrap();
    let neg = InvolutionSpec::new(
        matrix(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, -1]]),
        1,
        FixedRootMode::LinearMinus,
    )
    .unwrap();
    pairs.push(PairSpec::new(gl3, neg, "gl3-transpose-inverse").unwrap());
    // The identity involution on B2.
    let b2 = RootSystem::of_type(Family::B, 2).unwrap();
    pairs.push(PairSpec::new(b2, InvolutionSpec::identity(2), "b2-identity").unwrap());
    pairs
}

pub fn random_q(rng: &mut ChaCha8Rng) -> Q {
    let num = rng.gen_range(-6i64..=6);
    let den = [1i64, 1, 1, 2, 3][rng.gen_range(0..5)];
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn random_weight(rng: &mut ChaCha8Rng, dim: usize) -> Weight {
    Weight::new((0..dim).map(|_| random_q(rng)).collect())
}

fn random_ints(rng: &mut ChaCha8Rng, dim: usize) -> Vec<BigInt> {
    (0..dim).map(|_| BigInt::from(rng.gen_range(-4i64..=4))).collect()
}

/// A random character; zero coordinates are favoured so walls get hit.
pub fn random_character(rng: &mut ChaCha8Rng, dim: usize) -> CharacterOfT {
    let sparse = |rng: &mut ChaCha8Rng, w: Weight| {
        Weight::new(
            w.coords()
                .iter()
                .map(|x| if rng.gen_bool(0.3) { q(0) } else { x.clone() })
                .collect(),
        )
    };
    let re = random_weight(rng, dim);
    let re = sparse(rng, re);
    let im = if rng.gen_bool(0.5) {
        Weight::zeros(dim)
    } else {
        random_weight(rng, dim)
    };
    let m = if rng.gen_bool(0.3) {
        vec![BigInt::from(0); dim]
    } else {
        random_ints(rng, dim)
    };
    CharacterOfT::new(re, im, m).unwrap()
}

/// A character with `χ⁻¹ = u∘θ(χ)` for a random twisted involution `u`,
/// built as `y − u∘θ(y)`.
pub fn symmetric_character(
    rng: &mut ChaCha8Rng,
    pair: &PairSpec,
    twisted: &[symspace::TwistedInvolution],
) -> CharacterOfT {
    let dim = pair.root_system().ambient_dim();
    let u = &twisted[rng.gen_range(0..twisted.len())];
    let y = random_character(rng, dim);
    let image = y.theta_act(pair.theta()).unwrap().weyl_act(u.element()).unwrap();
    y.compose(&image.invert()).unwrap()
}

/// Seeded dominant characters for `pair`: half generic, half symmetric.
pub fn dominant_sample(
    rng: &mut ChaCha8Rng,
    pair: &PairSpec,
    group: &WeylGroup,
    twisted: &[symspace::TwistedInvolution],
    count: usize,
) -> Vec<CharacterOfT> {
    let rs = pair.root_system();
    (0..count)
        .map(|k| {
            let raw = if k % 2 == 0 {
                random_character(rng, rs.ambient_dim())
            } else {
                symmetric_character(rng, pair, twisted)
            };
            dominant_representative_in(rs, group, &raw).unwrap().0.into_character()
        })
        .collect()
}
