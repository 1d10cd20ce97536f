//! Seeded random characters for the property-sampling modes.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symspace::langlands::dominant_representative_in;
use symspace::{CharacterOfT, PairSpec, TwistedInvolution, Weight, WeylGroup, Q};

fn small_q(rng: &mut ChaCha8Rng) -> Q {
    let num = rng.gen_range(-6i64..=6);
    let den = [1i64, 1, 2, 3][rng.gen_range(0..4)];
    Q::new(BigInt::from(num), BigInt::from(den))
}

fn random_character(rng: &mut ChaCha8Rng, dim: usize) -> CharacterOfT {
    let re = Weight::new((0..dim).map(|_| small_q(rng)).collect());
    let im = if rng.gen_bool(0.5) {
        Weight::zeros(dim)
    } else {
        Weight::new((0..dim).map(|_| small_q(rng)).collect())
    };
    let m = (0..dim).map(|_| BigInt::from(rng.gen_range(-3i64..=3))).collect();
    CharacterOfT::new(re, im, m).expect("consistent dimensions")
}

/// Dominant characters; every other one is built as `y − u∘θ(y)` so that
/// some orbit is feasible for it.
pub fn dominant_characters(
    rng: &mut ChaCha8Rng,
    pair: &PairSpec,
    group: &WeylGroup,
    twisted: &[TwistedInvolution],
    count: usize,
) -> symspace::Result<Vec<CharacterOfT>> {
    let rs = pair.root_system();
    let dim = rs.ambient_dim();
    (0..count)
        .map(|k| {
            let raw = if k % 2 == 1 && !twisted.is_empty() {
                let u = &twisted[rng.gen_range(0..twisted.len())];
                let y = random_character(rng, dim);
                let image = y.theta_act(pair.theta())?.weyl_act(u.element())?;
                y.compose(&image.invert())?
            } else {
                random_character(rng, dim)
            };
            Ok(dominant_representative_in(rs, group, &raw)?.0.into_character())
        })
        .collect()
}
