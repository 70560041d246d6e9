use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use riordan::{Flavor, Rational, RiordanArray, Series, Umbra};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `p/q` with `|p| <= 4`, `1 <= q <= 3`.
pub fn small_rational(rng: &mut StdRng) -> Rational {
    let p: i64 = rng.random_range(-4..=4);
    let q: i64 = rng.random_range(1..=3);
    Rational::new(p, q).unwrap()
}

pub fn nonzero_rational(rng: &mut StdRng) -> Rational {
    loop {
        let c = small_rational(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn umbra(rng: &mut StdRng, order: usize) -> Umbra {
    let mut moments = vec![Rational::one()];
    moments.extend((0..order).map(|_| small_rational(rng)));
    Umbra::from_moments(moments).unwrap()
}

pub fn array(rng: &mut StdRng, flavor: Flavor, order: usize) -> RiordanArray {
    RiordanArray::new(flavor, umbra(rng, order), umbra(rng, order)).unwrap()
}

/// `z h(z)` with a random unit `h`.
pub fn revertible_series(rng: &mut StdRng, order: usize) -> Series {
    let mut coeffs = vec![Rational::zero(), nonzero_rational(rng)];
    coeffs.extend((2..=order).map(|_| small_rational(rng)));
    Series::new(coeffs)
}
