//! Rational powers of a Riordan array.
//!
//! `R^c = sum_j C(c, j) (M - I)^j` where `M` is the leading block of `R`.
//! `M - I` is strictly lower triangular, so the series stops after `N`
//! terms. [`power_pair`] reads the result back as a pair of umbrae.

use serde::Serialize;

use crate::coefficients::{binomial_generalized, factorial, Rational};
use crate::error::Result;
use crate::riordan::{Flavor, RiordanArray, Triangle};
use crate::umbra::Umbra;

type Block = Vec<Vec<Rational>>;

fn identity_block(len: usize) -> Block {
    (0..len)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    if n == k {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn block_mul(a: &Block, b: &Block) -> Block {
    (0..a.len())
        .map(|n| {
            (0..=n)
                .map(|k| (k..=n).map(|j| &a[n][j] * &b[j][k]).sum())
                .collect()
        })
        .collect()
}

fn block_power(m: &Block, c: &Rational) -> Block {
    let len = m.len();
    let mut nil = m.clone();
    for (n, row) in nil.iter_mut().enumerate() {
        row[n] -= &Rational::one();
    }
    let mut out = identity_block(len);
    let mut term = identity_block(len);
    for j in 1..len {
        term = block_mul(&term, &nil);
        let coeff = binomial_generalized(c, j);
        if coeff.is_zero() {
            // c is a non-negative integer below j; every later coefficient vanishes too
            break;
        }
        for (out_row, term_row) in out.iter_mut().zip(&term) {
            for (o, t) in out_row.iter_mut().zip(term_row) {
                *o += &(&coeff * t);
            }
        }
    }
    out
}

/// The `c`-th power of the `(N+1) x (N+1)` block of `r`.
pub fn general_power(r: &RiordanArray, c: &Rational) -> Triangle {
    let m = r
        .triangle(r.order() + 1)
        .expect("full block fits the order");
    let rows = block_power(&m.rows().to_vec(), c);
    Triangle::new(r.flavor(), rows).expect("block shape is preserved")
}

/// The array `(gamma^{+c}, alpha^{++c})` whose triangle is `general_power(r, c)`.
///
/// `gamma^{+c}` is read off column 0 of the power of `r`, and
/// `alpha^{++c}` off column 1 of the power of `(epsilon, alpha)`, which
/// needs one row beyond the truncation order.
pub fn power_pair(r: &RiordanArray, c: &Rational) -> Result<RiordanArray> {
    let order = r.order();
    let flavor = r.flavor();
    let column0 = general_power(r, c).column(0);
    let gamma = Umbra::from_moments(
        column0
            .into_iter()
            .enumerate()
            .map(|(n, e)| match flavor {
                Flavor::Exponential => e,
                Flavor::Ordinary => e * factorial(n),
            })
            .collect(),
    )?;

    // (epsilon, alpha) with N + 2 rows; entries for k >= 1 only need
    // [z^{n-k}] f_alpha^k with n - k <= N.
    let f_alpha = r.alpha().egf();
    let len = order + 2;
    let mut rows: Block = (0..len).map(|n| vec![Rational::zero(); n + 1]).collect();
    rows[0][0] = Rational::one();
    let mut power = f_alpha.clone();
    for k in 1..len {
        if k > 1 {
            power = power.mul(&f_alpha)?;
        }
        for (n, row) in rows.iter_mut().enumerate().skip(k) {
            let raw = power.coeff(n - k).clone();
            row[k] = match flavor {
                Flavor::Exponential => raw * factorial(n) / factorial(k),
                Flavor::Ordinary => raw,
            };
        }
    }
    let powered = block_power(&rows, c);
    let alpha = Umbra::from_moments(
        (0..=order)
            .map(|m| {
                let e = powered[m + 1][1].clone();
                match flavor {
                    Flavor::Exponential => e / Rational::from(m + 1),
                    Flavor::Ordinary => e * factorial(m),
                }
            })
            .collect(),
    )?;
    RiordanArray::new(flavor, gamma, alpha)
}

/// Entries `(n, k)` at which two checks disagree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PowerReport {
    pub order: usize,
    pub mismatches: Vec<(usize, usize)>,
}

impl PowerReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn compare(order: usize, a: &Triangle, b: &Triangle) -> PowerReport {
        let mut mismatches = Vec::new();
        for n in 0..a.len() {
            for k in 0..=n {
                if a.get(n, k) != b.get(n, k) {
                    mismatches.push((n, k));
                }
            }
        }
        PowerReport { order, mismatches }
    }
}

/// `R^{c1 + c2} = R^{c1} R^{c2}` on the full block.
pub fn additivity_check(r: &RiordanArray, c1: &Rational, c2: &Rational) -> PowerReport {
    let sum = general_power(r, &(c1 + c2));
    let product = general_power(r, c1)
        .matmul(&general_power(r, c2))
        .expect("same flavor and size");
    PowerReport::compare(r.order(), &sum, &product)
}

/// Each entry `(n, k)` of `R^c` against the polynomial in `c` interpolated
/// through the integer powers `R^0, ..., R^{n-k}`.
pub fn interpolation_check(r: &RiordanArray, c: &Rational) -> PowerReport {
    let order = r.order();
    let m = r.triangle(order + 1).expect("full block fits the order");
    let mut integer_powers = vec![Triangle::identity(r.flavor(), order + 1)];
    for _ in 0..order {
        let next = integer_powers
            .last()
            .unwrap()
            .matmul(&m)
            .expect("same flavor and size");
        integer_powers.push(next);
    }
    let powered = general_power(r, c);
    let interpolated = Triangle::new(
        r.flavor(),
        (0..=order)
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        let points: Vec<Rational> =
                            (0..=n - k).map(|j| integer_powers[j].get(n, k)).collect();
                        lagrange_at_integers(&points, c)
                    })
                    .collect()
            })
            .collect(),
    )
    .expect("block shape");
    PowerReport::compare(order, &powered, &interpolated)
}

/// Value at `x` of the polynomial through `(j, values[j])`, `j = 0..len`.
fn lagrange_at_integers(values: &[Rational], x: &Rational) -> Rational {
    let len = values.len();
    (0..len)
        .map(|j| {
            let mut w = values[j].clone();
            for i in (0..len).filter(|&i| i != j) {
                let ri = Rational::from(i);
                w = w * (x - &ri) / (Rational::from(j) - ri);
            }
            w
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::binomial;
    use crate::identities::arrays;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn integer_powers_match_products() {
        let r = arrays::stirling2(7);
        let squared = r.multiply(&r).unwrap();
        let cubed = squared.multiply(&r).unwrap();
        assert_eq!(general_power(&r, &q("3")), cubed.triangle(8).unwrap());
        assert_eq!(
            general_power(&r, &q("0")),
            Triangle::identity(Flavor::Exponential, 8)
        );
        assert_eq!(
            general_power(&r, &q("-1")),
            r.inverse().triangle(8).unwrap()
        );
    }

    #[test]
    fn pascal_half_power() {
        let half = q("1/2");
        let t = general_power(&arrays::pascal(6), &half);
        for n in 0..=6 {
            for k in 0..=n {
                let expected = binomial(n as i64, k as i64) * half.pow((n - k) as i64).unwrap();
                assert_eq!(t.get(n, k), expected);
            }
        }
        assert_eq!(
            t.matmul(&t).unwrap(),
            arrays::pascal(6).triangle(7).unwrap()
        );
    }

    #[test]
    fn pair_of_appell_power() {
        let order = 6;
        let gamma = Umbra::named("bell", order).unwrap();
        let r = RiordanArray::exponential(gamma.clone(), Umbra::augmentation(order)).unwrap();
        let c = q("-3/4");
        let p = power_pair(&r, &c).unwrap();
        assert_eq!(p.gamma(), &gamma.dot_rational(&c));
        assert_eq!(p.alpha(), &Umbra::augmentation(order));
    }

    #[test]
    fn pair_matches_block_both_flavors() {
        let c = q("2/3");
        for r in [arrays::stirling1(6), arrays::catalan2(6)] {
            let p = power_pair(&r, &c).unwrap();
            assert_eq!(p.triangle(7).unwrap(), general_power(&r, &c));
        }
        let r = arrays::catalan(5);
        assert_eq!(power_pair(&r, &q("2")).unwrap(), r.multiply(&r).unwrap());
    }

    #[test]
    fn additivity_and_interpolation() {
        let r = arrays::catalan2(6);
        assert!(additivity_check(&r, &q("2/3"), &q("-1/6")).holds());
        assert!(additivity_check(&r, &q("1"), &q("-1")).holds());
        assert!(interpolation_check(&r, &q("-5/7")).holds());
    }

    #[test]
    fn lagrange_reproduces_polynomial() {
        // x^2 - x through x = 0, 1, 2
        let points = [q("0"), q("0"), q("2")];
        assert_eq!(lagrange_at_integers(&points, &q("1/2")), q("-1/4"));
    }
}
