//! Named, executable identities about the classical arrays.
//!
//! Each identity compares a value produced by the array machinery with one
//! produced by an elementary formula or recurrence from [`elementary`], and
//! records every comparison as a [`Witness`].

use std::fmt;

use serde::Serialize;

use crate::coefficients::{binomial, Rational};
use crate::error::{Error, Result};
use crate::riordan::{RiordanArray, Triangle};
use crate::series::DEFAULT_ORDER;
use crate::sheffer::{sheffer_sequence, umbral_compose, Polynomial};

/// The arrays the catalog is built on.
pub mod arrays {
    use crate::coefficients::Rational;
    use crate::riordan::RiordanArray;
    use crate::umbra::{Named, Umbra};

    fn pair(gamma: Umbra, alpha: Umbra, exponential: bool) -> RiordanArray {
        if exponential {
            RiordanArray::exponential(gamma, alpha).expect("same order")
        } else {
            RiordanArray::ordinary(gamma, alpha).expect("same order")
        }
    }

    fn bell_pair(alpha: Umbra, exponential: bool) -> RiordanArray {
        pair(alpha.clone(), alpha, exponential)
    }

    /// `(upsilon, epsilon)`, entries `C(n,k)`.
    pub fn pascal(order: usize) -> RiordanArray {
        pair(Umbra::unity(order), Umbra::augmentation(order), true)
    }

    /// `[upsilon-bar, upsilon-bar]`, entries `C(n,k)`.
    pub fn pascal_ordinary(order: usize) -> RiordanArray {
        bell_pair(Named::BooleanUnity.umbra(order), false)
    }

    /// `(epsilon, -1.iota)`, Stirling numbers of the second kind.
    pub fn stirling2(order: usize) -> RiordanArray {
        let alpha = Named::Bernoulli.umbra(order).dot_int(-1);
        pair(Umbra::augmentation(order), alpha, true)
    }

    /// `(epsilon, iota.chi)`, signed Stirling numbers of the first kind.
    pub fn stirling1(order: usize) -> RiordanArray {
        let alpha = Named::Bernoulli
            .umbra(order)
            .dot(&Named::Singleton.umbra(order))
            .expect("same order");
        pair(Umbra::augmentation(order), alpha, true)
    }

    /// `[varsigma, varsigma]`, the ballot numbers.
    pub fn catalan(order: usize) -> RiordanArray {
        bell_pair(Named::Catalan.umbra(order), false)
    }

    /// `[2.varsigma, 2.varsigma]`.
    pub fn catalan2(order: usize) -> RiordanArray {
        bell_pair(Named::Catalan.umbra(order).dot_int(2), false)
    }

    /// `[-1.chi, -1.chi]`.
    pub fn inverse_pascal(order: usize) -> RiordanArray {
        bell_pair(Named::Singleton.umbra(order).dot_int(-1), false)
    }

    /// `[chi.-1, chi.-1]`.
    pub fn inverse_catalan(order: usize) -> RiordanArray {
        let alpha = Named::Singleton
            .umbra(order)
            .times_scalar(&Rational::from(-1));
        bell_pair(alpha, false)
    }

    /// `[-2.chi, -2.chi]`.
    pub fn inverse_catalan2(order: usize) -> RiordanArray {
        bell_pair(Named::Singleton.umbra(order).dot_int(-2), false)
    }
}

/// Classical sequences from closed forms and recurrences, with no use of
/// generating functions or arrays.
pub mod elementary {
    use crate::coefficients::{binomial, Rational};
    use crate::sheffer::Polynomial;

    /// `C_0 ..= C_n` from `C(2m,m)/(m+1)`.
    pub fn catalan_numbers(n: usize) -> Vec<Rational> {
        (0..=n)
            .map(|m| binomial(2 * m as i64, m as i64) / Rational::from(m + 1))
            .collect()
    }

    /// `B_0 ..= B_n` via the Bell triangle.
    pub fn bell_numbers(n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::one()];
        let mut row = vec![Rational::one()];
        while out.len() <= n {
            let mut next = vec![row.last().unwrap().clone()];
            for x in &row {
                let v = next.last().unwrap() + x;
                next.push(v);
            }
            out.push(next[0].clone());
            row = next;
        }
        out.truncate(n + 1);
        out
    }

    /// `F_0 ..= F_n` with `F_0 = 0`, `F_1 = 1`.
    pub fn fibonacci(n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(), Rational::one()];
        while out.len() <= n {
            let m = out.len();
            let v = &out[m - 1] + &out[m - 2];
            out.push(v);
        }
        out.truncate(n + 1);
        out
    }

    /// `S(n,k)` for `n <= size` by `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
    pub fn stirling2_table(size: usize) -> Vec<Vec<Rational>> {
        let mut t = vec![vec![Rational::one()]];
        for n in 1..=size {
            let prev = &t[n - 1];
            let row: Vec<Rational> = (0..=n)
                .map(|k| {
                    let stay = prev
                        .get(k)
                        .map_or(Rational::zero(), |x| x * Rational::from(k));
                    let step = if k > 0 {
                        prev[k - 1].clone()
                    } else {
                        Rational::zero()
                    };
                    stay + step
                })
                .collect();
            t.push(row);
        }
        t
    }

    /// Signed `s(n,k)` for `n <= size` by `s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)`.
    pub fn stirling1_table(size: usize) -> Vec<Vec<Rational>> {
        let mut t = vec![vec![Rational::one()]];
        for n in 1..=size {
            let prev = &t[n - 1];
            let row: Vec<Rational> = (0..=n)
                .map(|k| {
                    let stay = prev
                        .get(k)
                        .map_or(Rational::zero(), |x| x * Rational::from(n - 1));
                    let step = if k > 0 {
                        prev[k - 1].clone()
                    } else {
                        Rational::zero()
                    };
                    step - stay
                })
                .collect();
            t.push(row);
        }
        t
    }

    /// `b_0 ..= b_n` from `sum_{j<=m} C(m+1,j) b_j = 0`, so `b_1 = -1/2`.
    pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::one()];
        for m in 1..=n {
            let s: Rational = (0..m)
                .map(|j| binomial(m as i64 + 1, j as i64) * &out[j])
                .sum();
            out.push(-s / Rational::from(m + 1));
        }
        out
    }

    /// Cauchy numbers `sum_k s(n,k)/(k+1)`.
    pub fn cauchy_numbers(n: usize) -> Vec<Rational> {
        stirling1_table(n)
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(k, s)| s / &Rational::from(k + 1))
                    .sum()
            })
            .collect()
    }

    /// The `k`-fold binomial convolution of `seq` with itself; `k = 0`
    /// gives `1, 0, 0, ...`.
    pub fn binomial_convolution_power(seq: &[Rational], k: usize) -> Vec<Rational> {
        let len = seq.len();
        let mut out: Vec<Rational> = (0..len)
            .map(|n| {
                if n == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        for _ in 0..k {
            out = (0..len)
                .map(|n| {
                    (0..=n)
                        .map(|i| binomial(n as i64, i as i64) * &out[i] * &seq[n - i])
                        .sum()
                })
                .collect();
        }
        out
    }

    /// `(x)_n = x (x-1) ... (x-n+1)`.
    pub fn falling_factorial_poly(n: usize) -> Polynomial {
        (0..n).fold(Polynomial::one(), |acc, i| {
            acc.mul(&Polynomial::new(vec![-Rational::from(i), Rational::one()]))
        })
    }

    /// Exponential polynomials by `phi_{n+1} = x sum_j C(n,j) phi_j`.
    pub fn exponential_polys(n: usize) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::one()];
        for m in 0..n {
            let s = (0..=m).fold(Polynomial::zero(), |acc, j| {
                acc.add(&out[j].scale(&binomial(m as i64, j as i64)))
            });
            out.push(s.mul(&Polynomial::monomial(1)));
        }
        out
    }
}

/// One comparison: the input it was made at and the two values.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(input: impl Into<String>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Witness {
            input: input.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub n_max: usize,
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

impl IdentityReport {
    pub fn from_witnesses(name: &str, n_max: usize, witnesses: Vec<Witness>) -> Self {
        let status = if witnesses.iter().all(Witness::holds) {
            Status::Pass
        } else {
            Status::Fail
        };
        IdentityReport {
            name: name.to_string(),
            n_max,
            status,
            witnesses,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| !w.holds())
    }
}

/// Every catalog entry with a one-line statement.
pub const CATALOG: [(&str, &str); 28] = [
    ("pascal-rowsum", "2^n = sum_k C(n,k)"),
    ("pascal-binomial", "(x+1)^n = sum_k C(n,k) x^k"),
    ("stirling-bell", "B_n = sum_k S(n,k)"),
    ("stirling-inverse", "s S = I and x^n = sum_k S(n,k) (x)_k"),
    ("stirling1-altsum", "0 = sum_k s(n,k) for n >= 2"),
    ("stirling2-sheffer", "phi_n(x) = sum_k S(n,k) x^k"),
    ("stirling1-sheffer", "(x)_n = sum_k s(n,k) x^k"),
    (
        "stirling2-colrec",
        "S(n,k) = (1/k) sum_i C(n,i+1) S(n-1-i,k-1)",
    ),
    (
        "stirling2-rowrec",
        "S(n,k) = (n/k) sum_i C(k-1+i,i) C_i S(n-1,k-1+i), C_i Cauchy numbers",
    ),
    (
        "stirling2-rowrec2",
        "S(n,k) = C(n,k) sum_i C^(k)_i S(n-k,i), generalized Cauchy numbers",
    ),
    (
        "stirling1-colrec",
        "s(n,k) = (1/k) sum_i (n)_{i+1}/(i+1) (-1)^i s(n-1-i,k-1)",
    ),
    (
        "stirling1-rowrec",
        "s(n,k) = (n/k) sum_i C(k-1+i,i) b_i s(n-1,k-1+i), b_i Bernoulli numbers",
    ),
    (
        "stirling1-rowrec2",
        "s(n,k) = C(n,k) sum_i b^(k)_i s(n-k,i), generalized Bernoulli numbers",
    ),
    ("ballot-formula", "[s,s](n,k) = (k+1)/(n+1) C(2n-k,n)"),
    ("catalan-rowsum", "C_{n+1} = sum_k [s,s](n,k)"),
    ("catalan-convolution", "C_{n+1} = sum_i C_i C_{n-i}"),
    ("cat2-factor", "[2.s,2.s] = [s,s] [u,u]"),
    ("cat2-entry", "[2.s,2.s](n,k) = (k+1)/(n+1) C(2n+2,n-k)"),
    (
        "cheb-coeffs",
        "s_n(x) = sum_k C(n+k+1,n-k) (-1)^{n-k} x^k and s_n = (x-2) s_{n-1} - s_{n-2}",
    ),
    ("periodic-2", "[2.s,2.s] (1,0,-1,0,...) = (2^n)"),
    ("periodic-3", "[2.s,2.s] (1,1,0,-1,-1,0,...) = (3^n)"),
    ("nat-4n", "4^n = sum_k (k+1)^2/(n+1) C(2n+2,n-k)"),
    ("fib-5n", "5^n = sum_k (k+1)/(n+1) C(2n+2,n-k) F_{2k+2}"),
    (
        "fib-even-inverse",
        "F_{2n+2} = (-1)^n sum_k (C(n+k+2,n-k) - C(n+k+1,n-k-1)) (-5)^k",
    ),
    (
        "fib-odd",
        "F_{2n+1} = (-1)^n sum_k (C(n+k+2,n-k) - C(n+k,n-k-2)) (-5)^k",
    ),
    ("inv-pascal", "[u,u]^-1 = [-1.chi,-1.chi]"),
    (
        "cat2-inverse-factor",
        "[2.s,2.s]^-1 = [-1.chi,-1.chi] [chi.-1,chi.-1] = [-2.chi,-2.chi]",
    ),
    ("cheb-action", "[2.s,2.s] (s_n(x)) = (x^n)"),
];

pub fn catalog() -> Vec<&'static str> {
    CATALOG.iter().map(|(name, _)| *name).collect()
}

pub fn statement(name: &str) -> Option<&'static str> {
    CATALOG.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// The arrays an identity run works with, all at one order.
struct Context {
    order: usize,
    pascal: RiordanArray,
    pascal_ordinary: RiordanArray,
    stirling1: RiordanArray,
    stirling2: RiordanArray,
    catalan: RiordanArray,
    catalan2: RiordanArray,
}

impl Context {
    fn new(order: usize) -> Self {
        Context {
            order,
            pascal: arrays::pascal(order),
            pascal_ordinary: arrays::pascal_ordinary(order),
            stirling1: arrays::stirling1(order),
            stirling2: arrays::stirling2(order),
            catalan: arrays::catalan(order),
            catalan2: arrays::catalan2(order),
        }
    }

    fn block(r: &RiordanArray) -> Triangle {
        r.triangle(r.order() + 1)
            .expect("full block fits the order")
    }
}

/// Runs `name` for `n = 0 ..= n_max` at order `max(16, n_max + 2)`.
pub fn run(name: &str, n_max: usize) -> Result<IdentityReport> {
    let ctx = Context::new(DEFAULT_ORDER.max(n_max + 2));
    run_in(&ctx, name, n_max)
}

fn run_in(ctx: &Context, name: &str, n_max: usize) -> Result<IdentityReport> {
    let witnesses = match name {
        "pascal-rowsum" => pascal_rowsum(ctx, n_max),
        "pascal-binomial" => pascal_binomial(ctx, n_max)?,
        "stirling-bell" => stirling_bell(ctx, n_max),
        "stirling-inverse" => stirling_inverse(ctx, n_max)?,
        "stirling1-altsum" => stirling1_altsum(ctx, n_max),
        "stirling2-sheffer" => stirling2_sheffer(ctx, n_max)?,
        "stirling1-sheffer" => stirling1_sheffer(ctx, n_max)?,
        "stirling2-colrec" => stirling2_colrec(ctx, n_max),
        "stirling2-rowrec" => stirling2_rowrec(ctx, n_max),
        "stirling2-rowrec2" => stirling2_rowrec2(ctx, n_max),
        "stirling1-colrec" => stirling1_colrec(ctx, n_max),
        "stirling1-rowrec" => stirling1_rowrec(ctx, n_max),
        "stirling1-rowrec2" => stirling1_rowrec2(ctx, n_max),
        "ballot-formula" => ballot_formula(ctx, n_max),
        "catalan-rowsum" => catalan_rowsum(ctx, n_max),
        "catalan-convolution" => catalan_convolution(ctx, n_max),
        "cat2-factor" => cat2_factor(ctx, n_max)?,
        "cat2-entry" => cat2_entry(ctx, n_max),
        "cheb-coeffs" => cheb_coeffs(ctx, n_max)?,
        "periodic-2" => periodic(ctx, n_max, 2)?,
        "periodic-3" => periodic(ctx, n_max, 3)?,
        "nat-4n" => nat_4n(ctx, n_max)?,
        "fib-5n" => fib_5n(ctx, n_max)?,
        "fib-even-inverse" => fib_even_inverse(ctx, n_max)?,
        "fib-odd" => fib_odd(n_max),
        "inv-pascal" => inv_pascal(ctx, n_max),
        "cat2-inverse-factor" => cat2_inverse_factor(ctx, n_max)?,
        "cheb-action" => cheb_action(ctx, n_max)?,
        other => return Err(Error::UnknownIdentity(other.to_string())),
    };
    Ok(IdentityReport::from_witnesses(name, n_max, witnesses))
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn c(n: usize, k: i64) -> Rational {
    binomial(n as i64, k)
}

fn at_n(n: usize) -> String {
    format!("n={n}")
}

fn at_nk(n: usize, k: usize) -> String {
    format!("n={n},k={k}")
}

fn render_row(row: &[Rational]) -> String {
    let cells: Vec<String> = row.iter().map(Rational::to_string).collect();
    format!("[{}]", cells.join(","))
}

fn rows_equal(lhs: &Triangle, rhs: &Triangle, n_max: usize, tag: &str) -> Vec<Witness> {
    (0..=n_max)
        .map(|n| {
            Witness::new(
                format!("n={n} ({tag})"),
                render_row(lhs.row(n)),
                render_row(rhs.row(n)),
            )
        })
        .collect()
}

fn row_sum(t: &Triangle, n: usize) -> Rational {
    t.row(n).iter().sum()
}

fn pascal_rowsum(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let sums = ctx.pascal.row_sums();
    (0..=n_max)
        .map(|n| Witness::new(at_n(n), q(2).pow(n as i64).unwrap(), &sums[n]))
        .collect()
}

fn pascal_binomial(ctx: &Context, n_max: usize) -> Result<Vec<Witness>> {
    let seq = sheffer_sequence(&ctx.pascal, n_max)?;
    let x_plus_1 = Polynomial::new(vec![q(1), q(1)]);
    let mut power = Polynomial::one();
    let mut out = Vec::new();
    for (n, s) in seq.iter().enumerate() {
        out.push(Witness::new(at_n(n), &power, s));
        power = power.mul(&x_plus_1);
    }
    Ok(out)
}

fn stirling_bell(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let bell = elementary::bell_numbers(n_max);
    let t = Context::block(&ctx.stirling2);
    (0..=n_max)
        .map(|n| Witness::new(at_n(n), &bell[n], row_sum(&t, n)))
        .collect()
}

fn stirling_inverse(ctx: &Context, n_max: usize) -> Result<Vec<Witness>> {
    let s = Context::block(&ctx.stirling1);
    let big_s = Context::block(&ctx.stirling2);
    let product = s.matmul(&big_s)?;
    let mut out = rows_equal(
        &product,
        &Triangle::identity(s.flavor(), s.len()),
        n_max,
        "s S",
    );
    let falling: Vec<Polynomial> = (0..=n_max)
        .map(elementary::falling_factorial_poly)
        .collect();
    for n in 0..=n_max {
        let rhs = (0..=n).fold(Polynomial::zero(), |acc, k| {
            acc.add(&falling[k].scale(&big_s.get(n, k)))
        });
        out.push(Witness::new(
            format!("n={n} (x^n)"),
            Polynomial::monomial(n),
            rhs,
        ));
    }
    Ok(out)
}

fn stirling1_altsum(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let t = Context::block(&ctx.stirling1);
    (2..=n_max)
        .map(|n| Witness::new(at_n(n), q(0), row_sum(&t, n)))
        .collect()
}

fn stirling2_sheffer(ctx: &Context, n_max: usize) -> Result<Vec<Witness>> {
    let expected = elementary::exponential_polys(n_max);
    let seq = sheffer_sequence(&ctx.stirling2, n_max)?;
    Ok((0..=n_max)
        .map(|n| Witness::new(at_n(n), &expected[n], &seq[n]))
        .collect())
}

fn stirling1_sheffer(ctx: &Context, n_max: usize) -> Result<Vec<Witness>> {
    let seq = sheffer_sequence(&ctx.stirling1, n_max)?;
    Ok((0..=n_max)
        .map(|n| Witness::new(at_n(n), elementary::falling_factorial_poly(n), &seq[n]))
        .collect())
}

/// `lhs` from the array, `rhs(n, k)` from elementary values, `1 <= k <= n`.
fn entrywise(
    r: &RiordanArray,
    n_max: usize,
    mut rhs: impl FnMut(usize, usize) -> Rational,
) -> Vec<Witness> {
    let t = Context::block(r);
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 1..=n {
            out.push(Witness::new(at_nk(n, k), t.get(n, k), rhs(n, k)));
        }
    }
    out
}

fn stirling2_colrec(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let s = elementary::stirling2_table(n_max);
    entrywise(&ctx.stirling2, n_max, |n, k| {
        let sum: Rational = (0..=n - k)
            .map(|i| c(n, i as i64 + 1) * &s[n - 1 - i][k - 1])
            .sum();
        sum / q(k as i64)
    })
}

fn stirling2_rowrec(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let s = elementary::stirling2_table(n_max);
    let cauchy = elementary::cauchy_numbers(n_max);
    entrywise(&ctx.stirling2, n_max, |n, k| {
        let sum: Rational = (0..=n - k)
            .map(|i| c(k - 1 + i, i as i64) * &cauchy[i] * &s[n - 1][k - 1 + i])
            .sum();
        sum * q(n as i64) / q(k as i64)
    })
}

fn stirling2_rowrec2(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let s = elementary::stirling2_table(n_max);
    let cauchy = elementary::cauchy_numbers(n_max);
    entrywise(&ctx.stirling2, n_max, |n, k| {
        let general = elementary::binomial_convolution_power(&cauchy, k);
        let sum: Rational = (0..=n - k).map(|i| &general[i] * &s[n - k][i]).sum();
        c(n, k as i64) * sum
    })
}

fn stirling1_colrec(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let s = elementary::stirling1_table(n_max);
    entrywise(&ctx.stirling1, n_max, |n, k| {
        let sum: Rational = (0..=n - k)
            .map(|i| {
                let falling: Rational = (0..=i).map(|j| q(n as i64 - j as i64)).product();
                let sign = if i % 2 == 0 { q(1) } else { q(-1) };
                falling / q(i as i64 + 1) * sign * &s[n - 1 - i][k - 1]
            })
            .sum();
        sum / q(k as i64)
    })
}

fn stirling1_rowrec(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let s = elementary::stirling1_table(n_max);
    let b = elementary::bernoulli_numbers(n_max);
    entrywise(&ctx.stirling1, n_max, |n, k| {
        let sum: Rational = (0..=n - k)
            .map(|i| c(k - 1 + i, i as i64) * &b[i] * &s[n - 1][k - 1 + i])
            .sum();
        sum * q(n as i64) / q(k as i64)
    })
}

fn stirling1_rowrec2(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let s = elementary::stirling1_table(n_max);
    let b = elementary::bernoulli_numbers(n_max);
    entrywise(&ctx.stirling1, n_max, |n, k| {
        let general = elementary::binomial_convolution_power(&b, k);
        let sum: Rational = (0..=n - k).map(|i| &general[i] * &s[n - k][i]).sum();
        c(n, k as i64) * sum
    })
}

fn ballot_formula(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let t = Context::block(&ctx.catalan);
    let mut out = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            let closed = q(k as i64 + 1) / q(n as i64 + 1) * c(2 * n - k, n as i64);
            out.push(Witness::new(at_nk(n, k), t.get(n, k), closed));
        }
    }
    out
}

fn catalan_rowsum(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let cat = elementary::catalan_numbers(n_max + 1);
    let t = Context::block(&ctx.catalan);
    (0..=n_max)
        .map(|n| Witness::new(at_n(n), &cat[n + 1], row_sum(&t, n)))
        .collect()
}

fn catalan_convolution(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let cat = elementary::catalan_numbers(n_max);
    let t = Context::block(&ctx.catalan);
    (0..=n_max)
        .map(|n| {
            let conv: Rational = (0..=n).map(|i| &cat[i] * &cat[n - i]).sum();
            Witness::new(at_n(n), t.get(n + 1, 1), conv)
        })
        .collect()
}

fn cat2_factor(ctx: &Context, n_max: usize) -> Result<Vec<Witness>> {
    let lhs = Context::block(&ctx.catalan2);
    let rhs = Context::block(&ctx.catalan).matmul(&Context::block(&ctx.pascal_ordinary))?;
    Ok(rows_equal(&lhs, &rhs, n_max, "product"))
}

fn cat2_entry(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let t = Context::block(&ctx.catalan2);
    let mut out = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            let closed = q(k as i64 + 1) / q(n as i64 + 1) * c(2 * n + 2, (n - k) as i64);
            out.push(Witness::new(at_nk(n, k), t.get(n, k), closed));
        }
    }
    out
}

/// `sum_k C(n+k+1,n-k) (-1)^{n-k} x^k`.
fn cheb_closed(n: usize) -> Polynomial {
    Polynomial::new(
        (0..=n)
            .map(|k| {
                let sign = if (n - k).is_multiple_of(2) {
                    q(1)
                } else {
                    q(-1)
                };
                c(n + k + 1, (n - k) as i64) * sign
            })
            .collect(),
    )
}

fn cheb_sequence(ctx: &Context, n_max: usize) -> Result<Vec<Polynomial>> {
    sheffer_sequence(&ctx.catalan2.inverse(), n_max)
}

fn cheb_coeffs(ctx: &Context, n_max: usize) -> Result<Vec<Witness>> {
    let seq = cheb_sequence(ctx, n_max)?;
    let mut out: Vec<Witness> = (0..=n_max)
        .map(|n| Witness::new(format!("n={n} (closed form)"), &seq[n], cheb_closed(n)))
        .collect();
    let x_minus_2 = Polynomial::new(vec![q(-2), q(1)]);
    for n in 0..=n_max {
        let rhs = match n {
            0 => Polynomial::one(),
            1 => x_minus_2.clone(),
            _ => x_minus_2.mul(&seq[n - 1]).sub(&seq[n - 2]),
        };
        out.push(Witness::new(format!("n={n} (recursion)"), &seq[n], rhs));
    }
    Ok(out)
}

/// Periodic column whose image under `[2.s,2.s]` is `(base^n)`.
fn periodic_column(base: i64, len: usize) -> Vec<Rational> {
    let pattern: &[i64] = match base {
        2 => &[1, 0, -1, 0],
        _ => &[1, 1, 0, -1, -1, 0],
    };
    (0..len).map(|i| q(pattern[i % pattern.len()])).collect()
}

fn periodic(ctx: &Context, n_max: usize, base: i64) -> Result<Vec<Witness>> {
    let out = ctx
        .catalan2
        .act_column(&periodic_column(base, ctx.order + 1))?;
    Ok((0..=n_max)
        .map(|n| Witness::new(at_n(n), q(base).pow(n as i64).unwrap(), &out[n]))
        .collect())
}

fn nat_4n(ctx: &Context, n_max: usize) -> Result<Vec<Witness>> {
    let column: Vec<Rational> = (0..=ctx.order).map(|k| q(k as i64 + 1)).collect();
    let image = ctx.catalan2.act_column(&column)?;
    let mut out = Vec::new();
    for n in 0..=n_max {
        let four = q(4).pow(n as i64).unwrap();
        let closed: Rational = (0..=n)
            .map(|k| {
                let k1 = q(k as i64 + 1);
                &k1 * &k1 / q(n as i64 + 1) * c(2 * n + 2, (n - k) as i64)
            })
            .sum();
        out.push(Witness::new(format!("n={n} (formula)"), &four, closed));
        out.push(Witness::new(format!("n={n} (array)"), four, &image[n]));
    }
    Ok(out)
}

fn fib_5n(ctx: &Context, n_max: usize) -> Result<Vec<Witness>> {
    let fib = elementary::fibonacci(2 * ctx.order + 2);
    let column: Vec<Rational> = (0..=ctx.order).map(|k| fib[2 * k + 2].clone()).collect();
    let image = ctx.catalan2.act_column(&column)?;
    let mut out = Vec::new();
    for n in 0..=n_max {
        let five = q(5).pow(n as i64).unwrap();
        let closed: Rational = (0..=n)
            .map(|k| {
                q(k as i64 + 1) / q(n as i64 + 1) * c(2 * n + 2, (n - k) as i64) * &fib[2 * k + 2]
            })
            .sum();
        out.push(Witness::new(format!("n={n} (formula)"), &five, closed));
        out.push(Witness::new(format!("n={n} (array)"), five, &image[n]));
    }
    Ok(out)
}

/// `(-1)^n sum_k (C(n+k+2,n-k) - subtracted(n,k)) (-5)^k`.
fn signed_fib_sum(n: usize, subtracted: impl Fn(usize, usize) -> Rational) -> Rational {
    let sum: Rational = (0..=n)
        .map(|k| (c(n + k + 2, (n - k) as i64) - subtracted(n, k)) * q(-5).pow(k as i64).unwrap())
        .sum();
    if n.is_multiple_of(2) {
        sum
    } else {
        -sum
    }
}

fn fib_even_inverse(ctx: &Context, n_max: usize) -> Result<Vec<Witness>> {
    let fib = elementary::fibonacci(2 * n_max + 2);
    let cheb = cheb_sequence(ctx, n_max)?;
    let mut out = Vec::new();
    for n in 0..=n_max {
        let formula = signed_fib_sum(n, |n, k| {
            binomial((n + k + 1) as i64, n as i64 - k as i64 - 1)
        });
        out.push(Witness::new(
            format!("n={n} (formula)"),
            &fib[2 * n + 2],
            formula,
        ));
        out.push(Witness::new(
            format!("n={n} (s_n(5))"),
            &fib[2 * n + 2],
            cheb[n].eval(&q(5)),
        ));
    }
    Ok(out)
}

fn fib_odd(n_max: usize) -> Vec<Witness> {
    let fib = elementary::fibonacci(2 * n_max + 1);
    (0..=n_max)
        .map(|n| {
            let formula =
                signed_fib_sum(n, |n, k| binomial((n + k) as i64, n as i64 - k as i64 - 2));
            Witness::new(at_n(n), &fib[2 * n + 1], formula)
        })
        .collect()
}

fn inv_pascal(ctx: &Context, n_max: usize) -> Vec<Witness> {
    let inverse = ctx.pascal_ordinary.inverse();
    let expected = arrays::inverse_pascal(ctx.order);
    let mut out = vec![Witness::new(
        "pair",
        pair_repr(&inverse),
        pair_repr(&expected),
    )];
    out.extend(rows_equal(
        &Context::block(&inverse),
        &Context::block(&expected),
        n_max,
        "rows",
    ));
    out
}

fn pair_repr(r: &RiordanArray) -> String {
    format!(
        "{} / {}",
        render_row(r.gamma().moments()),
        render_row(r.alpha().moments())
    )
}

fn cat2_inverse_factor(ctx: &Context, n_max: usize) -> Result<Vec<Witness>> {
    let inverse = ctx.catalan2.inverse();
    let factored =
        arrays::inverse_pascal(ctx.order).multiply(&arrays::inverse_catalan(ctx.order))?;
    let direct = arrays::inverse_catalan2(ctx.order);
    Ok(vec![
        Witness::new("pair (factored)", pair_repr(&inverse), pair_repr(&factored)),
        Witness::new("pair (-2.chi)", pair_repr(&inverse), pair_repr(&direct)),
    ]
    .into_iter()
    .chain(rows_equal(
        &Context::block(&inverse),
        &Context::block(&factored),
        n_max,
        "factored",
    ))
    .chain(rows_equal(
        &Context::block(&inverse),
        &Context::block(&direct),
        n_max,
        "-2.chi",
    ))
    .collect())
}

fn cheb_action(ctx: &Context, n_max: usize) -> Result<Vec<Witness>> {
    let t = Context::block(&ctx.catalan2);
    let composed = umbral_compose(&ctx.catalan2, &ctx.catalan2.inverse(), n_max)?;
    let mut out = Vec::new();
    for n in 0..=n_max {
        let image = (0..=n).fold(Polynomial::zero(), |acc, k| {
            acc.add(&cheb_closed(k).scale(&t.get(n, k)))
        });
        out.push(Witness::new(
            format!("n={n} (closed form)"),
            Polynomial::monomial(n),
            image,
        ));
        out.push(Witness::new(
            format!("n={n} (composition)"),
            Polynomial::monomial(n),
            &composed[n],
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_contents() {
        let names = catalog();
        assert!(names.contains(&"fib-5n"));
        assert!(names.contains(&"nat-4n"));
        assert!(names.len() >= 15);
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert!(statement("ballot-formula").is_some());
    }

    #[test]
    fn every_identity_passes() {
        let ctx = Context::new(12);
        for name in catalog() {
            let report = run_in(&ctx, name, 10).unwrap();
            assert!(report.passed(), "{name}: {:?}", report.failures().next());
        }
    }

    #[test]
    fn nat_4n_witness() {
        let report = run("nat-4n", 2).unwrap();
        assert!(report.passed());
        let w = report
            .witnesses
            .iter()
            .find(|w| w.input == "n=2 (array)")
            .unwrap();
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("16", "16"));
    }

    #[test]
    fn fib_column() {
        let fib = elementary::fibonacci(10);
        let column: Vec<String> = (0..5).map(|k| fib[2 * k + 2].to_string()).collect();
        assert_eq!(column, ["1", "3", "8", "21", "55"]);
        assert!(run("fib-5n", 4).unwrap().passed());
    }

    #[test]
    fn trivial_and_unknown() {
        let report = run("pascal-rowsum", 0).unwrap();
        assert!(report.passed());
        assert_eq!(report.witnesses, [Witness::new("n=0", "1", "1")]);
        assert_eq!(
            run("no-such", 3),
            Err(Error::UnknownIdentity("no-such".into()))
        );
    }

    #[test]
    fn corrupted_array_fails_with_witness() {
        let mut ctx = Context::new(8);
        ctx.catalan = arrays::catalan2(8);
        let report = run_in(&ctx, "ballot-formula", 4).unwrap();
        assert_eq!(report.status, Status::Fail);
        let bad = report.failures().next().unwrap();
        assert_eq!(bad.input, "n=1,k=0");
        assert_ne!(bad.lhs, bad.rhs);
    }

    #[test]
    fn elementary_values() {
        let s = |v: Vec<Rational>| -> Vec<String> { v.iter().map(|x| x.to_string()).collect() };
        assert_eq!(
            s(elementary::bell_numbers(5)),
            ["1", "1", "2", "5", "15", "52"]
        );
        assert_eq!(
            s(elementary::bernoulli_numbers(4)),
            ["1", "-1/2", "1/6", "0", "-1/30"]
        );
        assert_eq!(
            s(elementary::cauchy_numbers(3)),
            ["1", "1/2", "-1/6", "1/4"]
        );
        assert_eq!(
            elementary::stirling2_table(4)[4],
            [q(0), q(1), q(7), q(6), q(1)]
        );
        assert_eq!(elementary::stirling1_table(3)[3], [q(0), q(2), q(-3), q(1)]);
    }

    #[test]
    fn report_json() {
        let report = run("pascal-rowsum", 1).unwrap();
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"name":"pascal-rowsum","n_max":1,"status":"pass","witnesses":[{"input":"n=0","lhs":"1","rhs":"1"},{"input":"n=1","lhs":"2","rhs":"2"}]}"#
        );
    }
}
