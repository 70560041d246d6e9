//! Sheffer sequences: the rows of a Riordan array read as polynomials.
//!
//! `s_n(x) = sum_k R(n,k) x^k`. Umbral composition of two sequences mirrors
//! the matrix product of their arrays, and the Sheffer identity is checked
//! by expanding both sides over a dense `(x, y)` coefficient grid.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coefficients::{binomial, Rational};
use crate::error::{Error, Result};
use crate::riordan::{Flavor, RiordanArray};
use crate::umbra::Umbra;

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, power: usize) -> fmt::Result {
    match power {
        0 => Ok(()),
        1 => f.write_str("x"),
        p => write!(f, "x^{p}"),
    }
}

/// Descending powers, e.g. `x^3 - 3x^2 + 2x`; non-integer coefficients are
/// parenthesized, as in `(1/2)x^2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if power == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write_monomial(f, power)?;
            } else if magnitude.is_integer() {
                write!(f, "{magnitude}")?;
                write_monomial(f, power)?;
            } else {
                write!(f, "({magnitude})")?;
                write_monomial(f, power)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Polynomial::new(Vec::<Rational>::deserialize(deserializer)?))
    }
}

/// Dense bivariate polynomial: `grid[i][j]` is the coefficient of `x^i y^j`.
/// Every instance has the same square bound, fixed at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPolynomial {
    grid: Vec<Vec<Rational>>,
}

impl BiPolynomial {
    /// The zero polynomial with degree at most `bound` in each variable.
    pub fn zero(bound: usize) -> Self {
        BiPolynomial {
            grid: vec![vec![Rational::zero(); bound + 1]; bound + 1],
        }
    }

    pub fn bound(&self) -> usize {
        self.grid.len() - 1
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        &self.grid[i][j]
    }

    pub fn in_x(p: &Polynomial, bound: usize) -> Self {
        let mut out = BiPolynomial::zero(bound);
        for (i, c) in p.coeffs().iter().enumerate() {
            out.grid[i][0] = c.clone();
        }
        out
    }

    pub fn in_y(p: &Polynomial, bound: usize) -> Self {
        let mut out = BiPolynomial::zero(bound);
        for (j, c) in p.coeffs().iter().enumerate() {
            out.grid[0][j] = c.clone();
        }
        out
    }

    pub fn add_scaled(&mut self, other: &BiPolynomial, c: &Rational) {
        for (row, other_row) in self.grid.iter_mut().zip(&other.grid) {
            for (a, b) in row.iter_mut().zip(other_row) {
                if !b.is_zero() {
                    *a += b * c;
                }
            }
        }
    }

    /// Product; terms beyond the bound are dropped, so callers keep degrees
    /// within it.
    pub fn mul(&self, other: &BiPolynomial) -> BiPolynomial {
        let bound = self.bound();
        let mut out = BiPolynomial::zero(bound);
        for (i1, row1) in self.grid.iter().enumerate() {
            for (j1, a) in row1.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=bound - i1 {
                    for j2 in 0..=bound - j1 {
                        let b = &other.grid[i2][j2];
                        if !b.is_zero() {
                            out.grid[i1 + i2][j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}

fn check_rows(r: &RiordanArray, n_max: usize) -> Result<()> {
    if n_max > r.order() {
        return Err(Error::TooManyRows {
            requested: n_max + 1,
            order: r.order(),
        });
    }
    Ok(())
}

/// `s_0 .. s_{n_max}` with `s_n(x) = sum_k R(n,k) x^k`.
pub fn sheffer_sequence(r: &RiordanArray, n_max: usize) -> Result<Vec<Polynomial>> {
    check_rows(r, n_max)?;
    let t = r.triangle(n_max + 1)?;
    Ok(t.rows()
        .iter()
        .map(|row| Polynomial::new(row.clone()))
        .collect())
}

/// `sr_n(x) = sum_k R1(n,k) r_k(x)` where `r` is the sequence of `R2`.
pub fn umbral_compose(
    r1: &RiordanArray,
    r2: &RiordanArray,
    n_max: usize,
) -> Result<Vec<Polynomial>> {
    if r1.flavor() != r2.flavor() {
        return Err(Error::FlavorMismatch {
            left: r1.flavor(),
            right: r2.flavor(),
        });
    }
    if r1.order() != r2.order() {
        return Err(Error::OrderMismatch {
            left: r1.order(),
            right: r2.order(),
        });
    }
    let t = r1.triangle(n_max + 1).map_err(|_| Error::TooManyRows {
        requested: n_max + 1,
        order: r1.order(),
    })?;
    let inner = sheffer_sequence(r2, n_max)?;
    Ok(t.rows()
        .iter()
        .map(|row| {
            row.iter()
                .zip(&inner)
                .fold(Polynomial::zero(), |acc, (c, p)| acc.add(&p.scale(c)))
        })
        .collect())
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ShefferIdentityReport {
    pub flavor: Flavor,
    pub n_max: usize,
    /// Indices `n` at which the two expansions differ.
    pub failures: Vec<usize>,
}

impl ShefferIdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Powers of the substituted variable `z`: `(x + y)^j` for exponential
/// arrays, `sum_i x^i y^{j-i}` for ordinary ones.
fn substituted_powers(flavor: Flavor, n_max: usize) -> Vec<BiPolynomial> {
    (0..=n_max)
        .map(|j| {
            let mut out = BiPolynomial::zero(n_max);
            for i in 0..=j {
                out.grid[i][j - i] = match flavor {
                    Flavor::Exponential => binomial(j as i64, i as i64),
                    Flavor::Ordinary => Rational::one(),
                };
            }
            out
        })
        .collect()
}

/// Checks `s_n(x + y) = sum_k C(n,k) s_k(x) p_{n-k}(y)` (exponential) or
/// `s_n(z) = sum_k s_k(x) p_{n-k}(y)` with `z^k = sum_i x^i y^{k-i}`
/// (ordinary), where `p` is the sequence of `(epsilon, alpha)`.
pub fn sheffer_identity_check(r: &RiordanArray, n_max: usize) -> Result<ShefferIdentityReport> {
    check_rows(r, n_max)?;
    let s = sheffer_sequence(r, n_max)?;
    let associated = RiordanArray::new(
        r.flavor(),
        Umbra::augmentation(r.order()),
        r.alpha().clone(),
    )?;
    let p = sheffer_sequence(&associated, n_max)?;
    let powers = substituted_powers(r.flavor(), n_max);
    let sx: Vec<BiPolynomial> = s.iter().map(|q| BiPolynomial::in_x(q, n_max)).collect();
    let py: Vec<BiPolynomial> = p.iter().map(|q| BiPolynomial::in_y(q, n_max)).collect();

    let mut failures = Vec::new();
    for n in 0..=n_max {
        let mut lhs = BiPolynomial::zero(n_max);
        for (j, c) in s[n].coeffs().iter().enumerate() {
            lhs.add_scaled(&powers[j], c);
        }
        let mut rhs = BiPolynomial::zero(n_max);
        for k in 0..=n {
            let weight = match r.flavor() {
                Flavor::Exponential => binomial(n as i64, k as i64),
                Flavor::Ordinary => Rational::one(),
            };
            rhs.add_scaled(&sx[k].mul(&py[n - k]), &weight);
        }
        if lhs != rhs {
            failures.push(n);
        }
    }
    Ok(ShefferIdentityReport {
        flavor: r.flavor(),
        n_max,
        failures,
    })
}
