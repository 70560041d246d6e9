//! Truncated formal power series over [`Rational`].
//!
//! A [`Series`] of order `N` carries the coefficients of `z^0 .. z^N` and
//! nothing beyond: every operation truncates to `N`, and binary operations
//! refuse operands of different order instead of silently re-truncating.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coefficients::Rational;
use crate::error::{Error, Result};

/// Truncation order used when the caller does not ask for one.
pub const DEFAULT_ORDER: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Builds a series from `z^0 .. z^N` coefficients. Panics on an empty
    /// vector; use [`Series::try_from_coeffs`] for untrusted input.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least a constant term"
        );
        Series { coeffs }
    }

    pub fn try_from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Json(
                "a series needs at least one coefficient".into(),
            ));
        }
        Ok(Series { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series::from_fn(order, |_| Rational::zero())
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    /// The series `z`.
    pub fn identity(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// `e^{cz}`.
    pub fn exp_linear(c: &Rational, order: usize) -> Self {
        let mut term = Rational::one();
        Series::from_fn(order, |n| {
            if n > 0 {
                term = &term * c / Rational::from(n);
            }
            term.clone()
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Re-truncates (or zero-pads) to a new order.
    pub fn with_order(&self, order: usize) -> Series {
        Series::from_fn(order, |n| self.coeffs.get(n).cloned().unwrap_or_default())
    }

    fn check_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(Series::from_fn(self.order(), |n| {
            &self.coeffs[n] + &other.coeffs[n]
        }))
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(Series::from_fn(self.order(), |n| {
            &self.coeffs[n] - &other.coeffs[n]
        }))
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Series) -> Series {
        let order = self.order();
        Series::from_fn(order, |n| {
            (0..=n)
                .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[n - i].is_zero())
                .map(|i| &self.coeffs[i] * &other.coeffs[n - i])
                .sum()
        })
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::from_fn(self.order(), |n| &self.coeffs[n] * c)
    }

    pub fn neg(&self) -> Series {
        Series::from_fn(self.order(), |n| -&self.coeffs[n])
    }

    /// `z * f(z)`, truncated: the top coefficient of `f` falls off.
    pub fn mul_z(&self) -> Series {
        Series::from_fn(self.order(), |n| {
            if n == 0 {
                Rational::zero()
            } else {
                self.coeffs[n - 1].clone()
            }
        })
    }

    /// Formal derivative, kept at order `N`. The top coefficient would need
    /// `[z^{N+1}] f`, which is unknown, so it is left as zero.
    pub fn derivative(&self) -> Series {
        Series::from_fn(self.order(), |n| {
            self.coeffs
                .get(n + 1)
                .map(|c| c * Rational::from(n + 1))
                .unwrap_or_default()
        })
    }

    /// `f(g(z))` as `sum_k f_k g^k`. Requires `g(0) = 0`, so `g^k` starts at
    /// `z^k` and the zero-skipping product gets cheaper as `k` grows.
    pub fn compose(&self, g: &Series) -> Result<Series> {
        self.check_order(g)?;
        if !g.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0",
                found: g.coeffs[0].to_string(),
            });
        }
        let order = self.order();
        let mut acc = Series::constant(self.coeffs[0].clone(), order);
        let mut power = Series::one(order);
        for c in &self.coeffs[1..] {
            power = power.mul_unchecked(g);
            if c.is_zero() {
                continue;
            }
            for (a, p) in acc.coeffs.iter_mut().zip(&power.coeffs) {
                if !p.is_zero() {
                    *a += &(c * p);
                }
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Series> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip()?;
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let s: Rational = (1..=n)
                .filter(|&i| !self.coeffs[i].is_zero())
                .map(|i| &self.coeffs[i] * &out[n - i])
                .sum();
            out.push(-(s * &inv0));
        }
        Ok(Series::new(out))
    }

    /// Formal logarithm of a series with constant term 1, from `n g_n =
    /// n f_n - sum_{k<n} k g_k f_{n-k}`.
    pub fn log_unit(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: "1",
                found: self.coeffs[0].to_string(),
            });
        }
        let mut g = vec![Rational::zero(); self.coeffs.len()];
        for n in 1..=self.order() {
            let mut acc = &self.coeffs[n] * Rational::from(n);
            for k in 1..n {
                if !g[k].is_zero() {
                    acc -= &g[k] * &self.coeffs[n - k] * Rational::from(k);
                }
            }
            g[n] = acc / Rational::from(n);
        }
        Ok(Series::new(g))
    }

    /// Formal exponential of a series with zero constant term, from
    /// `g' = f' g`.
    pub fn exp_zero(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0",
                found: self.coeffs[0].to_string(),
            });
        }
        let mut g = vec![Rational::one()];
        for n in 1..=self.order() {
            let s: Rational = (1..=n)
                .filter(|&k| !self.coeffs[k].is_zero())
                .map(|k| &self.coeffs[k] * &g[n - k] * Rational::from(k))
                .sum();
            g.push(s / Rational::from(n));
        }
        Ok(Series::new(g))
    }

    pub fn pow_int(&self, k: i64) -> Result<Series> {
        if k < 0 {
            return self.inverse()?.pow_int(-k);
        }
        let mut acc = Series::one(self.order());
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(acc)
    }

    /// `f^c = exp(c log f)` for `f(0) = 1`.
    pub fn pow_rational(&self, c: &Rational) -> Result<Series> {
        self.log_unit()?.scale(c).exp_zero()
    }

    fn check_revertible(&self) -> Result<()> {
        if self.order() == 0 {
            return Ok(());
        }
        if !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::NotRevertible);
        }
        Ok(())
    }

    /// Compositional inverse by Newton iteration `g <- g - (f(g) - z) /
    /// f'(g)`, starting from `z / f_1`. Each step doubles the number of
    /// correct coefficients and runs at just that precision.
    pub fn revert_newton(&self) -> Result<Series> {
        self.check_revertible()?;
        let order = self.order();
        if order == 0 {
            return Ok(Series::zero(0));
        }
        let fprime = self.derivative();
        let mut g = Series::identity(order).scale(&self.coeffs[1].recip()?);
        // g agrees with the inverse below z^correct
        let mut correct = 2;
        while correct <= order {
            let prec = (2 * correct - 1).min(order);
            let gp = g.with_order(prec);
            let residual = self
                .with_order(prec)
                .compose(&gp)?
                .sub(&Series::identity(prec))?;
            let slope = fprime.with_order(prec).compose(&gp)?.inverse()?;
            g = gp.sub(&residual.mul_unchecked(&slope))?.with_order(order);
            correct *= 2;
        }
        Ok(g)
    }

    /// Compositional inverse by Lagrange inversion: writing `f = z h(z)`,
    /// `[z^n] g = (1/n) [z^{n-1}] h(z)^{-n}`.
    pub fn revert_lagrange(&self) -> Result<Series> {
        self.check_revertible()?;
        let order = self.order();
        if order == 0 {
            return Ok(Series::zero(0));
        }
        // h = f / z; its top coefficient is never read.
        let h = Series::from_fn(order, |n| {
            self.coeffs.get(n + 1).cloned().unwrap_or_default()
        });
        let h_inv = h.inverse()?;
        let mut power = Series::one(order);
        let mut g = vec![Rational::zero()];
        for n in 1..=order {
            power = power.mul_unchecked(&h_inv);
            g.push(power.coeffs[n - 1].clone() / Rational::from(n));
        }
        Ok(Series::new(g))
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(deserializer)?;
        Series::try_from_coeffs(coeffs).map_err(serde::de::Error::custom)
    }
}
