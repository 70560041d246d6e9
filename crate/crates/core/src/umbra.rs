//! Umbrae as moment sequences.
//!
//! An [`Umbra`] is identified with its moments `a_0 = 1, a_1, .., a_N`.
//! Every umbral operation used here is evaluated through the exponential
//! generating function `f(z) = sum a_n z^n / n!`: sums of distinct umbrae
//! become Cauchy products, `gamma.alpha` becomes `f_gamma(log f_alpha)`,
//! and `gamma.beta.d(alpha)` becomes `f_gamma(z f_alpha(z))`. Two umbrae with
//! equal moments are interchangeable; whenever a formula needs independent
//! copies (`alpha'`, `alpha''`) the value is simply reused, since only
//! moments of products of uncorrelated factors ever get evaluated.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coefficients::{binomial, factorial, Rational};
use crate::error::{Error, Result};
use crate::series::Series;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Umbra {
    moments: Vec<Rational>,
}

/// The registry of named umbrae.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Named {
    /// `epsilon`, g.f. `1`.
    Augmentation,
    /// `upsilon`, g.f. `e^z`.
    Unity,
    /// `chi`, g.f. `1 + z`.
    Singleton,
    /// `iota`, g.f. `z / (e^z - 1)`.
    Bernoulli,
    /// `beta`, g.f. `e^{e^z - 1}`.
    Bell,
    /// `bar-upsilon`, g.f. `1 / (1 - z)`.
    BooleanUnity,
    /// `varsigma`, moments `n! C_n`.
    Catalan,
    /// `delta^(k)`, g.f. `1 + z^k / k!`.
    Delta(usize),
}

impl Named {
    pub const ALL_SIMPLE: [Named; 7] = [
        Named::Augmentation,
        Named::Unity,
        Named::Singleton,
        Named::Bernoulli,
        Named::Bell,
        Named::BooleanUnity,
        Named::Catalan,
    ];

    pub fn identifier(&self) -> String {
        match self {
            Named::Augmentation => "augmentation".into(),
            Named::Unity => "unity".into(),
            Named::Singleton => "singleton".into(),
            Named::Bernoulli => "bernoulli".into(),
            Named::Bell => "bell".into(),
            Named::BooleanUnity => "boolean-unity".into(),
            Named::Catalan => "catalan".into(),
            Named::Delta(k) => format!("delta({k})"),
        }
    }

    pub fn umbra(&self, order: usize) -> Umbra {
        match self {
            Named::Augmentation => Umbra::augmentation(order),
            Named::Unity => Umbra::unity(order),
            Named::Singleton => Umbra::from_fn(order, |n| {
                if n <= 1 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }),
            Named::Bernoulli => {
                // (e^z - 1) / z has coefficients 1/(n+1)!
                let ratio = Series::from_fn(order, |n| factorial(n + 1).recip().unwrap());
                Umbra::from_egf(&ratio.inverse().expect("constant term is 1"))
                    .expect("constant term is 1")
            }
            Named::Bell => {
                let e = Series::exp_linear(&Rational::one(), order);
                let e_minus_one = e.sub(&Series::one(order)).expect("same order");
                Umbra::from_egf(&e.compose(&e_minus_one).expect("zero constant term"))
                    .expect("constant term is 1")
            }
            Named::BooleanUnity => Umbra::from_fn(order, factorial),
            Named::Catalan => Umbra::from_fn(order, |n| {
                let c = binomial(2 * n as i64, n as i64) / Rational::from(n + 1);
                factorial(n) * c
            }),
            Named::Delta(k) => Umbra::from_fn(order, |n| {
                if n == 0 || n == *k {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }),
        }
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.identifier())
    }
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let named = match s.trim() {
            "augmentation" | "epsilon" | "ε" => Named::Augmentation,
            "unity" | "upsilon" | "υ" => Named::Unity,
            "singleton" | "chi" | "χ" => Named::Singleton,
            "bernoulli" | "iota" | "ι" => Named::Bernoulli,
            "bell" | "beta" | "β" => Named::Bell,
            "boolean-unity" | "bar-upsilon" | "ῡ" => Named::BooleanUnity,
            "catalan" | "varsigma" | "ς" => Named::Catalan,
            other => {
                let k = other
                    .strip_prefix("delta(")
                    .and_then(|rest| rest.strip_suffix(')'))
                    .and_then(|k| k.parse::<usize>().ok())
                    .filter(|&k| k >= 1);
                match k {
                    Some(k) => Named::Delta(k),
                    None => return Err(Error::UnknownUmbra(other.to_string())),
                }
            }
        };
        Ok(named)
    }
}

impl Umbra {
    /// Builds an umbra from its moments; `a_0` must be 1.
    pub fn from_moments(moments: Vec<Rational>) -> Result<Self> {
        match moments.first() {
            Some(a0) if a0.is_one() => Ok(Umbra { moments }),
            Some(a0) => Err(Error::NotNormalized(a0.to_string())),
            None => Err(Error::NotNormalized("nothing".into())),
        }
    }

    fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        let moments: Vec<Rational> = (0..=order).map(f).collect();
        debug_assert!(moments[0].is_one());
        Umbra { moments }
    }

    /// The umbra whose generating function is `f`; `f(0)` must be 1.
    pub fn from_egf(f: &Series) -> Result<Self> {
        let mut fact = Rational::one();
        let moments = f
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= Rational::from(n);
                }
                c * &fact
            })
            .collect();
        Umbra::from_moments(moments)
    }

    pub fn named(name: &str, order: usize) -> Result<Self> {
        Ok(name.parse::<Named>()?.umbra(order))
    }

    pub fn augmentation(order: usize) -> Self {
        Umbra::from_fn(order, |n| {
            if n == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn unity(order: usize) -> Self {
        Umbra::from_fn(order, |_| Rational::one())
    }

    /// The umbra `c.upsilon`, i.e. the scalar `c` itself: moments `c^n`.
    pub fn scalar(c: &Rational, order: usize) -> Self {
        let mut p = Rational::one();
        Umbra::from_fn(order, |n| {
            if n > 0 {
                p *= c;
            }
            p.clone()
        })
    }

    pub fn order(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn moment(&self, n: usize) -> &Rational {
        &self.moments[n]
    }

    pub fn moments(&self) -> &[Rational] {
        &self.moments
    }

    /// Exponential generating function `sum a_n z^n / n!`.
    pub fn egf(&self) -> Series {
        let mut fact = Rational::one();
        Series::from_fn(self.order(), |n| {
            if n > 0 {
                fact *= Rational::from(n);
            }
            &self.moments[n] / &fact
        })
    }

    /// Re-truncates to a smaller order, or fails when asked to extend.
    pub fn truncate(&self, order: usize) -> Result<Umbra> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(Umbra {
            moments: self.moments[..=order].to_vec(),
        })
    }

    fn check_order(&self, other: &Umbra) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// `alpha + gamma` for uncorrelated umbrae: the binomial convolution of
    /// moments.
    pub fn add(&self, other: &Umbra) -> Result<Umbra> {
        Umbra::from_egf(&self.egf().mul(&other.egf())?)
    }

    /// `k.alpha`, generating function `f_alpha^k`.
    pub fn dot_int(&self, k: i64) -> Umbra {
        let f = self.egf().pow_int(k).expect("f_alpha(0) = 1 is invertible");
        Umbra::from_egf(&f).expect("constant term is 1")
    }

    /// `c.alpha` for rational `c`, generating function `f_alpha^c`.
    pub fn dot_rational(&self, c: &Rational) -> Umbra {
        let f = self.egf().pow_rational(c).expect("f_alpha(0) = 1");
        Umbra::from_egf(&f).expect("constant term is 1")
    }

    /// `gamma.alpha` (with `self = gamma`), generating function
    /// `f_gamma(log f_alpha(z))`.
    pub fn dot(&self, alpha: &Umbra) -> Result<Umbra> {
        self.check_order(alpha)?;
        let log_alpha = alpha.egf().log_unit()?;
        Umbra::from_egf(&self.egf().compose(&log_alpha)?)
    }

    /// `alpha.c`, which is similar to `c alpha`: moments `c^n a_n`.
    pub fn times_scalar(&self, c: &Rational) -> Umbra {
        let mut p = Rational::one();
        Umbra::from_fn(self.order(), |n| {
            if n > 0 {
                p *= c;
            }
            &self.moments[n] * &p
        })
    }

    /// The derivative umbra: moments `1, n a_{n-1}`, g.f. `1 + z f(z)`.
    pub fn derivative(&self) -> Umbra {
        Umbra::from_fn(self.order(), |n| {
            if n == 0 {
                Rational::one()
            } else {
                &self.moments[n - 1] * Rational::from(n)
            }
        })
    }

    /// `gamma.beta.d(alpha)` (with `self = gamma`), generating function
    /// `f_gamma(z f_alpha(z))`.
    pub fn compose(&self, alpha: &Umbra) -> Result<Umbra> {
        self.check_order(alpha)?;
        let inner = alpha.egf().mul_z();
        Umbra::from_egf(&self.egf().compose(&inner)?)
    }

    /// `E[gamma (gamma - n.alpha)^{n-1}]`, expanded binomially over
    /// uncorrelated factors (`self = gamma`).
    pub fn abel_moment(&self, alpha: &Umbra, n: usize) -> Result<Rational> {
        if n == 0 {
            return Err(Error::ZeroIndex);
        }
        self.check_order(alpha)?;
        if n > self.order() {
            return Err(Error::IndexOutOfRange {
                n,
                k: 0,
                order: self.order(),
            });
        }
        let shifted = alpha.dot_int(-(n as i64));
        Ok(abel_from(self, &shifted, n))
    }

    /// `K_{gamma,alpha}` with `self = gamma`: moments `gamma (gamma -
    /// n.alpha)^{n-1}`.
    pub fn k_umbra(&self, alpha: &Umbra) -> Result<Umbra> {
        self.check_order(alpha)?;
        let order = self.order();
        let inv = alpha.egf().inverse().expect("f_alpha(0) = 1 is invertible");
        let mut moments = vec![Rational::one()];
        // g.f. of (-n).alpha, built up one factor at a time
        let mut power = Series::one(order);
        for n in 1..=order {
            power = power.mul(&inv)?;
            let shifted = Umbra::from_egf(&power)?;
            moments.push(abel_from(self, &shifted, n));
        }
        Umbra::from_moments(moments)
    }

    /// The Lagrange involution `L_{gamma,alpha} = -1.K_{gamma,alpha}`.
    pub fn l_umbra(&self, alpha: &Umbra) -> Result<Umbra> {
        Ok(self.k_umbra(alpha)?.dot_int(-1))
    }

    /// `K_alpha = K_{alpha,alpha}`.
    pub fn k_alpha(&self) -> Umbra {
        self.k_umbra(self).expect("same order")
    }

    /// `L_alpha = L_{alpha,alpha}`.
    pub fn l_alpha(&self) -> Umbra {
        self.l_umbra(self).expect("same order")
    }

    /// The compositional inverse of `z f_alpha(z)`, computed by series
    /// reversion and, independently, as `z f_{L_alpha}(z)` (the derivative
    /// of the Lagrange involution inverts the derivative of `alpha`). Fails
    /// if the two routes ever disagree.
    pub fn comp_inverse_derivative(&self) -> Result<Series> {
        let reverted = self.egf().mul_z().revert_newton()?;
        let via_involution = self.l_alpha().egf().mul_z();
        if reverted != via_involution {
            return Err(Error::NotRevertible);
        }
        Ok(reverted)
    }
}

/// `sum_j C(n-1, j) gamma^{j+1} shifted^{n-1-j}`, with `shifted = (-n).alpha`.
fn abel_from(gamma: &Umbra, shifted: &Umbra, n: usize) -> Rational {
    (0..n)
        .map(|j| binomial(n as i64 - 1, j as i64) * gamma.moment(j + 1) * shifted.moment(n - 1 - j))
        .sum()
}

#[derive(Serialize, Deserialize)]
struct UmbraRepr {
    moments: Vec<Rational>,
    order: usize,
}

impl Serialize for Umbra {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        UmbraRepr {
            moments: self.moments.clone(),
            order: self.order(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Umbra {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = UmbraRepr::deserialize(deserializer)?;
        if repr.moments.len() != repr.order + 1 {
            return Err(serde::de::Error::custom(format!(
                "order {} needs {} moments, found {}",
                repr.order,
                repr.order + 1,
                repr.moments.len()
            )));
        }
        Umbra::from_moments(repr.moments).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn moments(u: &Umbra, upto: usize) -> Vec<String> {
        u.moments()[..=upto].iter().map(|m| m.to_string()).collect()
    }

    fn named(name: &str, order: usize) -> Umbra {
        Umbra::named(name, order).unwrap()
    }

    #[test]
    fn registry_values() {
        assert_eq!(
            moments(&named("singleton", 5), 5),
            ["1", "1", "0", "0", "0", "0"]
        );
        assert_eq!(
            moments(&named("boolean-unity", 4), 4),
            ["1", "1", "2", "6", "24"]
        );
        assert_eq!(
            moments(&named("bernoulli", 6), 4),
            ["1", "-1/2", "1/6", "0", "-1/30"]
        );
        assert_eq!(
            moments(&named("catalan", 6), 4),
            ["1", "1", "4", "30", "336"]
        );
        assert_eq!(
            moments(&named("bell", 6), 5),
            ["1", "1", "2", "5", "15", "52"]
        );
        assert_eq!(moments(&named("delta(2)", 4), 4), ["1", "0", "1", "0", "0"]);
        assert_eq!(named("χ", 3), named("singleton", 3));
        assert_eq!(
            Umbra::named("gamma", 3),
            Err(Error::UnknownUmbra("gamma".into()))
        );
        assert!(Umbra::named("delta(0)", 3).is_err());
    }

    #[test]
    fn moments_require_unit_constant() {
        assert!(Umbra::from_moments(vec![q("2"), q("1")]).is_err());
        assert!(Umbra::from_moments(vec![]).is_err());
    }

    #[test]
    fn dot_int_examples() {
        let alpha = Umbra::from_moments(vec![q("1"), q("3/2"), q("-1"), q("4")]).unwrap();
        assert_eq!(alpha.dot_int(1), alpha);
        assert_eq!(
            alpha.add(&alpha.dot_int(-1)).unwrap(),
            Umbra::augmentation(3)
        );
        assert_eq!(
            moments(&named("catalan", 3).dot_int(2), 3),
            ["1", "2", "10", "84"]
        );
    }

    #[test]
    fn dot_rational_examples() {
        let alpha = named("bell", 8);
        assert_eq!(alpha.dot_rational(&q("1")), alpha);
        let half = alpha.dot_rational(&q("1/2"));
        assert_eq!(half.dot_int(2), alpha);
        let c = q("-2/3");
        assert_eq!(Umbra::unity(6).dot_rational(&c), Umbra::scalar(&c, 6));
    }

    #[test]
    fn dot_examples() {
        let alpha = Umbra::from_moments(vec![q("1"), q("2"), q("-1/3"), q("5"), q("0")]).unwrap();
        let unity = Umbra::unity(4);
        assert_eq!(unity.dot(&alpha).unwrap(), alpha);
        assert_eq!(alpha.dot(&unity).unwrap(), alpha);
        assert_eq!(
            named("singleton", 7).dot(&named("bell", 7)).unwrap(),
            Umbra::unity(7)
        );
        assert_eq!(
            named("bell", 7).dot(&named("singleton", 7)).unwrap(),
            Umbra::unity(7)
        );
    }

    #[test]
    fn factorial_umbrae() {
        let order = 6;
        let chi = named("singleton", order);
        let bar = named("boolean-unity", order);
        for a in ["3", "-1/2", "2/5"] {
            let a = q(a);
            let alpha = Umbra::scalar(&a, order);
            let fact = alpha.dot(&chi).unwrap();
            let rising = alpha.dot(&bar).unwrap();
            for n in 1..=order {
                let falling: Rational = (0..n).map(|i| &a - Rational::from(i)).product();
                assert_eq!(fact.moment(n), &falling);
                let shifted: Rational = (0..n)
                    .map(|i| &a + Rational::from(n) - Rational::one() - Rational::from(i))
                    .product();
                assert_eq!(rising.moment(n), &shifted);
            }
        }
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(Umbra::augmentation(6).derivative(), named("singleton", 6));
        assert_eq!(
            named("bernoulli", 8).dot_int(-1).derivative(),
            Umbra::unity(8)
        );
        let bar = named("boolean-unity", 8);
        assert_eq!(bar.derivative(), bar);
    }

    #[test]
    fn compose_examples() {
        let gamma = named("bell", 6);
        assert_eq!(gamma.compose(&Umbra::augmentation(6)).unwrap(), gamma);
        let order = 7;
        let composed = named("boolean-unity", order)
            .compose(&named("catalan", order))
            .unwrap();
        // 1 / (1 - z C(z)) = C(z)
        assert_eq!(composed, named("catalan", order));
    }

    #[test]
    fn abel_moment_examples() {
        let gamma = named("bell", 6);
        let eps = Umbra::augmentation(6);
        for n in 1..=6 {
            assert_eq!(gamma.abel_moment(&eps, n).unwrap(), *gamma.moment(n));
        }
        let cat = named("catalan", 6);
        let bar = named("boolean-unity", 6);
        for n in 1..=6 {
            assert_eq!(cat.abel_moment(&cat, n).unwrap(), factorial(n));
            let chi = if n == 1 { q("1") } else { q("0") };
            assert_eq!(bar.abel_moment(&bar, n).unwrap(), chi);
        }
        assert_eq!(gamma.abel_moment(&eps, 0), Err(Error::ZeroIndex));
    }

    #[test]
    fn k_and_l_examples() {
        let order = 8;
        let bar = named("boolean-unity", order);
        assert_eq!(bar.k_alpha(), named("singleton", order));
        let two_cat = named("catalan", order).dot_int(2);
        assert_eq!(two_cat.k_alpha(), named("singleton", order).dot_int(2));
        let l = two_cat.l_alpha();
        let expected = Series::from_fn(order, |n| if n <= 1 { q("1") } else { q("0") })
            .pow_int(-2)
            .unwrap();
        assert_eq!(l.egf(), expected);
        assert_eq!(l.l_alpha(), two_cat);
    }

    #[test]
    fn comp_inverse_examples() {
        assert_eq!(
            Umbra::augmentation(6).comp_inverse_derivative().unwrap(),
            Series::identity(6)
        );
        let order = 7;
        let chi_neg = named("singleton", order)
            .dot(&Umbra::scalar(&q("-1"), order))
            .unwrap();
        assert_eq!(
            chi_neg.egf(),
            Series::from_fn(order, |n| match n {
                0 => q("1"),
                1 => q("-1"),
                _ => q("0"),
            })
        );
        let inv = chi_neg.comp_inverse_derivative().unwrap();
        let catalan_gf = named("catalan", order).egf().mul_z();
        assert_eq!(inv, catalan_gf);
        assert_eq!(chi_neg.l_alpha(), named("catalan", order));
    }

    #[test]
    fn serialized_form() {
        let chi = named("singleton", 2);
        let json = serde_json::to_string(&chi).unwrap();
        assert_eq!(json, r#"{"moments":["1","1","0"],"order":2}"#);
        assert_eq!(serde_json::from_str::<Umbra>(&json).unwrap(), chi);
        assert!(serde_json::from_str::<Umbra>(r#"{"moments":["1","1"],"order":2}"#).is_err());
        assert!(serde_json::from_str::<Umbra>(r#"{"moments":["2"],"order":0}"#).is_err());
    }
}
