//! Exponential and ordinary Riordan arrays generated by a pair of umbrae.
//!
//! The exponential array `(gamma, alpha)` has entries
//! `C(n,k) E[(gamma + k.alpha)^{n-k}]`, the ordinary array `[gamma, alpha]`
//! has entries `E[(gamma + k.alpha)^{n-k}] / (n-k)!`. Both are computed as
//! coefficients of `f_gamma f_alpha^k`; the pair is the only stored data.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coefficients::{factorial, Rational};
use crate::error::{Error, Result};
use crate::series::Series;
use crate::umbra::Umbra;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Flavor {
    #[serde(rename = "exp")]
    Exponential,
    #[serde(rename = "ord")]
    Ordinary,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Exponential => "exp",
            Flavor::Ordinary => "ord",
        })
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exp" | "exponential" => Ok(Flavor::Exponential),
            "ord" | "ordinary" => Ok(Flavor::Ordinary),
            other => Err(format!("unknown flavor `{other}` (expected exp or ord)")),
        }
    }
}

/// A materialized lower-triangular block: row `n` holds `n + 1` entries.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "TriangleRepr")]
pub struct Triangle {
    flavor: Flavor,
    rows: Vec<Vec<Rational>>,
}

#[derive(Deserialize)]
struct TriangleRepr {
    flavor: Flavor,
    rows: Vec<Vec<Rational>>,
}

impl TryFrom<TriangleRepr> for Triangle {
    type Error = Error;

    fn try_from(repr: TriangleRepr) -> Result<Self> {
        Triangle::new(repr.flavor, repr.rows)
    }
}

impl Triangle {
    pub fn new(flavor: Flavor, rows: Vec<Vec<Rational>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::InvalidTriangle(format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
        }
        Ok(Triangle { flavor, rows })
    }

    pub(crate) fn from_fn(
        flavor: Flavor,
        len: usize,
        mut f: impl FnMut(usize, usize) -> Rational,
    ) -> Self {
        let rows = (0..len)
            .map(|n| (0..=n).map(|k| f(n, k)).collect())
            .collect();
        Triangle { flavor, rows }
    }

    pub fn identity(flavor: Flavor, len: usize) -> Self {
        Triangle::from_fn(flavor, len, |n, k| {
            if n == k {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }

    /// Entry `(n, k)`, zero above the diagonal.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        if k > n {
            Rational::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    pub fn column(&self, k: usize) -> Vec<Rational> {
        (k..self.len()).map(|n| self.rows[n][k].clone()).collect()
    }

    /// True when every diagonal entry is 1.
    pub fn is_unipotent(&self) -> bool {
        self.rows.iter().enumerate().all(|(n, row)| row[n].is_one())
    }

    /// Literal matrix product of two lower-triangular blocks.
    pub fn matmul(&self, other: &Triangle) -> Result<Triangle> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch {
                left: self.flavor,
                right: other.flavor,
            });
        }
        if self.len() != other.len() {
            return Err(Error::OrderMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Triangle::from_fn(self.flavor, self.len(), |n, k| {
            (k..=n)
                .filter(|&i| !self.rows[n][i].is_zero())
                .map(|i| &self.rows[n][i] * &other.rows[i][k])
                .sum()
        }))
    }

    /// Matrix-vector product with the first `len()` entries of `column`.
    pub fn apply(&self, column: &[Rational]) -> Result<Vec<Rational>> {
        if column.len() < self.len() {
            return Err(Error::ColumnTooShort {
                len: column.len(),
                needed: self.len(),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().zip(column).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("triangle serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Triangle> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }

    /// One row per line, entries separated by commas.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|r| r.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Right-aligned columns, one space between them.
    pub fn to_table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|r| r.to_string()).collect())
            .collect();
        let mut widths = vec![0; self.len()];
        for row in &cells {
            for (k, cell) in row.iter().enumerate() {
                widths[k] = widths[k].max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(k, cell)| format!("{cell:>w$}", w = widths[k]))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RiordanArray {
    flavor: Flavor,
    gamma: Umbra,
    alpha: Umbra,
}

impl RiordanArray {
    pub fn new(flavor: Flavor, gamma: Umbra, alpha: Umbra) -> Result<Self> {
        if gamma.order() != alpha.order() {
            return Err(Error::OrderMismatch {
                left: gamma.order(),
                right: alpha.order(),
            });
        }
        Ok(RiordanArray {
            flavor,
            gamma,
            alpha,
        })
    }

    pub fn exponential(gamma: Umbra, alpha: Umbra) -> Result<Self> {
        RiordanArray::new(Flavor::Exponential, gamma, alpha)
    }

    pub fn ordinary(gamma: Umbra, alpha: Umbra) -> Result<Self> {
        RiordanArray::new(Flavor::Ordinary, gamma, alpha)
    }

    /// `(epsilon, epsilon)`, the group unit.
    pub fn identity(flavor: Flavor, order: usize) -> Self {
        let eps = Umbra::augmentation(order);
        RiordanArray {
            flavor,
            gamma: eps.clone(),
            alpha: eps,
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn gamma(&self) -> &Umbra {
        &self.gamma
    }

    pub fn alpha(&self) -> &Umbra {
        &self.alpha
    }

    pub fn order(&self) -> usize {
        self.gamma.order()
    }

    /// The same pair read in the other flavor.
    pub fn with_flavor(&self, flavor: Flavor) -> RiordanArray {
        RiordanArray {
            flavor,
            ..self.clone()
        }
    }

    fn check_compatible(&self, other: &RiordanArray) -> Result<()> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch {
                left: self.flavor,
                right: other.flavor,
            });
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Scales `[z^{n-k}] f_gamma f_alpha^k` into the entry of this flavor.
    fn scale_entry(&self, raw: Rational, n: usize, k: usize) -> Rational {
        match self.flavor {
            Flavor::Ordinary => raw,
            Flavor::Exponential => raw * factorial(n) / factorial(k),
        }
    }

    pub fn entry(&self, n: usize, k: usize) -> Result<Rational> {
        let order = self.order();
        if n > order || k > order {
            return Err(Error::IndexOutOfRange { n, k, order });
        }
        if k > n {
            return Ok(Rational::zero());
        }
        let column = self.gamma.egf().mul(&self.alpha.egf().pow_int(k as i64)?)?;
        Ok(self.scale_entry(column.coeff(n - k).clone(), n, k))
    }

    /// The leading `rows x rows` block; `rows` may not exceed `N + 1`.
    pub fn triangle(&self, rows: usize) -> Result<Triangle> {
        let order = self.order();
        if rows > order + 1 {
            return Err(Error::TooManyRows {
                requested: rows,
                order,
            });
        }
        let f_alpha = self.alpha.egf();
        let mut column = self.gamma.egf();
        let mut cols: Vec<Series> = Vec::with_capacity(rows);
        for k in 0..rows {
            if k > 0 {
                column = column.mul(&f_alpha)?;
            }
            cols.push(column.clone());
        }
        Ok(Triangle::from_fn(self.flavor, rows, |n, k| {
            self.scale_entry(cols[k].coeff(n - k).clone(), n, k)
        }))
    }

    /// Group product in pair form: `(gamma + sigma.beta.d(alpha), alpha +
    /// rho.beta.d(alpha))`, i.e. g.f.s `f_gamma f_sigma(z f_alpha)` and
    /// `f_alpha f_rho(z f_alpha)`.
    pub fn multiply(&self, other: &RiordanArray) -> Result<RiordanArray> {
        self.check_compatible(other)?;
        let gamma = self.gamma.add(&other.gamma.compose(&self.alpha)?)?;
        let alpha = self.alpha.add(&other.alpha.compose(&self.alpha)?)?;
        RiordanArray::new(self.flavor, gamma, alpha)
    }

    /// `(L_{gamma,alpha}, L_alpha)`.
    pub fn inverse(&self) -> RiordanArray {
        let gamma = self.gamma.l_umbra(&self.alpha).expect("same order");
        let alpha = self.alpha.l_alpha();
        RiordanArray {
            flavor: self.flavor,
            gamma,
            alpha,
        }
    }

    /// The action on an umbra: `gamma + eta.beta.d(alpha)`.
    ///
    /// For exponential arrays the moments of the result are the matrix
    /// product with the moment column of `eta`. For ordinary arrays the same
    /// umbra describes the action on the column `eta^k / k!`, with output
    /// column `omega^n / n!`.
    pub fn act(&self, eta: &Umbra) -> Result<Umbra> {
        self.gamma.add(&eta.compose(&self.alpha)?)
    }

    /// `f_gamma(z) g(z f_alpha(z))` for an arbitrary series `g`.
    fn act_series(&self, g: &Series) -> Result<Series> {
        self.gamma.egf().mul(&g.compose(&self.alpha.egf().mul_z())?)
    }

    /// Action on a plain column of numbers, computed through generating
    /// functions. Returns as many entries as the column has, up to `N + 1`.
    pub fn act_column(&self, column: &[Rational]) -> Result<Vec<Rational>> {
        let order = self.order();
        let len = column.len().min(order + 1);
        let exponential = self.flavor == Flavor::Exponential;
        let input = Series::from_fn(order, |k| match column.get(k) {
            Some(a) if k < len && exponential => a / &factorial(k),
            Some(a) if k < len => a.clone(),
            _ => Rational::zero(),
        });
        let out = self.act_series(&input)?;
        Ok((0..len)
            .map(|n| {
                if exponential {
                    out.coeff(n) * factorial(n)
                } else {
                    out.coeff(n).clone()
                }
            })
            .collect())
    }

    /// Row sums `n = 0..=N`, via the action on the all-ones column.
    pub fn row_sums(&self) -> Vec<Rational> {
        let ones = vec![Rational::one(); self.order() + 1];
        self.act_column(&ones).expect("orders agree")
    }

    /// Subgroup membership, tested as equality of moments up to order `N`.
    pub fn classify(&self) -> SubgroupReport {
        let order = self.order();
        let eps = Umbra::augmentation(order);
        let singleton_column: Vec<Rational> = (0..=order)
            .map(|n| {
                if n <= 1 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        SubgroupReport {
            order,
            appell: self.alpha == eps,
            associated: self.gamma == eps,
            bell: self.gamma == self.alpha,
            stochastic: self.row_sums().iter().all(Rational::is_one),
            stabilizes_singleton: self.act_column(&singleton_column).expect("orders agree")
                == singleton_column,
            general_stabilizer: StabilizerCheck::NotChecked,
        }
    }
}

/// Whether membership in `Stab(eta)` was tested for arbitrary `eta`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StabilizerCheck {
    NotChecked,
}

/// Subgroup flags. Each flag means "equivalent at order N": the defining
/// similarity holds for all moments up to the truncation order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SubgroupReport {
    pub order: usize,
    /// `alpha = epsilon`
    pub appell: bool,
    /// `gamma = epsilon`
    pub associated: bool,
    /// `gamma = alpha`
    pub bell: bool,
    /// every row sums to 1, i.e. the array fixes `upsilon`
    pub stochastic: bool,
    /// the array fixes `chi`
    pub stabilizes_singleton: bool,
    pub general_stabilizer: StabilizerCheck,
}
