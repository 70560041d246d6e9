//! The A-sequence and the three entry recursions of a Riordan array.
//!
//! For `1 <= k <= n`, with `K = K_alpha` (the A-sequence umbra):
//!
//! | rule      | exponential                                                  | ordinary                                   |
//! |-----------|--------------------------------------------------------------|--------------------------------------------|
//! | `colrec`  | `(n/k) sum_i C(n-1,i) alpha^i R(n-1-i, k-1)`                 | `sum_i alpha^i/i! R(n-1-i, k-1)`           |
//! | `rowrec`  | `(n/k) sum_i C(k-1+i,i) K^i R(n-1, k-1+i)`                   | `sum_i K^i/i! R(n-1, k-1+i)`               |
//! | `rowrec2` | `C(n,k) sum_i (k.K)^i R(n-k, i)`                             | `sum_i (k.K)^i/i! R(n-k, i)`               |
//!
//! with `i` running over `0..=n-k`. Each check returns every summand so a
//! failure can be traced to the offending term.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coefficients::{binomial, factorial, Rational};
use crate::error::{Error, Result};
use crate::riordan::{Flavor, RiordanArray, Triangle};
use crate::umbra::Umbra;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    ColRec,
    RowRec,
    RowRec2,
}

impl Rule {
    pub const ALL: [Rule; 3] = [Rule::ColRec, Rule::RowRec, Rule::RowRec2];
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::ColRec => "colrec",
            Rule::RowRec => "rowrec",
            Rule::RowRec2 => "rowrec2",
        })
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "colrec" => Ok(Rule::ColRec),
            "rowrec" => Ok(Rule::RowRec),
            "rowrec2" => Ok(Rule::RowRec2),
            other => Err(format!("unknown rule `{other}` (colrec, rowrec, rowrec2)")),
        }
    }
}

/// Both sides of one recursion instance.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RecursionReport {
    pub rule: Rule,
    pub n: usize,
    pub k: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    pub terms: Vec<Rational>,
}

impl RecursionReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// The A-sequence of an array: the umbra `K_alpha`.
pub fn a_sequence(r: &RiordanArray) -> Umbra {
    r.alpha().k_alpha()
}

/// Precomputes the triangle and the A-sequence once so that many `(n, k)`
/// instances can be checked cheaply.
pub struct RecursionChecker<'a> {
    array: &'a RiordanArray,
    triangle: Triangle,
    a_seq: Umbra,
    a_seq_powers: Vec<Option<Umbra>>,
}

impl<'a> RecursionChecker<'a> {
    pub fn new(array: &'a RiordanArray) -> Self {
        let order = array.order();
        RecursionChecker {
            array,
            triangle: array
                .triangle(order + 1)
                .expect("full block fits the order"),
            a_seq: a_sequence(array),
            a_seq_powers: vec![None; order + 1],
        }
    }

    /// Moments of `k.K_alpha`, via integer powers of the A-sequence g.f.
    fn a_seq_power(&mut self, k: usize) -> &Umbra {
        let a_seq = &self.a_seq;
        self.a_seq_powers[k].get_or_insert_with(|| a_seq.dot_int(k as i64))
    }

    pub fn check(&mut self, rule: Rule, n: usize, k: usize) -> Result<RecursionReport> {
        let order = self.array.order();
        if k == 0 || k > n {
            return Err(Error::RecursionIndex { n, k });
        }
        if n > order {
            return Err(Error::IndexOutOfRange { n, k, order });
        }
        let exponential = self.array.flavor() == Flavor::Exponential;
        let span = n - k;
        let nq = Rational::from(n);
        let kq = Rational::from(k);
        let terms: Vec<Rational> = match rule {
            Rule::ColRec => {
                let alpha = self.array.alpha();
                (0..=span)
                    .map(|i| {
                        let entry = self.triangle.get(n - 1 - i, k - 1);
                        if exponential {
                            &nq / &kq * binomial(n as i64 - 1, i as i64) * alpha.moment(i) * entry
                        } else {
                            alpha.moment(i) / &factorial(i) * entry
                        }
                    })
                    .collect()
            }
            Rule::RowRec => (0..=span)
                .map(|i| {
                    let entry = self.triangle.get(n - 1, k - 1 + i);
                    let a = self.a_seq.moment(i);
                    if exponential {
                        &nq / &kq * binomial((k - 1 + i) as i64, i as i64) * a * entry
                    } else {
                        a / &factorial(i) * entry
                    }
                })
                .collect(),
            Rule::RowRec2 => {
                let powered = self.a_seq_power(k).clone();
                (0..=span)
                    .map(|i| {
                        let entry = self.triangle.get(n - k, i);
                        if exponential {
                            binomial(n as i64, k as i64) * powered.moment(i) * entry
                        } else {
                            powered.moment(i) / &factorial(i) * entry
                        }
                    })
                    .collect()
            }
        };
        Ok(RecursionReport {
            rule,
            n,
            k,
            lhs: self.triangle.get(n, k),
            rhs: terms.iter().sum(),
            terms,
        })
    }

    /// Every instance `1 <= k <= n <= n_max` of every rule.
    pub fn check_all(&mut self, n_max: usize) -> Result<Vec<RecursionReport>> {
        let mut out = Vec::new();
        for rule in Rule::ALL {
            for n in 1..=n_max {
                for k in 1..=n {
                    out.push(self.check(rule, n, k)?);
                }
            }
        }
        Ok(out)
    }
}

pub fn check_colrec(r: &RiordanArray, n: usize, k: usize) -> Result<RecursionReport> {
    RecursionChecker::new(r).check(Rule::ColRec, n, k)
}

pub fn check_rowrec(r: &RiordanArray, n: usize, k: usize) -> Result<RecursionReport> {
    RecursionChecker::new(r).check(Rule::RowRec, n, k)
}

pub fn check_rowrec2(r: &RiordanArray, n: usize, k: usize) -> Result<RecursionReport> {
    RecursionChecker::new(r).check(Rule::RowRec2, n, k)
}
