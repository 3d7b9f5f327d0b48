use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ring::RingElt;
use super::table::FusionTable;
use crate::error::{Error, Result};

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// Polynomial with integer coefficients in a fixed number of variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, i64>,
}

impl IntPoly {
    pub fn zero(nvars: usize) -> IntPoly {
        IntPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: i64) -> IntPoly {
        IntPoly::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Monomial, c: i64) -> IntPoly {
        let mut p = IntPoly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// c · v^e.
    pub fn var_pow(nvars: usize, v: usize, e: u32, c: i64) -> IntPoly {
        let mut m = vec![0; nvars];
        m[v] = e;
        IntPoly::monomial(m, c)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        debug_assert_eq!(m.len(), self.nvars);
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, s: i64) -> IntPoly {
        let mut out = IntPoly::zero(self.nvars);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero(self.nvars);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.iter().zip(m2).map(|(a, b)| a + b).collect(), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        (0..k).fold(IntPoly::constant(self.nvars, 1), |acc, _| acc.mul(self))
    }

    pub fn render(&self, names: &[char]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        // Highest total degree first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let deg = |m: &Monomial| m.iter().sum::<u32>();
            (deg(b.0), b.0).cmp(&(deg(a.0), a.0))
        });
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let mono: String = m
                .iter()
                .zip(names)
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            let sign = if *c < 0 { "-" } else { "+" };
            let mag = c.abs();
            let body = match (mag, mono.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => mono,
                (_, false) => format!("{mag}{mono}"),
            };
            if k == 0 {
                out.push_str(&format!("{}{body}", if *c < 0 { "-" } else { "" }));
            } else {
                out.push_str(&format!(" {sign} {body}"));
            }
        }
        out
    }
}

/// Rewrites v^power to `rhs` inside any monomial.
#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub var: usize,
    pub power: u32,
    pub rhs: IntPoly,
}

/// Normal form under rules whose right-hand sides lower the rewritten variable's degree.
pub fn normal_form(p: &IntPoly, rules: &[RewriteRule]) -> Result<IntPoly> {
    let mut todo = p.clone();
    let mut done = IntPoly::zero(p.nvars());
    for _ in 0..1_000_000 {
        let Some((m, c)) = todo.terms().next().map(|(m, c)| (m.clone(), c)) else {
            return Ok(done);
        };
        todo.add_term(m.clone(), -c);
        match rules.iter().find(|r| m[r.var] >= r.power) {
            None => done.add_term(m, c),
            Some(r) => {
                let mut rest = m.clone();
                rest[r.var] -= r.power;
                todo = todo.add(&r.rhs.mul(&IntPoly::monomial(rest, c)));
            }
        }
    }
    Err(Error::NonTerminating(format!("normal form of {p:?}")))
}

/// Evaluates polynomials in a fusion ring with each variable sent to a ring element.
pub struct Evaluator<'a> {
    table: &'a FusionTable,
    images: Vec<RingElt>,
    memo: HashMap<Monomial, RingElt>,
}

impl<'a> Evaluator<'a> {
    pub fn new(table: &'a FusionTable, images: Vec<RingElt>) -> Evaluator<'a> {
        Evaluator { table, images, memo: HashMap::new() }
    }

    pub fn monomial(&mut self, m: &Monomial) -> Result<RingElt> {
        if let Some(x) = self.memo.get(m) {
            return Ok(x.clone());
        }
        let x = match m.iter().position(|&e| e > 0) {
            None => self.table.unit(),
            Some(v) => {
                let mut rest = m.clone();
                rest[v] -= 1;
                let r = self.monomial(&rest)?;
                self.table.mul(&r, &self.images[v])?
            }
        };
        self.memo.insert(m.clone(), x.clone());
        Ok(x)
    }

    pub fn eval(&mut self, p: &IntPoly) -> Result<RingElt> {
        let mut out = RingElt::zero();
        for (m, c) in p.terms() {
            out.add_scaled(&self.monomial(m)?, c);
        }
        Ok(out)
    }
}

/// Determinant of an integer matrix by fraction-free elimination.
pub fn int_determinant(rows: &[Vec<i64>]) -> BigInt {
    let k = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for p in 0..k {
        let Some(piv) = (p..k).find(|&r| !a[r][p].is_zero()) else {
            return BigInt::zero();
        };
        if piv != p {
            a.swap(piv, p);
            sign = -sign;
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let v = &a[i][j] * &a[p][p] - &a[i][p] * &a[p][j];
                a[i][j] = v / &prev;
            }
            a[i][p] = BigInt::zero();
        }
        prev = a[p][p].clone();
    }
    if k == 0 {
        BigInt::one()
    } else {
        sign * &a[k - 1][k - 1]
    }
}

pub fn is_unit(d: &BigInt) -> bool {
    d.abs().is_one()
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<char> = ['x', 'y', 'z', 'w'].into_iter().take(self.nvars).collect();
        f.write_str(&self.render(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_matches_hand_values() {
        assert_eq!(int_determinant(&[vec![2, 1], vec![7, 4]]), BigInt::from(1));
        assert_eq!(int_determinant(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]), BigInt::from(-1));
        assert_eq!(int_determinant(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
        assert_eq!(int_determinant(&[vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5]]), BigInt::from(-90));
    }

    #[test]
    fn normal_form_reduces_powers() {
        let rules = [RewriteRule { var: 0, power: 3, rhs: IntPoly::constant(2, 1) }];
        let p = IntPoly::var_pow(2, 0, 7, 1).mul(&IntPoly::var_pow(2, 1, 2, 5));
        let nf = normal_form(&p, &rules).unwrap();
        assert_eq!(nf, IntPoly::monomial(vec![1, 2], 5));
        assert_eq!(nf.to_string(), "5xy^2");
    }
}
