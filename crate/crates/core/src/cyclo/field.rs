//! The cyclotomic field Q(ζ_n) as Q[x]/(Φ_n(x)).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Mutex;

use smallvec::SmallVec;

use super::rational::Rational;
use crate::error::Error;

pub type Coeffs = SmallVec<[Rational; 4]>;

/// Read-only field context. One instance per `n`, shared for the life of the process.
pub struct CycloField {
    n: usize,
    phi: usize,
    /// Φ_n, low degree first, monic.
    cyclotomic: Vec<i64>,
    /// `reduce[k]` = x^k mod Φ_n for 0 <= k < 2φ - 1.
    reduce: Vec<Vec<i64>>,
    /// `qpow[k]` = ζ^k for 0 <= k < n.
    qpow: Vec<Vec<i64>>,
}

static REGISTRY: Mutex<BTreeMap<usize, &'static CycloField>> = Mutex::new(BTreeMap::new());

/// Returns the (shared) field context for Q(ζ_n). `n` must be at least 3.
pub fn cyclo_field(n: usize) -> Result<&'static CycloField, Error> {
    if n < 3 {
        return Err(Error::InvalidOrder(n));
    }
    Ok(cyclo_field_unchecked(n))
}

/// Same as [`cyclo_field`] but accepts n = 1, 2 (where Q(ζ_n) = Q); used by
/// test fixtures that need a plain rational field.
pub fn cyclo_field_unchecked(n: usize) -> &'static CycloField {
    assert!(n >= 1);
    let mut reg = REGISTRY.lock().expect("cyclotomic registry poisoned");
    if let Some(f) = reg.get(&n) {
        return f;
    }
    let f: &'static CycloField = Box::leak(Box::new(CycloField::build(n)));
    reg.insert(n, f);
    f
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![];
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Integer coefficients of Φ_n, low degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

impl CycloField {
    fn build(n: usize) -> Self {
        let cyclotomic = cyclotomic_polynomial(n);
        let phi = cyclotomic.len() - 1;
        let reduce_len = (2 * phi).max(n + 1);
        let mut reduce = Vec::with_capacity(reduce_len);
        let mut cur = vec![0i64; phi];
        if phi == 1 {
            // Q(ζ_1)=Q(ζ_2)=Q: x ≡ -Φ[0]
            cur[0] = 1;
            for _ in 0..reduce_len {
                reduce.push(cur.clone());
                cur[0] *= -cyclotomic[0];
            }
        } else {
            cur[0] = 1;
            for _ in 0..reduce_len {
                reduce.push(cur.clone());
                // multiply by x
                let top = cur[phi - 1];
                for i in (1..phi).rev() {
                    cur[i] = cur[i - 1];
                }
                cur[0] = 0;
                for i in 0..phi {
                    cur[i] -= top * cyclotomic[i];
                }
            }
        }
        let qpow = reduce[..n].to_vec();
        CycloField { n, phi, cyclotomic, reduce, qpow }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Degree φ(n) of the field over Q.
    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn cyclotomic(&self) -> &[i64] {
        &self.cyclotomic
    }

    pub fn zero(&'static self) -> CycloNum {
        CycloNum { field: self, c: SmallVec::from_elem(Rational::ZERO, self.phi) }
    }

    pub fn one(&'static self) -> CycloNum {
        self.from_int(1)
    }

    pub fn from_int(&'static self, v: i64) -> CycloNum {
        self.from_rational(Rational::from_int(v))
    }

    pub fn from_rational(&'static self, r: Rational) -> CycloNum {
        let mut z = self.zero();
        z.c[0] = r;
        z
    }

    /// The distinguished primitive root q = ζ_n.
    pub fn q(&'static self) -> CycloNum {
        self.q_pow(1)
    }

    /// q^k for any integer k (taken mod n).
    pub fn q_pow(&'static self, k: i64) -> CycloNum {
        let k = k.rem_euclid(self.n as i64) as usize;
        self.from_int_coeffs(&self.qpow[k])
    }

    fn from_int_coeffs(&'static self, v: &[i64]) -> CycloNum {
        CycloNum { field: self, c: v.iter().map(|&x| Rational::from_int(x)).collect() }
    }

    /// Element from an arbitrary polynomial in ζ (any length), reduced mod Φ_n.
    pub fn from_poly(&'static self, coeffs: &[Rational]) -> CycloNum {
        let mut z = self.zero();
        for (k, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if k < self.phi {
                z.c[k] += a;
            } else {
                let red = self.reduce_power(k);
                for (i, &r) in red.iter().enumerate() {
                    if r != 0 {
                        z.c[i] += &a.mul_int(r);
                    }
                }
            }
        }
        z
    }

    fn reduce_power(&self, k: usize) -> Vec<i64> {
        if k < self.reduce.len() {
            self.reduce[k].clone()
        } else {
            // ζ^k = ζ^(k mod n) and n <= reduce.len()
            self.qpow[k % self.n].clone()
        }
    }

    /// Which power of q this element is, if any.
    pub fn discrete_log(&'static self, z: &CycloNum) -> Option<usize> {
        (0..self.n).find(|&k| {
            z.c.iter().zip(&self.qpow[k]).all(|(a, &b)| *a == Rational::from_int(b))
        })
    }

    /// (j)!_q = ∏_{k=1}^{j} (1 + q + ... + q^{k-1}).
    pub fn q_factorial(&'static self, j: usize) -> CycloNum {
        let mut acc = self.one();
        let mut qint = self.zero();
        for k in 1..=j {
            qint = &qint + &self.q_pow(k as i64 - 1);
            acc = &acc * &qint;
        }
        acc
    }
}

// One field per order is interned, so the order identifies it.
impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}
impl Eq for CycloField {}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.n)
    }
}

/// An element of Q(ζ_n) in the power basis 1, ζ, ..., ζ^{φ(n)-1}.
#[derive(Clone)]
pub struct CycloNum {
    field: &'static CycloField,
    c: Coeffs,
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.c == other.c
    }
}
impl Eq for CycloNum {}

impl std::hash::Hash for CycloNum {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.n.hash(state);
        self.c.hash(state);
    }
}

impl CycloNum {
    #[inline]
    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.c[1..].iter().all(Rational::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> CycloNum {
        CycloNum { field: self.field, c: self.c.iter().map(|a| a * r).collect() }
    }

    pub fn scale_int(&self, k: i64) -> CycloNum {
        CycloNum { field: self.field, c: self.c.iter().map(|a| a.mul_int(k)).collect() }
    }

    /// Number of nonzero power-basis coefficients plus a height bound, smaller is cheaper.
    pub fn cost(&self) -> (usize, u64) {
        let nz = self.c.iter().filter(|a| !a.is_zero()).count();
        let h = self.c.iter().map(Rational::height).max().unwrap_or(0);
        (nz, h)
    }

    /// Exact inverse via the extended Euclidean algorithm in Q[x].
    pub fn inv(&self) -> Result<CycloNum, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = self.field;
        if let Some(r) = self.as_rational() {
            return Ok(f.from_rational(r.inv()?));
        }
        // Invariant: s_i * self ≡ r_i (mod Φ)
        let mut r0: Vec<Rational> = f.cyclotomic.iter().map(|&v| Rational::from_int(v)).collect();
        let mut r1: Vec<Rational> = self.c.to_vec();
        trim(&mut r1);
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![Rational::ONE];
        while r1.len() != 1 {
            let (qt, rem) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&qt, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // gcd nontrivial; impossible over a field with irreducible Φ
                return Err(Error::DivisionByZero);
            }
        }
        let c = r1[0].inv()?;
        let out: Vec<Rational> = s1.iter().map(|a| a * &c).collect();
        Ok(f.from_poly(&out))
    }

    pub fn pow(&self, mut e: u64) -> CycloNum {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn powi(&self, e: i64) -> Result<CycloNum, Error> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// `self += a * b`
    pub fn add_mul(&mut self, a: &CycloNum, b: &CycloNum) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a * b;
        *self += &p;
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let mut out = vec![Rational::ZERO; len];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut q = vec![Rational::ZERO; rem.len() - db];
    for k in (0..q.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if !c.is_zero() {
            for (i, bi) in b.iter().enumerate() {
                rem[k + i] -= &(&c * bi);
            }
        }
        q[k] = c;
    }
    trim(&mut rem);
    trim(&mut q);
    (q, rem)
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        debug_assert_eq!(self.field.n, rhs.field.n);
        CycloNum { field: self.field, c: self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        debug_assert_eq!(self.field.n, rhs.field.n);
        CycloNum { field: self.field, c: self.c.iter().zip(&rhs.c).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        debug_assert_eq!(self.field.n, rhs.field.n);
        let f = self.field;
        let phi = f.phi;
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        let mut prod: SmallVec<[Rational; 8]> = SmallVec::from_elem(Rational::ZERO, 2 * phi - 1);
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += &(a * b);
                }
            }
        }
        let mut out: Coeffs = prod[..phi].iter().cloned().collect();
        for (k, a) in prod.iter().enumerate().skip(phi) {
            if a.is_zero() {
                continue;
            }
            for (i, &r) in f.reduce[k].iter().enumerate() {
                if r != 0 {
                    out[i] += &a.mul_int(r);
                }
            }
        }
        CycloNum { field: f, c: out }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum { field: self.field, c: self.c.iter().map(|a| -a).collect() }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: CycloNum) -> CycloNum {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: &CycloNum) -> CycloNum {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, rhs: &CycloNum) {
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a += b;
        }
    }
}

impl SubAssign<&CycloNum> for CycloNum {
    fn sub_assign(&mut self, rhs: &CycloNum) {
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a -= b;
        }
    }
}

/// Text form: `c0 + c1*z + c2*z^2`, zero terms omitted, `0` for zero.
impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*z")?,
                _ => write!(f, "{a}*z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl CycloField {
    /// Parses the text form produced by `Display`. Powers of `z` may be any
    /// nonnegative integer; they are reduced mod Φ_n.
    pub fn parse(&'static self, s: &str) -> Result<CycloNum, Error> {
        let mut poly: Vec<Rational> = vec![];
        for term in s.split(" + ") {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            let (coef, power) = match term.split_once('*') {
                None if term == "z" => (Rational::ONE, 1),
                None => (Rational::from_str(term)?, 0),
                Some((c, zpart)) => {
                    let c = Rational::from_str(c)?;
                    let p = match zpart.trim() {
                        "z" => 1,
                        other => other
                            .strip_prefix("z^")
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| Error::Parse(format!("bad power in `{term}`")))?,
                    };
                    (c, p)
                }
            };
            if poly.len() <= power {
                poly.resize(power + 1, Rational::ZERO);
            }
            poly[power] += &coef;
        }
        Ok(self.from_poly(&poly))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn rejects_small_orders() {
        assert!(matches!(cyclo_field(2), Err(Error::InvalidOrder(2))));
        assert!(cyclo_field(3).is_ok());
    }

    #[test]
    fn q_is_primitive() {
        for n in 3..=12 {
            let f = cyclo_field(n).unwrap();
            let q = f.q();
            for k in 1..n {
                assert!(!q.pow(k as u64).is_one(), "q^{k} = 1 for n = {n}");
            }
            assert!(q.pow(n as u64).is_one());
        }
    }

    #[test]
    fn phi3_relation() {
        let f = cyclo_field(3).unwrap();
        let q = f.q();
        let s = &(&(&q * &q) + &q) + &f.one();
        assert!(s.is_zero());
    }

    #[test]
    fn inverse_of_q_mod_4() {
        let f = cyclo_field(4).unwrap();
        assert_eq!(f.q().inv().unwrap(), f.q_pow(3));
        assert!(f.zero().inv().is_err());
    }

    #[test]
    fn q_factorial_values() {
        let f = cyclo_field(3).unwrap();
        assert!(f.q_factorial(0).is_one());
        assert_eq!(f.q_factorial(2), &f.one() + &f.q());
        assert!(f.q_factorial(3).is_zero());
    }

    #[test]
    fn parse_display() {
        let f = cyclo_field(5).unwrap();
        let z = f.parse("1/2 + -3*z^2 + z").unwrap();
        assert_eq!(z.to_string(), "1/2 + 1*z + -3*z^2");
        assert_eq!(f.parse(&z.to_string()).unwrap(), z);
        // z^4 = -(1 + z + z^2 + z^3)
        assert_eq!(f.parse("1*z^4").unwrap(), f.q_pow(4));
        assert_eq!(f.parse("0").unwrap(), f.zero());
    }
}
