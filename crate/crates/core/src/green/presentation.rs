use num_integer::binomial;
use rayon::prelude::*;
use serde::Serialize;

use super::poly::{int_determinant, normal_form, Evaluator, IntPoly, Monomial, RewriteRule};
use super::ring::{RingElt, RingFamily};
use super::table::FusionTable;
use crate::error::{Error, Result};
use crate::repn::Label;

/// A commutative ring presented by generators and relations, with a confluent rewrite
/// system and the monomials left irreducible by it.
#[derive(Clone, Debug)]
pub struct PresentationSpec {
    pub family: RingFamily,
    pub n: usize,
    pub vars: Vec<char>,
    /// Class each variable is sent to.
    pub images: Vec<Label>,
    pub relations: Vec<IntPoly>,
    pub rules: Vec<RewriteRule>,
    pub normal_basis: Vec<Monomial>,
}

/// (n / (n − i)) · C(n − i, i), which is an integer for 0 ≤ i ≤ n/2.
pub fn lucas_coeff(n: i64, i: i64) -> Result<i64> {
    let num = n * binomial(n - i, i);
    if num % (n - i) != 0 {
        return Err(Error::Check(format!("{n}/({n}-{i})·C({},{i}) is not an integer", n - i)));
    }
    Ok(num / (n - i))
}

/// Σ_{i=0}^{⌊n/2⌋} (−1)^i (n/(n−i)) C(n−i, i) x^i y^{n−2i} in variables (x, y).
pub fn lucas_poly(n: i64) -> Result<IntPoly> {
    let mut p = IntPoly::zero(2);
    for i in 0..=n / 2 {
        let s = if i % 2 == 0 { 1 } else { -1 };
        p.add_term(vec![i as u32, (n - 2 * i) as u32], s * lucas_coeff(n, i)?);
    }
    Ok(p)
}

/// Σ_{i=0}^{⌊(m−1)/2⌋} (−1)^i C(m−1−i, i) x^i y^{m−1−2i} in variables (x, y).
pub fn chebyshev_poly(m: i64) -> IntPoly {
    let mut p = IntPoly::zero(2);
    for i in 0..=(m - 1) / 2 {
        let s = if i % 2 == 0 { 1 } else { -1 };
        p.add_term(vec![i as u32, (m - 1 - 2 * i) as u32], s * binomial(m - 1 - i, i));
    }
    p
}

impl PresentationSpec {
    pub fn for_family(family: RingFamily, n: usize) -> Result<PresentationSpec> {
        let nu = n as u32;
        match family {
            RingFamily::TensorTaft | RingFamily::H0 => {
                let v = |var, e, c| IntPoly::var_pow(3, var, e, c);
                let z = v(2, 1, 1);
                let mut z2_rhs = IntPoly::zero(3);
                for i in 0..nu {
                    if family == RingFamily::TensorTaft {
                        for j in 0..nu {
                            z2_rhs.add_term(vec![i, j, 1], 1);
                        }
                    } else {
                        z2_rhs.add_term(vec![i, 0, 1], n as i64);
                    }
                }
                let one = IntPoly::constant(3, 1);
                let images = if family == RingFamily::TensorTaft {
                    vec![Label::S(1, 0), Label::S(0, 1), Label::P(0, 0)]
                } else {
                    vec![Label::S(1, 1), Label::S(0, 1), Label::P(0, 0)]
                };
                let normal_basis = (0..2)
                    .flat_map(|k| (0..nu).flat_map(move |i| (0..nu).map(move |j| vec![i, j, k])))
                    .collect();
                Ok(PresentationSpec {
                    family,
                    n,
                    vars: vec!['x', 'y', 'z'],
                    images,
                    relations: vec![v(0, nu, 1).sub(&one), v(1, nu, 1).sub(&one), z.mul(&z).sub(&z2_rhs)],
                    rules: vec![
                        RewriteRule { var: 0, power: nu, rhs: one.clone() },
                        RewriteRule { var: 1, power: nu, rhs: one },
                        RewriteRule { var: 2, power: 2, rhs: z2_rhs },
                    ],
                    normal_basis,
                })
            }
            RingFamily::H1 => {
                let one = IntPoly::constant(2, 1);
                let f = lucas_poly(n as i64)?.sub(&IntPoly::constant(2, 2));
                let g = chebyshev_poly(n as i64);
                let fg = f.mul(&g);
                // fg is monic in y of degree 2n − 1.
                let top = IntPoly::var_pow(2, 1, 2 * nu - 1, 1);
                Ok(PresentationSpec {
                    family,
                    n,
                    vars: vec!['x', 'y'],
                    images: vec![Label::V(1, 1), Label::V(2, 0)],
                    relations: vec![IntPoly::var_pow(2, 0, nu, 1).sub(&one), fg.clone()],
                    rules: vec![
                        RewriteRule { var: 0, power: nu, rhs: one },
                        RewriteRule { var: 1, power: 2 * nu - 1, rhs: top.sub(&fg) },
                    ],
                    normal_basis: (0..nu).flat_map(|l| (0..2 * nu - 1).map(move |m| vec![l, m])).collect(),
                })
            }
        }
    }

    /// The rank the presentation claims for r_p.
    pub fn expected_rank(&self) -> usize {
        match self.family {
            RingFamily::H1 => self.n * (2 * self.n - 1),
            _ => 2 * self.n * self.n,
        }
    }

    fn render(&self, p: &IntPoly) -> String {
        p.render(&self.vars)
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        self.render(&IntPoly::monomial(m.clone(), 1))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationValue {
    pub relation: String,
    pub value: RingElt,
    pub vanishes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub family: RingFamily,
    pub n: usize,
    pub variables: Vec<String>,
    pub rewrite_rules: Vec<String>,
    pub relations: Vec<RelationValue>,
    pub basis_size: usize,
    pub expected_rank: usize,
    pub ring_rank: usize,
    pub determinant: String,
    pub unimodular: bool,
    /// Pairs of normal monomials whose rewritten product was checked against the ring product.
    pub products_checked: usize,
    pub products_agree: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Checks that the presentation's relations vanish in the table's ring, that its normal
/// monomials form a ℤ-basis, and that rewriting reproduces the ring product on them.
pub fn verify_presentation(table: &FusionTable) -> Result<PresentationReport> {
    let spec = PresentationSpec::for_family(table.family(), table.n())?;
    let mut failures = Vec::new();
    let images = spec.images.iter().map(|&l| RingElt::from_label(l)).collect();
    let mut ev = Evaluator::new(table, images);

    let mut relations = Vec::new();
    for r in &spec.relations {
        let value = ev.eval(r)?;
        let vanishes = value.is_zero();
        if !vanishes {
            failures.push(format!("relation {} evaluates to {value}", spec.render(r)));
        }
        relations.push(RelationValue { relation: spec.render(r), value, vanishes });
    }
    for rule in &spec.rules {
        let lhs = IntPoly::var_pow(spec.vars.len(), rule.var, rule.power, 1);
        if ev.eval(&lhs)? != ev.eval(&rule.rhs)? {
            failures.push(format!("rewrite rule {} -> {} fails in the ring", spec.render(&lhs), spec.render(&rule.rhs)));
        }
    }

    let basis = table.basis();
    let values: Vec<RingElt> = spec.normal_basis.iter().map(|m| ev.monomial(m)).collect::<Result<_>>()?;
    // Row i holds the coefficient of basis class i in each normal monomial.
    let rows: Vec<Vec<i64>> = basis.iter().map(|&l| values.iter().map(|v| v.coeff(l)).collect()).collect();
    let square = rows.len() == values.len();
    let det = if square { int_determinant(&rows) } else { 0.into() };
    let unimodular = square && super::poly::is_unit(&det);
    if spec.normal_basis.len() != spec.expected_rank() {
        failures.push(format!("{} normal monomials, expected {}", spec.normal_basis.len(), spec.expected_rank()));
    }
    if !unimodular {
        failures.push(format!("{}×{} change of basis has determinant {det}", rows.len(), values.len()));
    }

    let k = spec.normal_basis.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let (mi, mj) = (&spec.normal_basis[i], &spec.normal_basis[j]);
            let prod = IntPoly::monomial(mi.iter().zip(mj).map(|(a, b)| a + b).collect(), 1);
            let nf = match normal_form(&prod, &spec.rules) {
                Ok(p) => p,
                Err(e) => return Some(e.to_string()),
            };
            let mut lhs = RingElt::zero();
            for (m, c) in nf.terms() {
                match spec.normal_basis.iter().position(|b| b == m) {
                    Some(p) => lhs.add_scaled(&values[p], c),
                    None => return Some(format!("normal form of {} leaves {}", spec.render(&prod), spec.render_monomial(m))),
                }
            }
            let rhs = table.mul(&values[i], &values[j]).ok()?;
            (lhs != rhs).then(|| format!("rewritten {} gives {lhs}, ring gives {rhs}", spec.render(&prod)))
        })
        .collect();
    let products_agree = bad.is_empty();
    failures.extend(bad);

    Ok(PresentationReport {
        family: spec.family,
        n: spec.n,
        variables: spec.vars.iter().zip(&spec.images).map(|(v, l)| format!("{v} -> {l}")).collect(),
        rewrite_rules: spec
            .rules
            .iter()
            .map(|r| format!("{} -> {}", spec.render(&IntPoly::var_pow(spec.vars.len(), r.var, r.power, 1)), spec.render(&r.rhs)))
            .collect(),
        relations,
        basis_size: k,
        expected_rank: spec.expected_rank(),
        ring_rank: basis.len(),
        determinant: det.to_string(),
        unimodular,
        products_checked: pairs.len(),
        products_agree,
        passed: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h1_generators_at_n3() {
        let f = lucas_poly(3).unwrap().sub(&IntPoly::constant(2, 2));
        assert_eq!(f.render(&['x', 'y']), "y^3 - 3xy - 2");
        assert_eq!(chebyshev_poly(3).render(&['x', 'y']), "y^2 - x");
    }

    #[test]
    fn lucas_coefficients_are_integers() {
        for n in 3..=12 {
            for i in 0..=n / 2 {
                lucas_coeff(n, i).unwrap();
            }
        }
    }
}
