use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::closed_form::{closed_form_with_rule, FusionRule};
use super::ring::{LabelMult, RingElt, RingFamily};
use crate::error::{Error, Result};
use crate::hopf::Algebra;
use crate::repn::{Catalog, Label};
use crate::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FusionMode {
    ClosedForm,
    Computed,
    Crosscheck,
}

/// Structure constants of r_p on its standard basis.
#[derive(Clone, Debug)]
pub struct FusionTable {
    family: RingFamily,
    n: usize,
    basis: Vec<Label>,
    index: HashMap<Label, usize>,
    grid: Vec<Vec<RingElt>>,
    /// Rule behind each closed-form entry; empty for computed tables.
    rules: Vec<Vec<FusionRule>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub a: Label,
    pub b: Label,
    pub closed: RingElt,
    pub computed: RingElt,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub family: RingFamily,
    pub n: usize,
    pub entries_compared: usize,
    pub mismatches: Vec<Mismatch>,
    /// How often each closed-form rule fired over the grid.
    pub rule_census: BTreeMap<FusionRule, usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RingAxiomReport {
    pub commutative: bool,
    pub unit: bool,
    pub triples_checked: usize,
    pub all_triples: bool,
    pub associative: bool,
    pub dims_multiply: bool,
    pub nonnegative: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub a: Label,
    pub b: Label,
    pub result: Vec<LabelMult>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FusionTableExport {
    pub schema_version: u32,
    pub family: RingFamily,
    pub n: usize,
    pub basis: Vec<Label>,
    pub entries: Vec<TableEntry>,
}

impl FusionTable {
    fn from_grid(family: RingFamily, n: usize, basis: Vec<Label>, grid: Vec<Vec<RingElt>>, rules: Vec<Vec<FusionRule>>) -> Self {
        let index = basis.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        FusionTable { family, n, basis, index, grid, rules }
    }

    pub fn closed_form(family: RingFamily, n: usize) -> Result<FusionTable> {
        let basis = family.basis(n);
        let mut rules = Vec::with_capacity(basis.len());
        let mut grid = Vec::with_capacity(basis.len());
        for &a in &basis {
            let mut row = Vec::with_capacity(basis.len());
            let mut rule_row = Vec::with_capacity(basis.len());
            for &b in &basis {
                let (x, rule) = closed_form_with_rule(family, n, a, b)?;
                row.push(x);
                rule_row.push(rule);
            }
            grid.push(row);
            rules.push(rule_row);
        }
        Ok(FusionTable::from_grid(family, n, basis, grid, rules))
    }

    /// Every entry from decomposing the actual tensor product module.
    pub fn computed(catalog: &Catalog) -> Result<FusionTable> {
        let spec = catalog.alg().spec();
        let family = RingFamily::of(spec)?;
        let n = spec.n;
        let basis = family.basis(n);
        let mut have = catalog.basis_labels();
        have.sort();
        let mut want = basis.clone();
        want.sort();
        if have != want {
            return Err(Error::Check(format!("catalog labels {have:?} differ from the ring basis {want:?}")));
        }
        let modules: Vec<_> = basis.iter().map(|&l| catalog.module_for(l)).collect::<Result<_>>()?;
        let k = basis.len();
        let cells: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
        let values: Vec<RingElt> = cells
            .par_iter()
            .map(|&(i, j)| catalog.decompose_tensor(modules[i], modules[j]).map(|d| RingElt::from(&d)))
            .collect::<Result<_>>()?;
        let mut it = values.into_iter();
        let grid = (0..k).map(|_| it.by_ref().take(k).collect()).collect();
        Ok(FusionTable::from_grid(family, n, basis, grid, Vec::new()))
    }

    pub fn family(&self) -> RingFamily {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Label] {
        &self.basis
    }

    /// How often each closed-form rule fired; empty for computed tables.
    pub fn rule_census(&self) -> BTreeMap<FusionRule, usize> {
        let mut out = BTreeMap::new();
        for r in self.rules.iter().flatten() {
            *out.entry(*r).or_insert(0) += 1;
        }
        out
    }

    /// The closed-form rule behind entry (a, b); None for computed tables.
    pub fn rule(&self, a: Label, b: Label) -> Option<FusionRule> {
        let (i, j) = (self.idx(a).ok()?, self.idx(b).ok()?);
        self.rules.get(i).map(|row| row[j])
    }

    fn idx(&self, l: Label) -> Result<usize> {
        self.index.get(&l).copied().ok_or_else(|| Error::InvalidLabel(format!("{l} is not a basis class of this table")))
    }

    pub fn get(&self, a: Label, b: Label) -> Result<&RingElt> {
        Ok(&self.grid[self.idx(a)?][self.idx(b)?])
    }

    pub fn unit(&self) -> RingElt {
        RingElt::from_label(self.family.unit())
    }

    pub fn mul(&self, x: &RingElt, y: &RingElt) -> Result<RingElt> {
        let mut out = RingElt::zero();
        for (a, ca) in x.iter() {
            let row = &self.grid[self.idx(a)?];
            for (b, cb) in y.iter() {
                out.add_scaled(&row[self.idx(b)?], ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, x: &RingElt, k: usize) -> Result<RingElt> {
        let mut out = self.unit();
        for _ in 0..k {
            out = self.mul(&out, x)?;
        }
        Ok(out)
    }

    /// Commutativity, unit, dimension grading and positivity on every entry; associativity
    /// on all triples when there are at most `max_triples`, else on a seeded sample of that size.
    pub fn ring_axioms(&self, max_triples: usize, seed: u64) -> RingAxiomReport {
        let k = self.basis.len();
        let mut failures = Vec::new();
        let unit = self.unit();
        let (mut commutative, mut unit_ok, mut dims, mut nonneg) = (true, true, true, true);
        for i in 0..k {
            let a = self.basis[i];
            let ea = RingElt::from_label(a);
            if self.mul(&unit, &ea).ok().as_ref() != Some(&ea) || self.mul(&ea, &unit).ok().as_ref() != Some(&ea) {
                unit_ok = false;
                failures.push(format!("unit fails on {a}"));
            }
            for j in 0..k {
                let b = self.basis[j];
                let x = &self.grid[i][j];
                if *x != self.grid[j][i] {
                    commutative = false;
                    failures.push(format!("{a} ⊗ {b} = {x} but {b} ⊗ {a} = {}", self.grid[j][i]));
                }
                let want = (self.family.label_dim(self.n, a) * self.family.label_dim(self.n, b)) as i64;
                if x.dim(self.family, self.n) != want {
                    dims = false;
                    failures.push(format!("{a} ⊗ {b} = {x} has dimension {} not {want}", x.dim(self.family, self.n)));
                }
                if !x.is_nonnegative() {
                    nonneg = false;
                    failures.push(format!("{a} ⊗ {b} = {x} has a negative coefficient"));
                }
            }
        }

        let all = k.pow(3) <= max_triples;
        let triples: Vec<(usize, usize, usize)> = if all {
            (0..k).flat_map(|i| (0..k).flat_map(move |j| (0..k).map(move |l| (i, j, l)))).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..max_triples).map(|_| (rng.gen_range(0..k), rng.gen_range(0..k), rng.gen_range(0..k))).collect()
        };
        let bad: Vec<String> = triples
            .par_iter()
            .filter_map(|&(i, j, l)| {
                let (a, b, c) = (self.basis[i], self.basis[j], self.basis[l]);
                let lhs = self.mul(&self.grid[i][j], &RingElt::from_label(c)).ok()?;
                let rhs = self.mul(&RingElt::from_label(a), &self.grid[j][l]).ok()?;
                (lhs != rhs).then(|| format!("({a} ⊗ {b}) ⊗ {c} = {lhs} but {a} ⊗ ({b} ⊗ {c}) = {rhs}"))
            })
            .collect();
        let associative = bad.is_empty();
        failures.extend(bad);
        RingAxiomReport {
            commutative,
            unit: unit_ok,
            triples_checked: triples.len(),
            all_triples: all,
            associative,
            dims_multiply: dims,
            nonnegative: nonneg,
            passed: failures.is_empty(),
            failures,
        }
    }

    pub fn export(&self) -> FusionTableExport {
        let mut entries = Vec::with_capacity(self.basis.len().pow(2));
        for (i, &a) in self.basis.iter().enumerate() {
            for (j, &b) in self.basis.iter().enumerate() {
                entries.push(TableEntry { a, b, result: self.grid[i][j].to_pairs() });
            }
        }
        FusionTableExport { schema_version: SCHEMA_VERSION, family: self.family, n: self.n, basis: self.basis.clone(), entries }
    }
}

/// Entrywise comparison of a closed-form table with a computed one.
pub fn crosscheck(closed: &FusionTable, computed: &FusionTable) -> CrosscheckReport {
    crosscheck_where(closed, computed, |_| true)
}

/// Comparison restricted to the entries whose closed-form rule satisfies `keep`.
pub fn crosscheck_where(closed: &FusionTable, computed: &FusionTable, keep: impl Fn(FusionRule) -> bool) -> CrosscheckReport {
    let mut mismatches = Vec::new();
    let mut compared = 0;
    let mut rule_census = BTreeMap::new();
    for &a in &closed.basis {
        for &b in &closed.basis {
            if let Some(rule) = closed.rule(a, b) {
                if !keep(rule) {
                    continue;
                }
                *rule_census.entry(rule).or_insert(0) += 1;
            }
            compared += 1;
            let x = closed.get(a, b).expect("own basis");
            match computed.get(a, b) {
                Ok(y) if y == x => {}
                Ok(y) => mismatches.push(Mismatch { a, b, closed: x.clone(), computed: y.clone() }),
                Err(_) => mismatches.push(Mismatch { a, b, closed: x.clone(), computed: RingElt::zero() }),
            }
        }
    }
    let same_shape = closed.family == computed.family && closed.n == computed.n && closed.basis.len() == computed.basis.len();
    CrosscheckReport {
        family: closed.family,
        n: closed.n,
        entries_compared: compared,
        passed: mismatches.is_empty() && same_shape && compared > 0,
        mismatches,
        rule_census,
    }
}

/// Builds the table in the requested mode. Crosscheck mode returns the closed-form table
/// after confirming every entry against the computed one.
pub fn fusion_table(family: RingFamily, n: usize, mode: FusionMode, seed: u64) -> Result<FusionTable> {
    let computed = || -> Result<FusionTable> {
        let alg = Arc::new(Algebra::build(&family.spec(n)?)?);
        FusionTable::computed(&Catalog::build(alg, seed)?)
    };
    match mode {
        FusionMode::ClosedForm => FusionTable::closed_form(family, n),
        FusionMode::Computed => computed(),
        FusionMode::Crosscheck => {
            let closed = FusionTable::closed_form(family, n)?;
            let report = crosscheck(&closed, &computed()?);
            match report.mismatches.first() {
                None => Ok(closed),
                Some(m) => Err(Error::FusionMismatch {
                    a: m.a.to_string(),
                    b: m.b.to_string(),
                    closed: m.closed.to_string(),
                    computed: m.computed.to_string(),
                }),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_tables_are_commutative_rings() {
        for fam in [RingFamily::TensorTaft, RingFamily::H0, RingFamily::H1] {
            let t = FusionTable::closed_form(fam, 3).unwrap();
            let r = t.ring_axioms(usize::MAX, 0);
            assert!(r.passed, "{fam}: {:?}", &r.failures[..r.failures.len().min(3)]);
            assert!(r.all_triples);
        }
    }

    #[test]
    fn rule_grid_matches_census() {
        let t = FusionTable::closed_form(RingFamily::H1, 4).unwrap();
        assert_eq!(t.rule(Label::V(1, 0), Label::Pr(2, 1)), Some(FusionRule::H1TwistProj));
        assert_eq!(t.rule_census().values().sum::<usize>(), 28 * 28);
    }
}
