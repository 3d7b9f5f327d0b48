//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//! Runs without the libtest harness so the lines print in order and unbuffered.

use std::collections::{BTreeMap, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use projring::green::{
    class_algebra_radical, crosscheck, identity_suite_h1, quiver_check_h0, verify_presentation, FusionRule, FusionTable,
    IdentityGroup, RingElt, RingFamily,
};
use projring::hopf::{
    center_and_blocks, hopf_ideal_check, integrals_and_symmetry, radical_report, verify_hopf_axioms, Sampling,
};
use projring::repn::{direct_sum, hom_dim, tensor_module, Catalog, Module};
use projring::{Algebra, FiniteAlgebra, Mat};

type Verdict = Result<String, String>;
type Criterion = fn(&mut Fixtures) -> Verdict;

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

const FAMILIES: [RingFamily; 3] = [RingFamily::TensorTaft, RingFamily::H0, RingFamily::H1];
const BASIC: [RingFamily; 2] = [RingFamily::TensorTaft, RingFamily::H0];

/// Algebras, catalogs and computed tables are expensive; every criterion shares them.
#[derive(Default)]
struct Fixtures {
    algebras: HashMap<(RingFamily, usize), Arc<Algebra>>,
    catalogs: HashMap<(RingFamily, usize), Arc<Catalog>>,
    computed: HashMap<(RingFamily, usize), Arc<FusionTable>>,
    /// Wall-clock seconds charged to each n.
    seconds: BTreeMap<usize, f64>,
}

impl Fixtures {
    fn algebra(&mut self, fam: RingFamily, n: usize) -> Result<Arc<Algebra>, String> {
        if let Some(a) = self.algebras.get(&(fam, n)) {
            return Ok(a.clone());
        }
        let a = Arc::new(Algebra::build(&fam.spec(n).map_err(err)?).map_err(err)?);
        self.algebras.insert((fam, n), a.clone());
        Ok(a)
    }

    fn catalog(&mut self, fam: RingFamily, n: usize) -> Result<Arc<Catalog>, String> {
        if let Some(c) = self.catalogs.get(&(fam, n)) {
            return Ok(c.clone());
        }
        let c = Arc::new(Catalog::build(self.algebra(fam, n)?, 0).map_err(err)?);
        self.catalogs.insert((fam, n), c.clone());
        Ok(c)
    }

    fn computed(&mut self, fam: RingFamily, n: usize) -> Result<Arc<FusionTable>, String> {
        if let Some(t) = self.computed.get(&(fam, n)) {
            return Ok(t.clone());
        }
        let t = Arc::new(FusionTable::computed(&*self.catalog(fam, n)?).map_err(err)?);
        self.computed.insert((fam, n), t.clone());
        Ok(t)
    }

    /// Runs `f` and charges its wall time to `n`.
    fn timed<T>(&mut self, n: usize, f: impl FnOnce(&mut Self) -> Result<T, String>) -> Result<T, String> {
        let t0 = Instant::now();
        let r = f(self);
        *self.seconds.entry(n).or_default() += t0.elapsed().as_secs_f64();
        r
    }
}

fn hopf_axioms(fx: &mut Fixtures) -> Verdict {
    let mut per_n = BTreeMap::new();
    for n in [3, 4, 5] {
        let t0 = Instant::now();
        for fam in FAMILIES {
            fx.timed(n, |fx| {
                let alg = fx.algebra(fam, n)?;
                let sampling = if n == 3 { Sampling::All } else { Sampling::at_least(500, 17, alg.dim()) };
                let r = verify_hopf_axioms(&alg, sampling);
                ensure(r.passed, || format!("{} fails: {:?}", r.algebra, r.failures.first()))?;
                let want = if n == 3 { 81 } else { 500.min(alg.dim()) };
                ensure(r.basis_elements_checked >= want, || format!("{}: only {} elements", r.algebra, r.basis_elements_checked))
            })?;
        }
        per_n.insert(n, t0.elapsed().as_secs_f64());
    }
    ensure(per_n[&3] < 30.0, || format!("n=3 took {:.1}s", per_n[&3]))?;
    ensure(per_n[&4] < 300.0, || format!("n=4 took {:.1}s", per_n[&4]))?;
    Ok(format!("3 algebras at n=3,4,5; {:.1}s / {:.1}s / {:.1}s", per_n[&3], per_n[&4], per_n[&5]))
}

fn structure_facts(fx: &mut Fixtures) -> Verdict {
    for n in [3, 4] {
        fx.timed(n, |fx| {
            for fam in FAMILIES {
                let alg = fx.algebra(fam, n)?;
                let name = format!("{fam} n={n}");
                ensure(alg.dim() == n.pow(4), || format!("{name}: dimension {}", alg.dim()))?;
                let (j, rad) = radical_report(&alg).map_err(err)?;
                ensure(rad.quotient_semisimple, || format!("{name}: quotient by the radical is not semisimple"))?;
                let blocks = center_and_blocks(&alg).map_err(err)?.block_count;
                let want_blocks = match fam {
                    RingFamily::TensorTaft => 1,
                    RingFamily::H0 => n,
                    RingFamily::H1 => n * (n + 1) / 2,
                };
                ensure(blocks == want_blocks, || format!("{name}: {blocks} blocks, expected {want_blocks}"))?;
                if fam.is_basic() {
                    ensure(rad.loewy_length == 2 * n - 1, || format!("{name}: Loewy length {}", rad.loewy_length))?;
                    ensure(rad.quotient_dim == n * n, || format!("{name}: quotient dimension {}", rad.quotient_dim))?;
                    ensure(rad.equals_ideal_of_a_d == Some(true), || format!("{name}: radical is not (a, d)"))?;
                    ensure(hopf_ideal_check(&alg, &j).passed(), || format!("{name}: radical is not a Hopf ideal"))?;
                }
                let ints = integrals_and_symmetry(&alg).map_err(err)?;
                match fam {
                    RingFamily::TensorTaft => ensure(!ints.unimodular, || format!("{name}: unexpectedly unimodular"))?,
                    RingFamily::H0 => ensure(ints.unimodular && ints.s2_inner_by_b && ints.s2_inner_by_c, || {
                        format!("{name}: not symmetric ({ints:?})")
                    })?,
                    RingFamily::H1 => {}
                }
            }
            Ok(())
        })?;
    }
    Ok("dimension, Loewy length, radical generators, blocks 1 / n / n(n+1)/2, unimodularity at n=3,4".into())
}

fn fusion_equivalence(fx: &mut Fixtures) -> Verdict {
    let cases: [(RingFamily, usize, usize); 6] = [
        (RingFamily::TensorTaft, 3, 18),
        (RingFamily::H0, 3, 18),
        (RingFamily::H1, 3, 15),
        (RingFamily::TensorTaft, 4, 32),
        (RingFamily::H0, 4, 32),
        (RingFamily::H1, 4, 28),
    ];
    let mut entries = 0;
    let mut census: BTreeMap<FusionRule, usize> = BTreeMap::new();
    for (fam, n, size) in cases {
        fx.timed(n, |fx| {
            let closed = FusionTable::closed_form(fam, n).map_err(err)?;
            ensure(closed.basis().len() == size, || format!("{fam} n={n}: basis has {} labels", closed.basis().len()))?;
            let r = crosscheck(&closed, &*fx.computed(fam, n)?);
            ensure(r.passed && r.entries_compared == size * size, || {
                format!("{fam} n={n}: {} mismatches, first {:?}", r.mismatches.len(), r.mismatches.first())
            })?;
            entries += r.entries_compared;
            if fam == RingFamily::H1 && n == 4 {
                census = r.rule_census;
            }
            Ok(())
        })?;
    }
    let missing: Vec<_> = FusionRule::H1_RULES.iter().filter(|r| census.get(r).copied().unwrap_or(0) == 0).collect();
    ensure(missing.is_empty(), || format!("product rules never exercised at n=4: {missing:?}"))?;
    Ok(format!("{entries} table entries equal; all {} nonbasic product rules exercised at n=4", FusionRule::H1_RULES.len()))
}

fn presentations(fx: &mut Fixtures) -> Verdict {
    let mut count = 0;
    for (fam, ns) in [(RingFamily::TensorTaft, 3..=4), (RingFamily::H0, 3..=4), (RingFamily::H1, 3..=5)] {
        for n in ns {
            fx.timed(n, |_| {
                let r = verify_presentation(&FusionTable::closed_form(fam, n).map_err(err)?).map_err(err)?;
                let want = if fam.is_basic() { 2 * n * n } else { n * (2 * n - 1) };
                ensure(r.passed, || format!("{fam} n={n}: {:?}", r.failures))?;
                ensure(r.relations.iter().all(|x| x.vanishes), || format!("{fam} n={n}: a relation survives"))?;
                ensure(r.unimodular && r.basis_size == want && r.ring_rank == want, || {
                    format!("{fam} n={n}: {}×{} change of basis, determinant {}", r.ring_rank, r.basis_size, r.determinant)
                })?;
                count += 1;
                Ok(())
            })?;
        }
    }
    Ok(format!("{count} presentations: relations vanish, normal-form bases unimodular"))
}

fn class_radicals(fx: &mut Fixtures) -> Verdict {
    for fam in BASIC {
        for n in [3, 4] {
            fx.timed(n, |_| {
                let r = class_algebra_radical(&FusionTable::closed_form(fam, n).map_err(err)?).map_err(err)?;
                let want = if fam == RingFamily::TensorTaft { n * n + 1 } else { n * (n + 1) };
                let c = &r.idempotents;
                ensure(r.passed, || format!("{fam} n={n}: {:?}", r.failures))?;
                ensure(r.quotient_dim == want, || format!("{fam} n={n}: quotient dimension {}", r.quotient_dim))?;
                ensure(r.radical_equals_generated_ideal, || format!("{fam} n={n}: radical differs from the stated ideal"))?;
                ensure(c.count == want && c.idempotent && c.orthogonal && c.complete && c.primitive, || {
                    format!("{fam} n={n}: idempotent family {c:?}")
                })
            })?;
        }
    }
    Ok("quotients n^2+1 and n(n+1); idempotent families orthogonal, complete, primitive at n=3,4".into())
}

fn identity_suite(fx: &mut Fixtures) -> Verdict {
    let mut checks = 0;
    for n in [3, 4, 5] {
        fx.timed(n, |_| {
            let r = identity_suite_h1(&FusionTable::closed_form(RingFamily::H1, n).map_err(err)?).map_err(err)?;
            for g in [
                IdentityGroup::PowerLadder,
                IdentityGroup::Recurrences,
                IdentityGroup::Generation,
                IdentityGroup::ClosedExpansions,
                IdentityGroup::ProductRelation,
                IdentityGroup::MonomialBasis,
            ] {
                ensure(!r.group(g).is_empty() && r.group_passed(g), || format!("n={n}: {g:?} fails"))?;
            }
            ensure(r.group(IdentityGroup::PowerLadder).len() == n - 2, || format!("n={n}: power ladder incomplete"))?;
            checks += r.checks.len();
            Ok(())
        })?;
    }
    Ok(format!("{checks} identities hold at n=3,4,5"))
}

fn quivers(fx: &mut Fixtures) -> Verdict {
    let mut scalars = Vec::new();
    for n in [3, 4] {
        fx.timed(n, |fx| {
            let alg = fx.algebra(RingFamily::H0, n)?;
            for block in 0..n {
                let r = quiver_check_h0(&alg, block).map_err(err)?;
                ensure(r.passed, || format!("n={n} block {block}: {:?}", r.failures))?;
                ensure(r.arrow_count == 2 * n && r.crown, || format!("n={n} block {block}: {} arrows", r.arrow_count))?;
                ensure(r.alpha_paths_vanish && r.beta_paths_vanish && r.commutation_is_q, || {
                    format!("n={n} block {block}: relations fail")
                })?;
                scalars.extend(r.commutation_q_exponents.iter().map(|e| e.map_or("not a power of q".to_string(), |k| format!("q^{k}"))));
            }
            Ok(())
        })?;
    }
    scalars.sort();
    scalars.dedup();
    Ok(format!("2n-arrow crowns, relations vanish; measured commutation scalars {scalars:?}"))
}

/// A random invertible matrix with cyclotomic entries: permuted L·D·U with unit triangular factors.
fn random_invertible(alg: &Algebra, dim: usize, rng: &mut ChaCha8Rng) -> Mat {
    let f = alg.field();
    let n = f.order() as i64;
    let mut l = Mat::identity(f, dim);
    let mut u = Mat::identity(f, dim);
    let mut d = Mat::zeros(f, dim, dim);
    for i in 0..dim {
        d.set(i, i, f.q_pow(rng.gen_range(0..n)).scale_int(rng.gen_range(1..=3)));
        for j in 0..i {
            l.set(i, j, f.from_int(rng.gen_range(-2..=2)));
            u.set(j, i, &f.from_int(rng.gen_range(-1..=1)) + &f.q_pow(rng.gen_range(0..n)).scale_int(rng.gen_range(0..=1)));
        }
    }
    let mut perm: Vec<usize> = (0..dim).collect();
    for i in (1..dim).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut p = Mat::zeros(f, dim, dim);
    for (i, &j) in perm.iter().enumerate() {
        p.set(i, j, f.one());
    }
    p.mul(&l).unwrap().mul(&d).unwrap().mul(&u).unwrap()
}

fn robustness(fx: &mut Fixtures) -> Verdict {
    let mut trials = 0;
    let mut simples = 0;
    let mut tensors = 0;
    for fam in FAMILIES {
        fx.timed(3, |fx| {
            let cat = fx.catalog(fam, 3)?;
            let alg = cat.alg();
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ fam as u64);
            for t in 0..20 {
                let k = cat.simples().len();
                let (i, j) = (rng.gen_range(0..k), rng.gen_range(0..k));
                let m: Module = match t % 3 {
                    0 => cat.pims()[i].clone(),
                    1 => direct_sum(alg, &cat.pims()[i], &cat.simples()[j]).map_err(err)?,
                    _ => tensor_module(alg, &cat.simples()[i], &cat.simples()[j]).map_err(err)?,
                };
                let moved = m.change_basis(alg, &random_invertible(alg, m.dim(), &mut rng)).map_err(err)?;
                let before = cat.decompose(&m).map_err(err)?;
                let after = cat.decompose(&moved).map_err(err)?;
                ensure(before == after, || format!("{fam} trial {t}: {before:?} became {after:?}"))?;
                trials += 1;
            }
            Ok(())
        })?;
    }
    for fam in FAMILIES {
        for n in [3, 4] {
            fx.timed(n, |fx| {
                let cat = fx.catalog(fam, n)?;
                for (s, m) in cat.simples().iter().enumerate() {
                    let h = hom_dim(cat.alg(), m, m).map_err(err)?;
                    ensure(h == 1, || format!("{fam} n={n}: End({}) has dimension {h}", cat.simple_label(s)))?;
                    simples += 1;
                }
                for l in cat.basis_labels() {
                    let d = cat.module_for(l).map_err(err)?.dim();
                    ensure(d == fam.label_dim(n, l), || format!("{fam} n={n}: {l} has dimension {d}"))?;
                }
                let t = fx.computed(fam, n)?;
                for &a in t.basis() {
                    for &b in t.basis() {
                        let prod: &RingElt = t.get(a, b).map_err(err)?;
                        let want = (fam.label_dim(n, a) * fam.label_dim(n, b)) as i64;
                        ensure(prod.dim(fam, n) == want, || format!("{fam} n={n}: {a} ⊗ {b} = {prod} has the wrong dimension"))?;
                        tensors += 1;
                    }
                }
                Ok(())
            })?;
        }
    }
    Ok(format!("{trials} basis-change trials, {simples} simples split, {tensors} tensor dimensions exact"))
}

fn performance(fx: &mut Fixtures) -> Verdict {
    let s3 = fx.seconds.get(&3).copied().unwrap_or(0.0);
    let s4 = fx.seconds.get(&4).copied().unwrap_or(0.0);
    ensure(s3 < 120.0, || format!("n=3 suite took {s3:.1}s"))?;
    ensure(s4 < 900.0, || format!("n=4 suite took {s4:.1}s"))?;
    let bench = Path::new(env!("CARGO_MANIFEST_DIR")).join("../bench/benches/kernels.rs");
    ensure(bench.exists(), || format!("benchmark harness missing at {}", bench.display()))?;
    Ok(format!("n=3 suite {s3:.1}s, n=4 suite {s4:.1}s, n=5 parts {:.1}s; benchmark harness present", fx.seconds.get(&5).copied().unwrap_or(0.0)))
}

fn main() {
    let criteria: [(&str, Criterion); 9] = [
        ("Hopf axioms", hopf_axioms),
        ("structure facts", structure_facts),
        ("fusion tables match module decompositions", fusion_equivalence),
        ("ring presentations", presentations),
        ("class algebra radicals", class_radicals),
        ("identity suite", identity_suite),
        ("block quivers", quivers),
        ("robustness", robustness),
        ("performance envelope", performance),
    ];
    let mut fx = Fixtures::default();
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(|| run(&mut fx))).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t0.elapsed().as_secs_f64();
        match verdict {
            Ok(summary) => println!("criterion {}: PASS  {title}  [{secs:.1}s]  {summary}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title}  [{secs:.1}s]  {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
