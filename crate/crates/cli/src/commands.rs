use std::sync::Arc;

use serde_json::json;

use projring::green::{closed_form_with_rule, crosscheck, FusionTable, RingElt, RingFamily};
use projring::hopf::{
    center_and_blocks, hopf_ideal_check, integrals_and_symmetry, radical_report, structure_constants, verify_hopf_axioms,
    Sampling,
};
use projring::repn::{hom_dim, Catalog, Label};
use projring::{Algebra, AlgebraSpec, Error, Family, FiniteAlgebra, Result};

use crate::outcome::Outcome;
use crate::{AlgebraAction, Cli, Command, ExportKind, ModulesAction};

/// Seeded sample size for axiom sweeps on algebras too large to enumerate.
const AXIOM_SAMPLES: usize = 500;
/// Associativity triples checked on a fusion table; n = 3 tables are enumerated in full.
const ASSOC_TRIPLES: usize = 6000;

pub fn run(cli: &Cli) -> Result<Outcome> {
    let mut out = Outcome::new();
    match &cli.command {
        Command::Algebra { action: AlgebraAction::Verify } => algebra_verify(cli, &mut out)?,
        Command::Modules { action: ModulesAction::List } => modules_list(cli, &mut out)?,
        Command::Fuse { a, b } => fuse(cli, a, b, &mut out)?,
        Command::Table => table(cli, &mut out)?,
        Command::Verify { target } => crate::targets::verify(cli, target, &mut out)?,
        Command::Export { what } => export(cli, *what, &mut out)?,
    }
    Ok(out)
}

pub fn algebra_json(spec: &AlgebraSpec) -> serde_json::Value {
    json!({ "family": spec.family, "n": spec.n, "p": spec.p.as_ref().map(|p| p.to_string()), "name": spec.name() })
}

pub fn build(spec: &AlgebraSpec) -> Result<Arc<Algebra>> {
    Ok(Arc::new(Algebra::build(spec)?))
}

pub fn catalog(spec: &AlgebraSpec, seed: u64) -> Result<Catalog> {
    Catalog::build(build(spec)?, seed)
}

/// Expected number of blocks: one for 𝓗_n(q), n for H_n(0,q), n(n+1)/2 otherwise.
pub fn expected_blocks(spec: &AlgebraSpec) -> Option<usize> {
    let n = spec.n;
    match spec.family {
        Family::TensorTaft => Some(1),
        Family::Hpq if spec.is_h0() => Some(n),
        Family::Hpq => Some(n * (n + 1) / 2),
        _ => None,
    }
}

/// The closed-form table; unless --symbolic, also the computed one and their comparison.
pub fn fusion_tables(cli: &Cli, family: RingFamily, n: usize, out: &mut Outcome) -> Result<FusionTable> {
    let closed = FusionTable::closed_form(family, n)?;
    if cli.symbolic {
        out.put("table_source", "closed form");
        return Ok(closed);
    }
    let cat = catalog(&family.spec(n)?, cli.seed)?;
    let computed = FusionTable::computed(&cat)?;
    let r = crosscheck(&closed, &computed);
    let detail = match r.mismatches.first() {
        None => format!("{} entries", r.entries_compared),
        Some(m) => format!("{} ⊗ {}: closed form {}, computed {}", m.a, m.b, m.closed, m.computed),
    };
    out.check_detail("closed-form table equals the decomposed tensor products", r.passed, detail);
    out.put("table_source", "closed form, crosschecked against module decompositions");
    out.put("crosscheck", json!({ "entries_compared": r.entries_compared, "mismatches": r.mismatches, "rule_census": r.rule_census }));
    Ok(closed)
}

fn algebra_verify(cli: &Cli, out: &mut Outcome) -> Result<()> {
    let spec = cli.spec()?;
    let alg = build(&spec)?;
    let n = spec.n;
    out.put("algebra", algebra_json(&spec));
    let axioms = verify_hopf_axioms(&alg, Sampling::at_least(AXIOM_SAMPLES, cli.seed, alg.dim()));
    out.check_detail("Hopf axioms", axioms.passed, format!("{} basis elements, full = {}", axioms.basis_elements_checked, axioms.full_enumeration));
    out.line(format!("{}: dimension {}", spec.name(), alg.dim()));
    out.put("axioms", &axioms);
    if alg.ngen() != 4 {
        out.check("dimension n^2", alg.dim() == n * n);
        return Ok(());
    }
    out.check("dimension n^4", alg.dim() == n.pow(4));

    let (j, rad) = radical_report(&alg)?;
    out.line(format!("radical dimension {}, Loewy length {}", rad.radical_dim, rad.loewy_length));
    out.check("quotient by the trace-form radical is semisimple", rad.quotient_semisimple);
    if !spec.is_h1() {
        out.check_detail("Loewy length 2n-1", rad.loewy_length == 2 * n - 1, rad.loewy_length.to_string());
        out.check("basic: quotient has dimension n^2", rad.quotient_dim == n * n);
        out.check("radical is the ideal generated by a and d", rad.equals_ideal_of_a_d == Some(true));
        let h = hopf_ideal_check(&alg, &j);
        out.check("radical is a Hopf ideal", h.passed());
        out.put("radical_hopf_ideal", &h);
    }
    out.put("radical", &rad);

    let ints = integrals_and_symmetry(&alg)?;
    out.line(format!("unimodular: {}, S^2 inner: {}", ints.unimodular, ints.s2_inner_by_b && ints.s2_inner_by_c));
    match spec.family {
        Family::TensorTaft => {
            out.check("not unimodular", !ints.unimodular);
        }
        Family::Hpq if spec.is_h0() => {
            out.check("unimodular with S^2 inner (symmetric)", ints.unimodular && ints.s2_inner_by_b && ints.s2_inner_by_c);
        }
        _ => {}
    }
    out.put("integrals", &ints);

    let blocks = center_and_blocks(&alg)?;
    out.line(format!("center dimension {}, {} blocks", blocks.center_dim, blocks.block_count));
    if let Some(want) = expected_blocks(&spec) {
        out.check_detail("block count", blocks.block_count == want, format!("{} found, {want} expected", blocks.block_count));
    }
    if let Some(c) = &blocks.central_idempotents {
        out.check("explicit central idempotents are orthogonal, complete, central and primitive", c.family.passed() && c.central && c.primitive);
    }
    out.put("blocks", &blocks);
    Ok(())
}

fn labels_text(v: &[usize], cat: &Catalog) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| **c > 0)
        .map(|(s, c)| if *c == 1 { cat.simple_label(s).to_string() } else { format!("{c}·{}", cat.simple_label(s)) })
        .collect();
    parts.join(" + ")
}

fn modules_list(cli: &Cli, out: &mut Outcome) -> Result<()> {
    let spec = cli.spec()?;
    let cat = catalog(&spec, cli.seed)?;
    let alg = cat.alg();
    out.put("algebra", algebra_json(&spec));
    let mut rows = vec![["label", "kind", "dim", "top", "composition", "loewy_length"].map(String::from).to_vec()];
    let mut listed = Vec::new();
    let mut total = 0;
    let mut tops_ok = true;
    let mut ends_ok = true;
    for (s, simple) in cat.simples().iter().enumerate() {
        let label = cat.simple_label(s);
        ends_ok &= hom_dim(alg, simple, simple)? == 1;
        let pim = &cat.pims()[s];
        let fl = cat.radical_filtration(pim)?;
        let top = fl.top().map(|t| t.to_vec()).unwrap_or_default();
        tops_ok &= top.iter().enumerate().all(|(u, &c)| c == usize::from(u == s));
        total += simple.dim() * pim.dim();
        let proj = cat.proj_label(s).unwrap_or(label);
        out.line(format!("{label}: dim {}; cover {proj}: dim {}, Loewy length {}", simple.dim(), pim.dim(), fl.loewy_length()));
        rows.push(vec![label.to_string(), "simple".into(), simple.dim().to_string(), label.to_string(), label.to_string(), "1".into()]);
        if cat.proj_label(s).is_some() {
            rows.push(vec![
                proj.to_string(),
                "projective".into(),
                pim.dim().to_string(),
                labels_text(&top, &cat),
                labels_text(&fl.composition, &cat),
                fl.loewy_length().to_string(),
            ]);
        }
        listed.push(json!({
            "simple": label,
            "simple_dim": simple.dim(),
            "cover": proj,
            "cover_dim": pim.dim(),
            "cover_layers": fl.layers,
            "cover_composition": fl.composition,
            "cover_loewy_length": fl.loewy_length(),
        }));
    }
    out.check("End(S) is one-dimensional for every simple S", ends_ok);
    out.check("every projective cover has a simple top", tops_ok);
    out.check_detail("sum of dim S · dim P(S) is the algebra dimension", total == alg.dim(), format!("{total}"));
    out.put("modules", listed);
    out.put("cartan", cat.cartan());
    if let Some(c) = cat.calibration() {
        out.put("calibration", c);
    }
    out.csv = Some(rows);
    Ok(())
}

fn parse_label(s: &str, fam: RingFamily, n: usize) -> Result<Label> {
    fam.check_label(n, s.parse()?)
}

fn fuse(cli: &Cli, a: &str, b: &str, out: &mut Outcome) -> Result<()> {
    let spec = cli.spec()?;
    let fam = RingFamily::of(&spec)?;
    let (la, lb) = (parse_label(a, fam, spec.n)?, parse_label(b, fam, spec.n)?);
    let (closed, rule) = closed_form_with_rule(fam, spec.n, la, lb)?;
    out.put("algebra", algebra_json(&spec));
    out.put("a", la).put("b", lb).put("rule", rule);
    out.put("closed_form", json!({ "text": closed.to_string(), "terms": closed }));
    out.line(format!("{la} ⊗ {lb} = {closed}"));
    out.line(format!("  closed form: {closed}"));
    let mut csv = vec![vec!["mode".to_string(), "label".into(), "mult".into()]];
    csv.extend(closed.iter().map(|(l, c)| vec!["closed-form".into(), l.to_string(), c.to_string()]));
    if !cli.symbolic {
        let cat = catalog(&spec, cli.seed)?;
        let d = cat.decompose_tensor(cat.module_for(la)?, cat.module_for(lb)?)?;
        let computed = RingElt::from(&d);
        out.line(format!("  computed:    {computed}"));
        out.put("computed", json!({ "text": computed.to_string(), "terms": computed }));
        out.check("closed form equals the decomposed tensor product", computed == closed);
        csv.extend(computed.iter().map(|(l, c)| vec!["computed".into(), l.to_string(), c.to_string()]));
    }
    let dim = (fam.label_dim(spec.n, la) * fam.label_dim(spec.n, lb)) as i64;
    out.check("dimensions multiply", closed.dim(fam, spec.n) == dim);
    out.csv = Some(csv);
    Ok(())
}

fn table_csv(t: &FusionTable) -> Vec<Vec<String>> {
    let mut rows = vec![["a", "b", "label", "mult"].map(String::from).to_vec()];
    for e in t.export().entries {
        for lm in e.result {
            rows.push(vec![e.a.to_string(), e.b.to_string(), lm.label.to_string(), lm.mult.to_string()]);
        }
    }
    rows
}

fn table(cli: &Cli, out: &mut Outcome) -> Result<()> {
    let spec = cli.spec()?;
    let fam = RingFamily::of(&spec)?;
    let t = fusion_tables(cli, fam, spec.n, out)?;
    let axioms = t.ring_axioms(ASSOC_TRIPLES, cli.seed);
    out.check("commutative", axioms.commutative);
    out.check("unit", axioms.unit);
    out.check_detail("associative", axioms.associative, format!("{} triples, all = {}", axioms.triples_checked, axioms.all_triples));
    out.check("dimensions multiply", axioms.dims_multiply);
    out.check("coefficients nonnegative", axioms.nonnegative);
    out.put("algebra", algebra_json(&spec));
    out.put("ring_axioms", &axioms);
    out.put("table", t.export());
    for &a in t.basis() {
        for &b in t.basis() {
            out.line(format!("{a} ⊗ {b} = {}", t.get(a, b)?));
        }
    }
    out.csv = Some(table_csv(&t));
    Ok(())
}

fn export(cli: &Cli, what: ExportKind, out: &mut Outcome) -> Result<()> {
    let spec = cli.spec()?;
    out.put("algebra", algebra_json(&spec));
    match what {
        ExportKind::Structure => {
            let alg = build(&spec)?;
            let sc = structure_constants(&alg);
            let mut rows = vec![["u", "v", "w", "coefficient"].map(String::from).to_vec()];
            for (u, v, terms) in &sc.products {
                for (w, c) in terms {
                    rows.push(vec![u.to_string(), v.to_string(), w.to_string(), c.clone()]);
                }
            }
            out.line(format!("{}: {} nonzero products", spec.name(), sc.products.len()));
            out.put("structure_constants", sc);
            out.csv = Some(rows);
        }
        ExportKind::Modules => {
            let cat = catalog(&spec, cli.seed)?;
            let mut rows = vec![["label", "generator", "row", "column", "value"].map(String::from).to_vec()];
            let mut mods = Vec::new();
            for l in cat.basis_labels() {
                let e = cat.module_for(l)?.export();
                for (g, entries) in &e.acts {
                    for (r, c, v) in entries {
                        rows.push(vec![l.to_string(), g.clone(), r.to_string(), c.to_string(), v.clone()]);
                    }
                }
                out.line(format!("{l}: dimension {}", e.dim));
                mods.push(e);
            }
            out.put("modules", mods);
            out.csv = Some(rows);
        }
        ExportKind::Table => {
            let fam = RingFamily::of(&spec)?;
            let t = fusion_tables(cli, fam, spec.n, out)?;
            out.line(format!("{} × {} table", t.basis().len(), t.basis().len()));
            out.put("table", t.export());
            out.csv = Some(table_csv(&t));
        }
    }
    Ok(())
}

/// Error for a target run against the wrong algebra.
pub fn wrong_family(target: &str, spec: &AlgebraSpec, want: &str) -> Error {
    Error::Usage(format!("target {target} needs {want}, got {}", spec.name()))
}
