use serde_json::json;

use projring::green::{
    class_algebra_radical, crosscheck_where, identity_suite_h1, quiver_check_h0, verify_presentation, FusionRule, FusionTable,
    IdentityGroup, RingFamily,
};
use projring::hopf::{
    blocks_isomorphic_h0, center_and_blocks, hopf_ideal_check, integrals_and_symmetry, radical_report, tensor_iso_check,
};
use projring::repn::Label;
use projring::{AlgebraSpec, Error, Family, Result};

use crate::commands::{algebra_json, build, catalog, expected_blocks, fusion_tables, wrong_family};
use crate::outcome::Outcome;
use crate::Cli;

#[derive(Clone, Copy, Debug)]
enum Target {
    Presentation(RingFamily),
    SimpleFusion(RingFamily),
    ProjFusion(RingFamily),
    ClassRadical(RingFamily),
    Symmetric,
    BlocksIsomorphic,
    Radical(RingFamily),
    ProjectiveCovers,
    NonbasicFusion,
    Identities(IdentityGroup),
    Quiver,
    Blocks,
    TensorIso,
}

/// Target names accepted on the command line.
const TARGETS: &[(&str, Target)] = &[
    ("thm3.8", Target::Presentation(RingFamily::TensorTaft)),
    ("thm4.9", Target::Presentation(RingFamily::H0)),
    ("thm5.9", Target::Presentation(RingFamily::H1)),
    ("prop3.6", Target::SimpleFusion(RingFamily::TensorTaft)),
    ("prop3.7", Target::ProjFusion(RingFamily::TensorTaft)),
    ("prop3.9", Target::ClassRadical(RingFamily::TensorTaft)),
    ("prop4.1", Target::Symmetric),
    ("prop4.6", Target::BlocksIsomorphic),
    ("prop4.7", Target::SimpleFusion(RingFamily::H0)),
    ("prop4.8", Target::ProjFusion(RingFamily::H0)),
    ("prop4.10", Target::ClassRadical(RingFamily::H0)),
    ("cor3.4", Target::Radical(RingFamily::TensorTaft)),
    ("cor3.5", Target::ProjectiveCovers),
    ("cor4.4", Target::Radical(RingFamily::H0)),
    ("lemma5.1", Target::NonbasicFusion),
    ("lemma5.3", Target::Identities(IdentityGroup::PowerLadder)),
    ("cor5.4", Target::Identities(IdentityGroup::Recurrences)),
    ("prop5.5", Target::Identities(IdentityGroup::Generation)),
    ("lemma5.6", Target::Identities(IdentityGroup::ClosedExpansions)),
    ("prop5.7", Target::Identities(IdentityGroup::ProductRelation)),
    ("cor5.8", Target::Identities(IdentityGroup::MonomialBasis)),
    ("quiver4", Target::Quiver),
    ("blocks", Target::Blocks),
    ("tensor-iso", Target::TensorIso),
];

pub fn target_names() -> Vec<&'static str> {
    TARGETS.iter().map(|(n, _)| *n).collect()
}

/// The algebra for a target tied to one ring family; --family/--p may restate it but not change it.
fn ring_spec(cli: &Cli, name: &str, fam: RingFamily) -> Result<AlgebraSpec> {
    let spec = cli.spec_or(|n| fam.spec(n))?;
    match RingFamily::of(&spec) {
        Ok(f) if f == fam => Ok(spec),
        _ => Err(wrong_family(name, &spec, &fam.to_string())),
    }
}

pub fn verify(cli: &Cli, name: &str, out: &mut Outcome) -> Result<()> {
    let target = TARGETS
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Usage(format!("unknown target '{name}'; known: {}", target_names().join(", "))))?;
    out.put("target", name);
    match target {
        Target::Presentation(fam) => presentation(cli, name, fam, out),
        Target::SimpleFusion(fam) => fusion_rules(cli, name, fam, &[FusionRule::SimpleSimple, FusionRule::SimpleProj], out),
        Target::ProjFusion(fam) => {
            fusion_rules(cli, name, fam, &[FusionRule::ProjProjAll, FusionRule::ProjProjDiagonal], out)
        }
        Target::ClassRadical(fam) => class_radical(cli, name, fam, out),
        Target::Symmetric => symmetric(cli, name, out),
        Target::BlocksIsomorphic => {
            let spec = ring_spec(cli, name, RingFamily::H0)?;
            out.put("algebra", algebra_json(&spec));
            let r = blocks_isomorphic_h0(&*build(&spec)?)?;
            out.check_detail("blocks share one multiplication table", r.passed, format!("block dimensions {:?}", r.block_dims));
            out.line(format!("{} blocks of dimension {}", r.block_dims.len(), r.block_dims.first().copied().unwrap_or(0)));
            out.put("blocks", &r);
            Ok(())
        }
        Target::Radical(fam) => radical(cli, name, fam, out),
        Target::ProjectiveCovers => projective_covers(cli, name, out),
        Target::NonbasicFusion => nonbasic_fusion(cli, name, out),
        Target::Identities(g) => identities(cli, name, g, out),
        Target::Quiver => quiver(cli, name, out),
        Target::Blocks => {
            let spec = cli.spec()?;
            out.put("algebra", algebra_json(&spec));
            let r = center_and_blocks(&*build(&spec)?)?;
            let want = expected_blocks(&spec).ok_or_else(|| wrong_family(name, &spec, "a four-generator family"))?;
            out.check_detail("block count", r.block_count == want, format!("{} found, {want} expected", r.block_count));
            out.line(format!("block_count {}", r.block_count));
            out.put("block_count", r.block_count);
            out.put("center", &r);
            Ok(())
        }
        Target::TensorIso => {
            let spec = cli.spec_or(projring::AlgebraSpec::tensor_taft)?;
            if spec.family != Family::TensorTaft {
                return Err(wrong_family(name, &spec, "tensor-taft"));
            }
            out.put("algebra", algebra_json(&spec));
            let r = tensor_iso_check(spec.n)?;
            out.check_detail("generator assignment is a Hopf algebra isomorphism", r.passed, r.first_failure.clone().unwrap_or_else(|| format!("{} products", r.products_checked)));
            out.put("isomorphism", &r);
            Ok(())
        }
    }
}

fn presentation(cli: &Cli, name: &str, fam: RingFamily, out: &mut Outcome) -> Result<()> {
    let spec = ring_spec(cli, name, fam)?;
    out.put("algebra", algebra_json(&spec));
    let t = fusion_tables(cli, fam, spec.n, out)?;
    let r = verify_presentation(&t)?;
    for v in &r.variables {
        out.line(v);
    }
    for rel in &r.relations {
        out.check_detail(format!("{} vanishes", rel.relation), rel.vanishes, rel.value.to_string());
    }
    out.check_detail(
        "normal monomials form a ℤ-basis",
        r.unimodular && r.basis_size == r.expected_rank,
        format!("{}×{} matrix, determinant {}", r.ring_rank, r.basis_size, r.determinant),
    );
    out.check_detail("rewriting reproduces the ring product", r.products_agree, format!("{} pairs", r.products_checked));
    out.put("presentation", &r);
    Ok(())
}

fn fusion_rules(cli: &Cli, name: &str, fam: RingFamily, rules: &[FusionRule], out: &mut Outcome) -> Result<()> {
    let spec = ring_spec(cli, name, fam)?;
    out.put("algebra", algebra_json(&spec));
    let closed = FusionTable::closed_form(fam, spec.n)?;
    let computed = FusionTable::computed(&catalog(&spec, cli.seed)?)?;
    let r = crosscheck_where(&closed, &computed, |rule| rules.contains(&rule));
    let detail = match r.mismatches.first() {
        None => format!("{} entries", r.entries_compared),
        Some(m) => format!("{} ⊗ {}: closed form {}, computed {}", m.a, m.b, m.closed, m.computed),
    };
    out.check_detail("closed form equals the decomposed tensor product on every entry", r.passed, detail);
    let (a, b) = match fam {
        _ if rules.contains(&FusionRule::SimpleSimple) => (Label::S(1, 0), Label::P(0, 1)),
        _ => (Label::P(0, 0), Label::P(1, 0)),
    };
    out.line(format!("e.g. {a} ⊗ {b} = {}", closed.get(a, b)?));
    out.put("crosscheck", &r);
    Ok(())
}

fn class_radical(cli: &Cli, name: &str, fam: RingFamily, out: &mut Outcome) -> Result<()> {
    let spec = ring_spec(cli, name, fam)?;
    out.put("algebra", algebra_json(&spec));
    let t = fusion_tables(cli, fam, spec.n, out)?;
    let r = class_algebra_radical(&t)?;
    out.check_detail("radical equals the ideal of the stated generators", r.radical_equals_generated_ideal, format!("dimension {}", r.radical_dim));
    out.check("stated generators square to zero", r.generators_square_to_zero);
    out.check_detail("quotient dimension", r.quotient_dim == r.expected_quotient_dim, format!("{} (expected {})", r.quotient_dim, r.expected_quotient_dim));
    let c = &r.idempotents;
    out.check_detail(
        "idempotent family is orthogonal, complete and primitive modulo the radical",
        c.idempotent && c.orthogonal && c.complete && c.primitive && c.count == r.expected_quotient_dim,
        format!("{} idempotents", c.count),
    );
    out.line(format!("R_p has dimension {}, radical {}, quotient {}", r.dim, r.radical_dim, r.quotient_dim));
    out.put("radical", &r);
    Ok(())
}

fn symmetric(cli: &Cli, name: &str, out: &mut Outcome) -> Result<()> {
    let spec = ring_spec(cli, name, RingFamily::H0)?;
    out.put("algebra", algebra_json(&spec));
    let r = integrals_and_symmetry(&*build(&spec)?)?;
    out.check("unimodular", r.unimodular);
    out.check("S^2 is conjugation by b", r.s2_inner_by_b);
    out.check("S^2 is conjugation by c", r.s2_inner_by_c);
    let tensor = integrals_and_symmetry(&*build(&AlgebraSpec::tensor_taft(spec.n)?)?)?;
    out.check("the tensor-product algebra is not unimodular", !tensor.unimodular);
    out.put("integrals", &r);
    out.put("tensor_integrals", &tensor);
    Ok(())
}

fn radical(cli: &Cli, name: &str, fam: RingFamily, out: &mut Outcome) -> Result<()> {
    let spec = ring_spec(cli, name, fam)?;
    out.put("algebra", algebra_json(&spec));
    let cat = catalog(&spec, cli.seed)?;
    let alg = cat.alg();
    let n = spec.n;
    let (j, r) = radical_report(alg)?;
    let one_dim = cat.simples().iter().all(|s| s.dim() == 1);
    out.check_detail("basic: n^2 simples, all one-dimensional", one_dim && cat.simples().len() == n * n, format!("{} simples", cat.simples().len()));
    let h = hopf_ideal_check(alg, &j);
    out.check("radical is a Hopf ideal", h.passed());
    out.check_detail("Loewy length 2n-1", r.loewy_length == 2 * n - 1, r.loewy_length.to_string());
    out.line(format!("radical dimension {}, Loewy length {}", r.radical_dim, r.loewy_length));
    out.put("radical", &r);
    out.put("hopf_ideal", &h);
    Ok(())
}

fn projective_covers(cli: &Cli, name: &str, out: &mut Outcome) -> Result<()> {
    let spec = ring_spec(cli, name, RingFamily::TensorTaft)?;
    out.put("algebra", algebra_json(&spec));
    let cat = catalog(&spec, cli.seed)?;
    let n = spec.n;
    let mut rows = Vec::new();
    let (mut dims, mut tops, mut comps) = (true, true, true);
    for s in 0..cat.simples().len() {
        let p = &cat.pims()[s];
        let fl = cat.radical_filtration(p)?;
        dims &= p.dim() == n * n;
        tops &= fl.top().is_some_and(|t| t.iter().enumerate().all(|(u, &c)| c == usize::from(u == s)));
        comps &= fl.composition.iter().all(|&c| c == 1);
        rows.push(json!({ "cover": cat.proj_label(s), "dim": p.dim(), "layer_dims": fl.layer_dims }));
    }
    out.check("every projective cover has dimension n^2", dims);
    out.check("every projective cover has a simple top", tops);
    out.check("every simple occurs once in every projective cover", comps);
    out.put("covers", rows);
    Ok(())
}

fn nonbasic_fusion(cli: &Cli, name: &str, out: &mut Outcome) -> Result<()> {
    let spec = ring_spec(cli, name, RingFamily::H1)?;
    out.put("algebra", algebra_json(&spec));
    let t = fusion_tables(cli, RingFamily::H1, spec.n, out)?;
    let census = t.rule_census();
    let missing: Vec<String> =
        FusionRule::H1_RULES.iter().filter(|r| !census.contains_key(r)).map(|r| format!("{r:?}")).collect();
    if spec.n >= 4 {
        out.check_detail("every product rule is exercised", missing.is_empty(), format!("missing: {missing:?}"));
    } else {
        out.line(format!("rules that need n ≥ 4: {missing:?}"));
    }
    let axioms = t.ring_axioms(6000, cli.seed);
    out.check("closed-form products are commutative, unital and dimension-graded", axioms.commutative && axioms.unit && axioms.dims_multiply && axioms.nonnegative);
    out.put("rule_census", census);
    Ok(())
}

fn identities(cli: &Cli, name: &str, g: IdentityGroup, out: &mut Outcome) -> Result<()> {
    let spec = ring_spec(cli, name, RingFamily::H1)?;
    out.put("algebra", algebra_json(&spec));
    let t = fusion_tables(cli, RingFamily::H1, spec.n, out)?;
    let r = identity_suite_h1(&t)?;
    let items = r.group(g);
    if items.is_empty() {
        out.check("identity group is nonempty", false);
    }
    for c in &items {
        out.check_detail(&c.item, c.holds, format!("{} vs {}", c.lhs, c.rhs));
    }
    if g == IdentityGroup::Generation {
        for (l, p) in &r.expansions {
            out.line(format!("{l} = {p}"));
        }
        out.put("expansions", &r.expansions);
    }
    out.put("group", g);
    out.put("identities", items);
    Ok(())
}

fn quiver(cli: &Cli, name: &str, out: &mut Outcome) -> Result<()> {
    let spec = ring_spec(cli, name, RingFamily::H0)?;
    out.put("algebra", algebra_json(&spec));
    let alg = build(&spec)?;
    let mut reports = Vec::new();
    for block in 0..spec.n {
        let r = quiver_check_h0(&alg, block)?;
        out.check_detail(format!("block {block}: {}-arrow crown", 2 * spec.n), r.crown && r.arrow_count == 2 * spec.n, format!("{} arrows", r.arrow_count));
        out.check_detail(format!("block {block}: commutation scalar is q"), r.commutation_is_q, r.commutation_scalars.join(", "));
        out.check(format!("block {block}: paths of length n vanish, shorter ones do not"), r.alpha_paths_vanish && r.beta_paths_vanish && r.shorter_paths_nonzero);
        reports.push(r);
    }
    out.put("blocks", reports);
    Ok(())
}
