//! Check suites behind each CLI verb. Every suite returns a timed
//! [`RunOutcome`] whose checks are deterministic for a fixed seed.

use crate::output::RunOutcome;
use prerigid_core::cat::{check_adjunction, HomSpace, HomSpaces, Monoidal, Op};
use prerigid_core::diagram::{
    functorcat_predual, nat_space, seeded_diagram, DiagCat, DiagramFunctor, DiagramPreduals,
    FiniteIndexCategory,
};
use prerigid_core::engine::{
    compute_units, pairing_image, uniqueness_iso, verify_predual, ClosedPreduals, PreRigid,
};
use prerigid_core::fam::{
    fam_closed_alpha, fam_closed_beta, fam_internal_hom, fam_predual_converse_check,
    maf_obstruction_witness, Fam, FamObject, FamPreduals, Maf, One, OnePreduals,
};
use prerigid_core::famrel::{FamRel, FamRelPreduals};
use prerigid_core::finrel::{FinRel, FinSet, RelPreduals};
use prerigid_core::finvect::{FinVect, VecMor, VectPreduals};
use prerigid_core::graded::{
    graded_obj, not_closed_witness_graded, FiniteMonoid, Graded, GradedObj, GradedPreduals,
};
use prerigid_core::lift::{
    check_barop_identity, check_bialgebra, check_lax_coherence, colax_from_lax, dual_adjunction,
    dual_functor_lax, fixtures as lift_fixtures, tambara_truncated, BialgebraObject,
    CoalgebraObject, DualFunctor,
};
use prerigid_core::matrix::Mat;
use prerigid_core::pomonoid::{
    check_derived_laws, check_proto_inverse_uniqueness, classify, classify_oracle,
    decimals_counterexample_check, finite_sentence_check, Pomonoid,
};
use prerigid_core::pregroup::{brute_force_reduce, free_pregroup_reduce, Lexicon, Verdict};
use prerigid_core::report::Report;
use prerigid_core::rng::SplitMix64;

/// Relation pre-rigidity: exhaustive bijections and dagger round-trips on
/// carriers up to `max_size`.
pub fn finrel_suite(seed: u64, max_size: usize) -> RunOutcome {
    let mut out = RunOutcome::new(format!("finrel --max-size {max_size}"), seed);
    let cat = FinRel::default();
    let pr = RelPreduals;
    let tests = cat.test_objects(max_size);
    for x in &tests {
        out.section(|| {
            let pd = pr
                .predual(&cat, x)
                .expect("relations always have pre-duals");
            let dagger = |t_obj: &prerigid_core::finrel::FinSet, t: &prerigid_core::finrel::Rel| {
                pr.dagger(&cat, t_obj, x, t)
            };
            let mut report = verify_predual(&cat, x, &pd, &tests, Some(&dagger));
            let mut roundtrips = true;
            for t_obj in &tests {
                let src = cat.tensor_obj(t_obj, x);
                if let HomSpace::Enumerated(ts) = cat.hom(&src, &cat.unit()) {
                    for t in ts {
                        let dag = pr.dagger(&cat, t_obj, x, &t).expect("formula dagger");
                        if pairing_image(&cat, &pd, x, &dag) != t {
                            roundtrips = false;
                        }
                    }
                }
            }
            if roundtrips {
                report.pass(
                    "rel.dagger.roundtrip",
                    "relation daggers round-trip exactly on all enumerated pairings",
                    &format!("{} test objects", tests.len()),
                );
            } else {
                report.fail(
                    "rel.dagger.roundtrip",
                    "relation daggers round-trip exactly",
                    "round trip failed".to_string(),
                    &format!("{} test objects", tests.len()),
                );
            }
            report
        });
    }
    out
}

/// Matrix-space pre-rigidity with units.
pub fn finvect_suite(seed: u64, max_dim: usize) -> RunOutcome {
    let mut out = RunOutcome::new(format!("finvect --max-dim {max_dim}"), seed);
    let cat = FinVect;
    let pr = VectPreduals;
    let tests = cat.test_objects(max_dim);
    for x in tests.clone() {
        out.section(|| {
            let pd = pr.predual(&cat, &x).expect("canonical pre-dual");
            verify_predual(&cat, &x, &pd, &tests, None)
        });
    }
    out.section(|| {
        let mut report = Report::new();
        let set = format!("dims 1..={max_dim}");
        for x in 1..=max_dim {
            match compute_units(&cat, &pr, &x) {
                Ok(units) => report.check_eq(
                    "vect.units.symmetric",
                    "both canonical comparisons into the double pre-dual coincide",
                    &set,
                    &units.eta,
                    &units.j,
                ),
                Err(e) => report.fail(
                    "vect.units.symmetric",
                    "units computable",
                    format!("{e}"),
                    &set,
                ),
            }
        }
        report
    });
    out
}

fn seeded_family(rng: &mut SplitMix64, max_len: usize, max_dim: usize) -> FamObject<FinVect> {
    let len = 1 + rng.below(max_len as u64) as usize;
    FamObject::new(
        (0..len)
            .map(|_| rng.below(max_dim as u64 + 1) as usize)
            .collect(),
    )
}

/// Family pre-duals, the product converse and closedness round-trips.
/// An explicit family (fiber dimensions) replaces the seeded samples when
/// provided.
pub fn fam_suite(seed: u64, samples: usize, explicit: Option<Vec<usize>>) -> RunOutcome {
    let mut out = RunOutcome::new(format!("fam --seed {seed}"), seed);
    let vect = FinVect;
    let fam = Fam::new(&vect);
    let mut rng = SplitMix64::new(seed);
    let tests = vec![
        fam.unit(),
        FamObject::new(vec![1usize]),
        FamObject::new(vec![2]),
        FamObject::new(vec![1, 2]),
        FamObject::new(vec![2, 1, 1]),
    ];
    let families: Vec<FamObject<FinVect>> = match &explicit {
        Some(dims) => vec![FamObject::new(dims.clone())],
        None => (0..samples)
            .map(|_| seeded_family(&mut rng, 3, 2))
            .collect(),
    };
    for (k, y) in families.into_iter().enumerate() {
        out.section(|| {
            let pd = FamPreduals.predual(&fam, &y).expect("family pre-dual");
            let mut report = verify_predual(&fam, &y, &pd, &tests, None);
            let projections: Vec<Mat> = (0..y.len())
                .map(|j| FamPreduals::projection(&y, j))
                .collect();
            report.merge(fam_predual_converse_check(
                &y,
                &pd,
                &projections,
                seed + k as u64,
            ));
            report
        });
    }
    out.section(|| {
        let mut report = Report::new();
        let set = "25 + 25 seeded samples".to_string();
        let mut ok = true;
        for i in 0..50usize {
            let x = seeded_family(&mut rng, 2, 2);
            let y = FamObject::new(
                (0..1 + rng.below(2) as usize)
                    .map(|_| 1 + rng.below(2) as usize)
                    .collect(),
            );
            let z = FamObject::new(
                (0..1 + rng.below(2) as usize)
                    .map(|_| 1 + rng.below(2) as usize)
                    .collect(),
            );
            if i % 2 == 0 {
                let xy = fam.tensor_obj(&x, &y);
                let index_map: Vec<usize> = (0..xy.len())
                    .map(|_| rng.below(z.len() as u64) as usize)
                    .collect();
                let comps: Vec<VecMor> = (0..xy.len())
                    .map(|p| VecMor::new(rng.matrix(z.fibers[index_map[p]], xy.fibers[p])))
                    .collect();
                let f = fam.mor(xy, z.clone(), index_map, comps);
                let g = fam_closed_alpha(&fam, &x, &y, &z, &f);
                ok &= fam_closed_beta(&fam, &y, &z, &g) == f;
            } else {
                let (_, ihom) = fam_internal_hom(&y, &z);
                let index_map: Vec<usize> = (0..x.len())
                    .map(|_| rng.below(ihom.len() as u64) as usize)
                    .collect();
                let comps: Vec<VecMor> = (0..x.len())
                    .map(|i| VecMor::new(rng.matrix(ihom.fibers[index_map[i]], x.fibers[i])))
                    .collect();
                let g = fam.mor(x.clone(), ihom, index_map, comps);
                let f = fam_closed_beta(&fam, &y, &z, &g);
                ok &= fam_closed_alpha(&fam, &x, &y, &z, &f) == g;
            }
        }
        if ok {
            report.pass(
                "fam.closed.roundtrip",
                "both adjunction round-trips are identities",
                &set,
            );
        } else {
            report.fail(
                "fam.closed.roundtrip",
                "both adjunction round-trips are identities",
                "a seeded sample failed".to_string(),
                &set,
            );
        }
        report
    });
    out
}

/// The obstruction for index-contravariant families over three bases.
pub fn maf_suite(seed: u64) -> RunOutcome {
    let mut out = RunOutcome::new("maf", seed);
    out.section(|| {
        let vect = FinVect;
        let maf = Maf::new(&vect);
        maf_obstruction_witness(
            &maf,
            &[FamObject::new(vec![1usize]), FamObject::new(vec![2, 1])],
        )
    });
    out.section(|| {
        let rel = FinRel::default();
        let maf = Maf::new(&rel);
        let s = FinSet::from_labels(&["a"]);
        maf_obstruction_witness(
            &maf,
            &[
                FamObject::new(vec![s.clone()]),
                FamObject::new(vec![s.clone(), s]),
            ],
        )
    });
    out.section(|| {
        let one = One;
        let maf = Maf::new(&one);
        maf_obstruction_witness(
            &maf,
            &[FamObject::new(vec![()]), FamObject::new(vec![(), ()])],
        )
    });
    out
}

/// Relation-indexed families over the terminal base.
pub fn famrel_suite(seed: u64, max_size: usize) -> RunOutcome {
    let mut out = RunOutcome::new(format!("famrel --max-size {max_size}"), seed);
    let one = One;
    let cat = FamRel::new(&one);
    let structure = FamRelPreduals::new(&OnePreduals);
    for n in 1..=max_size {
        out.section(|| {
            let y = FamObject::new(vec![(); n]);
            let pd = structure.predual(&cat, &y).expect("pre-dual exists");
            let tests: Vec<_> = (1..=max_size)
                .map(|k| FamObject::new(vec![(); k]))
                .collect();
            let dagger = |t_obj: &FamObject<One>, t: &_| structure.dagger(&cat, t_obj, &y, t);
            verify_predual(&cat, &y, &pd, &tests, Some(&dagger))
        });
    }
    out
}

/// Diagram pre-duals: either a fixture or the three built-in index shapes.
pub fn diagram_suite(
    seed: u64,
    fixture: Option<(FiniteIndexCategory, DiagramFunctor)>,
) -> RunOutcome {
    let mut out = RunOutcome::new("diagram", seed);
    let run_one = |out: &mut RunOutcome,
                   index: &FiniteIndexCategory,
                   f: &DiagramFunctor,
                   t: &DiagramFunctor| {
        let cat = DiagCat::new(index);
        let f = f.clone();
        let t = t.clone();
        out.section(move || {
            let mut report = Report::new();
            let set = format!("index category with {} objects", cat.index.object_count());
            let pd = functorcat_predual(cat.index, &f);
            let dim_pairings = nat_space(cat.index, &cat.tensor_obj(&t, &f), &cat.unit()).len();
            let dim_lambdas = nat_space(cat.index, &t, &pd.fstar).len();
            report.check_eq(
                "diagram.nat.dim",
                "dimension of pairings equals dimension of maps into the pre-dual",
                &set,
                &dim_pairings,
                &dim_lambdas,
            );
            let mut inverse_ok = true;
            for alpha in nat_space(cat.index, &cat.tensor_obj(&t, &f), &cat.unit()) {
                match pd.phi(&cat, &f, &t, &alpha) {
                    Ok(lam) => inverse_ok &= pd.psi(&cat, &f, &lam) == alpha,
                    Err(_) => inverse_ok = false,
                }
            }
            for lam in nat_space(cat.index, &t, &pd.fstar) {
                let alpha = pd.psi(&cat, &f, &lam);
                match pd.phi(&cat, &f, &t, &alpha) {
                    Ok(back) => inverse_ok &= back == lam,
                    Err(_) => inverse_ok = false,
                }
            }
            if inverse_ok {
                report.pass(
                    "diagram.phi_psi",
                    "the two correspondences are mutually inverse on bases",
                    &set,
                );
            } else {
                report.fail(
                    "diagram.phi_psi",
                    "the two correspondences are mutually inverse on bases",
                    "basis element failed".to_string(),
                    &set,
                );
            }
            if let Ok(data) = DiagramPreduals.predual(&cat, &f) {
                report.merge(verify_predual(
                    &cat,
                    &f,
                    &data,
                    &[cat.unit(), t.clone()],
                    None,
                ));
            }
            report
        });
    };
    match fixture {
        Some((index, f)) => {
            let mut rng = SplitMix64::new(seed);
            let t = seeded_diagram(&index, &mut rng, 2);
            run_one(&mut out, &index, &f, &t);
        }
        None => {
            let mut rng = SplitMix64::new(seed);
            for index in [
                FiniteIndexCategory::point(),
                FiniteIndexCategory::arrow(),
                FiniteIndexCategory::square(),
            ] {
                let f = seeded_diagram(&index, &mut rng, 2);
                let t = seeded_diagram(&index, &mut rng, 2);
                run_one(&mut out, &index, &f, &t);
            }
        }
    }
    out
}

/// Graded pre-duals over ℕ and the two-element group, cross-checked against
/// the closed structure.
pub fn graded_suite(seed: u64, fixture: Option<GradedObj>) -> RunOutcome {
    let mut out = RunOutcome::new("graded", seed);
    let nat_objects: Vec<GradedObj> = match fixture {
        Some(x) => vec![x],
        None => vec![
            graded_obj(&[(0, 1)]),
            graded_obj(&[(0, 2), (1, 1)]),
            graded_obj(&[(0, 1), (1, 1), (2, 2), (3, 1)]),
            graded_obj(&[(1, 2), (3, 1)]),
        ],
    };
    let cat = Graded::nat();
    let tests = cat.test_objects(&[0, 1, 2], 2);
    for x in nat_objects {
        let cat = Graded::nat();
        let tests = tests.clone();
        out.section(move || {
            let mut report = Report::new();
            match GradedPreduals.predual(&cat, &x) {
                Ok(pd) => {
                    report.merge(verify_predual(&cat, &x, &pd, &tests, None));
                    match ClosedPreduals.predual(&cat, &x) {
                        Ok(closed) => match uniqueness_iso(&cat, &x, &pd, &closed) {
                            Ok(_) => report.pass(
                                "graded.closed.agree",
                                "formula pre-dual matches the internal-hom pre-dual up to unique comparison",
                                "one object",
                            ),
                            Err(e) => report.fail(
                                "graded.closed.agree",
                                "formula pre-dual matches the internal-hom pre-dual",
                                format!("{e}"),
                                "one object",
                            ),
                        },
                        Err(e) => report.fail("graded.closed", "closed structure available", format!("{e}"), "one object"),
                    }
                }
                Err(e) => report.fail("graded.predual", "pre-dual constructible", format!("{e}"), "one object"),
            }
            report
        });
    }
    out.section(|| {
        let cat = Graded::finite(FiniteMonoid::z2());
        let tests = cat.test_objects(&[0, 1], 2);
        let mut report = Report::new();
        for x in [graded_obj(&[(0, 1), (1, 2)]), graded_obj(&[(1, 1)])] {
            if let Ok(pd) = GradedPreduals.predual(&cat, &x) {
                report.merge(verify_predual(&cat, &x, &pd, &tests, None));
            }
        }
        report
    });
    out
}

/// Pomonoid verbs.
pub fn pomonoid_validate_suite(seed: u64, p: &Pomonoid) -> RunOutcome {
    let mut out = RunOutcome::new("pomonoid validate", seed);
    out.section(|| p.validate());
    out
}

pub fn pomonoid_classify_suite(seed: u64, p: &Pomonoid) -> RunOutcome {
    let mut out = RunOutcome::new("pomonoid classify", seed);
    out.section(|| {
        let mut report = p.validate();
        if !report.all_passed() {
            return report;
        }
        let c = classify(p);
        let (pg, ct, rs, pgp) = classify_oracle(p);
        report.check_eq(
            "pomonoid.classify.oracle",
            "classifier agrees with direct quantifier evaluation",
            "all elements",
            &(
                c.is_protogroup,
                c.is_contractive,
                c.is_residuated,
                c.is_pregroup,
            ),
            &(pg, ct, rs, pgp),
        );
        let chain_ok = (!c.is_pregroup || c.is_residuated)
            && (!c.is_residuated || c.is_contractive)
            && (!c.is_contractive || c.is_protogroup);
        if chain_ok {
            report.pass(
                "pomonoid.classify.chain",
                &format!(
                    "protogroup={} contractive={} residuated={} pregroup={}",
                    c.is_protogroup, c.is_contractive, c.is_residuated, c.is_pregroup
                ),
                "all elements",
            );
        } else {
            report.fail(
                "pomonoid.classify.chain",
                "classification inclusions hold",
                format!("{c:?}"),
                "all elements",
            );
        }
        report
    });
    out
}

pub fn pomonoid_laws_suite(seed: u64, p: &Pomonoid) -> RunOutcome {
    let mut out = RunOutcome::new("pomonoid laws", seed);
    out.section(|| {
        let mut report = p.validate();
        if !report.all_passed() {
            return report;
        }
        let c = classify(p);
        report.merge(check_derived_laws(p, &c));
        report.merge(check_proto_inverse_uniqueness(p, &c));
        report
    });
    out
}

/// Sentence check in a concrete pomonoid.
pub fn parse_finite_suite(seed: u64, p: &Pomonoid, types: &[usize], target: usize) -> RunOutcome {
    let mut out = RunOutcome::new("parse finite", seed);
    out.section(|| {
        let mut report = Report::new();
        let verdict = finite_sentence_check(p, types, target);
        let names: Vec<&str> = types.iter().map(|&t| p.elements[t].as_str()).collect();
        if verdict {
            report.pass(
                "parse.finite",
                &format!(
                    "product of [{}] is below {}",
                    names.join(", "),
                    p.elements[target]
                ),
                "single sentence",
            );
        } else {
            report.fail(
                "parse.finite",
                &format!(
                    "product of [{}] is below {}",
                    names.join(", "),
                    p.elements[target]
                ),
                "product not below the target".to_string(),
                "single sentence",
            );
        }
        report
    });
    out
}

/// Free-pregroup reduction of a sentence against a lexicon.
pub fn parse_free_suite(seed: u64, lex: &Lexicon, sentence: &[&str]) -> RunOutcome {
    let mut out = RunOutcome::new("parse free", seed);
    out.section(|| {
        let mut report = Report::new();
        let set = format!("sentence of {} words", sentence.len());
        match lex.type_of_sentence(sentence) {
            Ok(terms) => {
                let verdict = free_pregroup_reduce(&terms, lex.sentence);
                let brute = brute_force_reduce(&terms, lex.sentence);
                report.check_eq(
                    "parse.free.oracle",
                    "interval parser agrees with the brute-force rewriter",
                    &set,
                    &verdict.accepted(),
                    &brute,
                );
                match verdict {
                    Verdict::Accepted { trace } => report.pass(
                        "parse.free",
                        &format!("sentence reduces to the target; contraction trace {trace:?}"),
                        &set,
                    ),
                    Verdict::Rejected => report.fail(
                        "parse.free",
                        "sentence reduces to the target",
                        "no contraction-only reduction exists".to_string(),
                        &set,
                    ),
                }
            }
            Err(e) => report.fail(
                "parse.free",
                "sentence covered by the lexicon",
                format!("{e:?}"),
                &set,
            ),
        }
        report
    });
    out
}

/// Lax structure of the pre-dual functor.
pub fn lift_lax_suite(seed: u64, max_dim: usize) -> RunOutcome {
    let mut out = RunOutcome::new("lift lax", seed);
    out.section(|| {
        let cat = FinVect;
        let op = Op::new(&cat);
        let pr = VectPreduals;
        let lax = dual_functor_lax(&cat, &pr);
        let functor: DualFunctor<'_, FinVect, VectPreduals> = DualFunctor { cat: &cat, pr: &pr };
        let mut triples = Vec::new();
        for x in 1..=max_dim {
            for y in 1..=max_dim {
                for z in 1..=max_dim {
                    triples.push((x, y, z));
                }
            }
        }
        check_lax_coherence(&op, &cat, &functor, &lax, &triples)
    });
    out
}

/// The two lifts of the pre-dual functor agree on sampled coalgebras.
pub fn lift_barop_suite(seed: u64, bialgebra: Option<BialgebraObject<FinVect>>) -> RunOutcome {
    let mut out = RunOutcome::new("lift barop", seed);
    out.section(|| {
        let cat = FinVect;
        let op = Op::new(&cat);
        let pr = VectPreduals;
        let mut report = Report::new();
        let mut coalgebras = lift_fixtures::seeded_coalgebras(seed, 2);
        if let Some(b) = bialgebra {
            report.merge(check_bialgebra(&cat, &b));
            coalgebras.push(CoalgebraObject {
                carrier: b.carrier,
                comult: b.comult,
                counit: b.counit,
            });
        }
        let adj = dual_adjunction(&cat, &op, &pr);
        let lax = dual_functor_lax(&cat, &pr);
        let colax = colax_from_lax(&adj, &lax);
        report.merge(check_barop_identity(&cat, &pr, &coalgebras, &colax));
        report.merge(check_adjunction(&adj, &[0, 1, 2, 3], &[0, 1, 2, 3]));
        report
    });
    out
}

/// Dimension profile of the truncated free algebra.
pub fn lift_tambara_suite(seed: u64, degree: usize) -> RunOutcome {
    let mut out = RunOutcome::new(format!("lift tambara --degree {degree}"), seed);
    out.section(|| {
        let mut report = Report::new();
        let set = format!("degrees 0..={degree}");
        let t = tambara_truncated(degree);
        let mut expected = vec![1usize];
        expected.extend(std::iter::repeat(2).take(degree));
        report.check_eq(
            "tambara.profile",
            "per-degree dimensions are (1, 2, 2, …)",
            &set,
            &t.per_degree,
            &expected,
        );
        report.check_eq(
            "tambara.cumulative",
            "cumulative dimension is 2·degree + 1",
            &set,
            &t.cumulative,
            &(2 * degree + 1),
        );
        if t.unbounded_growth {
            report.pass(
                "tambara.growth",
                "every degree keeps normal forms, so the algebra is not finite-dimensional",
                &set,
            );
        } else {
            report.fail(
                "tambara.growth",
                "every degree keeps normal forms",
                format!("{:?}", t.per_degree),
                &set,
            );
        }
        report
    });
    out
}

/// The not-right-closed witness for the constant graded family.
pub fn witness_not_closed_suite(seed: u64, degree: usize) -> RunOutcome {
    let mut out = RunOutcome::new(format!("witness not-closed --degree {degree}"), seed);
    out.section(|| not_closed_witness_graded(degree));
    out
}

/// The bounded refutation that the decimal pomonoid is residuated.
pub fn witness_decimals_suite(seed: u64, bound: u32) -> RunOutcome {
    let mut out = RunOutcome::new(format!("witness decimals --degree {bound}"), seed);
    out.section(|| decimals_counterexample_check(bound));
    out
}

/// The full matrix in fixed order.
pub fn all_suite(seed: u64) -> RunOutcome {
    let mut combined = RunOutcome::new(format!("all --seed {seed}"), seed);
    let parts: Vec<RunOutcome> = vec![
        finrel_suite(seed, 2),
        finvect_suite(seed, 4),
        fam_suite(seed, 8, None),
        maf_suite(seed),
        famrel_suite(seed, 3),
        diagram_suite(seed, None),
        graded_suite(seed, None),
        lift_lax_suite(seed, 3),
        lift_barop_suite(seed, None),
        lift_tambara_suite(seed, 12),
        witness_not_closed_suite(seed, 10),
        witness_decimals_suite(seed, 3),
    ];
    for part in parts {
        for section in part.sections {
            combined.push(section.report, section.elapsed);
        }
    }
    combined
}
