//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line with its elapsed time. Every expected value is pinned here; all
//! comparisons are exact.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::time::Instant;

use prerigid_core::cat::{check_adjunction, HomSpace, HomSpaces, Monoidal, Op};
use prerigid_core::diagram::{
    functorcat_predual, nat_space, seeded_diagram, DiagCat, DiagramPreduals, FiniteIndexCategory,
};
use prerigid_core::engine::{
    compute_units, pairing_image, uniqueness_iso, verify_predual, ClosedPreduals, PreRigid,
};
use prerigid_core::fam::{
    fam_closed_alpha, fam_closed_beta, fam_internal_hom, fam_predual_converse_check,
    maf_obstruction_witness, Fam, FamObject, FamPreduals, Maf, One, OnePreduals,
};
use prerigid_core::famrel::{FamRel, FamRelMorphism, FamRelPreduals};
use prerigid_core::finrel::{FinRel, FinSet, Rel, RelPreduals};
use prerigid_core::finvect::{FinVect, VecMor, VectPreduals};
use prerigid_core::graded::{
    constant_family_hom_dim, graded_obj, not_closed_witness_graded, FiniteMonoid, Graded,
    GradedPreduals,
};
use prerigid_core::lift::{
    check_barop_identity, check_lax_coherence, colax_from_lax, dual_adjunction, dual_functor_lax,
    fixtures as lift_fixtures, tambara_dense_rank, tambara_rewrite_normal_form, tambara_truncated,
    DualFunctor,
};
use prerigid_core::matrix::Mat;
use prerigid_core::pomonoid::{
    classify, classify_oracle, decimals_counterexample_check, fixtures as pom_fixtures,
};
use prerigid_core::pregroup::{brute_force_reduce, free_pregroup_reduce, SimpleTerm, Verdict};
use prerigid_core::rng::SplitMix64;

fn criterion(number: u32, description: &str, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) => println!("PASS criterion {number:2}: {description} ({elapsed:.2?})"),
        Err(witness) => {
            println!("FAIL criterion {number:2}: {description} ({elapsed:.2?}) — {witness}");
            panic!("criterion {number} failed: {witness}");
        }
    }
}

fn ok(cond: bool, witness: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness.to_owned())
    }
}

#[test]
fn acceptance_01_rel_prerigidity() {
    criterion(
        1,
        "relation pre-rigidity by exhaustion on carriers of size ≤ 2",
        || {
            let cat = FinRel::default();
            let pr = RelPreduals;
            let tests = cat.test_objects(2);
            for x in &tests {
                let pd = pr.predual(&cat, x)?;
                let report = verify_predual(&cat, x, &pd, &tests, None);
                ok(report.all_passed(), &format!("{report}"))?;
                // Dagger round-trips exactly on every enumerated pairing.
                for t_obj in &tests {
                    let src = cat.tensor_obj(t_obj, x);
                    let HomSpace::Enumerated(ts) = cat.hom(&src, &cat.unit()) else {
                        return Err("expected enumerated homs".to_owned());
                    };
                    for t in ts {
                        let dag = pr.dagger(&cat, t_obj, x, &t)?;
                        ok(pairing_image(&cat, &pd, x, &dag) == t, "round trip failed")?;
                    }
                    let HomSpace::Enumerated(us) = cat.hom(t_obj, &pd.object) else {
                        return Err("expected enumerated homs".to_owned());
                    };
                    for u in us {
                        let t = pairing_image(&cat, &pd, x, &u);
                        ok(
                            pr.dagger(&cat, t_obj, x, &t)? == u,
                            "reverse round trip failed",
                        )?;
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn acceptance_02_finvect_prerigidity() {
    criterion(
        2,
        "matrix-space pre-rigidity: square full-rank pairing matrices for dims ≤ 4",
        || {
            let cat = FinVect;
            let pr = VectPreduals;
            let tests: Vec<usize> = (0..=4).collect();
            for x in &tests {
                let pd = pr.predual(&cat, x)?;
                let report = verify_predual(&cat, x, &pd, &tests, None);
                ok(report.all_passed(), &format!("{report}"))?;
            }
            // Exact dagger round-trips on seeded pairings.
            let mut rng = SplitMix64::new(0);
            for x in 1..=4usize {
                for t_dim in 1..=4usize {
                    let t = VecMor::new(rng.matrix(1, t_dim * x));
                    let dag = pr.dagger(&cat, &t_dim, &x, &t)?;
                    let pd = pr.predual(&cat, &x)?;
                    ok(pairing_image(&cat, &pd, &x, &dag) == t, "round trip failed")?;
                    let u = VecMor::new(rng.matrix(x, t_dim));
                    let s = pairing_image(&cat, &pd, &x, &u);
                    ok(
                        pr.dagger(&cat, &t_dim, &x, &s)? == u,
                        "reverse round trip failed",
                    )?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn acceptance_03_fam_predual_formula() {
    criterion(
        3,
        "family pre-duals: 20 seeded families verify and the converse certifies the product",
        || {
            let vect = FinVect;
            let fam = Fam::new(&vect);
            let mut rng = SplitMix64::new(0);
            let tests = vec![
                fam.unit(),
                FamObject::new(vec![1usize]),
                FamObject::new(vec![2]),
                FamObject::new(vec![1, 2]),
                FamObject::new(vec![2, 1, 1]),
            ];
            for k in 0..20 {
                let j = 1 + rng.below(3) as usize;
                let fibers: Vec<usize> = (0..j).map(|_| rng.below(3) as usize).collect();
                let y = FamObject::new(fibers);
                let pd = FamPreduals.predual(&fam, &y)?;
                let expected: usize = y.fibers.iter().sum();
                ok(
                    pd.object.fibers == vec![expected],
                    &format!("sample {k}: wrong pre-dual object"),
                )?;
                let report = verify_predual(&fam, &y, &pd, &tests, None);
                ok(report.all_passed(), &format!("sample {k}: {report}"))?;
                let projections: Vec<Mat> = (0..y.len())
                    .map(|j| FamPreduals::projection(&y, j))
                    .collect();
                let conv = fam_predual_converse_check(&y, &pd, &projections, 100 + k);
                ok(conv.all_passed(), &format!("sample {k}: {conv}"))?;
            }
            Ok(())
        },
    );
}

#[test]
fn acceptance_04_fam_closedness() {
    criterion(
        4,
        "family closedness: both adjunction round-trips are identities on 50 seeded samples",
        || {
            let vect = FinVect;
            let fam = Fam::new(&vect);
            let mut rng = SplitMix64::new(1);
            let mut checked = 0usize;
            while checked < 50 {
                let x = FamObject::new(
                    (0..1 + rng.below(2) as usize)
                        .map(|_| 1 + rng.below(2) as usize)
                        .collect(),
                );
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
                if checked % 2 == 0 {
                    let xy = fam.tensor_obj(&x, &y);
                    let index_map: Vec<usize> = (0..xy.len())
                        .map(|_| rng.below(z.len() as u64) as usize)
                        .collect();
                    let components: Vec<VecMor> = (0..xy.len())
                        .map(|p| VecMor::new(rng.matrix(z.fibers[index_map[p]], xy.fibers[p])))
                        .collect();
                    let f = fam.mor(xy, z.clone(), index_map, components);
                    let g = fam_closed_alpha(&fam, &x, &y, &z, &f);
                    ok(fam_closed_beta(&fam, &y, &z, &g) == f, "β∘α ≠ id")?;
                } else {
                    let (_, ihom) = fam_internal_hom(&y, &z);
                    let index_map: Vec<usize> = (0..x.len())
                        .map(|_| rng.below(ihom.len() as u64) as usize)
                        .collect();
                    let components: Vec<VecMor> = (0..x.len())
                        .map(|i| VecMor::new(rng.matrix(ihom.fibers[index_map[i]], x.fibers[i])))
                        .collect();
                    let g = fam.mor(x.clone(), ihom, index_map, components);
                    let f = fam_closed_beta(&fam, &y, &z, &g);
                    ok(fam_closed_alpha(&fam, &x, &y, &z, &f) == g, "α∘β ≠ id")?;
                }
                checked += 1;
            }
            Ok(())
        },
    );
}

#[test]
fn acceptance_05_maf_obstruction() {
    criterion(
        5,
        "index-contravariant families are never pre-rigid: obstruction over three bases",
        || {
            let vect = FinVect;
            let maf = Maf::new(&vect);
            let samples = vec![FamObject::new(vec![1usize]), FamObject::new(vec![2, 1])];
            ok(
                maf_obstruction_witness(&maf, &samples).all_passed(),
                "matrix-space base",
            )?;

            let rel = FinRel::default();
            let maf = Maf::new(&rel);
            let s = FinSet::from_labels(&["a"]);
            let samples = vec![
                FamObject::new(vec![s.clone()]),
                FamObject::new(vec![s.clone(), s]),
            ];
            ok(
                maf_obstruction_witness(&maf, &samples).all_passed(),
                "relation base",
            )?;

            let one = One;
            let maf = Maf::new(&one);
            let samples = vec![FamObject::new(vec![()]), FamObject::new(vec![(), ()])];
            ok(
                maf_obstruction_witness(&maf, &samples).all_passed(),
                "terminal base",
            )?;
            Ok(())
        },
    );
}

#[test]
fn acceptance_06_famrel_predual() {
    criterion(6, "relation-indexed families over the terminal base: forward and inverse maps are mutually inverse", || {
        let one = One;
        let cat = FamRel::new(&one);
        let structure = FamRelPreduals::new(&OnePreduals);
        let rel_cat = FinRel::default();
        let rel_pr = RelPreduals;

        for i_size in 1..=3usize {
            for j_size in 1..=3usize {
                let x = FamObject::new(vec![(); i_size]);
                let y = FamObject::new(vec![(); j_size]);
                let pd = structure.predual(&cat, &y)?;
                // Forward u ↦ ev∘(u⊗Y) over all enumerated morphisms, then
                // back via the dagger.
                let HomSpace::Enumerated(us) = cat.hom(&x, &pd.object) else {
                    return Err("expected enumerated homs".to_owned());
                };
                let i_set = FinSet::canonical(i_size).pop().expect("nonempty");
                let j_set = FinSet::canonical(j_size).pop().expect("nonempty");
                let rel_pd = rel_pr.predual(&rel_cat, &j_set)?;
                for u in us {
                    let t = pairing_image(&cat, &pd, &y, &u);
                    let back = structure.dagger(&cat, &x, &y, &t)?;
                    ok(back == u, "dagger does not invert the pairing")?;

                    // The same computation in the category of relations,
                    // under the index-set identification.
                    let u_rel = Rel::new(i_set.clone(), j_set.clone(), u.relation());
                    let t_rel = pairing_image(&rel_cat, &rel_pd, &j_set, &u_rel);
                    ok(
                        t.relation() == t_rel.pairs,
                        "forward map disagrees with the relation picture",
                    )?;
                }
                // And for every pairing morphism the other way round.
                let src = cat.tensor_obj(&x, &y);
                let HomSpace::Enumerated(ts) = cat.hom(&src, &cat.unit()) else {
                    return Err("expected enumerated homs".to_owned());
                };
                for t in ts {
                    let u = structure.dagger(&cat, &x, &y, &t)?;
                    ok(pairing_image(&cat, &pd, &y, &u) == t, "pairing not recovered")?;
                    let t_rel: FamRelMorphism<One> = t.clone();
                    let u_rel = rel_pr.dagger(
                        &rel_cat,
                        &i_set,
                        &j_set,
                        &Rel::new(
                            rel_cat.tensor_obj(&i_set, &j_set),
                            rel_cat.unit(),
                            t_rel.relation(),
                        ),
                    )?;
                    ok(u.relation() == u_rel.pairs, "daggers disagree with the relation picture")?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_07_functor_category_predual() {
    criterion(7, "diagram pre-duals over point, arrow and square: dimensions match and the correspondences invert", || {
        let mut rng = SplitMix64::new(2);
        for index in [
            FiniteIndexCategory::point(),
            FiniteIndexCategory::arrow(),
            FiniteIndexCategory::square(),
        ] {
            ok(index.validate().all_passed(), "index category must validate")?;
            let cat = DiagCat::new(&index);
            for _ in 0..3 {
                let f = seeded_diagram(&index, &mut rng, 2);
                let t = seeded_diagram(&index, &mut rng, 2);
                let pd = functorcat_predual(&index, &f);
                let pairings = nat_space(&index, &cat.tensor_obj(&t, &f), &cat.unit());
                let lambdas = nat_space(&index, &t, &pd.fstar);
                ok(
                    pairings.len() == lambdas.len(),
                    &format!(
                        "dim Nat(T⊗F, 𝕀') = {} but dim Nat(T, F*) = {}",
                        pairings.len(),
                        lambdas.len()
                    ),
                )?;
                for alpha in &pairings {
                    let lam = pd.phi(&cat, &f, &t, alpha).map_err(|e| format!("{e}"))?;
                    ok(pd.psi(&cat, &f, &lam) == *alpha, "Ψ∘Φ ≠ id on a basis element")?;
                }
                for lam in &lambdas {
                    let alpha = pd.psi(&cat, &f, lam);
                    let back = pd.phi(&cat, &f, &t, &alpha).map_err(|e| format!("{e}"))?;
                    ok(back == *lam, "Φ∘Ψ ≠ id on a basis element")?;
                }
                // The generic rank certificate agrees.
                let data = DiagramPreduals.predual(&cat, &f).map_err(|e| format!("{e}"))?;
                let report = verify_predual(&cat, &f, &data, &[cat.unit(), t.clone()], None);
                ok(report.all_passed(), &format!("{report}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_08_graded_predual() {
    criterion(
        8,
        "graded pre-duals verify and match the closed structure, over ℕ and the two-element group",
        || {
            // ℕ-graded, supports within degrees 0..=3 (size ≤ 4).
            let cat = Graded::nat();
            let tests = cat.test_objects(&[0, 1, 2], 2);
            for x in [
                graded_obj(&[(0, 1)]),
                graded_obj(&[(0, 2), (1, 1)]),
                graded_obj(&[(0, 1), (1, 1), (2, 2), (3, 1)]),
                graded_obj(&[(1, 2), (3, 1)]),
            ] {
                let pd = GradedPreduals.predual(&cat, &x)?;
                let report = verify_predual(&cat, &x, &pd, &tests, None);
                ok(report.all_passed(), &format!("ℕ-graded {x:?}: {report}"))?;
                let closed = ClosedPreduals.predual(&cat, &x)?;
                ok(closed.object == pd.object, "objects differ")?;
                uniqueness_iso(&cat, &x, &pd, &closed).map_err(|e| format!("{e}"))?;
            }
            // Z_2-graded.
            let cat = Graded::finite(FiniteMonoid::z2());
            let tests = cat.test_objects(&[0, 1], 2);
            for x in [
                graded_obj(&[(0, 1), (1, 2)]),
                graded_obj(&[(1, 1)]),
                graded_obj(&[(0, 2), (1, 1)]),
            ] {
                let pd = GradedPreduals.predual(&cat, &x)?;
                let report = verify_predual(&cat, &x, &pd, &tests, None);
                ok(report.all_passed(), &format!("Z2-graded {x:?}: {report}"))?;
                let closed = ClosedPreduals.predual(&cat, &x)?;
                ok(closed.object == pd.object, "objects differ")?;
                uniqueness_iso(&cat, &x, &pd, &closed).map_err(|e| format!("{e}"))?;
            }
            Ok(())
        },
    );
}

#[test]
fn acceptance_09_not_right_closed_witness() {
    criterion(
        9,
        "constant-family hom dimension is the bound plus one for every bound up to 10",
        || {
            for d in 0..=10usize {
                ok(
                    constant_family_hom_dim(d) == d + 1,
                    &format!("dimension at bound {d} is not {d} + 1"),
                )?;
                ok(
                    not_closed_witness_graded(d).all_passed(),
                    &format!("witness report failed at bound {d}"),
                )?;
            }
            Ok(())
        },
    );
}

#[test]
fn acceptance_10_tambara_witness() {
    criterion(
        10,
        "truncated free algebra has degree profile (1,2,2,…) up to 12 against independent oracles",
        || {
            let t = tambara_truncated(12);
            let mut expected = vec![1usize];
            expected.extend(std::iter::repeat(2).take(12));
            ok(
                t.per_degree == expected,
                &format!("profile {:?}", t.per_degree),
            )?;
            ok(t.cumulative == 25, &format!("cumulative {}", t.cumulative))?;
            ok(t.unbounded_growth, "growth flag not set")?;
            // Dense row-reduction oracle where it fits the runtime budget.
            for n in 2..=7usize {
                let quotient = (1usize << n) - tambara_dense_rank(n);
                ok(
                    quotient == t.per_degree[n],
                    &format!("dense oracle disagrees at degree {n}"),
                )?;
            }
            // Rewriting-system oracle for the whole range.
            for n in 1..=12usize {
                let mut normals = std::collections::BTreeSet::new();
                for mask in 0..(1u32 << n) {
                    if let Some((nf, _)) = tambara_rewrite_normal_form(mask, n) {
                        normals.insert(nf);
                    }
                }
                ok(
                    normals.len() == t.per_degree[n],
                    &format!("rewriting oracle disagrees at degree {n}"),
                )?;
            }
            Ok(())
        },
    );
}

#[test]
fn acceptance_11_dual_functor_lax_and_lift_identity() {
    criterion(
        11,
        "pre-dual functor is coherently lax and its two lifts agree on sampled coalgebras",
        || {
            let cat = FinVect;
            let op = Op::new(&cat);
            let pr = VectPreduals;
            let lax = dual_functor_lax(&cat, &pr);
            let functor: DualFunctor<'_, FinVect, VectPreduals> =
                DualFunctor { cat: &cat, pr: &pr };
            let mut triples = Vec::new();
            for x in 1..=3usize {
                for y in 1..=3usize {
                    for z in 1..=3usize {
                        triples.push((x, y, z));
                    }
                }
            }
            let report = check_lax_coherence(&op, &cat, &functor, &lax, &triples);
            ok(report.all_passed(), &format!("{report}"))?;

            let adj = dual_adjunction(&cat, &op, &pr);
            let colax = colax_from_lax(&adj, &lax);
            let coalgebras = lift_fixtures::seeded_coalgebras(3, 2);
            ok(
                coalgebras.len() == 3,
                "expected the group coalgebra plus two seeded ones",
            )?;
            let report = check_barop_identity(&cat, &pr, &coalgebras, &colax);
            ok(report.all_passed(), &format!("{report}"))?;
            Ok(())
        },
    );
}

#[test]
fn acceptance_12_pomonoid_classifier() {
    criterion(12, "pomonoid classifier agrees with the oracle on all fixtures and the decimal refutation succeeds", || {
        let fixture_set = vec![
            pom_fixtures::trivial(),
            pom_fixtures::cyclic_group(2),
            pom_fixtures::cyclic_group(3),
            pom_fixtures::cyclic_group(4),
            pom_fixtures::chain_idempotent(),
            pom_fixtures::contractive_not_residuated(),
            pom_fixtures::initial_unit_chain(),
        ];
        for p in &fixture_set {
            ok(p.validate().all_passed(), "fixture must validate")?;
            let c = classify(p);
            let (pg, ct, rs, pgp) = classify_oracle(p);
            ok(
                (c.is_protogroup, c.is_contractive, c.is_residuated, c.is_pregroup)
                    == (pg, ct, rs, pgp),
                &format!("classifier disagrees with oracle on {:?}", p.elements),
            )?;
            ok(!c.is_pregroup || c.is_residuated, "chain inclusion broken")?;
            ok(!c.is_residuated || c.is_contractive, "chain inclusion broken")?;
            ok(!c.is_contractive || c.is_protogroup, "chain inclusion broken")?;
        }
        for n in 2..=4 {
            let c = classify(&pom_fixtures::cyclic_group(n));
            ok(c.is_pregroup, &format!("group of order {n} must classify as a pregroup"))?;
        }
        ok(
            decimals_counterexample_check(3).all_passed(),
            "decimal refutation at bound 3",
        )?;
        Ok(())
    });
}

#[test]
fn acceptance_13_pregroup_parser() {
    criterion(
        13,
        "contraction parser agrees with the brute-force rewriter on all strings of length ≤ 6",
        || {
            let mut alphabet = Vec::new();
            for atom in 0..3usize {
                for e in -1..=1i32 {
                    alphabet.push(SimpleTerm { atom, exponent: e });
                }
            }
            let target = SimpleTerm {
                atom: 2,
                exponent: 0,
            };
            // Depth-first enumeration of all strings of length 1..=6.
            let mut stack: Vec<Vec<SimpleTerm>> = vec![Vec::new()];
            let mut count = 0usize;
            while let Some(s) = stack.pop() {
                if !s.is_empty() {
                    let dp = free_pregroup_reduce(&s, target).accepted();
                    let bf = brute_force_reduce(&s, target);
                    if dp != bf {
                        return Err(format!("disagreement on {s:?}: dp {dp}, brute force {bf}"));
                    }
                    count += 1;
                }
                if s.len() < 6 {
                    for &a in &alphabet {
                        let mut next = s.clone();
                        next.push(a);
                        stack.push(next);
                    }
                }
            }
            ok(
                count
                    == 9usize.pow(1)
                        + 9usize.pow(2)
                        + 9usize.pow(3)
                        + 9usize.pow(4)
                        + 9usize.pow(5)
                        + 9usize.pow(6),
                "unexpected enumeration count",
            )?;

            // The noun–verb example reduces with a single contraction.
            let n = SimpleTerm {
                atom: 0,
                exponent: 0,
            };
            let n_r = SimpleTerm {
                atom: 0,
                exponent: 1,
            };
            let s = SimpleTerm {
                atom: 1,
                exponent: 0,
            };
            match free_pregroup_reduce(&[n, n_r, s], s) {
                Verdict::Accepted { trace } => {
                    ok(trace == vec![(0, 1)], &format!("trace {trace:?}"))?
                }
                Verdict::Rejected => return Err("noun–verb example rejected".to_owned()),
            }
            Ok(())
        },
    );
}

#[test]
fn acceptance_14_units_and_triangles() {
    criterion(14, "both canonical units coincide for the symmetric twist and the self-adjunction triangles hold", || {
        let cat = FinVect;
        let pr = VectPreduals;
        for x in 0..=3usize {
            let units = compute_units(&cat, &pr, &x).map_err(|e| format!("{e}"))?;
            ok(units.eta == units.j, &format!("η ≠ j at dim {x}"))?;
            ok(
                units.eta.matrix.is_identity(),
                &format!("unit is not the canonical comparison at dim {x}"),
            )?;
        }
        let op = Op::new(&cat);
        let adj = dual_adjunction(&cat, &op, &pr);
        let dims: Vec<usize> = (0..=3).collect();
        let report = check_adjunction(&adj, &dims, &dims);
        ok(report.all_passed(), &format!("{report}"))?;
        Ok(())
    });
}
