//! Cross-cutting laws of the pre-rigidity engine: dagger round-trips on
//! both concrete solvers, contravariant functoriality, naturality of the
//! defining bijection, uniqueness isomorphisms, braiding units,
//! self-adjointness, terminal-unit structures and pre-dual transfer along
//! an adjunction.

use prerigid_core::cat::{Adjunction, Braided, CFunctor, Category, HomSpace, HomSpaces, Monoidal};
use prerigid_core::engine::{
    check_selfadjoint, compute_units, dagger_via_homs, not_right_closed_witness, pairing_image,
    predual_of_morphism, terminal_unit_prerigid, transfer_predual, uniqueness_iso, verify_predual,
    ClosedPreduals, EngineError, PreDualData, PreRigid, SelfAdjointRoute,
};
use prerigid_core::finrel::{FinRel, FinSet, Rel, RelPreduals};
use prerigid_core::finvect::{FinVect, VecMor, VectPreduals};
use prerigid_core::graded::{graded_obj, Graded, GradedMor, GradedObj, GradedPreduals};
use prerigid_core::matrix::Mat;
use prerigid_core::pomonoid::{fixtures, PomonoidCat};
use prerigid_core::rational::{one, rat};
use prerigid_core::rng::SplitMix64;

#[test]
fn finvect_dagger_roundtrips_and_solver_agreement() {
    let cat = FinVect;
    let pr = VectPreduals;
    let mut rng = SplitMix64::new(2);
    for x in 0..=4usize {
        let pd = pr.predual(&cat, &x).unwrap();
        for t_dim in 0..=4usize {
            // Random pairing t : T ⊗ X → 𝕀.
            let t = VecMor::new(rng.matrix(1, t_dim * x));
            let closed_form = pr.dagger(&cat, &t_dim, &x, &t).unwrap();
            let generic = dagger_via_homs(&cat, &t_dim, &x, &pd, &t).unwrap();
            assert_eq!(closed_form, generic, "solvers disagree at T={t_dim}, X={x}");
            // ev ∘ (t† ⊗ X) = t exactly.
            assert_eq!(pairing_image(&cat, &pd, &x, &closed_form), t);
            // And the reverse round-trip on u.
            let u = VecMor::new(rng.matrix(x, t_dim));
            let s = pairing_image(&cat, &pd, &x, &u);
            assert_eq!(pr.dagger(&cat, &t_dim, &x, &s).unwrap(), u);
        }
    }
}

#[test]
fn finvect_dagger_of_evaluation_is_identity() {
    let cat = FinVect;
    let pr = VectPreduals;
    for x in 0..=3usize {
        let pd = pr.predual(&cat, &x).unwrap();
        let dag = pr.dagger(&cat, &pd.object, &x, &pd.evaluation).unwrap();
        assert_eq!(dag, cat.identity(&pd.object));
    }
    // Scalar case: the 1×1 pairing (3) daggers to (3).
    let t = VecMor::new(Mat::from_ints(&[&[3]]));
    let dag = pr.dagger(&cat, &1, &1, &t).unwrap();
    assert_eq!(dag.matrix, Mat::from_ints(&[&[3]]));
}

#[test]
fn finrel_dagger_formula_matches_enumeration() {
    let cat = FinRel::default();
    let pr = RelPreduals;
    for i_size in 1..=2usize {
        let x = FinSet::canonical(i_size).pop().unwrap();
        let pd = pr.predual(&cat, &x).unwrap();
        for t_size in 1..=2usize {
            let t_obj = {
                let labels: Vec<String> = (0..t_size).map(|k| format!("t{k}")).collect();
                let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
                FinSet::from_labels(&refs)
            };
            let src = cat.tensor_obj(&t_obj, &x);
            if let HomSpace::Enumerated(ts) = cat.hom(&src, &cat.unit()) {
                for t in ts {
                    let formula = pr.dagger(&cat, &t_obj, &x, &t).unwrap();
                    let generic = dagger_via_homs(&cat, &t_obj, &x, &pd, &t).unwrap();
                    assert_eq!(formula, generic);
                    assert_eq!(pairing_image(&cat, &pd, &x, &formula), t);
                }
            } else {
                panic!("expected enumerated homs")
            }
        }
    }
}

#[test]
fn finrel_single_element_dagger_by_hand() {
    // X = {a}, t the full relation T ⊗ X → {*} with T the unit: t† = {(*, a)}.
    let cat = FinRel::default();
    let pr = RelPreduals;
    let x = FinSet::from_labels(&["a"]);
    let t_obj = cat.unit();
    let src = cat.tensor_obj(&t_obj, &x);
    let t = Rel::from_pairs(src, cat.unit(), &[(0, 0)]);
    let dag = pr.dagger(&cat, &t_obj, &x, &t).unwrap();
    assert_eq!(dag.pairs.len(), 1);
    assert!(dag.contains(0, 0));
}

#[test]
fn predual_verification_passes_and_detects_bad_candidates() {
    let cat = FinVect;
    let pr = VectPreduals;
    let tests: Vec<usize> = (0..=4).collect();
    for x in 0..=4usize {
        let pd = pr.predual(&cat, &x).unwrap();
        let report = verify_predual(&cat, &x, &pd, &tests, None);
        assert!(report.all_passed(), "dim {x}: {report}");
    }
    // Wrong dimension: reported as the distinct non-square failure class.
    let bad = PreDualData::<FinVect> {
        object: 3,
        evaluation: VecMor::new(Mat::zero(1, 6)),
    };
    let report = verify_predual(&cat, &2, &bad, &[1], None);
    assert!(report
        .failures()
        .any(|c| c.anchor == "predual.bijection.nonsquare"));

    // Right dimension, broken evaluation: rank failure.
    let zero_ev = PreDualData::<FinVect> {
        object: 2,
        evaluation: VecMor::new(Mat::zero(1, 4)),
    };
    let report = verify_predual(&cat, &2, &zero_ev, &[1], None);
    assert!(report
        .failures()
        .any(|c| c.anchor == "predual.bijection.rank"));
}

#[test]
fn finrel_preduals_verify_exhaustively() {
    let cat = FinRel::default();
    let pr = RelPreduals;
    let tests = cat.test_objects(2);
    for x in cat.test_objects(2) {
        let pd = pr.predual(&cat, &x).unwrap();
        let report = verify_predual(&cat, &x, &pd, &tests, None);
        assert!(report.all_passed(), "{x:?}: {report}");
    }
}

#[test]
fn contravariant_functoriality() {
    let cat = FinVect;
    let pr = VectPreduals;
    let mut rng = SplitMix64::new(7);
    for _ in 0..10 {
        let (a, b, c) = (
            1 + rng.below(3) as usize,
            1 + rng.below(3) as usize,
            1 + rng.below(3) as usize,
        );
        let f = VecMor::new(rng.matrix(b, a));
        let g = VecMor::new(rng.matrix(c, b));
        let gf = cat.compose(&g, &f).unwrap();
        let f_star = predual_of_morphism(&cat, &pr, &f).unwrap();
        let g_star = predual_of_morphism(&cat, &pr, &g).unwrap();
        let gf_star = predual_of_morphism(&cat, &pr, &gf).unwrap();
        assert_eq!(gf_star, cat.compose(&f_star, &g_star).unwrap());
        // In the canonical pairing bases the pre-dual of a matrix is its
        // transpose.
        assert_eq!(f_star.matrix, f.matrix.transpose());
    }
    // Identities map to identities.
    let id3 = cat.identity(&3);
    assert_eq!(
        predual_of_morphism(&cat, &pr, &id3).unwrap(),
        cat.identity(&3)
    );

    // Exhaustive functoriality over relations on small carriers.
    let rel = FinRel::default();
    let rp = RelPreduals;
    let s1 = FinSet::from_labels(&["a"]);
    let s2 = FinSet::from_labels(&["a", "b"]);
    if let (HomSpace::Enumerated(fs), HomSpace::Enumerated(gs)) =
        (rel.hom(&s1, &s2), rel.hom(&s2, &s2))
    {
        for f in &fs {
            for g in &gs {
                let gf = rel.compose(g, f).unwrap();
                let lhs = predual_of_morphism(&rel, &rp, &gf).unwrap();
                let rhs = rel
                    .compose(
                        &predual_of_morphism(&rel, &rp, f).unwrap(),
                        &predual_of_morphism(&rel, &rp, g).unwrap(),
                    )
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    } else {
        panic!("expected enumerated homs");
    }
}

#[test]
fn dagger_is_natural_in_the_test_object() {
    // dagger(t ∘ (h ⊗ X)) = dagger(t) ∘ h for h : T' → T.
    let cat = FinVect;
    let pr = VectPreduals;
    let mut rng = SplitMix64::new(13);
    for _ in 0..10 {
        let x = 1 + rng.below(3) as usize;
        let t_dim = 1 + rng.below(3) as usize;
        let t2_dim = 1 + rng.below(3) as usize;
        let t = VecMor::new(rng.matrix(1, t_dim * x));
        let h = VecMor::new(rng.matrix(t_dim, t2_dim));
        let pulled = cat.compose(&t, &cat.tensor_mor_right(&h, &x)).unwrap();
        let lhs = pr.dagger(&cat, &t2_dim, &x, &pulled).unwrap();
        let rhs = cat
            .compose(&pr.dagger(&cat, &t_dim, &x, &t).unwrap(), &h)
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn uniqueness_isos() {
    let cat = FinVect;
    let pr = VectPreduals;
    // Identical candidates compare along the identity.
    let pd = pr.predual(&cat, &2).unwrap();
    let (fwd, bwd) = uniqueness_iso(&cat, &2, &pd, &pd).unwrap();
    assert!(fwd.matrix.is_identity() && bwd.matrix.is_identity());

    // Scaling the evaluation by 2 compares along 2·id.
    let scaled = PreDualData::<FinVect> {
        object: 2,
        evaluation: VecMor::new(pd.evaluation.matrix.scale(&(one() + one()))),
    };
    let (fwd, bwd) = uniqueness_iso(&cat, &2, &pd, &scaled).unwrap();
    assert_eq!(fwd.matrix, Mat::identity(2).scale(&(one() + one())));
    assert_eq!(
        bwd.matrix,
        Mat::identity(2).scale(&(one() / (one() + one())))
    );

    // The unit object is its own pre-dual: compare the canonical candidate
    // against the multiplication-as-evaluation candidate.
    let unit_pd = pr.predual(&cat, &1).unwrap();
    let mult_pd = PreDualData::<FinVect> {
        object: 1,
        evaluation: VecMor::new(Mat::identity(1)),
    };
    let (fwd, _) = uniqueness_iso(&cat, &1, &unit_pd, &mult_pd).unwrap();
    assert!(fwd.matrix.is_identity());

    // A non-candidate (zero evaluation) is rejected.
    let broken = PreDualData::<FinVect> {
        object: 2,
        evaluation: VecMor::new(Mat::zero(1, 4)),
    };
    assert!(matches!(
        uniqueness_iso(&cat, &2, &pd, &broken),
        Err(EngineError::NotPreDual(_) | EngineError::NotInvertible(_))
    ));
}

#[test]
fn closed_structure_gives_canonical_preduals() {
    // Matrix spaces: [X, 𝕀] has the same dimension as X.
    let cat = FinVect;
    for x in 0..=3usize {
        let pd = ClosedPreduals.predual(&cat, &x).unwrap();
        assert_eq!(pd.object, x);
        let report = verify_predual(&cat, &x, &pd, &[0, 1, 2, 3], None);
        assert!(report.all_passed(), "{report}");
        // Same pre-dual as the canonical pairing, up to unique comparison.
        let canonical = VectPreduals.predual(&cat, &x).unwrap();
        if x > 0 {
            let (fwd, _) = uniqueness_iso(&cat, &x, &canonical, &pd).unwrap();
            assert!(fwd.matrix.is_identity());
        }
    }

    // Relations: [J, {*}] = J × {*} is J up to the tuple layout, and the
    // closed-structure evaluation verifies as a pre-dual evaluation.
    let rel = FinRel::default();
    let j = FinSet::from_labels(&["a", "b"]);
    let pd = ClosedPreduals.predual(&rel, &j).unwrap();
    assert_eq!(pd.object.size(), j.size());
    let report = verify_predual(&rel, &j, &pd, &rel.test_objects(2), None);
    assert!(report.all_passed(), "{report}");
}

#[test]
fn units_in_finvect_and_finrel() {
    let cat = FinVect;
    let pr = VectPreduals;
    for x in 1..=3usize {
        let units = compute_units(&cat, &pr, &x).unwrap();
        // The twist is symmetric, so η = j, and in the paired bases both
        // are the identity X → X**.
        assert_eq!(units.eta, units.j);
        assert!(units.eta.matrix.is_identity());
        // Defining equations.
        let pd = pr.predual(&cat, &x).unwrap();
        let pd2 = pr.predual(&cat, &pd.object).unwrap();
        let lhs = cat
            .compose(&pd.evaluation, &cat.braiding(&x, &pd.object))
            .unwrap();
        let rhs = cat
            .compose(
                &pd2.evaluation,
                &cat.tensor_mor_right(&units.eta, &pd.object),
            )
            .unwrap();
        assert_eq!(lhs, rhs);
    }
    // Scalar case: η = j = identity on the unit object.
    let units = compute_units(&cat, &pr, &1).unwrap();
    assert!(units.eta.matrix.is_identity());

    let rel = FinRel::default();
    let rp = RelPreduals;
    let x = FinSet::from_labels(&["a", "b"]);
    let units = compute_units(&rel, &rp, &x).unwrap();
    assert_eq!(units.eta, rel.identity(&x));
    assert_eq!(units.j, rel.identity(&x));
}

#[test]
fn terminal_unit_structures() {
    // A pomonoid with the unit as maximum: constant pre-dual everywhere.
    let p = fixtures::contractive_not_residuated();
    let cat = PomonoidCat::new(p).unwrap();
    let objects = cat.objects();
    let (structure, report) = terminal_unit_prerigid(&cat, &objects);
    assert!(report.all_passed(), "{report}");
    let structure = structure.expect("unit is terminal");
    for x in &objects {
        let pd = structure.predual(&cat, x).unwrap();
        assert_eq!(pd.object, cat.unit());
        let rep = verify_predual(&cat, x, &pd, &objects, None);
        assert!(rep.all_passed(), "{rep}");
    }

    // Matrix spaces: the unit is not terminal (hom(2, 1) is 2-dimensional).
    let vect = FinVect;
    let (structure, report) = terminal_unit_prerigid(&vect, &[1, 2]);
    assert!(structure.is_none());
    assert!(!report.all_passed());

    // Initial unit with a nontrivial skeleton: not right closed.
    let p = fixtures::initial_unit_chain();
    let cat = PomonoidCat::new(p).unwrap();
    let report = not_right_closed_witness(&cat, &cat.objects());
    assert!(report.all_passed(), "{report}");

    // The same witness fails on a group pomonoid where all objects are
    // isomorphic only to themselves but the unit is not initial.
    let p = fixtures::cyclic_group(2);
    let cat = PomonoidCat::new(p).unwrap();
    let report = not_right_closed_witness(&cat, &cat.objects());
    assert!(!report.all_passed());
}

#[test]
fn selfadjointness_routes() {
    // Braided route on matrix spaces.
    let cat = FinVect;
    let pr = VectPreduals;
    let mut rng = SplitMix64::new(19);
    let objects: Vec<usize> = vec![1, 2, 3];
    let mors = vec![
        VecMor::new(rng.matrix(2, 1)),
        VecMor::new(rng.matrix(3, 2)),
        VecMor::new(rng.matrix(1, 3)),
    ];
    let braiding = |x: &usize, y: &usize| FinVect.braiding(x, y);
    let report = check_selfadjoint(
        &cat,
        &pr,
        &SelfAdjointRoute::Braided,
        &objects,
        &mors,
        Some(&braiding),
    );
    assert!(report.all_passed(), "{report}");

    // Terminal-unit route on a pomonoid.
    let p = fixtures::contractive_not_residuated();
    let pcat = PomonoidCat::new(p).unwrap();
    let (structure, _) = terminal_unit_prerigid(&pcat, &pcat.objects());
    let structure = structure.unwrap();
    let report = check_selfadjoint(
        &pcat,
        &structure,
        &SelfAdjointRoute::TerminalUnit,
        &pcat.objects(),
        &[],
        None,
    );
    assert!(report.all_passed(), "{report}");

    // A non-natural ad-hoc bijection: scale by the dimension of Y. The
    // bijectivity per hom-set survives but naturality in Y fails.
    let bad = |_x: &usize, y: &usize, t: &VecMor| {
        let c = FinVect.braiding(y, _x);
        let composed = FinVect.compose(t, &c).unwrap();
        VecMor::new(composed.matrix.scale(&rat(*y as i64)))
    };
    let report = check_selfadjoint(
        &cat,
        &pr,
        &SelfAdjointRoute::Custom(&bad),
        &objects,
        &mors,
        None,
    );
    assert!(!report.all_passed());
}

/// Degree-0 truncation of a graded object.
struct DegreeZero;

impl CFunctor<Graded, FinVect> for DegreeZero {
    fn obj(&self, x: &GradedObj) -> usize {
        x.get(&0).copied().unwrap_or(0)
    }
    fn mor(&self, f: &GradedMor) -> VecMor {
        let d = f.src.get(&0).copied().unwrap_or(0);
        let t = f.tgt.get(&0).copied().unwrap_or(0);
        match f.component(0) {
            Some(m) => VecMor::new(m.clone()),
            None => VecMor::new(Mat::zero(t, d)),
        }
    }
}

/// Embedding of a space in degree 0.
struct EmbedDegreeZero;

impl CFunctor<FinVect, Graded> for EmbedDegreeZero {
    fn obj(&self, x: &usize) -> GradedObj {
        graded_obj(&[(0, *x)])
    }
    fn mor(&self, f: &VecMor) -> GradedMor {
        let src = graded_obj(&[(0, f.matrix.cols())]);
        let tgt = graded_obj(&[(0, f.matrix.rows())]);
        let mut comps = std::collections::BTreeMap::new();
        if f.matrix.cols() > 0 && f.matrix.rows() > 0 {
            comps.insert(0usize, f.matrix.clone());
        }
        GradedMor::new(src, tgt, comps)
    }
}

fn truncation_adjunction<'a>(
    graded: &'a Graded,
    vect: &'a FinVect,
) -> Adjunction<'a, Graded, FinVect, DegreeZero, EmbedDegreeZero> {
    Adjunction {
        b: graded,
        a: vect,
        left: DegreeZero,
        right: EmbedDegreeZero,
        unit: Box::new(move |x: &GradedObj| {
            // η_X : X → RLX kills the positive degrees.
            let rlx = graded_obj(&[(0, x.get(&0).copied().unwrap_or(0))]);
            let mut comps = std::collections::BTreeMap::new();
            if let Some(&d0) = x.get(&0) {
                comps.insert(0usize, Mat::identity(d0));
            }
            GradedMor::new(x.clone(), rlx, comps)
        }),
        counit: Box::new(move |v: &usize| FinVect.identity(v)),
    }
}

#[test]
fn transfer_along_truncation_matches_formula() {
    let graded = Graded::nat();
    let vect = FinVect;
    let adj = truncation_adjunction(&graded, &vect);

    // Triangle identities hold on a small test set.
    let test_b = vec![
        graded.unit(),
        graded_obj(&[(0, 2), (1, 1)]),
        graded_obj(&[(1, 2)]),
    ];
    let test_a = vec![0usize, 1, 2];
    let report = prerigid_core::cat::check_adjunction(&adj, &test_b, &test_a);
    assert!(report.all_passed(), "{report}");

    for x in &test_b {
        let transferred = transfer_predual(&adj, &VectPreduals, x).unwrap();
        let formula = GradedPreduals.predual(&graded, x).unwrap();
        assert_eq!(transferred.object, formula.object);
        assert_eq!(transferred.evaluation, formula.evaluation);
        let rep = verify_predual(&graded, x, &transferred, &test_b, None);
        assert!(rep.all_passed(), "{rep}");
    }
}

#[test]
fn transfer_via_identity_adjunction_is_identity() {
    use prerigid_core::cat::IdFunctor;
    let cat = FinVect;
    let adj: Adjunction<'_, FinVect, FinVect, IdFunctor, IdFunctor> = Adjunction {
        b: &cat,
        a: &cat,
        left: IdFunctor,
        right: IdFunctor,
        unit: Box::new(|x: &usize| FinVect.identity(x)),
        counit: Box::new(|x: &usize| FinVect.identity(x)),
    };
    let pd = transfer_predual(&adj, &VectPreduals, &3).unwrap();
    let canonical = VectPreduals.predual(&cat, &3).unwrap();
    assert_eq!(pd.object, canonical.object);
    assert_eq!(pd.evaluation, canonical.evaluation);
}

#[test]
fn transfer_blocked_when_unit_condition_fails() {
    let graded = Graded::nat();
    let vect = FinVect;
    // A "left functor" that doubles the degree-0 part: RL(𝕀) has dimension
    // 2, so the transfer must refuse to run.
    struct DoubledDegreeZero;
    impl CFunctor<Graded, FinVect> for DoubledDegreeZero {
        fn obj(&self, x: &GradedObj) -> usize {
            2 * x.get(&0).copied().unwrap_or(0)
        }
        fn mor(&self, f: &GradedMor) -> VecMor {
            let d = 2 * f.src.get(&0).copied().unwrap_or(0);
            let t = 2 * f.tgt.get(&0).copied().unwrap_or(0);
            match f.component(0) {
                Some(m) => VecMor::new(Mat::identity(2).kron(m)),
                None => VecMor::new(Mat::zero(t, d)),
            }
        }
    }
    let adj: Adjunction<'_, Graded, FinVect, DoubledDegreeZero, EmbedDegreeZero> = Adjunction {
        b: &graded,
        a: &vect,
        left: DoubledDegreeZero,
        right: EmbedDegreeZero,
        unit: Box::new(|x: &GradedObj| Graded::nat().identity(x)),
        counit: Box::new(|v: &usize| FinVect.identity(v)),
    };
    match transfer_predual(&adj, &VectPreduals, &graded.unit()) {
        Err(EngineError::TransferBlocked(_)) => {}
        other => panic!("expected TransferBlocked, got {other:?}"),
    }
}

#[test]
fn graded_formula_agrees_with_closed_structure_via_uniqueness() {
    let cat = Graded::nat();
    for x in [graded_obj(&[(0, 2), (1, 1)]), graded_obj(&[(0, 1), (2, 2)])] {
        let formula = GradedPreduals.predual(&cat, &x).unwrap();
        let closed = ClosedPreduals.predual(&cat, &x).unwrap();
        assert_eq!(formula.object, closed.object);
        let (fwd, bwd) = uniqueness_iso(&cat, &x, &formula, &closed).unwrap();
        let round = cat.compose(&fwd, &bwd).unwrap();
        assert_eq!(round, cat.identity(&formula.object));
    }
}
