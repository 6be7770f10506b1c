//! Lifting machinery for adjoint pairs: algebra and coalgebra objects,
//! lax ⇄ colax transport across an adjunction, the induced lifts on
//! (co)algebra objects, the lax structure of the pre-dual functor together
//! with the identity between its two induced lifts, and the truncated
//! free-algebra witness that separates liftable from non-liftable
//! adjunctions.
//!
//! Whether a lifted functor has an adjoint is not decidable at desk scale;
//! what is checked here are the concrete equalities these questions reduce
//! to: coherence of transported structures, preservation of (co)algebra
//! axioms by the lifts, payload identity of the two composite lifts of the
//! pre-dual functor, and the degreewise dimension profile of the truncated
//! quotient algebra whose unbounded growth blocks a finite-dimensional
//! adjoint.

use crate::cat::{Adjunction, Braided, CFunctor, Category, HomSpaces, Monoidal, Op};
use crate::engine::{compute_units, predual_of_morphism, EngineError, PreRigid};
use crate::matrix::Mat;
use crate::prelude::*;
use crate::rational::{one, Rat};
use crate::report::Report;
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct AlgebraObject<C: Category> {
    pub carrier: C::Obj,
    /// `m : A ⊗ A → A`.
    pub mult: C::Mor,
    /// `u : 𝕀 → A`.
    pub unit: C::Mor,
}

#[derive(Clone, Debug)]
pub struct CoalgebraObject<C: Category> {
    pub carrier: C::Obj,
    /// `Δ : A → A ⊗ A`.
    pub comult: C::Mor,
    /// `ε : A → 𝕀`.
    pub counit: C::Mor,
}

impl<C: Category> CoalgebraObject<C> {
    /// A coalgebra is exactly an algebra of the opposite category; payloads
    /// are shared.
    pub fn as_op_algebra(&self) -> AlgebraObject<Op<'_, C>>
    where
        for<'x> Op<'x, C>: Category<Obj = C::Obj, Mor = C::Mor>,
    {
        AlgebraObject {
            carrier: self.carrier.clone(),
            mult: self.comult.clone(),
            unit: self.counit.clone(),
        }
    }
}

/// Associativity and unit laws of an algebra object.
pub fn check_algebra<C: Monoidal>(cat: &C, a: &AlgebraObject<C>) -> Report {
    let mut report = Report::new();
    let set = "single algebra object".to_string();
    let id_a = cat.identity(&a.carrier);
    let lhs = cat
        .compose(&a.mult, &cat.tensor_mor(&a.mult, &id_a))
        .expect("associativity composite");
    let rhs = cat
        .compose(&a.mult, &cat.tensor_mor(&id_a, &a.mult))
        .expect("associativity composite");
    report.check_eq(
        "algebra.assoc",
        "multiplication is associative",
        &set,
        &lhs,
        &rhs,
    );
    let left_unit = cat
        .compose(&a.mult, &cat.tensor_mor(&a.unit, &id_a))
        .expect("unit composite");
    let right_unit = cat
        .compose(&a.mult, &cat.tensor_mor(&id_a, &a.unit))
        .expect("unit composite");
    report.check_eq(
        "algebra.unit.left",
        "left unit law",
        &set,
        &left_unit,
        &id_a,
    );
    report.check_eq(
        "algebra.unit.right",
        "right unit law",
        &set,
        &right_unit,
        &id_a,
    );
    report
}

/// Coassociativity and counit laws, checked directly in the category.
pub fn check_coalgebra<C: Monoidal>(cat: &C, c: &CoalgebraObject<C>) -> Report {
    let mut report = Report::new();
    let set = "single coalgebra object".to_string();
    let id_c = cat.identity(&c.carrier);
    let lhs = cat
        .compose(&cat.tensor_mor(&c.comult, &id_c), &c.comult)
        .expect("coassociativity composite");
    let rhs = cat
        .compose(&cat.tensor_mor(&id_c, &c.comult), &c.comult)
        .expect("coassociativity composite");
    report.check_eq(
        "coalgebra.coassoc",
        "comultiplication is coassociative",
        &set,
        &lhs,
        &rhs,
    );
    let left = cat
        .compose(&cat.tensor_mor(&c.counit, &id_c), &c.comult)
        .expect("counit composite");
    let right = cat
        .compose(&cat.tensor_mor(&id_c, &c.counit), &c.comult)
        .expect("counit composite");
    report.check_eq(
        "coalgebra.counit.left",
        "left counit law",
        &set,
        &left,
        &id_c,
    );
    report.check_eq(
        "coalgebra.counit.right",
        "right counit law",
        &set,
        &right,
        &id_c,
    );
    report
}

#[derive(Clone, Debug)]
pub struct BialgebraObject<C: Category> {
    pub carrier: C::Obj,
    pub mult: C::Mor,
    pub unit: C::Mor,
    pub comult: C::Mor,
    pub counit: C::Mor,
}

/// Bialgebra compatibility in a braided category:
/// `Δ∘m = (m⊗m)∘(A⊗c⊗A)∘(Δ⊗Δ)`, `Δ∘u = u⊗u`, `ε∘m = ε⊗ε`, `ε∘u = id`.
pub fn check_bialgebra<C: Braided>(cat: &C, b: &BialgebraObject<C>) -> Report {
    let mut report = Report::new();
    let set = "single bialgebra object".to_string();
    report.merge(check_algebra(
        cat,
        &AlgebraObject {
            carrier: b.carrier.clone(),
            mult: b.mult.clone(),
            unit: b.unit.clone(),
        },
    ));
    report.merge(check_coalgebra(
        cat,
        &CoalgebraObject {
            carrier: b.carrier.clone(),
            comult: b.comult.clone(),
            counit: b.counit.clone(),
        },
    ));
    let a = &b.carrier;
    let id_a = cat.identity(a);
    let lhs = cat
        .compose(&b.comult, &b.mult)
        .expect("compatibility composite");
    let middle = cat.tensor_mor(&cat.tensor_mor(&id_a, &cat.braiding(a, a)), &id_a);
    let rhs = cat
        .compose(
            &cat.tensor_mor(&b.mult, &b.mult),
            &cat.compose(&middle, &cat.tensor_mor(&b.comult, &b.comult))
                .expect("compatibility composite"),
        )
        .expect("compatibility composite");
    report.check_eq(
        "bialgebra.compat",
        "comultiplication is an algebra morphism for the braided tensor structure",
        &set,
        &lhs,
        &rhs,
    );
    let du = cat.compose(&b.comult, &b.unit).expect("unit compatibility");
    let uu = cat.tensor_mor(&b.unit, &b.unit);
    report.check_eq(
        "bialgebra.unit",
        "comultiplication preserves the unit",
        &set,
        &du,
        &uu,
    );
    let em = cat
        .compose(&b.counit, &b.mult)
        .expect("counit compatibility");
    let ee = cat.tensor_mor(&b.counit, &b.counit);
    report.check_eq(
        "bialgebra.counit",
        "counit is multiplicative",
        &set,
        &em,
        &ee,
    );
    let eu = cat.compose(&b.counit, &b.unit).expect("counit of unit");
    report.check_eq(
        "bialgebra.scalar",
        "counit of the unit is the identity",
        &set,
        &eu,
        &cat.identity(&cat.unit()),
    );
    report
}

/// A lax monoidal structure on a functor `S → D`, presented by component
/// closures over the test objects in play.
pub struct Lax<'f, S: Category, D: Category> {
    pub phi2: Box<dyn Fn(&S::Obj, &S::Obj) -> D::Mor + 'f>,
    pub phi0: D::Mor,
}

/// A colax monoidal structure on a functor `S → D`.
pub struct Colax<'f, S: Category, D: Category> {
    pub psi2: Box<dyn Fn(&S::Obj, &S::Obj) -> D::Mor + 'f>,
    pub psi0: D::Mor,
}

/// Lax coherence on the given test triples (strict categories, so the
/// associativity comparison is an equality of payloads).
pub fn check_lax_coherence<S, D, F>(
    s: &S,
    d: &D,
    functor: &F,
    lax: &Lax<'_, S, D>,
    triples: &[(S::Obj, S::Obj, S::Obj)],
) -> Report
where
    S: Monoidal,
    D: Monoidal,
    F: CFunctor<S, D>,
{
    let mut report = Report::new();
    let set = format!("{} test triples", triples.len());
    for (x, y, z) in triples {
        let xy = s.tensor_obj(x, y);
        let yz = s.tensor_obj(y, z);
        let lhs = d
            .compose(
                &(lax.phi2)(&xy, z),
                &d.tensor_mor(&(lax.phi2)(x, y), &d.identity(&functor.obj(z))),
            )
            .expect("lax associativity composite");
        let rhs = d
            .compose(
                &(lax.phi2)(x, &yz),
                &d.tensor_mor(&d.identity(&functor.obj(x)), &(lax.phi2)(y, z)),
            )
            .expect("lax associativity composite");
        report.check_eq(
            "lax.assoc",
            "lax structure is associative",
            &set,
            &lhs,
            &rhs,
        );
    }
    for (x, _, _) in triples {
        let rx = functor.obj(x);
        let left = d
            .compose(
                &(lax.phi2)(&s.unit(), x),
                &d.tensor_mor(&lax.phi0, &d.identity(&rx)),
            )
            .expect("lax unit composite");
        report.check_eq(
            "lax.unit.left",
            "left unit coherence",
            &set,
            &left,
            &d.identity(&rx),
        );
        let right = d
            .compose(
                &(lax.phi2)(x, &s.unit()),
                &d.tensor_mor(&d.identity(&rx), &lax.phi0),
            )
            .expect("lax unit composite");
        report.check_eq(
            "lax.unit.right",
            "right unit coherence",
            &set,
            &right,
            &d.identity(&rx),
        );
    }
    report
}

/// Colax coherence, dual to [`check_lax_coherence`].
pub fn check_colax_coherence<S, D, F>(
    s: &S,
    d: &D,
    functor: &F,
    colax: &Colax<'_, S, D>,
    triples: &[(S::Obj, S::Obj, S::Obj)],
) -> Report
where
    S: Monoidal,
    D: Monoidal,
    F: CFunctor<S, D>,
{
    let mut report = Report::new();
    let set = format!("{} test triples", triples.len());
    for (x, y, z) in triples {
        let xy = s.tensor_obj(x, y);
        let yz = s.tensor_obj(y, z);
        let lhs = d
            .compose(
                &d.tensor_mor(&(colax.psi2)(x, y), &d.identity(&functor.obj(z))),
                &(colax.psi2)(&xy, z),
            )
            .expect("colax associativity composite");
        let rhs = d
            .compose(
                &d.tensor_mor(&d.identity(&functor.obj(x)), &(colax.psi2)(y, z)),
                &(colax.psi2)(x, &yz),
            )
            .expect("colax associativity composite");
        report.check_eq(
            "colax.assoc",
            "colax structure is associative",
            &set,
            &lhs,
            &rhs,
        );
    }
    for (x, _, _) in triples {
        let lx = functor.obj(x);
        let left = d
            .compose(
                &d.tensor_mor(&colax.psi0, &d.identity(&lx)),
                &(colax.psi2)(&s.unit(), x),
            )
            .expect("colax unit composite");
        report.check_eq(
            "colax.unit.left",
            "left unit coherence",
            &set,
            &left,
            &d.identity(&lx),
        );
        let right = d
            .compose(
                &d.tensor_mor(&d.identity(&lx), &colax.psi0),
                &(colax.psi2)(x, &s.unit()),
            )
            .expect("colax unit composite");
        report.check_eq(
            "colax.unit.right",
            "right unit coherence",
            &set,
            &right,
            &d.identity(&lx),
        );
    }
    report
}

/// Transport a lax structure on the right adjoint to a colax structure on
/// the left adjoint: `ψ₂(X,Y) = ε ∘ L(φ₂(LX, LY)) ∘ L(η_X ⊗ η_Y)`.
pub fn colax_from_lax<'f, B, A, L, R>(
    adj: &'f Adjunction<'f, B, A, L, R>,
    lax: &'f Lax<'f, A, B>,
) -> Colax<'f, B, A>
where
    B: Monoidal,
    A: Monoidal,
    L: CFunctor<B, A>,
    R: CFunctor<A, B>,
{
    let psi2 = move |x: &B::Obj, y: &B::Obj| -> A::Mor {
        let lx = adj.left.obj(x);
        let ly = adj.left.obj(y);
        let inner = adj.b.tensor_mor(&(adj.unit)(x), &(adj.unit)(y));
        let phi = (lax.phi2)(&lx, &ly);
        let step = adj
            .b
            .compose(&phi, &inner)
            .expect("transport composite: φ₂(LX,LY) ∘ (η⊗η)");
        adj.a
            .compose(
                &(adj.counit)(&adj.a.tensor_obj(&lx, &ly)),
                &adj.left.mor(&step),
            )
            .expect("transport composite: ε ∘ L(…)")
    };
    let psi0 = adj
        .a
        .compose(&(adj.counit)(&adj.a.unit()), &adj.left.mor(&lax.phi0))
        .expect("transport composite: ε ∘ L(φ₀)");
    Colax {
        psi2: Box::new(psi2),
        psi0,
    }
}

/// Transport a colax structure on the left adjoint to a lax structure on
/// the right adjoint: `φ₂(X,Y) = R(ε_X ⊗ ε_Y) ∘ R(ψ₂(RX, RY)) ∘ η`.
pub fn lax_from_colax<'f, B, A, L, R>(
    adj: &'f Adjunction<'f, B, A, L, R>,
    colax: &'f Colax<'f, B, A>,
) -> Lax<'f, A, B>
where
    B: Monoidal,
    A: Monoidal,
    L: CFunctor<B, A>,
    R: CFunctor<A, B>,
{
    let phi2 = move |x: &A::Obj, y: &A::Obj| -> B::Mor {
        let rx = adj.right.obj(x);
        let ry = adj.right.obj(y);
        let psi = (colax.psi2)(&rx, &ry);
        let eps = adj.a.tensor_mor(&(adj.counit)(x), &(adj.counit)(y));
        let inner = adj
            .a
            .compose(&eps, &psi)
            .expect("transport composite: (ε⊗ε) ∘ ψ₂");
        adj.b
            .compose(
                &adj.right.mor(&inner),
                &(adj.unit)(&adj.b.tensor_obj(&rx, &ry)),
            )
            .expect("transport composite: R(…) ∘ η")
    };
    let phi0 = adj
        .b
        .compose(&adj.right.mor(&colax.psi0), &(adj.unit)(&adj.b.unit()))
        .expect("transport composite: R(ψ₀) ∘ η");
    Lax {
        phi2: Box::new(phi2),
        phi0,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftError {
    InvalidAlgebra(String),
    InvalidCoalgebra(String),
}

/// Lift an algebra along a lax functor:
/// `R̄(A, m, u) = (RA, Rm ∘ φ₂(A,A), Ru ∘ φ₀)`. Input axioms are verified
/// first; output axioms and the forgetful-square condition (the carrier of
/// the lift is the image of the carrier) are checked on the result.
pub fn alg_lift<S, D, F>(
    s: &S,
    d: &D,
    functor: &F,
    lax: &Lax<'_, S, D>,
    a: &AlgebraObject<S>,
) -> Result<(AlgebraObject<D>, Report), LiftError>
where
    S: Monoidal,
    D: Monoidal,
    F: CFunctor<S, D>,
{
    let input = check_algebra(s, a);
    if !input.all_passed() {
        return Err(LiftError::InvalidAlgebra(
            input
                .first_failure()
                .map(|c| c.claim.clone())
                .unwrap_or_default(),
        ));
    }
    let carrier = functor.obj(&a.carrier);
    let mult = d
        .compose(&functor.mor(&a.mult), &(lax.phi2)(&a.carrier, &a.carrier))
        .expect("lifted multiplication composite");
    let unit = d
        .compose(&functor.mor(&a.unit), &lax.phi0)
        .expect("lifted unit composite");
    let lifted = AlgebraObject {
        carrier: carrier.clone(),
        mult,
        unit,
    };
    let mut report = check_algebra(d, &lifted);
    report.check_eq(
        "lift.forgetful",
        "carrier of the lift is the image of the carrier",
        "single lift",
        &lifted.carrier,
        &carrier,
    );
    Ok((lifted, report))
}

/// Lift a coalgebra along a colax functor:
/// `L̲(C, Δ, ε) = (LC, ψ₂(C,C) ∘ LΔ, ψ₀ ∘ Lε)`.
pub fn coalg_lift<S, D, F>(
    s: &S,
    d: &D,
    functor: &F,
    colax: &Colax<'_, S, D>,
    c: &CoalgebraObject<S>,
) -> Result<(CoalgebraObject<D>, Report), LiftError>
where
    S: Monoidal,
    D: Monoidal,
    F: CFunctor<S, D>,
{
    let input = check_coalgebra(s, c);
    if !input.all_passed() {
        return Err(LiftError::InvalidCoalgebra(
            input
                .first_failure()
                .map(|x| x.claim.clone())
                .unwrap_or_default(),
        ));
    }
    let carrier = functor.obj(&c.carrier);
    let comult = d
        .compose(
            &(colax.psi2)(&c.carrier, &c.carrier),
            &functor.mor(&c.comult),
        )
        .expect("lifted comultiplication composite");
    let counit = d
        .compose(&colax.psi0, &functor.mor(&c.counit))
        .expect("lifted counit composite");
    let lifted = CoalgebraObject {
        carrier: carrier.clone(),
        comult,
        counit,
    };
    let mut report = check_coalgebra(d, &lifted);
    report.check_eq(
        "lift.forgetful",
        "carrier of the lift is the image of the carrier",
        "single lift",
        &lifted.carrier,
        &carrier,
    );
    Ok((lifted, report))
}

/// The pre-dual functor of a braided pre-rigid category, as a functor from
/// the opposite category, together with its opposite-direction companion.
pub struct DualFunctor<'a, C: Monoidal, P: PreRigid<C>> {
    pub cat: &'a C,
    pub pr: &'a P,
}

impl<'a, 'c, C: Monoidal, P: PreRigid<C>> CFunctor<Op<'c, C>, C> for DualFunctor<'a, C, P> {
    fn obj(&self, x: &C::Obj) -> C::Obj {
        self.pr
            .predual(self.cat, x)
            .expect("pre-dual assigned")
            .object
    }
    fn mor(&self, f: &C::Mor) -> C::Mor {
        predual_of_morphism(self.cat, self.pr, f).expect("pre-dual of morphism")
    }
}

impl<'a, 'c, C: Monoidal, P: PreRigid<C>> CFunctor<C, Op<'c, C>> for DualFunctor<'a, C, P> {
    fn obj(&self, x: &C::Obj) -> C::Obj {
        self.pr
            .predual(self.cat, x)
            .expect("pre-dual assigned")
            .object
    }
    fn mor(&self, f: &C::Mor) -> C::Mor {
        predual_of_morphism(self.cat, self.pr, f).expect("pre-dual of morphism")
    }
}

/// The self-adjunction `((−)*ᵒᵖ, (−)*, η, jᵒᵖ)` of the pre-dual functor.
pub fn dual_adjunction<'a, C, P>(
    cat: &'a C,
    op: &'a Op<'a, C>,
    pr: &'a P,
) -> Adjunction<'a, C, Op<'a, C>, DualFunctor<'a, C, P>, DualFunctor<'a, C, P>>
where
    C: Braided,
    P: PreRigid<C>,
{
    Adjunction {
        b: cat,
        a: op,
        left: DualFunctor { cat, pr },
        right: DualFunctor { cat, pr },
        unit: Box::new(move |x: &C::Obj| compute_units(cat, pr, x).expect("units computable").eta),
        counit: Box::new(move |x: &C::Obj| compute_units(cat, pr, x).expect("units computable").j),
    }
}

/// `φ̂₂(X, Y) : X* ⊗ Y* → (X ⊗ Y)*`, the dagger of
/// `(ev_X ⊗ ev_Y) ∘ (X* ⊗ c⁻¹_{X,Y*} ⊗ Y)`.
pub fn dual_phi2<C>(
    cat: &C,
    pr: &impl PreRigid<C>,
    x: &C::Obj,
    y: &C::Obj,
) -> Result<C::Mor, EngineError>
where
    C: Braided,
{
    let pd_x = pr.predual(cat, x)?;
    let pd_y = pr.predual(cat, y)?;
    let cinv = cat.braiding_inv(x, &pd_y.object); // Y*⊗X → X⊗Y*
    let middle = cat.tensor_mor(&cat.tensor_mor_left(&pd_x.object, &cinv), &cat.identity(y));
    let t = cat
        .compose(&cat.tensor_mor(&pd_x.evaluation, &pd_y.evaluation), &middle)
        .expect("pairing rearrangement composite");
    let xy = cat.tensor_obj(x, y);
    let t_source = cat.tensor_obj(&pd_x.object, &pd_y.object);
    pr.dagger(cat, &t_source, &xy, &t)
}

/// `φ̂₀ : 𝕀 → 𝕀*`, the dagger of the unit multiplication (the identity in a
/// strict category).
pub fn dual_phi0<C>(cat: &C, pr: &impl PreRigid<C>) -> Result<C::Mor, EngineError>
where
    C: Monoidal,
{
    let unit = cat.unit();
    pr.dagger(cat, &unit, &unit, &cat.identity(&unit))
}

/// Lax structure of the pre-dual functor over the given test pairs,
/// packaged for the generic machinery. The closures recompute daggers on
/// demand, which keeps them total on all tensor combinations of the test
/// objects.
pub fn dual_functor_lax<'f, C, P>(cat: &'f C, pr: &'f P) -> Lax<'f, Op<'f, C>, C>
where
    C: Braided,
    P: PreRigid<C>,
{
    Lax {
        phi2: Box::new(move |x: &C::Obj, y: &C::Obj| {
            dual_phi2(cat, pr, x, y).expect("dual lax component")
        }),
        phi0: dual_phi0(cat, pr).expect("dual lax unit"),
    }
}

/// Verify that the algebra lift of the pre-dual functor and the opposite of
/// its coalgebra lift produce payload-identical structure morphisms on each
/// sampled coalgebra: both composites send `(A, Δ, ε)` to
/// `(A*, Δ* ∘ φ̂₂(A,A), ε* ∘ φ̂₀)`.
pub fn check_barop_identity<C, P>(
    cat: &C,
    pr: &P,
    coalgebras: &[CoalgebraObject<C>],
    colax: &Colax<'_, C, Op<'_, C>>,
) -> Report
where
    C: Braided + HomSpaces,
    P: PreRigid<C>,
{
    let mut report = Report::new();
    let set = format!("{} sampled coalgebras", coalgebras.len());
    for c in coalgebras {
        // Algebra-lift path: R̄(A) with R = (−)* and its lax structure.
        let delta_star = match predual_of_morphism(cat, pr, &c.comult) {
            Ok(m) => m,
            Err(e) => {
                report.fail("barop.predual", "Δ* computable", format!("{e}"), &set);
                continue;
            }
        };
        let eps_star = match predual_of_morphism(cat, pr, &c.counit) {
            Ok(m) => m,
            Err(e) => {
                report.fail("barop.predual", "ε* computable", format!("{e}"), &set);
                continue;
            }
        };
        let phi2 = match dual_phi2(cat, pr, &c.carrier, &c.carrier) {
            Ok(m) => m,
            Err(e) => {
                report.fail("barop.lax", "φ̂₂ computable", format!("{e}"), &set);
                continue;
            }
        };
        let phi0 = match dual_phi0(cat, pr) {
            Ok(m) => m,
            Err(e) => {
                report.fail("barop.lax", "φ̂₀ computable", format!("{e}"), &set);
                continue;
            }
        };
        let alg_mult = cat
            .compose(&delta_star, &phi2)
            .expect("lifted multiplication");
        let alg_unit = cat.compose(&eps_star, &phi0).expect("lifted unit");

        // Coalgebra-lift path through the supplied colax structure on
        // L = R^op, read back in the base category.
        let coalg_mult = cat
            .compose(&delta_star, &(colax.psi2)(&c.carrier, &c.carrier))
            .expect("colifted multiplication");
        let coalg_unit = cat.compose(&eps_star, &colax.psi0).expect("colifted unit");

        report.check_eq(
            "barop.mult",
            "both lifts produce the same multiplication on the pre-dual carrier",
            &set,
            &alg_mult,
            &coalg_mult,
        );
        report.check_eq(
            "barop.unit",
            "both lifts produce the same unit on the pre-dual carrier",
            &set,
            &alg_unit,
            &coalg_unit,
        );

        // The lifted structure is an honest algebra.
        let pd = pr.predual(cat, &c.carrier).expect("pre-dual assigned");
        let lifted = AlgebraObject {
            carrier: pd.object,
            mult: alg_mult,
            unit: alg_unit,
        };
        report.merge(check_algebra(cat, &lifted));
    }
    report
}

/// Words over `{X, Y}` encoded with the leftmost letter in the most
/// significant bit (`X = 0 < Y = 1`), so numeric order is lexicographic.
fn word_string(mask: u32, len: usize) -> String {
    if len == 0 {
        return "1".to_owned();
    }
    (0..len)
        .map(|i| {
            if mask >> (len - 1 - i) & 1 == 1 {
                'Y'
            } else {
                'X'
            }
        })
        .collect()
}

/// The degree-truncated quotient of the free algebra on two generators by
/// the relations `X² = 0` and `XY + YX = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedFreeAlgebra {
    pub degree_bound: usize,
    /// Quotient dimension per degree `0..=degree_bound`.
    pub per_degree: Vec<usize>,
    pub cumulative: usize,
    /// Normal-form words per degree (the non-pivot words of the echelon
    /// reduction, in lexicographic order).
    pub normal_forms: Vec<Vec<String>>,
    /// Set when every positive degree keeps at least one normal form, so
    /// the cumulative dimension grows without bound as the cutoff rises.
    pub unbounded_growth: bool,
}

/// Row reduction of the ideal slice in each degree. Rows are the relation
/// multiples `w₁·X²·w₂` (one word) and `w₁·(XY+YX)·w₂` (two words); the
/// elimination keeps pivot rows normalised with their smallest word
/// leading, so the surviving non-pivot words are a canonical basis of the
/// quotient.
pub fn tambara_truncated(degree_bound: usize) -> TruncatedFreeAlgebra {
    assert!(degree_bound <= 24, "word masks use u32");
    let mut per_degree = Vec::with_capacity(degree_bound + 1);
    let mut normal_forms = Vec::with_capacity(degree_bound + 1);
    for n in 0..=degree_bound {
        let (rank, pivots) = reduce_degree(n);
        let words = 1u32 << n;
        per_degree.push((words as usize) - rank);
        let forms = (0..words)
            .filter(|w| !pivots.contains(w))
            .map(|w| word_string(w, n))
            .collect();
        normal_forms.push(forms);
    }
    let cumulative = per_degree.iter().sum();
    let unbounded_growth = per_degree.iter().skip(1).all(|&d| d >= 1);
    TruncatedFreeAlgebra {
        degree_bound,
        per_degree,
        cumulative,
        normal_forms,
        unbounded_growth,
    }
}

type SparseRow = Vec<(u32, Rat)>;

/// Eliminate the relation multiples of one degree; returns the rank and the
/// pivot words.
fn reduce_degree(n: usize) -> (usize, BTreeSet<u32>) {
    if n < 2 {
        return (0, BTreeSet::new());
    }
    let mut rows: Vec<SparseRow> = Vec::new();
    for p in 0..=n - 2 {
        let suffix_len = n - p - 2;
        for prefix in 0..(1u32 << p) {
            for suffix in 0..(1u32 << suffix_len) {
                let place =
                    |mid: u32| -> u32 { (prefix << (n - p)) | (mid << suffix_len) | suffix };
                // X·X
                rows.push(vec![(place(0b00), one())]);
                // X·Y + Y·X
                let (a, b) = (place(0b01), place(0b10));
                if a == b {
                    rows.push(vec![(a, one() + one())]);
                } else if a < b {
                    rows.push(vec![(a, one()), (b, one())]);
                } else {
                    rows.push(vec![(b, one()), (a, one())]);
                }
            }
        }
    }
    rows.sort();
    rows.dedup();

    let mut pivots: BTreeMap<u32, SparseRow> = BTreeMap::new();
    for mut row in rows {
        loop {
            row.retain(|(_, c)| !c.is_zero());
            let Some(&(lead, ref coeff)) = row.first() else {
                break;
            };
            match pivots.get(&lead) {
                Some(pivot_row) => {
                    let factor = coeff.clone();
                    row = sparse_sub(&row, pivot_row, &factor);
                }
                None => {
                    let inv = one() / coeff.clone();
                    let normalised = row.iter().map(|(w, c)| (*w, c * &inv)).collect();
                    pivots.insert(lead, normalised);
                    break;
                }
            }
        }
    }
    let keys = pivots.keys().copied().collect::<BTreeSet<u32>>();
    (keys.len(), keys)
}

/// `row − factor·pivot`, both sorted by word.
fn sparse_sub(row: &SparseRow, pivot: &SparseRow, factor: &Rat) -> SparseRow {
    let mut out: SparseRow = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        match (row.get(i), pivot.get(j)) {
            (Some((w1, c1)), Some((w2, c2))) if w1 == w2 => {
                let c = c1 - &(factor * c2);
                if !c.is_zero() {
                    out.push((*w1, c));
                }
                i += 1;
                j += 1;
            }
            (Some((w1, c1)), Some((w2, _))) if w1 < w2 => {
                out.push((*w1, c1.clone()));
                i += 1;
            }
            (Some(_), Some((w2, c2))) => {
                out.push((*w2, -(factor * c2)));
                j += 1;
            }
            (Some((w1, c1)), None) => {
                out.push((*w1, c1.clone()));
                i += 1;
            }
            (None, Some((w2, c2))) => {
                out.push((*w2, -(factor * c2)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Independent oracle: dense row reduction of the same relation multiples
/// over the full word basis of one degree. Only feasible for small degrees.
pub fn tambara_dense_rank(n: usize) -> usize {
    if n < 2 {
        return 0;
    }
    let words = 1usize << n;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for p in 0..=n - 2 {
        let suffix_len = n - p - 2;
        for prefix in 0..(1u32 << p) {
            for suffix in 0..(1u32 << suffix_len) {
                let place = |mid: u32| -> usize {
                    ((prefix << (n - p)) | (mid << suffix_len) | suffix) as usize
                };
                let mut r1 = vec![crate::rational::zero(); words];
                r1[place(0b00)] = one();
                rows.push(r1);
                let mut r2 = vec![crate::rational::zero(); words];
                r2[place(0b01)] = &r2[place(0b01)] + &one();
                r2[place(0b10)] = &r2[place(0b10)] + &one();
                rows.push(r2);
            }
        }
    }
    let m = Mat::from_fn(rows.len(), words, |r, c| rows[r][c].clone());
    m.rank()
}

/// Second independent oracle: the rewriting normal form of a single word
/// under `XX → 0`, `XY → −YX`. Words with two or more `X`s vanish; a single
/// `X` commutes to the right with a sign; pure `Y` words are fixed.
pub fn tambara_rewrite_normal_form(mask: u32, len: usize) -> Option<(u32, bool)> {
    let xs: Vec<usize> = (0..len)
        .filter(|i| mask >> (len - 1 - i) & 1 == 0)
        .collect();
    match xs.len() {
        0 => Some((mask, true)),
        1 => {
            let moves = len - 1 - xs[0];
            // Normal form Y^(len-1)X: all bits set except the last.
            let normal = ((1u32 << len) - 1) & !1;
            Some((normal, moves % 2 == 0))
        }
        _ => None,
    }
}

/// Concrete small (co/bi)algebras used by the suites.
pub mod fixtures {
    use super::*;
    use crate::finvect::{FinVect, VecMor};

    /// The group bialgebra on two elements: basis `e_0, e_1` with
    /// `e_i·e_j = e_{i+j mod 2}`, `Δ(e_i) = e_i ⊗ e_i`, `ε(e_i) = 1`.
    pub fn group_bialgebra_z2() -> BialgebraObject<FinVect> {
        let mut m = Mat::zero(2, 4);
        for i in 0..2usize {
            for j in 0..2usize {
                m.set((i + j) % 2, i * 2 + j, one());
            }
        }
        let mut delta = Mat::zero(4, 2);
        for i in 0..2usize {
            delta.set(i * 2 + i, i, one());
        }
        let mut u = Mat::zero(2, 1);
        u.set(0, 0, one());
        let mut eps = Mat::zero(1, 2);
        eps.set(0, 0, one());
        eps.set(0, 1, one());
        BialgebraObject {
            carrier: 2,
            mult: VecMor::new(m),
            unit: VecMor::new(u),
            comult: VecMor::new(delta),
            counit: VecMor::new(eps),
        }
    }

    /// Seeded coalgebras: the group coalgebra conjugated by invertible
    /// change-of-basis matrices, which preserves coassociativity exactly.
    pub fn seeded_coalgebras(seed: u64, count: usize) -> Vec<CoalgebraObject<FinVect>> {
        let base = group_bialgebra_z2();
        let mut out: Vec<CoalgebraObject<FinVect>> = vec![CoalgebraObject {
            carrier: base.carrier,
            comult: base.comult.clone(),
            counit: base.counit.clone(),
        }];
        let mut rng = crate::rng::SplitMix64::new(seed);
        for _ in 0..count {
            let p = rng.invertible_matrix(2);
            let p_inv = p.inverse().expect("invertible");
            let comult = VecMor::new(p.kron(&p).mul(&out[0].comult.matrix).mul(&p_inv));
            let counit = VecMor::new(out[0].counit.matrix.mul(&p_inv));
            out.push(CoalgebraObject {
                carrier: 2,
                comult,
                counit,
            });
        }
        out
    }
}
