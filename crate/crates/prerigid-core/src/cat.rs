//! Trait vocabulary for strict monoidal categories with concrete,
//! machine-checkable hom-spaces, plus the generic law checkers.
//!
//! All instance categories in this crate are strict: tensor of objects is
//! associative and unital on the nose at the representation level (index
//! tuples are flattened, Kronecker products are laid out row-major), so the
//! checkers compare payloads with `==` and never reason up to coherence
//! isomorphisms.

use crate::matrix::Mat;
use crate::prelude::*;
use crate::rational::Rat;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatError {
    /// Composition endpoints do not agree.
    Composition { expected: String, found: String },
    /// Operands live in different categories or components.
    CategoryMismatch(String),
}

impl core::fmt::Display for CatError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CatError::Composition { expected, found } => {
                write!(
                    f,
                    "composition endpoint mismatch: expected {expected}, found {found}"
                )
            }
            CatError::CategoryMismatch(s) => write!(f, "category mismatch: {s}"),
        }
    }
}

pub trait Category {
    type Obj: Clone + PartialEq + core::fmt::Debug;
    type Mor: Clone + PartialEq + core::fmt::Debug;

    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`, defined when `target(f) = source(g)`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, CatError>;

    fn compose_err(&self, g: &Self::Mor, f: &Self::Mor) -> CatError {
        CatError::Composition {
            expected: format!("{:?}", self.target(f)),
            found: format!("{:?}", self.source(g)),
        }
    }
}

pub trait Monoidal: Category {
    fn unit(&self) -> Self::Obj;
    fn tensor_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;

    /// `f ⊗ id_y`.
    fn tensor_mor_right(&self, f: &Self::Mor, y: &Self::Obj) -> Self::Mor {
        self.tensor_mor(f, &self.identity(y))
    }

    /// `id_x ⊗ g`.
    fn tensor_mor_left(&self, x: &Self::Obj, g: &Self::Mor) -> Self::Mor {
        self.tensor_mor(&self.identity(x), g)
    }
}

pub trait Braided: Monoidal {
    /// `c_{x,y} : x ⊗ y → y ⊗ x`.
    fn braiding(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;
    /// `c_{x,y}^{-1} : y ⊗ x → x ⊗ y`.
    fn braiding_inv(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;
}

/// A hom-set in one of the three concrete presentations the verifiers
/// understand.
#[derive(Clone, Debug)]
pub enum HomSpace<M> {
    /// Full duplicate-free enumeration of the hom-set.
    Enumerated(Vec<M>),
    /// Basis of a finite-dimensional rational vector space of morphisms.
    Linear(Vec<M>),
    /// Deterministic samples from a hom-set too large to enumerate.
    Sampled(Vec<M>),
}

impl<M> HomSpace<M> {
    pub fn members(&self) -> &[M] {
        match self {
            HomSpace::Enumerated(v) | HomSpace::Linear(v) | HomSpace::Sampled(v) => v,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            HomSpace::Enumerated(_) => "enumerated",
            HomSpace::Linear(_) => "linear",
            HomSpace::Sampled(_) => "sampled",
        }
    }
}

pub trait HomSpaces: Category {
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> HomSpace<Self::Mor>;

    /// Coordinates of a morphism in the ambient linear space of its hom-set,
    /// for categories whose `hom` returns `Linear`. The basis returned by
    /// `hom` must be expressed in the same coordinates.
    fn mor_coords(&self, _f: &Self::Mor) -> Option<Vec<Rat>> {
        None
    }

    fn mor_from_coords(
        &self,
        _x: &Self::Obj,
        _y: &Self::Obj,
        _coords: &[Rat],
    ) -> Option<Self::Mor> {
        None
    }
}

/// Right-closed structure: an internal hom `[X, Y]` with its evaluation
/// (counit) `[X, Y] ⊗ X → Y`.
pub trait ClosedMonoidal: Monoidal {
    fn internal_hom(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    fn eval(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;
}

/// Functor between two concretely represented categories.
pub trait CFunctor<S: Category, D: Category> {
    fn obj(&self, x: &S::Obj) -> D::Obj;
    fn mor(&self, f: &S::Mor) -> D::Mor;
}

/// Identity endofunctor.
pub struct IdFunctor;

impl<C: Category> CFunctor<C, C> for IdFunctor {
    fn obj(&self, x: &C::Obj) -> C::Obj {
        x.clone()
    }
    fn mor(&self, f: &C::Mor) -> C::Mor {
        f.clone()
    }
}

/// The opposite category. Objects are shared with the inner category;
/// morphism payloads are unchanged but source/target and composition are
/// reversed. For a braided inner category the braiding is the opposite of
/// the inverse braiding.
pub struct Op<'c, C> {
    pub inner: &'c C,
}

impl<'c, C> Op<'c, C> {
    pub fn new(inner: &'c C) -> Self {
        Op { inner }
    }
}

impl<'c, C: Category> Category for Op<'c, C> {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn source(&self, f: &Self::Mor) -> Self::Obj {
        self.inner.target(f)
    }
    fn target(&self, f: &Self::Mor) -> Self::Obj {
        self.inner.source(f)
    }
    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        self.inner.identity(x)
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, CatError> {
        self.inner.compose(f, g)
    }
}

impl<'c, C: Monoidal> Monoidal for Op<'c, C> {
    fn unit(&self) -> Self::Obj {
        self.inner.unit()
    }
    fn tensor_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj {
        self.inner.tensor_obj(x, y)
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        self.inner.tensor_mor(f, g)
    }
}

impl<'c, C: Braided> Braided for Op<'c, C> {
    fn braiding(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor {
        self.inner.braiding_inv(x, y)
    }
    fn braiding_inv(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor {
        self.inner.braiding(x, y)
    }
}

impl<'c, C: HomSpaces> HomSpaces for Op<'c, C> {
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> HomSpace<Self::Mor> {
        self.inner.hom(y, x)
    }
    fn mor_coords(&self, f: &Self::Mor) -> Option<Vec<Rat>> {
        self.inner.mor_coords(f)
    }
    fn mor_from_coords(&self, x: &Self::Obj, y: &Self::Obj, coords: &[Rat]) -> Option<Self::Mor> {
        self.inner.mor_from_coords(y, x, coords)
    }
}

/// An adjunction `L ⊣ R` with `L : B → A`, presented by unit and counit
/// component maps.
pub struct Adjunction<'a, B: Category, A: Category, L: CFunctor<B, A>, R: CFunctor<A, B>> {
    pub b: &'a B,
    pub a: &'a A,
    pub left: L,
    pub right: R,
    /// `η_X : X → RLX` in `B`.
    pub unit: Box<dyn Fn(&B::Obj) -> B::Mor + 'a>,
    /// `ε_A : LRA → A` in `A`.
    pub counit: Box<dyn Fn(&A::Obj) -> A::Mor + 'a>,
}

/// Verify both triangle identities on the given test objects:
/// `ε_{LX} ∘ L(η_X) = id_{LX}` and `R(ε_A) ∘ η_{RA} = id_{RA}`.
pub fn check_adjunction<B, A, L, R>(
    adj: &Adjunction<'_, B, A, L, R>,
    test_b: &[B::Obj],
    test_a: &[A::Obj],
) -> Report
where
    B: Category,
    A: Category,
    L: CFunctor<B, A>,
    R: CFunctor<A, B>,
{
    let mut report = Report::new();
    let set = format!(
        "{} objects of B, {} objects of A",
        test_b.len(),
        test_a.len()
    );
    for x in test_b {
        let lx = adj.left.obj(x);
        let lhs = adj
            .a
            .compose(&(adj.counit)(&lx), &adj.left.mor(&(adj.unit)(x)))
            .expect("triangle composite must be well-typed");
        report.check_eq(
            "adjunction.triangle.left",
            "counit after image of unit is the identity on LX",
            &set,
            &lhs,
            &adj.a.identity(&lx),
        );
    }
    for a in test_a {
        let ra = adj.right.obj(a);
        let lhs = adj
            .b
            .compose(&adj.right.mor(&(adj.counit)(a)), &(adj.unit)(&ra))
            .expect("triangle composite must be well-typed");
        report.check_eq(
            "adjunction.triangle.right",
            "image of counit after unit is the identity on RA",
            &set,
            &lhs,
            &adj.b.identity(&ra),
        );
    }
    report
}

/// Associativity of composition, identity laws and the interchange law on
/// sampled morphisms. `chains` supplies composable triples `(h, g, f)`;
/// `pairs` supplies interchange candidates `((f, f'), (g, g'))` with
/// `f ∘ f'` and `g ∘ g'` defined.
pub fn check_category_laws<C: Monoidal>(
    cat: &C,
    chains: &[(C::Mor, C::Mor, C::Mor)],
    pairs: &[((C::Mor, C::Mor), (C::Mor, C::Mor))],
) -> Report {
    let mut report = Report::new();
    let set = format!(
        "{} composable triples, {} interchange pairs",
        chains.len(),
        pairs.len()
    );
    for (h, g, f) in chains {
        let gf = cat.compose(g, f).expect("chain must be composable");
        let hg = cat.compose(h, g).expect("chain must be composable");
        let lhs = cat.compose(h, &gf).expect("chain must be composable");
        let rhs = cat.compose(&hg, f).expect("chain must be composable");
        report.check_eq(
            "category.assoc",
            "composition is associative",
            &set,
            &lhs,
            &rhs,
        );
    }
    for (f, _, _) in chains {
        let id_t = cat.identity(&cat.target(f));
        let id_s = cat.identity(&cat.source(f));
        let l = cat.compose(&id_t, f).expect("identity composable");
        let r = cat.compose(f, &id_s).expect("identity composable");
        report.check_eq("category.identity", "identities are neutral", &set, &l, f);
        report.check_eq("category.identity", "identities are neutral", &set, &r, f);
    }
    for ((f, f2), (g, g2)) in pairs {
        let lhs = cat
            .compose(&cat.tensor_mor(f, g), &cat.tensor_mor(f2, g2))
            .expect("interchange");
        let ff2 = cat.compose(f, f2).expect("interchange");
        let gg2 = cat.compose(g, g2).expect("interchange");
        let rhs = cat.tensor_mor(&ff2, &gg2);
        report.check_eq(
            "monoidal.interchange",
            "tensor and composition interchange",
            &set,
            &lhs,
            &rhs,
        );
    }
    report
}

/// Hexagon identities (in strict form), invertibility and naturality of a
/// braiding on sampled objects and morphisms.
pub fn check_braiding<C: Braided>(cat: &C, objects: &[C::Obj], sample_mors: &[C::Mor]) -> Report {
    let mut report = Report::new();
    let set = format!(
        "{} objects, {} sampled morphisms",
        objects.len(),
        sample_mors.len()
    );
    for x in objects {
        for y in objects {
            let c = cat.braiding(x, y);
            let cinv = cat.braiding_inv(x, y);
            let fwd = cat.compose(&cinv, &c).expect("braiding endpoints");
            report.check_eq(
                "braiding.invertible",
                "braiding composed with its inverse is the identity",
                &set,
                &fwd,
                &cat.identity(&cat.tensor_obj(x, y)),
            );
            for z in objects {
                // c_{x, y⊗z} = (y ⊗ c_{x,z}) ∘ (c_{x,y} ⊗ z)
                let lhs = cat.braiding(x, &cat.tensor_obj(y, z));
                let rhs = cat
                    .compose(
                        &cat.tensor_mor_left(y, &cat.braiding(x, z)),
                        &cat.tensor_mor_right(&cat.braiding(x, y), z),
                    )
                    .expect("hexagon composite");
                report.check_eq(
                    "braiding.hexagon.right",
                    "first hexagon identity",
                    &set,
                    &lhs,
                    &rhs,
                );
                // c_{x⊗y, z} = (c_{x,z} ⊗ y) ∘ (x ⊗ c_{y,z})
                let lhs2 = cat.braiding(&cat.tensor_obj(x, y), z);
                let rhs2 = cat
                    .compose(
                        &cat.tensor_mor_right(&cat.braiding(x, z), y),
                        &cat.tensor_mor_left(x, &cat.braiding(y, z)),
                    )
                    .expect("hexagon composite");
                report.check_eq(
                    "braiding.hexagon.left",
                    "second hexagon identity",
                    &set,
                    &lhs2,
                    &rhs2,
                );
            }
        }
    }
    for f in sample_mors {
        for g in sample_mors {
            let (sf, tf) = (cat.source(f), cat.target(f));
            let (sg, tg) = (cat.source(g), cat.target(g));
            let lhs = cat
                .compose(&cat.braiding(&tf, &tg), &cat.tensor_mor(f, g))
                .expect("naturality composite");
            let rhs = cat
                .compose(&cat.tensor_mor(g, f), &cat.braiding(&sf, &sg))
                .expect("naturality composite");
            report.check_eq("braiding.natural", "braiding is natural", &set, &lhs, &rhs);
        }
    }
    report
}

/// Shared representation of finite-dimensional rational hom spaces: most
/// instances store morphisms as one matrix or a family of matrices, and
/// expose elementary-matrix bases. This helper enumerates the elementary
/// basis of an `n × m` matrix space.
pub fn elementary_basis(rows: usize, cols: usize) -> Vec<Mat> {
    let mut out = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let mut m = Mat::zero(rows, cols);
            m.set(r, c, crate::rational::one());
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finvect::{FinVect, VecMor};

    #[test]
    fn opposite_is_an_involution_on_payloads() {
        let v = FinVect;
        let op = Op::new(&v);
        let opop = Op::new(&op);
        let f = VecMor::new(Mat::from_ints(&[&[1, 2], &[3, 4], &[5, 6]]));
        // Payload unchanged, endpoints restored.
        assert_eq!(opop.source(&f), v.source(&f));
        assert_eq!(opop.target(&f), v.target(&f));
        let g = VecMor::new(Mat::from_ints(&[&[1, 0, 1]]));
        assert_eq!(opop.compose(&g, &f).unwrap(), v.compose(&g, &f).unwrap());
        // Hom-spaces agree member by member.
        let (a, b) = (2usize, 3usize);
        match (v.hom(&a, &b), opop.hom(&a, &b)) {
            (HomSpace::Linear(x), HomSpace::Linear(y)) => assert_eq!(x, y),
            _ => panic!("expected linear homs"),
        }
    }

    #[test]
    fn opposite_braiding_of_the_twist_is_the_twist_inverse() {
        let v = FinVect;
        let op = Op::new(&v);
        // On (1, 1) both braidings are the 1×1 identity.
        assert!(op.braiding(&1, &1).matrix.is_identity());
        // In general the opposite braiding carries the inverse payload.
        assert_eq!(op.braiding(&2, &3), v.braiding_inv(&2, &3));
    }

    #[test]
    fn elementary_basis_counts() {
        assert_eq!(elementary_basis(2, 3).len(), 6);
        assert!(elementary_basis(0, 5).is_empty());
    }
}
