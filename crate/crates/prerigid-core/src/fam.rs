//! Families of objects indexed by finite sets: the index-covariant category
//! `Fam(C)`, the index-contravariant category `Maf(C)` with its pre-rigidity
//! obstruction, and the closed structure of `Fam` over a closed base.
//!
//! An object is a finite list of base objects (the index set is `0..n`),
//! tensor is the cartesian product of indices with fibers tensored
//! pointwise, and the unit is the one-member family of the base unit.
//! Index products are flattened row-major, so the tensor is strictly
//! associative and unital at the representation level.

use crate::cat::{CatError, Category, ClosedMonoidal, HomSpace, HomSpaces, Monoidal};
use crate::engine::{dagger_via_homs, EngineError, PreDualData, PreRigid};
use crate::finvect::{FinVect, VecMor};
use crate::matrix::Mat;
use crate::prelude::*;
use crate::rational::Rat;
use crate::report::Report;
use crate::rng::SplitMix64;

/// The terminal category: one object, one morphism. It is strict monoidal
/// in the only possible way and serves as a degenerate base (families over
/// it are plain index data).
#[derive(Clone, Debug, Default)]
pub struct One;

impl Category for One {
    type Obj = ();
    type Mor = ();
    fn source(&self, _: &()) {}
    fn target(&self, _: &()) {}
    fn identity(&self, _: &()) {}
    fn compose(&self, _: &(), _: &()) -> Result<(), CatError> {
        Ok(())
    }
}

impl Monoidal for One {
    fn unit(&self) {}
    fn tensor_obj(&self, _: &(), _: &()) {}
    fn tensor_mor(&self, _: &(), _: &()) {}
}

impl HomSpaces for One {
    fn hom(&self, _: &(), _: &()) -> HomSpace<()> {
        HomSpace::Enumerated(vec![()])
    }
}

/// The pre-rigid structure of the terminal category (trivially, everything
/// is the unit).
pub struct OnePreduals;

impl PreRigid<One> for OnePreduals {
    fn predual(&self, _cat: &One, _x: &()) -> Result<PreDualData<One>, EngineError> {
        Ok(PreDualData {
            object: (),
            evaluation: (),
        })
    }
    fn dagger(&self, _cat: &One, _t: &(), _x: &(), _m: &()) -> Result<(), EngineError> {
        Ok(())
    }
}

/// A family `(X_i)_{i ∈ I}` with `I = 0..fibers.len()`.
pub struct FamObject<C: Category> {
    pub fibers: Vec<C::Obj>,
}

impl<C: Category> FamObject<C> {
    pub fn new(fibers: Vec<C::Obj>) -> Self {
        FamObject { fibers }
    }

    pub fn len(&self) -> usize {
        self.fibers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fibers.is_empty()
    }
}

impl<C: Category> Clone for FamObject<C> {
    fn clone(&self) -> Self {
        FamObject {
            fibers: self.fibers.clone(),
        }
    }
}

impl<C: Category> PartialEq for FamObject<C> {
    fn eq(&self, other: &Self) -> bool {
        self.fibers == other.fibers
    }
}

impl<C: Category> core::fmt::Debug for FamObject<C> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Fam{:?}", self.fibers)
    }
}

/// An index-covariant family morphism: a map of index sets together with a
/// fiberwise morphism `φ_i : X_i → Y_{f(i)}`.
pub struct FamMorphism<C: Category> {
    pub src: FamObject<C>,
    pub tgt: FamObject<C>,
    pub index_map: Vec<usize>,
    pub components: Vec<C::Mor>,
}

impl<C: Category> Clone for FamMorphism<C> {
    fn clone(&self) -> Self {
        FamMorphism {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            index_map: self.index_map.clone(),
            components: self.components.clone(),
        }
    }
}

impl<C: Category> PartialEq for FamMorphism<C> {
    fn eq(&self, other: &Self) -> bool {
        self.src == other.src
            && self.tgt == other.tgt
            && self.index_map == other.index_map
            && self.components == other.components
    }
}

impl<C: Category> core::fmt::Debug for FamMorphism<C> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "FamMor(map {:?}, {:?})", self.index_map, self.components)
    }
}

pub struct Fam<'c, C: Monoidal> {
    pub base: &'c C,
}

impl<'c, C: Monoidal> Fam<'c, C> {
    pub fn new(base: &'c C) -> Self {
        Fam { base }
    }

    pub fn mor(
        &self,
        src: FamObject<C>,
        tgt: FamObject<C>,
        index_map: Vec<usize>,
        components: Vec<C::Mor>,
    ) -> FamMorphism<C> {
        assert_eq!(
            index_map.len(),
            src.len(),
            "index map covers the source index set"
        );
        assert_eq!(
            components.len(),
            src.len(),
            "one component per source index"
        );
        for (i, &j) in index_map.iter().enumerate() {
            assert!(j < tgt.len(), "index map lands in the target index set");
            assert_eq!(self.base.source(&components[i]), src.fibers[i]);
            assert_eq!(self.base.target(&components[i]), tgt.fibers[j]);
        }
        FamMorphism {
            src,
            tgt,
            index_map,
            components,
        }
    }
}

impl<'c, C: Monoidal> Category for Fam<'c, C> {
    type Obj = FamObject<C>;
    type Mor = FamMorphism<C>;

    fn source(&self, f: &FamMorphism<C>) -> FamObject<C> {
        f.src.clone()
    }
    fn target(&self, f: &FamMorphism<C>) -> FamObject<C> {
        f.tgt.clone()
    }
    fn identity(&self, x: &FamObject<C>) -> FamMorphism<C> {
        FamMorphism {
            src: x.clone(),
            tgt: x.clone(),
            index_map: (0..x.len()).collect(),
            components: x.fibers.iter().map(|o| self.base.identity(o)).collect(),
        }
    }
    fn compose(&self, g: &FamMorphism<C>, f: &FamMorphism<C>) -> Result<FamMorphism<C>, CatError> {
        if f.tgt != g.src {
            return Err(self.compose_err(g, f));
        }
        let index_map: Vec<usize> = f.index_map.iter().map(|&j| g.index_map[j]).collect();
        let components = f
            .index_map
            .iter()
            .zip(&f.components)
            .map(|(&j, phi)| self.base.compose(&g.components[j], phi))
            .collect::<Result<_, _>>()?;
        Ok(FamMorphism {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            index_map,
            components,
        })
    }
}

impl<'c, C: Monoidal> Monoidal for Fam<'c, C> {
    fn unit(&self) -> FamObject<C> {
        FamObject::new(vec![self.base.unit()])
    }

    fn tensor_obj(&self, x: &FamObject<C>, y: &FamObject<C>) -> FamObject<C> {
        let mut fibers = Vec::with_capacity(x.len() * y.len());
        for a in &x.fibers {
            for b in &y.fibers {
                fibers.push(self.base.tensor_obj(a, b));
            }
        }
        FamObject::new(fibers)
    }

    fn tensor_mor(&self, f: &FamMorphism<C>, g: &FamMorphism<C>) -> FamMorphism<C> {
        let src = self.tensor_obj(&f.src, &g.src);
        let tgt = self.tensor_obj(&f.tgt, &g.tgt);
        let gt = g.tgt.len();
        let mut index_map = Vec::with_capacity(src.len());
        let mut components = Vec::with_capacity(src.len());
        for (i, phi) in f.components.iter().enumerate() {
            for (i2, psi) in g.components.iter().enumerate() {
                index_map.push(f.index_map[i] * gt + g.index_map[i2]);
                components.push(self.base.tensor_mor(phi, psi));
            }
        }
        FamMorphism {
            src,
            tgt,
            index_map,
            components,
        }
    }
}

/// Hom-space presentation over an exact-rational base: morphisms into a
/// singleton-indexed family form a finite-dimensional linear space (the
/// index map is forced), which is all the pre-dual verifier needs. Homs
/// into larger index sets enumerate index maps with zero components as
/// representative samples.
impl<'c> HomSpaces for Fam<'c, FinVect> {
    fn hom(
        &self,
        x: &FamObject<FinVect>,
        y: &FamObject<FinVect>,
    ) -> HomSpace<FamMorphism<FinVect>> {
        if y.len() == 1 {
            let mut basis = Vec::new();
            let p = y.fibers[0];
            for i in 0..x.len() {
                for r in 0..p {
                    for c in 0..x.fibers[i] {
                        let mut comps: Vec<VecMor> = (0..x.len())
                            .map(|k| VecMor::new(Mat::zero(p, x.fibers[k])))
                            .collect();
                        let mut m = Mat::zero(p, x.fibers[i]);
                        m.set(r, c, crate::rational::one());
                        comps[i] = VecMor::new(m);
                        basis.push(FamMorphism {
                            src: x.clone(),
                            tgt: y.clone(),
                            index_map: vec![0; x.len()],
                            components: comps,
                        });
                    }
                }
            }
            HomSpace::Linear(basis)
        } else {
            let mut samples = Vec::new();
            let maps = enumerate_maps(x.len(), y.len());
            for index_map in maps.into_iter().take(16) {
                let components = (0..x.len())
                    .map(|i| VecMor::new(Mat::zero(y.fibers[index_map[i]], x.fibers[i])))
                    .collect();
                samples.push(FamMorphism {
                    src: x.clone(),
                    tgt: y.clone(),
                    index_map,
                    components,
                });
            }
            HomSpace::Sampled(samples)
        }
    }

    fn mor_coords(&self, f: &FamMorphism<FinVect>) -> Option<Vec<Rat>> {
        if f.tgt.len() != 1 {
            return None;
        }
        let mut out = Vec::new();
        for c in &f.components {
            out.extend(c.matrix.flatten());
        }
        Some(out)
    }

    fn mor_from_coords(
        &self,
        x: &FamObject<FinVect>,
        y: &FamObject<FinVect>,
        coords: &[Rat],
    ) -> Option<FamMorphism<FinVect>> {
        if y.len() != 1 {
            return None;
        }
        let p = y.fibers[0];
        let mut components = Vec::with_capacity(x.len());
        let mut pos = 0;
        for &d in &x.fibers {
            let take = p * d;
            if pos + take > coords.len() {
                return None;
            }
            components.push(VecMor::new(Mat::from_data(
                p,
                d,
                coords[pos..pos + take].to_owned(),
            )));
            pos += take;
        }
        (pos == coords.len()).then(|| FamMorphism {
            src: x.clone(),
            tgt: y.clone(),
            index_map: vec![0; x.len()],
            components,
        })
    }
}

/// All maps `0..from → 0..to` in lexicographic order.
pub fn enumerate_maps(from: usize, to: usize) -> Vec<Vec<usize>> {
    if from == 0 {
        return vec![Vec::new()];
    }
    if to == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = vec![0usize; from];
    loop {
        out.push(current.clone());
        let mut k = from;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if current[k] + 1 < to {
                current[k] += 1;
                for v in &mut current[k + 1..] {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// The family pre-dual over an exact-rational base: the singleton family of
/// the product (direct sum) of the fiber duals, with evaluation built from
/// the projections.
pub struct FamPreduals;

impl FamPreduals {
    /// Projection `p_j` from the sum of dual dimensions onto the `j`-th
    /// dual block.
    pub fn projection(y: &FamObject<FinVect>, j: usize) -> Mat {
        let total: usize = y.fibers.iter().sum();
        let offset: usize = y.fibers[..j].iter().sum();
        let mut m = Mat::zero(y.fibers[j], total);
        for r in 0..y.fibers[j] {
            m.set(r, offset + r, crate::rational::one());
        }
        m
    }
}

impl<'c> PreRigid<Fam<'c, FinVect>> for FamPreduals {
    fn predual(
        &self,
        cat: &Fam<'c, FinVect>,
        y: &FamObject<FinVect>,
    ) -> Result<PreDualData<Fam<'c, FinVect>>, EngineError> {
        let product_dim: usize = y.fibers.iter().sum();
        let y_star = FamObject::new(vec![product_dim]);
        let src = cat.tensor_obj(&y_star, y);
        // Component at (0, j): ev_{Y_j} ∘ (p_j ⊗ Y_j).
        let vect = FinVect;
        let components: Vec<VecMor> = (0..y.len())
            .map(|j| {
                let dj = y.fibers[j];
                let pairing = crate::cat::ClosedMonoidal::eval(&vect, &dj, &1);
                let pj = Self::projection(y, j);
                VecMor::new(pairing.matrix.mul(&pj.kron(&Mat::identity(dj))))
            })
            .collect();
        let evaluation = FamMorphism {
            src,
            tgt: cat.unit(),
            index_map: vec![0; y.len()],
            components,
        };
        Ok(PreDualData {
            object: y_star,
            evaluation,
        })
    }

    fn dagger(
        &self,
        cat: &Fam<'c, FinVect>,
        t_source: &FamObject<FinVect>,
        x: &FamObject<FinVect>,
        t: &FamMorphism<FinVect>,
    ) -> Result<FamMorphism<FinVect>, EngineError> {
        let pd = self.predual(cat, x)?;
        dagger_via_homs(cat, t_source, x, &pd, t)
    }
}

/// Check that the data recovered from a family pre-dual (the object `L`
/// with projections `p_j = (ev_j)†`) satisfies the product universal
/// property: for sampled cones `(q_j : X → Y_j*)` there is a unique
/// `h : X → L` with `p_j ∘ h = q_j`.
pub fn fam_predual_converse_check(
    y: &FamObject<FinVect>,
    pd: &PreDualData<Fam<'_, FinVect>>,
    projections: &[Mat],
    seed: u64,
) -> Report {
    let mut report = Report::new();
    let set = format!("family of size {}, sampled cones", y.len());
    let l_dim = pd.object.fibers[0];
    let expected: usize = y.fibers.iter().sum();

    if projections.len() != y.len() {
        report.fail(
            "fam.converse.projections",
            "one projection per fiber",
            format!("{} projections for {} fibers", projections.len(), y.len()),
            &set,
        );
        return report;
    }

    // Stacked projections must be a linear isomorphism onto the sum of the
    // dual fibers: that is exactly bijectivity of h ↦ (p_j ∘ h) for all X
    // at once over this base.
    let stacked = if projections.is_empty() {
        Mat::zero(0, l_dim)
    } else {
        Mat::vstack(&projections.iter().collect::<Vec<_>>())
    };
    if stacked.rows() == expected
        && stacked.cols() == l_dim
        && expected == l_dim
        && stacked.rank() == l_dim
    {
        report.pass(
            "fam.converse.iso",
            "stacked projections form a square invertible map",
            &set,
        );
    } else {
        report.fail(
            "fam.converse.iso",
            "stacked projections form a square invertible map",
            format!(
                "shape {}x{}, rank {}",
                stacked.rows(),
                stacked.cols(),
                stacked.rank()
            ),
            &set,
        );
        return report;
    }

    let mut rng = SplitMix64::new(seed);
    for x_dim in 1..=2usize {
        let cone: Vec<Mat> = y.fibers.iter().map(|&dj| rng.matrix(dj, x_dim)).collect();
        let q = if cone.is_empty() {
            Mat::zero(0, x_dim)
        } else {
            Mat::vstack(&cone.iter().collect::<Vec<_>>())
        };
        match stacked.solve_unique(&q) {
            crate::matrix::SolveOutcome::Unique(h) => {
                let ok = cone
                    .iter()
                    .enumerate()
                    .all(|(j, qj)| projections[j].mul(&h) == *qj);
                if ok {
                    report.pass("fam.converse.cone", "sampled cone factors uniquely", &set);
                } else {
                    report.fail(
                        "fam.converse.cone",
                        "sampled cone factors uniquely",
                        "factorisation does not reproduce the cone".to_string(),
                        &set,
                    );
                }
            }
            other => report.fail(
                "fam.converse.cone",
                "sampled cone factors uniquely",
                format!("solve outcome {other:?}"),
                &set,
            ),
        }
    }
    report
}

/// `[(J, Y), (U, Z)]`: index set all maps `J → U` in lexicographic order;
/// the fiber at `α` is the product (direct sum over this base) of the
/// internal homs `[Y_j, Z_{α(j)}]`.
pub fn fam_internal_hom(
    y: &FamObject<FinVect>,
    z: &FamObject<FinVect>,
) -> (Vec<Vec<usize>>, FamObject<FinVect>) {
    let maps = enumerate_maps(y.len(), z.len());
    let vect = FinVect;
    let fibers = maps
        .iter()
        .map(|alpha| {
            alpha
                .iter()
                .enumerate()
                .map(|(j, &u)| vect.internal_hom(&y.fibers[j], &z.fibers[u]))
                .sum()
        })
        .collect();
    (maps, FamObject::new(fibers))
}

/// Currying transpose: reshape `φ : X ⊗ Y → Z` into `X → [Y, Z]` so that
/// evaluation recovers `φ`.
fn curry(phi: &Mat, x: usize, y: usize, z: usize) -> Mat {
    assert_eq!((phi.rows(), phi.cols()), (z, x * y));
    Mat::from_fn(y * z, x, |rc, c| {
        let (a, b) = (rc / y, rc % y);
        phi.at(a, c * y + b).clone()
    })
}

fn uncurry(psi: &Mat, x: usize, y: usize, z: usize) -> Mat {
    assert_eq!((psi.rows(), psi.cols()), (y * z, x));
    Mat::from_fn(z, x * y, |a, cb| {
        let (c, b) = (cb / y, cb % y);
        psi.at(a * y + b, c).clone()
    })
}

/// The adjunction map `Hom(X ⊗ Y, Z) → Hom(X, [Y, Z])` of the closed
/// structure: index maps are curried, components are stacked curried
/// fiberwise maps. `f` must have source `X ⊗ Y` for the given `x`.
pub fn fam_closed_alpha(
    fam: &Fam<'_, FinVect>,
    x: &FamObject<FinVect>,
    y: &FamObject<FinVect>,
    z: &FamObject<FinVect>,
    f: &FamMorphism<FinVect>,
) -> FamMorphism<FinVect> {
    assert_eq!(
        f.src,
        fam.tensor_obj(x, y),
        "source must be the stated tensor product"
    );
    let (maps, ihom) = fam_internal_hom(y, z);
    let mut index_map = Vec::with_capacity(x.len());
    let mut components = Vec::with_capacity(x.len());
    for i in 0..x.len() {
        let alpha: Vec<usize> = (0..y.len()).map(|j| f.index_map[i * y.len() + j]).collect();
        let alpha_idx = maps
            .iter()
            .position(|m| *m == alpha)
            .expect("map enumerated");
        index_map.push(alpha_idx);
        let xi = x.fibers[i];
        let blocks: Vec<Mat> = (0..y.len())
            .map(|j| {
                let phi = &f.components[i * y.len() + j].matrix;
                curry(phi, xi, y.fibers[j], z.fibers[alpha[j]])
            })
            .collect();
        let stacked = if blocks.is_empty() {
            Mat::zero(0, xi)
        } else {
            Mat::vstack(&blocks.iter().collect::<Vec<_>>())
        };
        components.push(VecMor::new(stacked));
    }
    FamMorphism {
        src: x.clone(),
        tgt: ihom,
        index_map,
        components,
    }
}

/// The inverse adjunction map `Hom(X, [Y, Z]) → Hom(X ⊗ Y, Z)`.
pub fn fam_closed_beta(
    fam: &Fam<'_, FinVect>,
    y: &FamObject<FinVect>,
    z: &FamObject<FinVect>,
    g: &FamMorphism<FinVect>,
) -> FamMorphism<FinVect> {
    let (maps, _ihom) = fam_internal_hom(y, z);
    let x = &g.src;
    let src = fam.tensor_obj(x, y);
    let mut index_map = Vec::with_capacity(x.len() * y.len());
    let mut components = Vec::with_capacity(x.len() * y.len());
    for i in 0..x.len() {
        let alpha = &maps[g.index_map[i]];
        let psi = &g.components[i].matrix;
        let mut offset = 0usize;
        for j in 0..y.len() {
            let u = alpha[j];
            let (yj, zu) = (y.fibers[j], z.fibers[u]);
            index_map.push(u);
            let block = psi.submatrix(offset, 0, yj * zu, x.fibers[i]);
            components.push(VecMor::new(uncurry(&block, x.fibers[i], yj, zu)));
            offset += yj * zu;
        }
    }
    FamMorphism {
        src,
        tgt: z.clone(),
        index_map,
        components,
    }
}

/// Index-contravariant family morphisms: `f : J → I` with components
/// `φ_j : X_{f(j)} → Y_j`.
pub struct MafMorphism<C: Category> {
    pub src: FamObject<C>,
    pub tgt: FamObject<C>,
    pub index_map: Vec<usize>,
    pub components: Vec<C::Mor>,
}

impl<C: Category> Clone for MafMorphism<C> {
    fn clone(&self) -> Self {
        MafMorphism {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            index_map: self.index_map.clone(),
            components: self.components.clone(),
        }
    }
}

impl<C: Category> PartialEq for MafMorphism<C> {
    fn eq(&self, other: &Self) -> bool {
        self.src == other.src
            && self.tgt == other.tgt
            && self.index_map == other.index_map
            && self.components == other.components
    }
}

impl<C: Category> core::fmt::Debug for MafMorphism<C> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "MafMor(map {:?}, {:?})", self.index_map, self.components)
    }
}

pub struct Maf<'c, C: Monoidal> {
    pub base: &'c C,
}

impl<'c, C: Monoidal> Maf<'c, C> {
    pub fn new(base: &'c C) -> Self {
        Maf { base }
    }

    /// The empty family, terminal in this category.
    pub fn terminal(&self) -> FamObject<C> {
        FamObject::new(Vec::new())
    }
}

impl<'c, C: Monoidal> Category for Maf<'c, C> {
    type Obj = FamObject<C>;
    type Mor = MafMorphism<C>;

    fn source(&self, f: &MafMorphism<C>) -> FamObject<C> {
        f.src.clone()
    }
    fn target(&self, f: &MafMorphism<C>) -> FamObject<C> {
        f.tgt.clone()
    }
    fn identity(&self, x: &FamObject<C>) -> MafMorphism<C> {
        MafMorphism {
            src: x.clone(),
            tgt: x.clone(),
            index_map: (0..x.len()).collect(),
            components: x.fibers.iter().map(|o| self.base.identity(o)).collect(),
        }
    }
    fn compose(&self, g: &MafMorphism<C>, f: &MafMorphism<C>) -> Result<MafMorphism<C>, CatError> {
        if f.tgt != g.src {
            return Err(self.compose_err(g, f));
        }
        // g : Y → Z with map K → J; composite map K → I is f's map after
        // g's, components ψ_k ∘ φ_{g(k)}.
        let index_map: Vec<usize> = g.index_map.iter().map(|&j| f.index_map[j]).collect();
        let components = g
            .index_map
            .iter()
            .zip(&g.components)
            .map(|(&j, psi)| self.base.compose(psi, &f.components[j]))
            .collect::<Result<_, _>>()?;
        Ok(MafMorphism {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            index_map,
            components,
        })
    }
}

impl<'c, C: Monoidal> Monoidal for Maf<'c, C> {
    fn unit(&self) -> FamObject<C> {
        FamObject::new(vec![self.base.unit()])
    }

    fn tensor_obj(&self, x: &FamObject<C>, y: &FamObject<C>) -> FamObject<C> {
        let mut fibers = Vec::with_capacity(x.len() * y.len());
        for a in &x.fibers {
            for b in &y.fibers {
                fibers.push(self.base.tensor_obj(a, b));
            }
        }
        FamObject::new(fibers)
    }

    fn tensor_mor(&self, f: &MafMorphism<C>, g: &MafMorphism<C>) -> MafMorphism<C> {
        let src = self.tensor_obj(&f.src, &g.src);
        let tgt = self.tensor_obj(&f.tgt, &g.tgt);
        let gs = g.src.len();
        let mut index_map = Vec::with_capacity(tgt.len());
        let mut components = Vec::with_capacity(tgt.len());
        for (j, phi) in f.components.iter().enumerate() {
            for (j2, psi) in g.components.iter().enumerate() {
                index_map.push(f.index_map[j] * gs + g.index_map[j2]);
                components.push(self.base.tensor_mor(phi, psi));
            }
        }
        MafMorphism {
            src,
            tgt,
            index_map,
            components,
        }
    }
}

/// The pre-rigidity obstruction for index-contravariant families, checked
/// mechanically: the empty family `𝟏` is terminal and absorbing
/// (`𝟏 ⊗ X = 𝟏` on the nose), yet `Hom(𝟏, 𝕀)` is empty because no map
/// `{*} → ∅` exists, so no candidate pre-dual `D` of `𝟏` can make
/// `Hom(D, D) ≅ Hom(D ⊗ 𝟏, 𝕀)` work.
pub fn maf_obstruction_witness<C: Monoidal>(maf: &Maf<'_, C>, samples: &[FamObject<C>]) -> Report {
    let mut report = Report::new();
    let set = format!("{} sample objects", samples.len());
    let one = maf.terminal();

    for x in samples {
        report.check_eq(
            "maf.absorbing",
            "the empty family absorbs under tensor",
            &set,
            &maf.tensor_obj(&one, x),
            &one,
        );
        report.check_eq(
            "maf.terminal",
            "exactly one morphism into the empty family (the empty index map)",
            &set,
            &maf_index_map_count(x, &one),
            &1usize,
        );
    }

    report.check_eq(
        "maf.no_map_to_unit",
        "no morphism from the empty family to the unit (no map from a singleton index set to the empty one)",
        &set,
        &maf_index_map_count(&one, &maf.unit()),
        &0usize,
    );

    for d in samples {
        let d_tensor_one = maf.tensor_obj(d, &one);
        let identities = 1usize; // Hom(D, D) contains at least the identity.
        let homs_to_unit = maf_index_map_count(&d_tensor_one, &maf.unit());
        if identities > homs_to_unit {
            report.pass(
                "maf.obstruction",
                &format!(
                    "candidate pre-dual {d:?} fails: Hom(D, D) has at least {identities} member but Hom(D⊗𝟏, 𝕀) has {homs_to_unit}"
                ),
                &set,
            );
        } else {
            report.fail(
                "maf.obstruction",
                "candidate pre-dual comparison",
                format!("unexpected hom count {homs_to_unit}"),
                &set,
            );
        }
    }
    report
}

/// Number of index maps underlying morphisms `X → Y`: maps from the target
/// index set to the source one, so `|I|^|J|`. Zero exactly when the hom-set
/// is empty (component homs are nonempty over the bases used here).
fn maf_index_map_count<C: Category>(x: &FamObject<C>, y: &FamObject<C>) -> usize {
    let (i, j) = (x.len(), y.len());
    if j == 0 {
        1
    } else {
        i.pow(j as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::verify_predual;
    use crate::finrel::FinRel;

    fn vect_fam(dims: &[usize]) -> FamObject<FinVect> {
        FamObject::new(dims.to_vec())
    }

    #[test]
    fn singleton_tensor() {
        let vect = FinVect;
        let fam = Fam::new(&vect);
        let x = vect_fam(&[1]);
        let y = vect_fam(&[2]);
        let t = fam.tensor_obj(&x, &y);
        assert_eq!(t.fibers, vec![2]);
        assert_eq!(fam.tensor_obj(&fam.unit(), &y), y);
    }

    #[test]
    fn composition_unfolds() {
        let vect = FinVect;
        let fam = Fam::new(&vect);
        let x = vect_fam(&[1, 1]);
        let y = vect_fam(&[1]);
        let z = vect_fam(&[1, 1]);
        let f = fam.mor(
            x.clone(),
            y.clone(),
            vec![0, 0],
            vec![
                VecMor::new(Mat::from_ints(&[&[2]])),
                VecMor::new(Mat::from_ints(&[&[3]])),
            ],
        );
        let g = fam.mor(
            y.clone(),
            z.clone(),
            vec![1],
            vec![VecMor::new(Mat::from_ints(&[&[5]]))],
        );
        let gf = fam.compose(&g, &f).unwrap();
        assert_eq!(gf.index_map, vec![1, 1]);
        assert_eq!(gf.components[0].matrix, Mat::from_ints(&[&[10]]));
        assert_eq!(gf.components[1].matrix, Mat::from_ints(&[&[15]]));
    }

    #[test]
    fn predual_is_sum_of_duals() {
        let vect = FinVect;
        let fam = Fam::new(&vect);
        let y = vect_fam(&[1, 2]);
        let pd = FamPreduals.predual(&fam, &y).unwrap();
        assert_eq!(pd.object.fibers, vec![3]);
    }

    #[test]
    fn predual_verifies_on_small_families() {
        let vect = FinVect;
        let fam = Fam::new(&vect);
        for y_dims in [vec![1], vec![2], vec![1, 2], vec![2, 1, 1]] {
            let y = vect_fam(&y_dims);
            let pd = FamPreduals.predual(&fam, &y).unwrap();
            let tests = vec![
                fam.unit(),
                vect_fam(&[1]),
                vect_fam(&[2]),
                vect_fam(&[1, 1]),
                vect_fam(&[2, 1]),
            ];
            let report = verify_predual(&fam, &y, &pd, &tests, None);
            assert!(report.all_passed(), "family {y_dims:?}: {report}");
        }
    }

    #[test]
    fn zero_fiber_contributes_zero_block() {
        let vect = FinVect;
        let fam = Fam::new(&vect);
        let y = vect_fam(&[0, 2]);
        let pd = FamPreduals.predual(&fam, &y).unwrap();
        assert_eq!(pd.object.fibers, vec![2]);
    }

    #[test]
    fn converse_check_certifies_product() {
        let vect = FinVect;
        let fam = Fam::new(&vect);
        let y = vect_fam(&[1, 2]);
        let pd = FamPreduals.predual(&fam, &y).unwrap();
        let projections: Vec<Mat> = (0..y.len())
            .map(|j| FamPreduals::projection(&y, j))
            .collect();
        let report = fam_predual_converse_check(&y, &pd, &projections, 17);
        assert!(report.all_passed(), "{report}");

        // Corrupted projection: zero out the second projection.
        let mut corrupted = projections;
        corrupted[1] = Mat::zero(2, 3);
        let report = fam_predual_converse_check(&y, &pd, &corrupted, 17);
        assert!(!report.all_passed());
    }

    #[test]
    fn internal_hom_counts_functions() {
        let y = vect_fam(&[1, 1]);
        let z = vect_fam(&[1, 1]);
        let (maps, ihom) = fam_internal_hom(&y, &z);
        assert_eq!(maps.len(), 4);
        // Fiber at each α is the direct sum [Y_0, Z_α(0)] ⊕ [Y_1, Z_α(1)],
        // of dimension 2 over this base.
        assert_eq!(ihom.fibers, vec![2, 2, 2, 2]);

        let singleton = vect_fam(&[2]);
        let (maps1, ihom1) = fam_internal_hom(&singleton, &vect_fam(&[3]));
        assert_eq!(maps1.len(), 1);
        assert_eq!(ihom1.fibers, vec![6]);

        // No maps into an empty index set from a nonempty one.
        let (maps_empty, ihom_empty) = fam_internal_hom(&y, &vect_fam(&[]));
        assert!(maps_empty.is_empty());
        assert!(ihom_empty.is_empty());
    }

    #[test]
    fn closedness_round_trip() {
        let vect = FinVect;
        let fam = Fam::new(&vect);
        let mut rng = SplitMix64::new(5);
        let x = vect_fam(&[1, 2]);
        let y = vect_fam(&[1, 1]);
        let z = vect_fam(&[2, 1]);
        // Sample f : X ⊗ Y → Z.
        let xy = fam.tensor_obj(&x, &y);
        for _ in 0..10 {
            let index_map: Vec<usize> = (0..xy.len())
                .map(|_| rng.below(z.len() as u64) as usize)
                .collect();
            let components: Vec<VecMor> = (0..xy.len())
                .map(|p| VecMor::new(rng.matrix(z.fibers[index_map[p]], xy.fibers[p])))
                .collect();
            let f = fam.mor(xy.clone(), z.clone(), index_map, components);
            let g = fam_closed_alpha(&fam, &x, &y, &z, &f);
            let f2 = fam_closed_beta(&fam, &y, &z, &g);
            assert_eq!(f2, f);
        }
        // Sample g : X → [Y, Z] and round-trip the other way.
        let (_, ihom) = fam_internal_hom(&y, &z);
        for _ in 0..10 {
            let index_map: Vec<usize> = (0..x.len())
                .map(|_| rng.below(ihom.len() as u64) as usize)
                .collect();
            let components: Vec<VecMor> = (0..x.len())
                .map(|i| VecMor::new(rng.matrix(ihom.fibers[index_map[i]], x.fibers[i])))
                .collect();
            let g = fam.mor(x.clone(), ihom.clone(), index_map, components);
            let f = fam_closed_beta(&fam, &y, &z, &g);
            let g2 = fam_closed_alpha(&fam, &x, &y, &z, &f);
            assert_eq!(g2, g);
        }
    }

    #[test]
    fn maf_obstruction_for_three_bases() {
        let vect = FinVect;
        let maf = Maf::new(&vect);
        let samples = vec![FamObject::new(vec![1]), FamObject::new(vec![2, 1])];
        assert!(maf_obstruction_witness(&maf, &samples).all_passed());

        let rel = FinRel::default();
        let maf = Maf::new(&rel);
        let s = crate::finrel::FinSet::from_labels(&["a"]);
        let samples = vec![
            FamObject::new(vec![s.clone()]),
            FamObject::new(vec![s.clone(), s]),
        ];
        assert!(maf_obstruction_witness(&maf, &samples).all_passed());

        let one = One;
        let maf = Maf::new(&one);
        let samples = vec![FamObject::new(vec![()]), FamObject::new(vec![(), ()])];
        assert!(maf_obstruction_witness(&maf, &samples).all_passed());
    }
}
