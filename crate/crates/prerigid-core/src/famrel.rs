//! Relation-indexed families: objects are families of base objects,
//! morphisms are sets of triples `(i, j, f)` organised as a binary relation
//! on the index sets plus a nonempty set of base morphisms per related
//! pair.
//!
//! This category restores pre-rigidity where the index-contravariant
//! families lose it: the pre-dual keeps the index set and dualises fibers,
//! with the diagonal relation carrying the fiberwise evaluations. Over the
//! terminal base the whole thing collapses to the category of finite sets
//! and relations, which the tests exploit as an independent cross-check.

use crate::cat::{CatError, Category, HomSpace, HomSpaces, Monoidal};
use crate::engine::{EngineError, PreDualData, PreRigid};
use crate::fam::{FamObject, One};
use crate::prelude::*;

/// Morphism payload: for each related index pair a nonempty, duplicate-free
/// list of base morphisms. Pairs with empty sets are dropped on
/// construction, so the set-of-triples reading is canonical; equality is
/// set equality per pair.
pub struct FamRelMorphism<C: Category> {
    pub src: FamObject<C>,
    pub tgt: FamObject<C>,
    pub triples: BTreeMap<(usize, usize), Vec<C::Mor>>,
}

impl<C: Category> Clone for FamRelMorphism<C> {
    fn clone(&self) -> Self {
        FamRelMorphism {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            triples: self.triples.clone(),
        }
    }
}

impl<C: Category> PartialEq for FamRelMorphism<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.src != other.src || self.tgt != other.tgt {
            return false;
        }
        if self.triples.len() != other.triples.len() {
            return false;
        }
        self.triples.iter().all(|(k, fs)| {
            other.triples.get(k).is_some_and(|gs| {
                fs.len() == gs.len()
                    && fs.iter().all(|f| gs.contains(f))
                    && gs.iter().all(|g| fs.contains(g))
            })
        })
    }
}

impl<C: Category> core::fmt::Debug for FamRelMorphism<C> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "FamRelMor(")?;
        for (k, fs) in &self.triples {
            write!(f, "{k:?}#{} ", fs.len())?;
        }
        write!(f, ")")
    }
}

impl<C: Category> FamRelMorphism<C> {
    pub fn relation(&self) -> BTreeSet<(usize, usize)> {
        self.triples.keys().copied().collect()
    }
}

pub struct FamRel<'c, C: Monoidal> {
    pub base: &'c C,
}

impl<'c, C: Monoidal> FamRel<'c, C> {
    pub fn new(base: &'c C) -> Self {
        FamRel { base }
    }

    /// Build a morphism, dropping empty sets and deduplicating.
    pub fn mor(
        &self,
        src: FamObject<C>,
        tgt: FamObject<C>,
        triples: Vec<(usize, usize, C::Mor)>,
    ) -> FamRelMorphism<C> {
        let mut map: BTreeMap<(usize, usize), Vec<C::Mor>> = BTreeMap::new();
        for (i, j, f) in triples {
            assert!(i < src.len() && j < tgt.len(), "triple indices in range");
            assert_eq!(self.base.source(&f), src.fibers[i]);
            assert_eq!(self.base.target(&f), tgt.fibers[j]);
            let entry = map.entry((i, j)).or_default();
            if !entry.contains(&f) {
                entry.push(f);
            }
        }
        FamRelMorphism {
            src,
            tgt,
            triples: map,
        }
    }
}

impl<'c, C: Monoidal> Category for FamRel<'c, C> {
    type Obj = FamObject<C>;
    type Mor = FamRelMorphism<C>;

    fn source(&self, f: &FamRelMorphism<C>) -> FamObject<C> {
        f.src.clone()
    }
    fn target(&self, f: &FamRelMorphism<C>) -> FamObject<C> {
        f.tgt.clone()
    }
    fn identity(&self, x: &FamObject<C>) -> FamRelMorphism<C> {
        let triples = (0..x.len())
            .map(|i| ((i, i), vec![self.base.identity(&x.fibers[i])]))
            .collect();
        FamRelMorphism {
            src: x.clone(),
            tgt: x.clone(),
            triples,
        }
    }
    fn compose(
        &self,
        g: &FamRelMorphism<C>,
        f: &FamRelMorphism<C>,
    ) -> Result<FamRelMorphism<C>, CatError> {
        if f.tgt != g.src {
            return Err(self.compose_err(g, f));
        }
        let mut triples: BTreeMap<(usize, usize), Vec<C::Mor>> = BTreeMap::new();
        for (&(i, j), phis) in &f.triples {
            for (&(j2, k), psis) in &g.triples {
                if j != j2 {
                    continue;
                }
                let entry = triples.entry((i, k)).or_default();
                for phi in phis {
                    for psi in psis {
                        let comp = self.base.compose(psi, phi)?;
                        if !entry.contains(&comp) {
                            entry.push(comp);
                        }
                    }
                }
            }
        }
        Ok(FamRelMorphism {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            triples,
        })
    }
}

impl<'c, C: Monoidal> Monoidal for FamRel<'c, C> {
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

    fn tensor_mor(&self, f: &FamRelMorphism<C>, g: &FamRelMorphism<C>) -> FamRelMorphism<C> {
        let src = self.tensor_obj(&f.src, &g.src);
        let tgt = self.tensor_obj(&f.tgt, &g.tgt);
        let (gs, gt) = (g.src.len(), g.tgt.len());
        let mut triples: BTreeMap<(usize, usize), Vec<C::Mor>> = BTreeMap::new();
        for (&(i, j), phis) in &f.triples {
            for (&(i2, j2), psis) in &g.triples {
                let entry = triples.entry((i * gs + i2, j * gt + j2)).or_default();
                for phi in phis {
                    for psi in psis {
                        let t = self.base.tensor_mor(phi, psi);
                        if !entry.contains(&t) {
                            entry.push(t);
                        }
                    }
                }
            }
        }
        FamRelMorphism { src, tgt, triples }
    }
}

/// Over the terminal base every component set is the singleton, so
/// morphisms are exactly binary relations and homs enumerate completely.
impl<'c> HomSpaces for FamRel<'c, One> {
    fn hom(&self, x: &FamObject<One>, y: &FamObject<One>) -> HomSpace<FamRelMorphism<One>> {
        let bits = x.len() * y.len();
        assert!(
            bits <= 16,
            "exhaustive enumeration is meant for tiny index sets"
        );
        let yn = y.len();
        let all = (0u64..(1u64 << bits))
            .map(|mask| {
                let triples = (0..bits)
                    .filter(|k| mask >> k & 1 == 1)
                    .map(|k| ((k / yn, k % yn), vec![()]))
                    .collect();
                FamRelMorphism {
                    src: x.clone(),
                    tgt: y.clone(),
                    triples,
                }
            })
            .collect();
        HomSpace::Enumerated(all)
    }
}

/// The pre-dual that keeps the index set and dualises fibers, with the
/// diagonal relation of fiberwise evaluations. The dagger reads the
/// relation back from the pairing with the unit index and daggers each
/// component in the base.
pub struct FamRelPreduals<'p, C: Monoidal, P: PreRigid<C>> {
    pub base_structure: &'p P,
    marker: core::marker::PhantomData<C>,
}

impl<'p, C: Monoidal, P: PreRigid<C>> FamRelPreduals<'p, C, P> {
    pub fn new(base_structure: &'p P) -> Self {
        FamRelPreduals {
            base_structure,
            marker: core::marker::PhantomData,
        }
    }
}

impl<'p, 'c, C: Monoidal, P: PreRigid<C>> PreRigid<FamRel<'c, C>> for FamRelPreduals<'p, C, P> {
    fn predual(
        &self,
        cat: &FamRel<'c, C>,
        y: &FamObject<C>,
    ) -> Result<PreDualData<FamRel<'c, C>>, EngineError> {
        let mut star_fibers = Vec::with_capacity(y.len());
        let mut evs = Vec::with_capacity(y.len());
        for fiber in &y.fibers {
            let pd = self.base_structure.predual(cat.base, fiber)?;
            star_fibers.push(pd.object);
            evs.push(pd.evaluation);
        }
        let y_star = FamObject::new(star_fibers);
        let src = cat.tensor_obj(&y_star, y);
        let n = y.len();
        let triples = evs
            .into_iter()
            .enumerate()
            .map(|(j, ev)| ((j * n + j, 0), vec![ev]))
            .collect();
        let evaluation = FamRelMorphism {
            src,
            tgt: cat.unit(),
            triples,
        };
        Ok(PreDualData {
            object: y_star,
            evaluation,
        })
    }

    fn dagger(
        &self,
        cat: &FamRel<'c, C>,
        t_source: &FamObject<C>,
        x: &FamObject<C>,
        t: &FamRelMorphism<C>,
    ) -> Result<FamRelMorphism<C>, EngineError> {
        // t : T ⊗ X → 𝕀; pairs ((i, j), 0) read back as (i, j), and each
        // base morphism T_i ⊗ X_j → 𝕀 daggers to T_i → X_j*.
        let xn = x.len();
        let mut triples: BTreeMap<(usize, usize), Vec<C::Mor>> = BTreeMap::new();
        for (&(p, _), fs) in &t.triples {
            let (i, j) = (p / xn, p % xn);
            let entry = triples.entry((i, j)).or_default();
            for f in fs {
                let dag =
                    self.base_structure
                        .dagger(cat.base, &t_source.fibers[i], &x.fibers[j], f)?;
                if !entry.contains(&dag) {
                    entry.push(dag);
                }
            }
        }
        let star = FamObject::new(
            x.fibers
                .iter()
                .map(|f| self.base_structure.predual(cat.base, f).map(|p| p.object))
                .collect::<Result<_, _>>()?,
        );
        Ok(FamRelMorphism {
            src: t_source.clone(),
            tgt: star,
            triples,
        })
    }
}
