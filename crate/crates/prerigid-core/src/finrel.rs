//! Finite sets and binary relations.
//!
//! A compact closed category: tensor is the cartesian product, the unit is
//! a singleton, and every object is its own pre-dual with the diagonal
//! relation as evaluation. Set elements are tuples of atoms so that the
//! cartesian product is strictly associative and strictly unital (the unit
//! holds the empty tuple, and concatenation with it is a no-op).

use crate::cat::{Braided, CatError, Category, ClosedMonoidal, HomSpace, HomSpaces, Monoidal};
use crate::prelude::*;

/// Element of a finite set: a tuple of atoms. Base sets use 1-tuples; the
/// unit holds the empty tuple; tensor products concatenate.
pub type Elem = Vec<String>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinSet {
    pub elems: Vec<Elem>,
}

impl FinSet {
    /// Base set from atom labels. Sorted and deduplicated.
    pub fn from_labels(labels: &[&str]) -> Self {
        let mut elems: Vec<Elem> = labels.iter().map(|l| vec![(*l).to_owned()]).collect();
        elems.sort();
        elems.dedup();
        FinSet { elems }
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn singleton() -> Self {
        FinSet {
            elems: vec![Vec::new()],
        }
    }

    /// Canonical sets `{x0}, {x0,x1}, …` up to `max_size`.
    pub fn canonical(max_size: usize) -> Vec<FinSet> {
        (1..=max_size)
            .map(|n| {
                let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
                FinSet {
                    elems: labels.into_iter().map(|l| vec![l]).collect(),
                }
            })
            .collect()
    }
}

/// A binary relation, stored as index pairs into the source and target
/// element lists. The ordered pair set is canonical, so payload equality is
/// set equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rel {
    pub src: FinSet,
    pub tgt: FinSet,
    pub pairs: BTreeSet<(usize, usize)>,
}

impl Rel {
    pub fn new(src: FinSet, tgt: FinSet, pairs: BTreeSet<(usize, usize)>) -> Self {
        for &(i, j) in &pairs {
            assert!(
                i < src.size() && j < tgt.size(),
                "relation pair out of carrier"
            );
        }
        Rel { src, tgt, pairs }
    }

    pub fn from_pairs(src: FinSet, tgt: FinSet, pairs: &[(usize, usize)]) -> Self {
        Rel::new(src, tgt, pairs.iter().copied().collect())
    }

    pub fn empty(src: FinSet, tgt: FinSet) -> Self {
        Rel {
            src,
            tgt,
            pairs: BTreeSet::new(),
        }
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }
}

#[derive(Clone, Debug)]
pub struct FinRel {
    /// Hom-sets are enumerated while `|I|·|J|` is at most this; larger homs
    /// fall back to deterministic sampling.
    pub enumeration_cap: usize,
}

impl Default for FinRel {
    fn default() -> Self {
        FinRel {
            enumeration_cap: 12,
        }
    }
}

impl FinRel {
    pub fn new(enumeration_cap: usize) -> Self {
        FinRel { enumeration_cap }
    }

    /// The evaluation `ev_I = {((i,i), *)} : I × I → {*}`.
    pub fn evaluation(&self, i: &FinSet) -> Rel {
        let n = i.size();
        let src = self.tensor_obj(i, i);
        let pairs = (0..n).map(|k| (k * n + k, 0)).collect();
        Rel::new(src, FinSet::singleton(), pairs)
    }

    /// The closed-form dagger: a relation `R : I × J → {*}` read back as a
    /// relation `I → J`.
    pub fn rel_dagger(&self, t: &Rel, i: &FinSet, j: &FinSet) -> Rel {
        assert_eq!(t.tgt, FinSet::singleton());
        assert_eq!(t.src.size(), i.size() * j.size());
        let jn = j.size();
        let pairs = t.pairs.iter().map(|&(p, _)| (p / jn, p % jn)).collect();
        Rel::new(i.clone(), j.clone(), pairs)
    }

    pub fn test_objects(&self, max_size: usize) -> Vec<FinSet> {
        let mut out = vec![FinSet::singleton()];
        out.extend(FinSet::canonical(max_size));
        out
    }
}

impl Category for FinRel {
    type Obj = FinSet;
    type Mor = Rel;

    fn source(&self, f: &Rel) -> FinSet {
        f.src.clone()
    }
    fn target(&self, f: &Rel) -> FinSet {
        f.tgt.clone()
    }
    fn identity(&self, x: &FinSet) -> Rel {
        Rel::new(
            x.clone(),
            x.clone(),
            (0..x.size()).map(|k| (k, k)).collect(),
        )
    }
    fn compose(&self, g: &Rel, f: &Rel) -> Result<Rel, CatError> {
        if f.tgt != g.src {
            return Err(self.compose_err(g, f));
        }
        let mut pairs = BTreeSet::new();
        for &(u, i) in &f.pairs {
            for &(i2, j) in &g.pairs {
                if i == i2 {
                    pairs.insert((u, j));
                }
            }
        }
        Ok(Rel::new(f.src.clone(), g.tgt.clone(), pairs))
    }
}

impl Monoidal for FinRel {
    fn unit(&self) -> FinSet {
        FinSet::singleton()
    }

    fn tensor_obj(&self, x: &FinSet, y: &FinSet) -> FinSet {
        let mut elems = Vec::with_capacity(x.size() * y.size());
        for a in &x.elems {
            for b in &y.elems {
                let mut t = a.clone();
                t.extend(b.iter().cloned());
                elems.push(t);
            }
        }
        FinSet { elems }
    }

    fn tensor_mor(&self, f: &Rel, g: &Rel) -> Rel {
        let src = self.tensor_obj(&f.src, &g.src);
        let tgt = self.tensor_obj(&f.tgt, &g.tgt);
        let (gs, gt) = (g.src.size(), g.tgt.size());
        let mut pairs = BTreeSet::new();
        for &(i, j) in &f.pairs {
            for &(i2, j2) in &g.pairs {
                pairs.insert((i * gs + i2, j * gt + j2));
            }
        }
        Rel::new(src, tgt, pairs)
    }
}

impl Braided for FinRel {
    fn braiding(&self, x: &FinSet, y: &FinSet) -> Rel {
        let (xn, yn) = (x.size(), y.size());
        let src = self.tensor_obj(x, y);
        let tgt = self.tensor_obj(y, x);
        let pairs = (0..xn)
            .flat_map(|i| (0..yn).map(move |j| (i * yn + j, j * xn + i)))
            .collect();
        Rel::new(src, tgt, pairs)
    }

    fn braiding_inv(&self, x: &FinSet, y: &FinSet) -> Rel {
        self.braiding(y, x)
    }
}

impl HomSpaces for FinRel {
    fn hom(&self, x: &FinSet, y: &FinSet) -> HomSpace<Rel> {
        let bits = x.size() * y.size();
        if bits <= self.enumeration_cap {
            let yn = y.size();
            let all = (0u64..(1u64 << bits))
                .map(|mask| {
                    let pairs = (0..bits)
                        .filter(|k| mask >> k & 1 == 1)
                        .map(|k| (k / yn, k % yn))
                        .collect();
                    Rel::new(x.clone(), y.clone(), pairs)
                })
                .collect();
            HomSpace::Enumerated(all)
        } else {
            // Deterministic spread of sample relations: empty, full,
            // identity-like diagonal, and a few bit patterns.
            let yn = y.size();
            let mut samples = Vec::new();
            let patterns: [u64; 5] = [0, u64::MAX, 0x5555_5555_5555_5555, 0x9249_2492_4924_9249, 1];
            for p in patterns {
                let pairs = (0..bits)
                    .filter(|k| p >> (k % 64) & 1 == 1)
                    .map(|k| (k / yn, k % yn))
                    .collect();
                samples.push(Rel::new(x.clone(), y.clone(), pairs));
            }
            HomSpace::Sampled(samples)
        }
    }
}

impl ClosedMonoidal for FinRel {
    /// Internal hom `[J, K] = J × K`.
    fn internal_hom(&self, x: &FinSet, y: &FinSet) -> FinSet {
        self.tensor_obj(x, y)
    }

    /// Evaluation `(J × K) ⊗ J → K`, relating `((j,k), j)` to `k`.
    fn eval(&self, x: &FinSet, y: &FinSet) -> Rel {
        let (xn, yn) = (x.size(), y.size());
        let hom = self.internal_hom(x, y);
        let src = self.tensor_obj(&hom, x);
        let mut pairs = BTreeSet::new();
        for j in 0..xn {
            for k in 0..yn {
                pairs.insert(((j * yn + k) * xn + j, k));
            }
        }
        Rel::new(src, y.clone(), pairs)
    }
}

/// The canonical pre-rigid structure: every set is its own pre-dual and the
/// evaluation is the diagonal relation; the dagger reads a relation into
/// the singleton back as a relation between the factors.
pub struct RelPreduals;

impl crate::engine::PreRigid<FinRel> for RelPreduals {
    fn predual(
        &self,
        cat: &FinRel,
        x: &FinSet,
    ) -> Result<crate::engine::PreDualData<FinRel>, crate::engine::EngineError> {
        Ok(crate::engine::PreDualData {
            object: x.clone(),
            evaluation: cat.evaluation(x),
        })
    }

    fn dagger(
        &self,
        cat: &FinRel,
        t_source: &FinSet,
        x: &FinSet,
        t: &Rel,
    ) -> Result<Rel, crate::engine::EngineError> {
        if t.tgt != cat.unit() || t.src.size() != t_source.size() * x.size() {
            return Err(crate::engine::EngineError::NotPreDual(format!(
                "expected a relation from T×X to the singleton, found {:?} → {:?}",
                t.src, t.tgt
            )));
        }
        Ok(cat.rel_dagger(t, t_source, x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::check_braiding;

    #[test]
    fn composition_by_hand() {
        let c = FinRel::default();
        let s = FinSet::from_labels(&["0", "1"]);
        let f = Rel::from_pairs(s.clone(), s.clone(), &[(0, 0)]);
        let g = Rel::from_pairs(s.clone(), s.clone(), &[(0, 1)]);
        let gf = c.compose(&g, &f).unwrap();
        assert_eq!(gf, Rel::from_pairs(s.clone(), s, &[(0, 1)]));
    }

    #[test]
    fn identity_neutral() {
        let c = FinRel::default();
        let s = FinSet::from_labels(&["a", "b"]);
        let f = Rel::from_pairs(s.clone(), s.clone(), &[(0, 1), (1, 1)]);
        let id = c.identity(&s);
        assert_eq!(c.compose(&f, &id).unwrap(), f);
        assert_eq!(c.compose(&id, &f).unwrap(), f);
    }

    #[test]
    fn hom_count_of_singletons() {
        let c = FinRel::default();
        let a = FinSet::from_labels(&["a"]);
        let b = FinSet::from_labels(&["b"]);
        match c.hom(&a, &b) {
            HomSpace::Enumerated(v) => assert_eq!(v.len(), 2),
            _ => panic!("expected enumeration"),
        }
    }

    #[test]
    fn unit_tensor_is_strict() {
        let c = FinRel::default();
        let s = FinSet::from_labels(&["a", "b"]);
        assert_eq!(c.tensor_obj(&c.unit(), &s), s);
        assert_eq!(c.tensor_obj(&s, &c.unit()), s);
        let f = Rel::from_pairs(s.clone(), s.clone(), &[(1, 0)]);
        assert_eq!(c.tensor_mor(&f, &c.identity(&c.unit())), f);
    }

    #[test]
    fn tensor_is_cartesian_product_of_relations() {
        let c = FinRel::default();
        let i = FinSet::from_labels(&["i"]);
        let j = FinSet::from_labels(&["j"]);
        let r = Rel::from_pairs(i.clone(), j.clone(), &[(0, 0)]);
        let rr = c.tensor_mor(&r, &r);
        assert_eq!(rr.pairs.len(), 1);
        assert!(rr.contains(0, 0));
        assert_eq!(rr.src, c.tensor_obj(&i, &i));
    }

    #[test]
    fn laws_exhaustive_on_tiny_carriers() {
        // Associativity of relational composition and the interchange law,
        // over every relation between carriers of size at most 2.
        let c = FinRel::default();
        let a = FinSet::from_labels(&["a1", "a2"]);
        let b = FinSet::from_labels(&["b1"]);
        let d = FinSet::from_labels(&["d1", "d2"]);
        let all = |x: &FinSet, y: &FinSet| match c.hom(x, y) {
            HomSpace::Enumerated(v) => v,
            _ => panic!("expected enumeration"),
        };
        for f in all(&a, &b) {
            for g in all(&b, &d) {
                for h in all(&d, &a) {
                    let hg = c.compose(&h, &g).unwrap();
                    let gf = c.compose(&g, &f).unwrap();
                    assert_eq!(c.compose(&h, &gf).unwrap(), c.compose(&hg, &f).unwrap());
                }
            }
        }
        // Interchange over all pairs of parallel composable chains a → b → d.
        for p in all(&a, &b) {
            for q in all(&b, &d) {
                for r in all(&a, &b) {
                    for s in all(&b, &d) {
                        let lhs = c
                            .compose(&c.tensor_mor(&q, &s), &c.tensor_mor(&p, &r))
                            .unwrap();
                        let rhs =
                            c.tensor_mor(&c.compose(&q, &p).unwrap(), &c.compose(&s, &r).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn swap_passes_braiding_laws() {
        let c = FinRel::default();
        let a = FinSet::from_labels(&["a"]);
        let bc = FinSet::from_labels(&["b", "c"]);
        let f = Rel::from_pairs(a.clone(), bc.clone(), &[(0, 1)]);
        let report = check_braiding(&c, &[a, bc], &[f]);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn corrupted_braiding_fails() {
        // Replace the swap by the empty relation on one pair of objects and
        // watch the invertibility check fail.
        #[derive(Clone, Debug)]
        struct Corrupted(FinRel);
        impl Category for Corrupted {
            type Obj = FinSet;
            type Mor = Rel;
            fn source(&self, f: &Rel) -> FinSet {
                self.0.source(f)
            }
            fn target(&self, f: &Rel) -> FinSet {
                self.0.target(f)
            }
            fn identity(&self, x: &FinSet) -> Rel {
                self.0.identity(x)
            }
            fn compose(&self, g: &Rel, f: &Rel) -> Result<Rel, CatError> {
                self.0.compose(g, f)
            }
        }
        impl Monoidal for Corrupted {
            fn unit(&self) -> FinSet {
                self.0.unit()
            }
            fn tensor_obj(&self, x: &FinSet, y: &FinSet) -> FinSet {
                self.0.tensor_obj(x, y)
            }
            fn tensor_mor(&self, f: &Rel, g: &Rel) -> Rel {
                self.0.tensor_mor(f, g)
            }
        }
        impl Braided for Corrupted {
            fn braiding(&self, x: &FinSet, y: &FinSet) -> Rel {
                if x.size() == 2 && y.size() == 2 {
                    Rel::empty(self.0.tensor_obj(x, y), self.0.tensor_obj(y, x))
                } else {
                    self.0.braiding(x, y)
                }
            }
            fn braiding_inv(&self, x: &FinSet, y: &FinSet) -> Rel {
                self.braiding(y, x)
            }
        }
        let c = Corrupted(FinRel::default());
        let s = FinSet::from_labels(&["a", "b"]);
        let report = check_braiding(&c, &[s], &[]);
        assert!(!report.all_passed());
    }

    #[test]
    fn internal_hom_is_product() {
        let c = FinRel::default();
        let j = FinSet::from_labels(&["j1", "j2"]);
        let k = FinSet::from_labels(&["k"]);
        assert_eq!(c.internal_hom(&j, &k).size(), 2);
    }
}
