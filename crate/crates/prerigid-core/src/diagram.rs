//! Functor categories over a finite index category, with values in
//! exact-rational vector spaces.
//!
//! Objects are diagrams (functors into matrices), morphisms are natural
//! transformations, tensor is pointwise Kronecker and the unit is the
//! constant line. The space of natural transformations is computed exactly
//! as the kernel of the stacked naturality constraints, which makes every
//! hom a finite-dimensional linear space.
//!
//! The pre-dual of a diagram `F` at an object `x` is the finite limit
//! `F*(x) = lim_y ∏_{Hom(x,y)} F(y)*`, realised as the kernel of stacked
//! compatibility constraints; its structure maps, the evaluation, and the
//! two mutually inverse correspondences between `Nat(T ⊗ F, 𝕀')` and
//! `Nat(T, F*)` are all concrete matrices.

use crate::cat::{Braided, CatError, Category, HomSpace, HomSpaces, Monoidal};
use crate::engine::{EngineError, PreDualData, PreRigid};
use crate::matrix::{Mat, SolveOutcome};
use crate::prelude::*;
use crate::rational::Rat;
use crate::report::Report;
use num_traits::Zero;

/// A finite category presented by objects, a full list of morphisms (with
/// identities), and a total composition table.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteIndexCategory {
    pub objects: Vec<String>,
    /// `(name, source, target)` per morphism.
    pub morphisms: Vec<(String, usize, usize)>,
    /// `compose[g][f] = Some(g∘f)` when `target(f) = source(g)`.
    pub compose: Vec<Vec<Option<usize>>>,
    /// Identity morphism index per object.
    pub identities: Vec<usize>,
}

impl FiniteIndexCategory {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn src(&self, m: usize) -> usize {
        self.morphisms[m].1
    }

    pub fn tgt(&self, m: usize) -> usize {
        self.morphisms[m].2
    }

    /// Morphism indices `x → y` in declaration order.
    pub fn hom_set(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&m| self.src(m) == x && self.tgt(m) == y)
            .collect()
    }

    pub fn comp(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g][f]
    }

    /// Closure, associativity and identity laws of the composition table.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let n = self.morphisms.len();
        let set = format!("{} morphisms", n);
        let mut ok = true;
        for f in 0..n {
            for g in 0..n {
                let defined = self.tgt(f) == self.src(g);
                match self.comp(g, f) {
                    Some(h) if defined => {
                        if self.src(h) != self.src(f) || self.tgt(h) != self.tgt(g) {
                            ok = false;
                        }
                    }
                    None if !defined => {}
                    _ => ok = false,
                }
            }
        }
        if ok {
            report.pass(
                "index.closure",
                "composition table is total on composable pairs",
                &set,
            );
        } else {
            report.fail(
                "index.closure",
                "composition table is total on composable pairs",
                "mismatch".to_string(),
                &set,
            );
        }

        let mut ok = true;
        for f in 0..n {
            for g in 0..n {
                for h in 0..n {
                    if self.tgt(f) == self.src(g) && self.tgt(g) == self.src(h) {
                        let left = self.comp(h, self.comp(g, f).unwrap());
                        let right = self.comp(self.comp(h, g).unwrap(), f);
                        if left != right {
                            ok = false;
                        }
                    }
                }
            }
        }
        if ok {
            report.pass("index.assoc", "composition table is associative", &set);
        } else {
            report.fail(
                "index.assoc",
                "composition table is associative",
                "violation".to_string(),
                &set,
            );
        }

        let mut ok = true;
        for (x, &idx) in self.identities.iter().enumerate() {
            if self.src(idx) != x || self.tgt(idx) != x {
                ok = false;
            }
            for f in 0..n {
                if self.src(f) == x && self.comp(f, idx) != Some(f) {
                    ok = false;
                }
                if self.tgt(f) == x && self.comp(idx, f) != Some(f) {
                    ok = false;
                }
            }
        }
        if ok {
            report.pass("index.identity", "identities are neutral", &set);
        } else {
            report.fail(
                "index.identity",
                "identities are neutral",
                "violation".to_string(),
                &set,
            );
        }
        report
    }

    /// The one-object, one-morphism category.
    pub fn point() -> Self {
        FiniteIndexCategory {
            objects: vec!["*".to_owned()],
            morphisms: vec![("id".to_owned(), 0, 0)],
            compose: vec![vec![Some(0)]],
            identities: vec![0],
        }
    }

    /// Two objects and one arrow between them.
    pub fn arrow() -> Self {
        let morphisms = vec![
            ("id_a".to_owned(), 0, 0),
            ("id_b".to_owned(), 1, 1),
            ("v".to_owned(), 0, 1),
        ];
        let mut compose = vec![vec![None; 3]; 3];
        compose[0][0] = Some(0);
        compose[1][1] = Some(1);
        compose[2][0] = Some(2); // v ∘ id_a
        compose[1][2] = Some(2); // id_b ∘ v
        FiniteIndexCategory {
            objects: vec!["a".to_owned(), "b".to_owned()],
            morphisms,
            compose,
            identities: vec![0, 1],
        }
    }

    /// The commutative square: `a → b → d`, `a → c → d`, with the diagonal
    /// composite identified.
    pub fn square() -> Self {
        let names = ["id_a", "id_b", "id_c", "id_d", "f", "g", "h", "k", "w"];
        // f: a→b, g: a→c, h: b→d, k: c→d, w = h∘f = k∘g : a→d.
        let endpoints = [
            (0, 0),
            (1, 1),
            (2, 2),
            (3, 3),
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 3),
            (0, 3),
        ];
        let n = names.len();
        let mut compose = vec![vec![None; n]; n];
        let src = |m: usize| endpoints[m].0;
        let tgt = |m: usize| endpoints[m].1;
        for f in 0..n {
            for g in 0..n {
                if tgt(f) != src(g) {
                    continue;
                }
                // Identity absorptions.
                let result = if f < 4 {
                    g
                } else if g < 4 {
                    f
                } else {
                    // Non-identity composites: h∘f = w, k∘g = w.
                    match (g, f) {
                        (6, 4) => 8,
                        (7, 5) => 8,
                        _ => unreachable!("no other composable non-identity pairs"),
                    }
                };
                compose[g][f] = Some(result);
            }
        }
        FiniteIndexCategory {
            objects: vec!["a".into(), "b".into(), "c".into(), "d".into()],
            morphisms: names
                .iter()
                .zip(endpoints)
                .map(|(n, (s, t))| ((*n).to_owned(), s, t))
                .collect(),
            compose,
            identities: vec![0, 1, 2, 3],
        }
    }
}

/// A functor from the index category into matrices: a dimension per object
/// and a matrix per morphism.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagramFunctor {
    pub dims: Vec<usize>,
    pub mats: Vec<Mat>,
}

impl DiagramFunctor {
    /// Functor laws against the composition table.
    pub fn validate(&self, index: &FiniteIndexCategory) -> Report {
        let mut report = Report::new();
        let set = format!("{} index morphisms", index.morphisms.len());
        let mut ok = true;
        for (m, &(_, s, t)) in index.morphisms.iter().enumerate() {
            if self.mats[m].rows() != self.dims[t] || self.mats[m].cols() != self.dims[s] {
                ok = false;
            }
        }
        if ok {
            report.pass(
                "diagram.shapes",
                "assigned matrices match endpoint dimensions",
                &set,
            );
        } else {
            report.fail(
                "diagram.shapes",
                "assigned matrices match endpoint dimensions",
                "shape mismatch".to_string(),
                &set,
            );
        }
        let mut ok = true;
        for (x, &id_m) in index.identities.iter().enumerate() {
            if !self.mats[id_m].is_identity() && self.dims[x] > 0 {
                ok = false;
            }
        }
        if ok {
            report.pass(
                "diagram.identities",
                "identities map to identity matrices",
                &set,
            );
        } else {
            report.fail(
                "diagram.identities",
                "identities map to identity matrices",
                "violation".to_string(),
                &set,
            );
        }
        let mut ok = true;
        for f in 0..index.morphisms.len() {
            for g in 0..index.morphisms.len() {
                if let Some(h) = index.comp(g, f) {
                    if self.mats[g].mul(&self.mats[f]) != self.mats[h] {
                        ok = false;
                    }
                }
            }
        }
        if ok {
            report.pass("diagram.functorial", "composition is preserved", &set);
        } else {
            report.fail(
                "diagram.functorial",
                "composition is preserved",
                "violation".to_string(),
                &set,
            );
        }
        report
    }
}

/// A natural transformation: one matrix per index object.
#[derive(Clone, Debug, PartialEq)]
pub struct NatTrans {
    pub src: DiagramFunctor,
    pub tgt: DiagramFunctor,
    pub components: Vec<Mat>,
}

/// The functor category `[I, Vect]`.
pub struct DiagCat<'c> {
    pub index: &'c FiniteIndexCategory,
}

impl<'c> DiagCat<'c> {
    pub fn new(index: &'c FiniteIndexCategory) -> Self {
        DiagCat { index }
    }

    pub fn constant(&self, dim: usize) -> DiagramFunctor {
        DiagramFunctor {
            dims: vec![dim; self.index.object_count()],
            mats: self
                .index
                .morphisms
                .iter()
                .map(|_| Mat::identity(dim))
                .collect(),
        }
    }

    /// Is the given family of matrices natural as a map `F → G`?
    pub fn is_natural(&self, f: &DiagramFunctor, g: &DiagramFunctor, comps: &[Mat]) -> bool {
        self.index
            .morphisms
            .iter()
            .enumerate()
            .all(|(m, &(_, s, t))| comps[t].mul(&f.mats[m]) == g.mats[m].mul(&comps[s]))
    }
}

impl<'c> Category for DiagCat<'c> {
    type Obj = DiagramFunctor;
    type Mor = NatTrans;

    fn source(&self, f: &NatTrans) -> DiagramFunctor {
        f.src.clone()
    }
    fn target(&self, f: &NatTrans) -> DiagramFunctor {
        f.tgt.clone()
    }
    fn identity(&self, x: &DiagramFunctor) -> NatTrans {
        NatTrans {
            src: x.clone(),
            tgt: x.clone(),
            components: x.dims.iter().map(|&d| Mat::identity(d)).collect(),
        }
    }
    fn compose(&self, g: &NatTrans, f: &NatTrans) -> Result<NatTrans, CatError> {
        if f.tgt != g.src {
            return Err(self.compose_err(g, f));
        }
        Ok(NatTrans {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            components: g
                .components
                .iter()
                .zip(&f.components)
                .map(|(a, b)| a.mul(b))
                .collect(),
        })
    }
}

impl<'c> Monoidal for DiagCat<'c> {
    fn unit(&self) -> DiagramFunctor {
        self.constant(1)
    }
    fn tensor_obj(&self, x: &DiagramFunctor, y: &DiagramFunctor) -> DiagramFunctor {
        DiagramFunctor {
            dims: x.dims.iter().zip(&y.dims).map(|(a, b)| a * b).collect(),
            mats: x.mats.iter().zip(&y.mats).map(|(a, b)| a.kron(b)).collect(),
        }
    }
    fn tensor_mor(&self, f: &NatTrans, g: &NatTrans) -> NatTrans {
        NatTrans {
            src: self.tensor_obj(&f.src, &g.src),
            tgt: self.tensor_obj(&f.tgt, &g.tgt),
            components: f
                .components
                .iter()
                .zip(&g.components)
                .map(|(a, b)| a.kron(b))
                .collect(),
        }
    }
}

impl<'c> Braided for DiagCat<'c> {
    fn braiding(&self, x: &DiagramFunctor, y: &DiagramFunctor) -> NatTrans {
        NatTrans {
            src: self.tensor_obj(x, y),
            tgt: self.tensor_obj(y, x),
            components: x
                .dims
                .iter()
                .zip(&y.dims)
                .map(|(&a, &b)| Mat::twist(a, b))
                .collect(),
        }
    }
    fn braiding_inv(&self, x: &DiagramFunctor, y: &DiagramFunctor) -> NatTrans {
        self.braiding(y, x)
    }
}

/// Ambient coordinates of a natural transformation: all components
/// flattened in object order.
fn ambient_dim(t: &DiagramFunctor, g: &DiagramFunctor) -> usize {
    t.dims.iter().zip(&g.dims).map(|(a, b)| a * b).sum()
}

/// The space of natural transformations `T → G` as the kernel of the
/// stacked naturality constraints `λ_y T(u) − G(u) λ_x = 0`.
pub fn nat_space(
    index: &FiniteIndexCategory,
    t: &DiagramFunctor,
    g: &DiagramFunctor,
) -> Vec<NatTrans> {
    let cols = ambient_dim(t, g);
    let mut offsets = Vec::with_capacity(t.dims.len());
    let mut acc = 0usize;
    for (a, b) in t.dims.iter().zip(&g.dims) {
        offsets.push(acc);
        acc += a * b;
    }
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (m, &(_, s, tt)) in index.morphisms.iter().enumerate() {
        // λ_tt · T(u) − G(u) · λ_s = 0, one row per entry of a
        // g.dims[tt] × t.dims[s] matrix.
        let (rdim, cdim) = (g.dims[tt], t.dims[s]);
        for r in 0..rdim {
            for c in 0..cdim {
                let mut row = vec![crate::rational::zero(); cols];
                // Entry (r, c) of λ_tt·T(u): Σ_k λ_tt[r, k]·T(u)[k, c].
                for k in 0..t.dims[tt] {
                    let coeff = t.mats[m].at(k, c).clone();
                    if !coeff.is_zero() {
                        let pos = offsets[tt] + r * t.dims[tt] + k;
                        row[pos] = &row[pos] + &coeff;
                    }
                }
                // minus entry (r, c) of G(u)·λ_s: Σ_k G(u)[r, k]·λ_s[k, c].
                for k in 0..g.dims[s] {
                    let coeff = g.mats[m].at(r, k).clone();
                    if !coeff.is_zero() {
                        let pos = offsets[s] + k * t.dims[s] + c;
                        row[pos] = &row[pos] - &coeff;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let constraint = if rows.is_empty() {
        Mat::zero(0, cols)
    } else {
        Mat::from_fn(rows.len(), cols, |r, c| rows[r][c].clone())
    };
    let kernel = constraint.kernel_basis();
    (0..kernel.cols())
        .map(|k| nat_from_coords(t, g, &kernel.col(k)))
        .collect()
}

fn nat_from_coords(t: &DiagramFunctor, g: &DiagramFunctor, coords: &[Rat]) -> NatTrans {
    let mut components = Vec::with_capacity(t.dims.len());
    let mut pos = 0usize;
    for (&a, &b) in t.dims.iter().zip(&g.dims) {
        components.push(Mat::from_data(b, a, coords[pos..pos + a * b].to_owned()));
        pos += a * b;
    }
    NatTrans {
        src: t.clone(),
        tgt: g.clone(),
        components,
    }
}

impl<'c> HomSpaces for DiagCat<'c> {
    fn hom(&self, x: &DiagramFunctor, y: &DiagramFunctor) -> HomSpace<NatTrans> {
        HomSpace::Linear(nat_space(self.index, x, y))
    }

    fn mor_coords(&self, f: &NatTrans) -> Option<Vec<Rat>> {
        let mut out = Vec::new();
        for c in &f.components {
            out.extend(c.flatten());
        }
        Some(out)
    }

    fn mor_from_coords(
        &self,
        x: &DiagramFunctor,
        y: &DiagramFunctor,
        coords: &[Rat],
    ) -> Option<NatTrans> {
        if coords.len() != ambient_dim(x, y) {
            return None;
        }
        Some(nat_from_coords(x, y, coords))
    }
}

/// The pre-dual diagram of `F` realised by finite limits, together with the
/// projection data needed to build the evaluation and the explicit
/// correspondence with pairings.
pub struct DiagramPredual {
    pub fstar: DiagramFunctor,
    /// Per object `x`: the kernel basis `K_x` whose block rows are the
    /// cone maps `q^x_y : F*(x) → S(x, y)`.
    pub kernels: Vec<Mat>,
    /// Per object `x`: row offsets of each `S(x, y)` block inside `K_x`,
    /// and the hom-set orderings used.
    pub block_offsets: Vec<Vec<usize>>,
    pub hom_sets: Vec<Vec<Vec<usize>>>,
}

/// `S(x, y) = ∏_{g ∈ Hom(x,y)} F(y)*` has dimension `|Hom(x,y)|·dim F(y)`.
fn s_dim(index: &FiniteIndexCategory, f: &DiagramFunctor, x: usize, y: usize) -> usize {
    index.hom_set(x, y).len() * f.dims[y]
}

/// The structure map `S(u, v) : S(x1, y1) → S(x2, y2)` for `u : x1 → x2`
/// and `v : y2 → y1`, characterised by `p_g ∘ S(u, v) = F(v)* ∘ p_{v∘g∘u}`.
fn s_map(index: &FiniteIndexCategory, f: &DiagramFunctor, u: usize, v: usize) -> Mat {
    let (x1, x2) = (index.src(u), index.tgt(u));
    let (y2, y1) = (index.src(v), index.tgt(v));
    let homs1 = index.hom_set(x1, y1);
    let homs2 = index.hom_set(x2, y2);
    let fv_star = f.mats[v].transpose();
    let (d1, d2) = (f.dims[y1], f.dims[y2]);
    let mut m = Mat::zero(homs2.len() * d2, homs1.len() * d1);
    for (gi, &g) in homs2.iter().enumerate() {
        let vgu = index
            .comp(v, index.comp(g, u).expect("composable"))
            .expect("composable");
        let pos = homs1
            .iter()
            .position(|&h| h == vgu)
            .expect("hom closed under composition");
        m.paste(gi * d2, pos * d1, &fv_star);
    }
    m
}

/// Compute `F*` with its limit data: `F*(x) = lim_y S(x, -)`, the kernel of
/// the constraints `S(x, v)·s_{y1} = s_{y2}` over all `v : y2 → y1`.
pub fn functorcat_predual(index: &FiniteIndexCategory, f: &DiagramFunctor) -> DiagramPredual {
    let nobj = index.object_count();
    let mut kernels = Vec::with_capacity(nobj);
    let mut block_offsets = Vec::with_capacity(nobj);
    let mut hom_sets = Vec::with_capacity(nobj);
    for x in 0..nobj {
        let mut offsets = Vec::with_capacity(nobj);
        let mut acc = 0usize;
        for y in 0..nobj {
            offsets.push(acc);
            acc += s_dim(index, f, x, y);
        }
        let total = acc;
        let mut rows: Vec<Mat> = Vec::new();
        for (v, &(_, y2, y1)) in index.morphisms.iter().enumerate() {
            let id_x = index.identities[x];
            let sv = s_map(index, f, id_x, v);
            // S(x, v)·s_{y1} − s_{y2} = 0.
            let mut block = Mat::zero(sv.rows(), total);
            block.paste(0, offsets[y1], &sv);
            let neg = Mat::identity(s_dim(index, f, x, y2)).scale(&-crate::rational::one());
            // Subtract the identity on the y2 block.
            let mut with_neg = block.clone();
            for r in 0..neg.rows() {
                for c in 0..neg.cols() {
                    let val = with_neg.at(r, offsets[y2] + c) + neg.at(r, c);
                    with_neg.set(r, offsets[y2] + c, val);
                }
            }
            rows.push(with_neg);
        }
        let constraint = if rows.is_empty() {
            Mat::zero(0, total)
        } else {
            Mat::vstack(&rows.iter().collect::<Vec<_>>())
        };
        kernels.push(constraint.kernel_basis());
        block_offsets.push(offsets);
        hom_sets.push((0..nobj).map(|y| index.hom_set(x, y)).collect());
    }

    let dims: Vec<usize> = kernels.iter().map(|k| k.cols()).collect();
    // F*(u) : F*(x1) → F*(x2) solves K_{x2}·F*(u) = vstack_y S(u, id_y)·q^{x1}_y.
    let mut mats = Vec::with_capacity(index.morphisms.len());
    for (u, &(_, x1, x2)) in index.morphisms.iter().enumerate() {
        let mut stacked_rows: Vec<Mat> = Vec::new();
        for y in 0..nobj {
            let id_y = index.identities[y];
            let su = s_map(index, f, u, id_y);
            let q1 =
                kernels[x1].submatrix(block_offsets[x1][y], 0, s_dim(index, f, x1, y), dims[x1]);
            stacked_rows.push(su.mul(&q1));
        }
        let rhs = Mat::vstack(&stacked_rows.iter().collect::<Vec<_>>());
        let sol = match kernels[x2].solve_unique(&rhs) {
            SolveOutcome::Unique(m) => m,
            other => panic!("limit mediator must be unique, got {other:?}"),
        };
        mats.push(sol);
    }

    DiagramPredual {
        fstar: DiagramFunctor { dims, mats },
        kernels,
        block_offsets,
        hom_sets,
    }
}

impl DiagramPredual {
    /// The cone map `q^x_y : F*(x) → S(x, y)`.
    pub fn q(&self, index: &FiniteIndexCategory, f: &DiagramFunctor, x: usize, y: usize) -> Mat {
        self.kernels[x].submatrix(
            self.block_offsets[x][y],
            0,
            s_dim(index, f, x, y),
            self.fstar.dims[x],
        )
    }

    /// `p_id ∘ q^x_x : F*(x) → F(x)*`, the projection at the identity.
    pub fn p_id_q(&self, index: &FiniteIndexCategory, f: &DiagramFunctor, x: usize) -> Mat {
        let q = self.q(index, f, x, x);
        let homs = &self.hom_sets[x][x];
        let pos = homs
            .iter()
            .position(|&h| h == index.identities[x])
            .expect("identity in hom set");
        q.submatrix(pos * f.dims[x], 0, f.dims[x], self.fstar.dims[x])
    }

    /// The evaluation `ev_F : F* ⊗ F → 𝕀'` with components
    /// `ev_{F(x)} ∘ (p_id q^x_x ⊗ F(x))`.
    pub fn evaluation(&self, cat: &DiagCat<'_>, f: &DiagramFunctor) -> NatTrans {
        let index = cat.index;
        let components: Vec<Mat> = (0..index.object_count())
            .map(|x| {
                let piq = self.p_id_q(index, f, x);
                let pairing = crate::finvect::VectPreduals::pairing(f.dims[x]);
                pairing.matrix.mul(&piq.kron(&Mat::identity(f.dims[x])))
            })
            .collect();
        NatTrans {
            src: cat.tensor_obj(&self.fstar, f),
            tgt: cat.unit(),
            components,
        }
    }

    /// The explicit correspondence `Nat(T ⊗ F, 𝕀') → Nat(T, F*)`:
    /// componentwise daggers assembled through the limit cones.
    pub fn phi(
        &self,
        cat: &DiagCat<'_>,
        f: &DiagramFunctor,
        t: &DiagramFunctor,
        alpha: &NatTrans,
    ) -> Result<NatTrans, EngineError> {
        let index = cat.index;
        let nobj = index.object_count();
        // (α_y)† : T(y) → F(y)* by reshaping the pairing.
        let daggered: Vec<Mat> = (0..nobj)
            .map(|y| {
                crate::finvect::VectPreduals::reshape_dagger(
                    &alpha.components[y],
                    t.dims[y],
                    f.dims[y],
                )
            })
            .collect();
        let mut components = Vec::with_capacity(nobj);
        for x in 0..nobj {
            // α^x_y : T(x) → S(x, y), blocks (α_y)† ∘ T(g) over g : x → y.
            let mut blocks: Vec<Mat> = Vec::new();
            for y in 0..nobj {
                for &g in &self.hom_sets[x][y] {
                    blocks.push(daggered[y].mul(&t.mats[g]));
                }
            }
            let rhs = if blocks.is_empty() {
                Mat::zero(0, t.dims[x])
            } else {
                Mat::vstack(&blocks.iter().collect::<Vec<_>>())
            };
            match self.kernels[x].solve_unique(&rhs) {
                SolveOutcome::Unique(m) => components.push(m),
                other => {
                    return Err(EngineError::NotPreDual(format!(
                        "cone does not factor uniquely through the limit: {other:?}"
                    )))
                }
            }
        }
        Ok(NatTrans {
            src: t.clone(),
            tgt: self.fstar.clone(),
            components,
        })
    }

    /// The inverse correspondence `Nat(T, F*) → Nat(T ⊗ F, 𝕀')`:
    /// `λ ↦ ev_F ∘ (λ ⊗ F)`.
    pub fn psi(&self, cat: &DiagCat<'_>, f: &DiagramFunctor, lambda: &NatTrans) -> NatTrans {
        let ev = self.evaluation(cat, f);
        cat.compose(&ev, &cat.tensor_mor(lambda, &cat.identity(f)))
            .expect("pairing composite well-typed")
    }
}

/// Deterministic functorial diagram over one of the fixture index
/// categories. For the square, `f` and `h` are free, `w = h∘f`, `g` is a
/// seeded invertible square matrix and `k = w·g⁻¹`, so commutativity holds
/// exactly.
pub fn seeded_diagram(
    index: &FiniteIndexCategory,
    rng: &mut crate::rng::SplitMix64,
    max_dim: usize,
) -> DiagramFunctor {
    let d = match index.object_count() {
        1 => {
            let n = 1 + rng.below(max_dim as u64) as usize;
            DiagramFunctor {
                dims: vec![n],
                mats: vec![Mat::identity(n)],
            }
        }
        2 => {
            let (a, b) = (
                1 + rng.below(max_dim as u64) as usize,
                1 + rng.below(max_dim as u64) as usize,
            );
            DiagramFunctor {
                dims: vec![a, b],
                mats: vec![Mat::identity(a), Mat::identity(b), rng.matrix(b, a)],
            }
        }
        4 => {
            let (da, db, dd) = (
                1 + rng.below(max_dim as u64) as usize,
                1 + rng.below(max_dim as u64) as usize,
                1 + rng.below(max_dim as u64) as usize,
            );
            let dc = da;
            let f = rng.matrix(db, da);
            let h = rng.matrix(dd, db);
            let w = h.mul(&f);
            let g = rng.invertible_matrix(da);
            let k = w.mul(&g.inverse().expect("invertible"));
            DiagramFunctor {
                dims: vec![da, db, dc, dd],
                mats: vec![
                    Mat::identity(da),
                    Mat::identity(db),
                    Mat::identity(dc),
                    Mat::identity(dd),
                    f,
                    g,
                    h,
                    k,
                    w,
                ],
            }
        }
        other => panic!("no seeded diagram recipe for {other} objects"),
    };
    assert!(
        d.validate(index).all_passed(),
        "seeded diagram must be functorial"
    );
    d
}

/// Pre-rigid structure of the functor category; the dagger is the explicit
/// limit-based correspondence (independent of the generic linear solver,
/// which the tests compare it against).
pub struct DiagramPreduals;

impl<'c> PreRigid<DiagCat<'c>> for DiagramPreduals {
    fn predual(
        &self,
        cat: &DiagCat<'c>,
        x: &DiagramFunctor,
    ) -> Result<PreDualData<DiagCat<'c>>, EngineError> {
        let pd = functorcat_predual(cat.index, x);
        let evaluation = pd.evaluation(cat, x);
        Ok(PreDualData {
            object: pd.fstar.clone(),
            evaluation,
        })
    }

    fn dagger(
        &self,
        cat: &DiagCat<'c>,
        t_source: &DiagramFunctor,
        x: &DiagramFunctor,
        t: &NatTrans,
    ) -> Result<NatTrans, EngineError> {
        let pd = functorcat_predual(cat.index, x);
        pd.phi(cat, x, t_source, t)
    }
}
