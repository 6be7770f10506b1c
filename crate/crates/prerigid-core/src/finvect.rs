//! Finite-dimensional vector spaces over the exact rationals.
//!
//! Objects are dimensions, morphisms are matrices, tensor is the Kronecker
//! product (strictly associative in row-major layout) and the braiding is
//! the twist permutation. The category is closed with `[X, Y]` the matrix
//! space, so every object has the canonical pre-dual `X* = [X, 𝕀]` with the
//! standard pairing as evaluation.

use crate::cat::{
    elementary_basis, Braided, CatError, Category, ClosedMonoidal, HomSpace, HomSpaces, Monoidal,
};
use crate::matrix::Mat;
use crate::prelude::*;
use crate::rational::{one, Rat};

/// Object: a dimension.
pub type Dim = usize;

/// Morphism: a matrix tagged with its endpoints so that 0-dimensional
/// sources and targets stay distinguishable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VecMor {
    pub matrix: Mat,
}

impl VecMor {
    pub fn new(matrix: Mat) -> Self {
        VecMor { matrix }
    }
}

#[derive(Clone, Debug, Default)]
pub struct FinVect;

impl FinVect {
    pub fn mor(&self, m: Mat) -> VecMor {
        VecMor::new(m)
    }

    /// All dimensions up to `max_dim`, plus the extra objects callers care
    /// about; the conventional finite test set for universal properties.
    pub fn test_objects(&self, max_dim: usize) -> Vec<Dim> {
        (0..=max_dim).collect()
    }
}

impl Category for FinVect {
    type Obj = Dim;
    type Mor = VecMor;

    fn source(&self, f: &VecMor) -> Dim {
        f.matrix.cols()
    }
    fn target(&self, f: &VecMor) -> Dim {
        f.matrix.rows()
    }
    fn identity(&self, x: &Dim) -> VecMor {
        VecMor::new(Mat::identity(*x))
    }
    fn compose(&self, g: &VecMor, f: &VecMor) -> Result<VecMor, CatError> {
        if f.matrix.rows() != g.matrix.cols() {
            return Err(self.compose_err(g, f));
        }
        Ok(VecMor::new(g.matrix.mul(&f.matrix)))
    }
}

impl Monoidal for FinVect {
    fn unit(&self) -> Dim {
        1
    }
    fn tensor_obj(&self, x: &Dim, y: &Dim) -> Dim {
        x * y
    }
    fn tensor_mor(&self, f: &VecMor, g: &VecMor) -> VecMor {
        VecMor::new(f.matrix.kron(&g.matrix))
    }
}

impl Braided for FinVect {
    fn braiding(&self, x: &Dim, y: &Dim) -> VecMor {
        VecMor::new(Mat::twist(*x, *y))
    }
    fn braiding_inv(&self, x: &Dim, y: &Dim) -> VecMor {
        VecMor::new(Mat::twist(*y, *x))
    }
}

impl HomSpaces for FinVect {
    fn hom(&self, x: &Dim, y: &Dim) -> HomSpace<VecMor> {
        HomSpace::Linear(
            elementary_basis(*y, *x)
                .into_iter()
                .map(VecMor::new)
                .collect(),
        )
    }

    fn mor_coords(&self, f: &VecMor) -> Option<Vec<Rat>> {
        Some(f.matrix.flatten())
    }

    fn mor_from_coords(&self, x: &Dim, y: &Dim, coords: &[Rat]) -> Option<VecMor> {
        if coords.len() != x * y {
            return None;
        }
        Some(VecMor::new(Mat::from_data(*y, *x, coords.to_owned())))
    }
}

impl ClosedMonoidal for FinVect {
    fn internal_hom(&self, x: &Dim, y: &Dim) -> Dim {
        x * y
    }

    /// Counit `[X, Y] ⊗ X → Y`. The basis vector of `[X, Y]` with index
    /// `a·dim X + b` is the elementary matrix `E_ab`, and evaluation sends
    /// `E_ab ⊗ e_c ↦ δ_bc e_a`.
    fn eval(&self, x: &Dim, y: &Dim) -> VecMor {
        let (x, y) = (*x, *y);
        let mut m = Mat::zero(y, x * y * x);
        for a in 0..y {
            for b in 0..x {
                m.set(a, (a * x + b) * x + b, one());
            }
        }
        VecMor::new(m)
    }
}

/// The canonical pre-rigid structure: `X*` has the same dimension, the
/// evaluation is the standard pairing, and the dagger is a closed-form
/// reshape of the pairing matrix (cross-checked against the generic linear
/// solver in the tests).
pub struct VectPreduals;

impl VectPreduals {
    pub fn pairing(x: Dim) -> VecMor {
        let mut m = Mat::zero(1, x * x);
        for a in 0..x {
            m.set(0, a * x + a, one());
        }
        VecMor::new(m)
    }

    /// `t : T ⊗ X → 𝕀` as a `1 × (T·X)` matrix reshapes to the unique
    /// `t† : T → X*` with `t†[b, a] = t[0, a·X + b]`.
    pub fn reshape_dagger(t: &Mat, t_dim: Dim, x_dim: Dim) -> Mat {
        assert_eq!((t.rows(), t.cols()), (1, t_dim * x_dim));
        Mat::from_fn(x_dim, t_dim, |b, a| t.at(0, a * x_dim + b).clone())
    }
}

impl crate::engine::PreRigid<FinVect> for VectPreduals {
    fn predual(
        &self,
        _cat: &FinVect,
        x: &Dim,
    ) -> Result<crate::engine::PreDualData<FinVect>, crate::engine::EngineError> {
        Ok(crate::engine::PreDualData {
            object: *x,
            evaluation: Self::pairing(*x),
        })
    }

    fn dagger(
        &self,
        _cat: &FinVect,
        t_source: &Dim,
        x: &Dim,
        t: &VecMor,
    ) -> Result<VecMor, crate::engine::EngineError> {
        if t.matrix.rows() != 1 || t.matrix.cols() != t_source * x {
            return Err(crate::engine::EngineError::NotPreDual(format!(
                "pairing shape 1x{} expected, found {}x{}",
                t_source * x,
                t.matrix.rows(),
                t.matrix.cols()
            )));
        }
        Ok(VecMor::new(Self::reshape_dagger(&t.matrix, *t_source, *x)))
    }
}
