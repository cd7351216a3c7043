//! Finite-dimensional orthogonal representations of the reals.
//!
//! A representation is a list of fixed directions together with 2x2 rotation
//! blocks, one per parameter `lambda > 1`. The analytic generator `A` of the
//! one-parameter group has eigenvalue 1 on fixed directions and the pair
//! `{1/lambda, lambda}` on each block. All downstream machinery stores
//! vectors in the `A`-eigenbasis, where `A`, the group unitaries and the
//! modular data act diagonally; the real coordinate basis is kept as the
//! user-facing entry point and as an independent route for closed-form
//! checks.
//!
//! Conventions: inner products are linear in the second argument; the
//! deformed inner product is `<x, y>_U = <2/(1 + A^{-1}) x, y>` in the
//! complexified coordinates, and the eigenbasis constructed here is
//! orthonormal for it.

use nalgebra::{DMatrix, DVector, Matrix2, Vector2};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RepnError {
    #[error("block parameter lambda = {value} must exceed 1 strictly")]
    InvalidLambda { value: f64 },

    #[error("representation must have positive dimension")]
    ZeroDimension,

    #[error("coordinate array has length {got}, representation has dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("block index {index} out of range (representation has {blocks} blocks)")]
    BlockOutOfRange { index: usize, blocks: usize },

    #[error("fixed-direction index {index} out of range ({fixed} fixed directions)")]
    FixedOutOfRange { index: usize, fixed: usize },
}

/// Parameters of a representation: a count of fixed directions and one
/// `lambda > 1` per rotation block.
#[derive(Debug, Clone, PartialEq)]
pub struct RepresentationSpec {
    n_fixed: usize,
    lambdas: Vec<f64>,
}

impl RepresentationSpec {
    pub fn new(n_fixed: usize, lambdas: Vec<f64>) -> Result<Self, RepnError> {
        for &l in &lambdas {
            if !(l > 1.0) || !l.is_finite() {
                return Err(RepnError::InvalidLambda { value: l });
            }
        }
        if n_fixed + 2 * lambdas.len() == 0 {
            return Err(RepnError::ZeroDimension);
        }
        Ok(RepresentationSpec { n_fixed, lambdas })
    }

    pub fn n_fixed(&self) -> usize {
        self.n_fixed
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// Complex dimension, equal to the real dimension `N1 + 2 N2`.
    pub fn dim(&self) -> usize {
        self.n_fixed + 2 * self.lambdas.len()
    }
}

/// Where an eigenbasis index sits: fixed direction, or the lower/upper
/// `A`-eigenvector of a block (eigenvalues `1/lambda` and `lambda`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisSite {
    Fixed(usize),
    BlockLower(usize),
    BlockUpper(usize),
}

/// A vector of the representation space, stored in the eigenbasis.
///
/// The `real` tag records membership in the real subspace; conversions to
/// real coordinates of a tagged vector carry imaginary dust below 1e-12.
#[derive(Debug, Clone, PartialEq)]
pub struct HVector {
    pub(crate) coords: DVector<Complex64>,
    real: bool,
}

impl HVector {
    pub fn coords(&self) -> &DVector<Complex64> {
        &self.coords
    }

    pub fn is_real(&self) -> bool {
        self.real
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// A built representation: eigenvalue table, basis site map, and the
/// real-coordinate <-> eigenbasis conversions.
#[derive(Debug, Clone)]
pub struct Representation {
    spec: RepresentationSpec,
    /// `A`-eigenvalue per eigenbasis index.
    a_eigs: Vec<f64>,
    /// Partner index under the block involution (fixed indices are their own
    /// partner); this is the letter action of the modular conjugation.
    partner: Vec<usize>,
    sites: Vec<BasisSite>,
}

/// Real-tag tolerance for imaginary dust after coordinate conversion.
const REAL_TAG_TOL: f64 = 1e-12;

impl Representation {
    pub fn build(spec: RepresentationSpec) -> Result<Self, RepnError> {
        let d = spec.dim();
        let mut a_eigs = Vec::with_capacity(d);
        let mut partner = Vec::with_capacity(d);
        let mut sites = Vec::with_capacity(d);
        for j in 0..spec.n_fixed {
            a_eigs.push(1.0);
            partner.push(j);
            sites.push(BasisSite::Fixed(j));
        }
        for (k, &l) in spec.lambdas.iter().enumerate() {
            let lo = spec.n_fixed + 2 * k;
            a_eigs.push(1.0 / l);
            a_eigs.push(l);
            partner.push(lo + 1);
            partner.push(lo);
            sites.push(BasisSite::BlockLower(k));
            sites.push(BasisSite::BlockUpper(k));
        }
        Ok(Representation {
            spec,
            a_eigs,
            partner,
            sites,
        })
    }

    pub fn spec(&self) -> &RepresentationSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.a_eigs.len()
    }

    pub fn n_fixed(&self) -> usize {
        self.spec.n_fixed
    }

    pub fn n_blocks(&self) -> usize {
        self.spec.lambdas.len()
    }

    /// `A`-eigenvalue attached to an eigenbasis index.
    pub fn a_eigenvalue(&self, index: usize) -> f64 {
        self.a_eigs[index]
    }

    pub fn a_eigenvalues(&self) -> &[f64] {
        &self.a_eigs
    }

    /// Block involution on eigenbasis letters (lower <-> upper, fixed
    /// directions untouched).
    pub fn partner(&self, index: usize) -> usize {
        self.partner[index]
    }

    pub fn site(&self, index: usize) -> BasisSite {
        self.sites[index]
    }

    fn check_dim(&self, got: usize) -> Result<(), RepnError> {
        if got != self.dim() {
            return Err(RepnError::DimensionMismatch {
                expected: self.dim(),
                got,
            });
        }
        Ok(())
    }

    // --- coordinate conversions -------------------------------------------

    /// Eigenbasis coordinates of a vector given in real coordinates
    /// (fixed directions first, then the two real axes of each block).
    pub fn real_to_eigen(&self, real: &[Complex64]) -> Result<DVector<Complex64>, RepnError> {
        self.check_dim(real.len())?;
        let nf = self.spec.n_fixed;
        let mut out = DVector::zeros(self.dim());
        for j in 0..nf {
            out[j] = real[j];
        }
        for (k, &l) in self.spec.lambdas.iter().enumerate() {
            let a = real[nf + 2 * k];
            let b = real[nf + 2 * k + 1];
            let s = (1.0 + l).sqrt();
            out[nf + 2 * k] = (a - Complex64::i() * b) / s;
            out[nf + 2 * k + 1] = l.sqrt() * (a + Complex64::i() * b) / s;
        }
        Ok(out)
    }

    /// Real coordinates of an eigenbasis coordinate vector.
    pub fn eigen_to_real(&self, eigen: &DVector<Complex64>) -> Result<DVector<Complex64>, RepnError> {
        self.check_dim(eigen.len())?;
        let nf = self.spec.n_fixed;
        let mut out = DVector::zeros(self.dim());
        for j in 0..nf {
            out[j] = eigen[j];
        }
        for (k, &l) in self.spec.lambdas.iter().enumerate() {
            let u = eigen[nf + 2 * k];
            let v = eigen[nf + 2 * k + 1];
            let cu = (l + 1.0).sqrt() / 2.0;
            let cv = (1.0 / l + 1.0).sqrt() / 2.0;
            out[nf + 2 * k] = cu * u + cv * v;
            out[nf + 2 * k + 1] = Complex64::i() * (cu * u - cv * v);
        }
        Ok(out)
    }

    /// Builds a vector from real coordinate values; the result carries the
    /// real tag by construction.
    pub fn vector_from_real(&self, real: &[f64]) -> Result<HVector, RepnError> {
        let complex: Vec<Complex64> = real.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        let coords = self.real_to_eigen(&complex)?;
        Ok(HVector { coords, real: true })
    }

    /// Wraps eigenbasis coordinates, detecting the real tag numerically.
    pub fn vector_from_eigen(&self, coords: DVector<Complex64>) -> Result<HVector, RepnError> {
        self.check_dim(coords.len())?;
        let real_coords = self.eigen_to_real(&coords)?;
        let scale = real_coords
            .iter()
            .fold(1.0f64, |m, c| m.max(c.re.abs()).max(c.im.abs()));
        let dust = real_coords.iter().fold(0.0f64, |m, c| m.max(c.im.abs()));
        Ok(HVector {
            coords,
            real: dust <= REAL_TAG_TOL * scale,
        })
    }

    /// Real coordinates of a vector.
    pub fn to_real_coords(&self, x: &HVector) -> DVector<Complex64> {
        self.eigen_to_real(&x.coords).expect("vector dim checked at construction")
    }

    // --- distinguished vectors --------------------------------------------

    /// The j-th fixed unit direction.
    pub fn fixed_axis(&self, j: usize) -> Result<HVector, RepnError> {
        if j >= self.spec.n_fixed {
            return Err(RepnError::FixedOutOfRange {
                index: j,
                fixed: self.spec.n_fixed,
            });
        }
        let mut real = vec![0.0; self.dim()];
        real[j] = 1.0;
        self.vector_from_real(&real)
    }

    /// One of the two real unit axes spanning rotation block `k`
    /// (`axis` is 0 or 1).
    pub fn block_axis(&self, k: usize, axis: usize) -> Result<HVector, RepnError> {
        if k >= self.n_blocks() {
            return Err(RepnError::BlockOutOfRange {
                index: k,
                blocks: self.n_blocks(),
            });
        }
        assert!(axis < 2, "a rotation block has two real axes");
        let mut real = vec![0.0; self.dim()];
        real[self.spec.n_fixed + 2 * k + axis] = 1.0;
        self.vector_from_real(&real)
    }

    // --- inner products -----------------------------------------------------

    /// Deformed inner product, linear in the second argument. The eigenbasis
    /// is orthonormal for it, so this is the plain sesquilinear dot.
    pub fn deformed_inner(&self, x: &HVector, y: &HVector) -> Result<Complex64, RepnError> {
        self.check_dim(x.dim())?;
        self.check_dim(y.dim())?;
        Ok(x.coords.dotc(&y.coords))
    }

    pub fn u_norm(&self, x: &HVector) -> f64 {
        x.coords.norm()
    }

    /// Same inner product computed the slow way, in real coordinates,
    /// through the block matrices of `2A/(1+A)`. Used as an independent
    /// cross-check of the eigenbasis construction.
    pub fn deformed_inner_via_real(
        &self,
        x_real: &DVector<Complex64>,
        y_real: &DVector<Complex64>,
    ) -> Result<Complex64, RepnError> {
        self.check_dim(x_real.len())?;
        self.check_dim(y_real.len())?;
        let weighted = self.apply_real_block_function(x_real, |a| 2.0 * a / (1.0 + a))?;
        // <w, y>_{H_C}, linear in the second argument.
        Ok(weighted.dotc(y_real))
    }

    /// The 2x2 real-coordinate matrix of `f(A)` restricted to block `k`,
    /// computed by diagonalizing with the unitary sending the real axes to
    /// the `A`-eigenvectors.
    pub fn real_block_function(
        &self,
        k: usize,
        f: impl Fn(f64) -> f64,
    ) -> Result<Matrix2<Complex64>, RepnError> {
        if k >= self.n_blocks() {
            return Err(RepnError::BlockOutOfRange {
                index: k,
                blocks: self.n_blocks(),
            });
        }
        let l = self.spec.lambdas[k];
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let w = Matrix2::new(s, s, Complex64::i() * s, -Complex64::i() * s);
        let diag = Matrix2::new(
            Complex64::new(f(1.0 / l), 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(f(l), 0.0),
        );
        Ok(w * diag * w.adjoint())
    }

    /// Applies `f(A)` to a real-coordinate vector blockwise; fixed
    /// directions are scaled by `f(1)`.
    pub fn apply_real_block_function(
        &self,
        real: &DVector<Complex64>,
        f: impl Fn(f64) -> f64 + Copy,
    ) -> Result<DVector<Complex64>, RepnError> {
        self.check_dim(real.len())?;
        let nf = self.spec.n_fixed;
        let mut out = DVector::zeros(self.dim());
        for j in 0..nf {
            out[j] = f(1.0) * real[j];
        }
        for k in 0..self.n_blocks() {
            let m = self.real_block_function(k, f)?;
            let v = Vector2::new(real[nf + 2 * k], real[nf + 2 * k + 1]);
            let w = m * v;
            out[nf + 2 * k] = w[0];
            out[nf + 2 * k + 1] = w[1];
        }
        Ok(out)
    }

    /// The full real-coordinate matrix of the analytic generator `A`.
    pub fn generator_real_matrix(&self) -> DMatrix<Complex64> {
        let d = self.dim();
        let nf = self.spec.n_fixed;
        let mut m = DMatrix::zeros(d, d);
        for j in 0..nf {
            m[(j, j)] = Complex64::new(1.0, 0.0);
        }
        for k in 0..self.n_blocks() {
            let b = self
                .real_block_function(k, |a| a)
                .expect("block index in range");
            for r in 0..2 {
                for c in 0..2 {
                    m[(nf + 2 * k + r, nf + 2 * k + c)] = b[(r, c)];
                }
            }
        }
        m
    }

    // --- the one-parameter group ------------------------------------------

    /// Diagonal eigenbasis phases of the group unitary at time `t`:
    /// `a^{it}` on an eigenvector of `A` with eigenvalue `a`.
    pub fn unitary_phases(&self, t: f64) -> DVector<Complex64> {
        DVector::from_iterator(
            self.dim(),
            self.a_eigs
                .iter()
                .map(|&a| Complex64::from_polar(1.0, t * a.ln())),
        )
    }

    /// The group unitary at time `t` as a matrix in the eigenbasis
    /// (diagonal by construction).
    pub fn unitary_at(&self, t: f64) -> DMatrix<Complex64> {
        DMatrix::from_diagonal(&self.unitary_phases(t))
    }

    /// The group unitary at time `t` in real coordinates; blockwise this is
    /// the rotation by angle `t log lambda_k`.
    pub fn unitary_real_matrix(&self, t: f64) -> DMatrix<Complex64> {
        let d = self.dim();
        let nf = self.spec.n_fixed;
        let mut m = DMatrix::zeros(d, d);
        for j in 0..nf {
            m[(j, j)] = Complex64::new(1.0, 0.0);
        }
        for (k, &l) in self.spec.lambdas.iter().enumerate() {
            let th = t * l.ln();
            let (c, s) = (th.cos(), th.sin());
            m[(nf + 2 * k, nf + 2 * k)] = Complex64::new(c, 0.0);
            m[(nf + 2 * k, nf + 2 * k + 1)] = Complex64::new(-s, 0.0);
            m[(nf + 2 * k + 1, nf + 2 * k)] = Complex64::new(s, 0.0);
            m[(nf + 2 * k + 1, nf + 2 * k + 1)] = Complex64::new(c, 0.0);
        }
        m
    }

    /// Applies the group unitary to a vector. Real vectors are rotated in
    /// real coordinates so the real tag survives exactly.
    pub fn apply_unitary(&self, t: f64, x: &HVector) -> HVector {
        if x.real {
            let real = self.to_real_coords(x);
            let rotated = self.unitary_real_matrix(t) * real;
            let re: Vec<f64> = rotated.iter().map(|c| c.re).collect();
            self.vector_from_real(&re).expect("dims preserved")
        } else {
            let phases = self.unitary_phases(t);
            let coords = DVector::from_iterator(
                self.dim(),
                x.coords.iter().zip(phases.iter()).map(|(c, p)| c * p),
            );
            HVector {
                coords,
                real: false,
            }
        }
    }

    /// Orthogonal projection onto the eigenvalue-1 subspace of `A`
    /// (the fixed directions).
    pub fn fixed_projection(&self, x: &HVector) -> HVector {
        let mut coords = x.coords.clone();
        for i in self.spec.n_fixed..self.dim() {
            coords[i] = Complex64::new(0.0, 0.0);
        }
        HVector {
            coords,
            real: x.real,
        }
    }
}
