//! Hom spaces between modules.
//!
//! `Hom_A(M, N)` is solved on the projective presentation of `M`: a map is fixed by
//! the images `w_s ∈ e_{c_s} N` of the top generators, subject to killing the
//! kernel of the cover.

use crate::algebra::Vector;
use crate::error::Result;
use crate::linalg::{Field, Mat, Subspace};

use super::module::Module;

/// How to read coordinates of a hom off its matrix.
#[derive(Clone, Debug)]
enum Coords<F: Field> {
    /// Coordinates of `F v_s` inside `e_{c_s} N`, concatenated, then read at `free`.
    Probe { probes: Vec<(Vector<F>, Subspace<F>)>, free: Vec<usize> },
    /// Coordinates in an ambient hom space, then read at `free`.
    Select { inner: Box<HomSpace<F>>, free: Vec<usize> },
    /// Coordinates in the span of the flattened basis.
    Flat(Subspace<F>),
}

/// A basis of a hom space (matrices are target × source) with a coordinate map.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    field: F,
    source_dim: usize,
    target_dim: usize,
    basis: Vec<Mat<F>>,
    coords: Coords<F>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat<F>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Mat<F>> {
        self.basis
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// `Σ c_i F_i`.
    pub fn combine(&self, coeffs: &[F::Elem]) -> Mat<F> {
        Mat::combination(&self.field, self.target_dim, self.source_dim, coeffs, &self.basis)
    }

    /// Coordinates of a map assumed to lie in the space.
    pub fn coordinates(&self, f: &Mat<F>) -> Vector<F> {
        match &self.coords {
            Coords::Probe { probes, free } => {
                let mut u = Vec::new();
                for (v, space) in probes {
                    let w = f.mul_vec(v);
                    u.extend(space.coordinates(&w).unwrap_or_else(|| vec![self.field.zero(); space.dim()]));
                }
                free.iter().map(|&i| u[i].clone()).collect()
            }
            Coords::Select { inner, free } => {
                let u = inner.coordinates(f);
                free.iter().map(|&i| u[i].clone()).collect()
            }
            Coords::Flat(space) => space.coordinates(f.data()).unwrap_or_else(|| vec![self.field.zero(); space.dim()]),
        }
    }

    /// Whether `f` lies in the space.
    pub fn contains(&self, f: &Mat<F>) -> bool {
        f.rows() == self.target_dim && f.cols() == self.source_dim && self.combine(&self.coordinates(f)) == *f
    }

    /// The subspace cut out by homogeneous linear conditions on the basis.
    ///
    /// `condition(F)` returns a matrix that must vanish; it must be linear in `F`.
    pub fn restrict<C>(&self, condition: C) -> HomSpace<F>
    where
        C: Fn(&Mat<F>) -> Mat<F> + Sync + Send,
    {
        let f = &self.field;
        if self.basis.is_empty() {
            return self.sub_from_kernel(&Mat::zeros(f, 0, 0), Vec::new());
        }
        let images: Vec<Vector<F>> = crate::parallel::map(&self.basis, |b| condition(b).data().to_vec());
        let rows = images[0].len();
        let system = Mat::from_columns(f, rows, &images);
        let rref = system.rref();
        let kernel = crate::linalg::mat::kernel_from_rref(f, &rref.reduced, &rref.pivots, self.basis.len());
        let free = (0..self.basis.len()).filter(|i| !rref.pivots.contains(i)).collect();
        self.sub_from_kernel(&kernel, free)
    }

    fn sub_from_kernel(&self, kernel: &Mat<F>, free: Vec<usize>) -> HomSpace<F> {
        let basis = (0..kernel.cols()).map(|c| self.combine(&kernel.column(c))).collect();
        HomSpace {
            field: self.field.clone(),
            source_dim: self.source_dim,
            target_dim: self.target_dim,
            basis,
            coords: Coords::Select { inner: Box::new(self.clone()), free },
        }
    }

    /// Hom space given only by a list of independent matrices.
    pub fn from_basis(field: &F, target_dim: usize, source_dim: usize, mats: Vec<Mat<F>>) -> Self {
        let flat: Vec<Vector<F>> = mats.iter().map(|m| m.data().to_vec()).collect();
        let space = Subspace::span(field, target_dim * source_dim, flat.iter());
        let basis = space
            .basis()
            .iter()
            .map(|v| Mat::from_vec(field, target_dim, source_dim, v.clone()).expect("shape"))
            .collect();
        HomSpace { field: field.clone(), source_dim, target_dim, basis, coords: Coords::Flat(space) }
    }
}

impl<F: Field> Module<F> {
    /// `Hom_A(self, target)`.
    pub fn hom_space(&self, target: &Module<F>) -> Result<HomSpace<F>> {
        self.algebra().ensure_same(target.algebra())?;
        let f = self.field();
        let empty = |probes| HomSpace {
            field: f.clone(),
            source_dim: self.dim(),
            target_dim: target.dim(),
            basis: Vec::new(),
            coords: Coords::Probe { probes, free: Vec::new() },
        };
        if self.is_zero() || target.is_zero() {
            return Ok(empty(Vec::new()));
        }
        let top = self.top_data()?;
        let pd = self.algebra().projective_data()?;
        let n = target.dim();

        // X_{s,t} = ρ_N(x_t) B_s for x_t running over the basis of A e_{c_s}
        let mut spaces = Vec::with_capacity(top.generators.len());
        let mut blocks: Vec<Vec<Mat<F>>> = Vec::with_capacity(top.generators.len());
        let mut widths = Vec::new();
        for (c, _) in &top.generators {
            let space = target.idempotent_part(&pd.idempotents[*c]);
            let b = space.basis_matrix();
            widths.push(space.dim());
            blocks.push(pd.spaces[*c].basis().iter().map(|x| target.act(x).mul(&b)).collect());
            spaces.push(space);
        }
        let unknowns: usize = widths.iter().sum();
        let probes: Vec<(Vector<F>, Subspace<F>)> =
            top.generators.iter().zip(&spaces).map(|((_, v), s)| (v.clone(), s.clone())).collect();
        if unknowns == 0 {
            return Ok(empty(probes));
        }
        let starts: Vec<usize> = widths
            .iter()
            .scan(0, |acc, w| {
                let s = *acc;
                *acc += w;
                Some(s)
            })
            .collect();

        // one block row per kernel vector: Σ_{s,t} κ_{s,t} X_{s,t} u_s = 0
        let kernel = top.kernel.basis().to_vec();
        let rows: Vec<Mat<F>> = crate::parallel::map(&kernel, |kappa| {
            let mut row = Mat::zeros(f, n, unknowns);
            for (s, block) in blocks.iter().enumerate() {
                let off = top.offsets[s];
                for (t, x) in block.iter().enumerate() {
                    let k = &kappa[off + t];
                    if f.is_zero(k) {
                        continue;
                    }
                    for i in 0..n {
                        for j in 0..widths[s] {
                            let mut acc = row[(i, starts[s] + j)].clone();
                            f.add_mul_assign(&mut acc, k, &x[(i, j)]);
                            row.set(i, starts[s] + j, acc);
                        }
                    }
                }
            }
            row
        });
        let system = Mat::vstack_all(f, unknowns, &rows);
        let rref = system.rref();
        let kernel_u = crate::linalg::mat::kernel_from_rref(f, &rref.reduced, &rref.pivots, unknowns);
        let free: Vec<usize> = (0..unknowns).filter(|i| !rref.pivots.contains(i)).collect();

        // F = Φ(u)[:, pivots] · epi[:, pivots]⁻¹
        let pivot_cols: Vec<(usize, usize)> = top
            .pivots
            .iter()
            .map(|&p| {
                let s = top.offsets.partition_point(|&o| o <= p) - 1;
                (s, p - top.offsets[s])
            })
            .collect();
        let basis = crate::parallel::map_range(kernel_u.cols(), |col| {
            let u = kernel_u.column(col);
            let cols: Vec<Vector<F>> = pivot_cols
                .iter()
                .map(|&(s, t)| blocks[s][t].mul_vec(&u[starts[s]..starts[s] + widths[s]]))
                .collect();
            Mat::from_columns(f, n, &cols).mul(&top.pivot_inverse)
        });
        Ok(HomSpace {
            field: f.clone(),
            source_dim: self.dim(),
            target_dim: n,
            basis,
            coords: Coords::Probe { probes, free },
        })
    }

    pub fn hom_dim(&self, target: &Module<F>) -> Result<usize> {
        Ok(self.hom_space(target)?.dim())
    }
}
