//! Complete sets of primitive orthogonal idempotents.
//!
//! The semisimple quotient `S = A/rad A` is split recursively: inside a corner
//! `eSe` of dimension > 1, an element `c` with a root `λ` of its minimal
//! polynomial gives the zero divisor `y = c - λe`, and the Fitting decomposition
//! of right multiplication by `y` on `eSe` cuts `e` into two orthogonal
//! idempotents. The resulting idempotents are lifted to `A` one at a time by the
//! Newton iteration `x ← 3x² - 2x³` inside the complementary corner.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Subspace};

use super::structure::{Algebra, OppositeLink, Vector};

/// Random candidates tried per corner before declaring the quotient non-split.
const RANDOM_CANDIDATES: usize = 64;

/// Primitive idempotents grouped by the isomorphism class of `Ae`.
#[derive(Clone, Debug, PartialEq)]
pub struct Skeleton<F: Field> {
    pub idempotents: Vec<Vector<F>>,
    /// Class index of each idempotent; classes are numbered by first occurrence.
    pub class_of: Vec<usize>,
    /// Index into `idempotents` of the first member of each class.
    pub representatives: Vec<usize>,
}

impl<F: Field> Skeleton<F> {
    /// Pairwise non-isomorphic idempotents, one class each.
    pub fn basic(idempotents: Vec<Vector<F>>) -> Self {
        let n = idempotents.len();
        Skeleton { idempotents, class_of: (0..n).collect(), representatives: (0..n).collect() }
    }

    pub fn num_classes(&self) -> usize {
        self.representatives.len()
    }

    pub fn representative(&self, class: usize) -> &Vector<F> {
        &self.idempotents[self.representatives[class]]
    }

    pub fn multiplicity(&self, class: usize) -> usize {
        self.class_of.iter().filter(|&&c| c == class).count()
    }
}

impl<F: Field> Algebra<F> {
    pub fn skeleton(&self) -> Result<Arc<Skeleton<F>>> {
        self.0
            .cache
            .skeleton
            .get_or_init(|| {
                // an opposite algebra shares the idempotents of its parent, keeping class indices aligned
                if let Some(OppositeLink::Back(w)) = self.0.cache.opposite.get() {
                    if let Some(parent) = w.upgrade() {
                        return Algebra(parent).skeleton();
                    }
                }
                compute_skeleton(self).map(Arc::new)
            })
            .clone()
    }

    pub fn primitive_idempotents(&self) -> Result<Vec<Vector<F>>> {
        Ok(self.skeleton()?.idempotents.clone())
    }

    /// Number of isomorphism classes of simple modules.
    pub fn num_simples(&self) -> Result<usize> {
        Ok(self.skeleton()?.num_classes())
    }

    /// Whether `Ae` is indecomposable, i.e. `eAe` is local.
    pub fn is_primitive_idempotent(&self, e: &[F::Elem]) -> bool {
        if !self.is_idempotent(e) || self.is_zero_element(e) {
            return false;
        }
        match self.corner(e) {
            Ok((c, _)) => c.dim() - c.radical().dim() == 1,
            Err(_) => false,
        }
    }
}

fn compute_skeleton<F: Field>(a: &Algebra<F>) -> Result<Skeleton<F>> {
    let rad = a.try_radical()?;
    let (s, keep) = a.quotient(&rad)?;
    let lift = |x: &Vector<F>| -> Vector<F> {
        let mut v = a.zero();
        for (c, &i) in x.iter().zip(&keep) {
            v[i] = c.clone();
        }
        v
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let eps = split(&s, &s.one(), &mut rng)?;

    // sequential Newton lift inside the complement of the lifted ones
    let mut lifted: Vec<Vector<F>> = Vec::with_capacity(eps.len());
    let mut sum = a.zero();
    for (k, e) in eps.iter().enumerate() {
        let comp = a.sub(a.unit(), &sum);
        let x = if k + 1 == eps.len() {
            comp
        } else {
            let start = a.mul(&a.mul(&comp, &lift(e)), &comp);
            newton_lift(a, start)?
        };
        if a.is_zero_element(&x) {
            return Err(Error::IdempotentLiftFailure("lifted idempotent vanished".into()));
        }
        sum = a.add(&sum, &x);
        lifted.push(x);
    }

    // e_i ~ e_j iff e_i S e_j != 0
    let n = eps.len();
    let mut class_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(i);
        class_of[i] = c;
        let li = s.left_mat(&eps[i]);
        for j in i + 1..n {
            if class_of[j] == usize::MAX && !li.mul(&s.right_mat(&eps[j])).is_zero() {
                class_of[j] = c;
            }
        }
    }
    Ok(Skeleton { idempotents: lifted, class_of, representatives })
}

fn newton_lift<F: Field>(a: &Algebra<F>, mut x: Vector<F>) -> Result<Vector<F>> {
    let f = a.field();
    let three = f.from_i64(3);
    let two = f.from_i64(2);
    for _ in 0..64 {
        let x2 = a.mul(&x, &x);
        if x2 == x {
            return Ok(x);
        }
        let x3 = a.mul(&x2, &x);
        x = a.sub(&a.scale(&three, &x2), &a.scale(&two, &x3));
    }
    Err(Error::IdempotentLiftFailure("Newton iteration did not stabilize".into()))
}

/// Primitive orthogonal idempotents of the semisimple algebra `s` summing to `e`.
fn split<F: Field>(s: &Algebra<F>, e: &Vector<F>, rng: &mut ChaCha8Rng) -> Result<Vec<Vector<F>>> {
    let corner = corner_space(s, e);
    if corner.dim() <= 1 {
        return Ok(vec![e.clone()]);
    }
    let part = find_splitting(s, e, &corner, rng)?.ok_or(Error::SplitnessRequired)?;
    let rest = s.sub(e, &part);
    let mut out = split(s, &part, rng)?;
    out.extend(split(s, &rest, rng)?);
    Ok(out)
}

fn corner_space<F: Field>(s: &Algebra<F>, e: &Vector<F>) -> Subspace<F> {
    let m = s.left_mat(e).mul(&s.right_mat(e));
    Subspace::column_space(&m)
}

/// Minimal polynomial of `c` in the corner with unit `e`, ascending and monic.
pub(crate) fn minimal_polynomial<F: Field>(s: &Algebra<F>, e: &Vector<F>, c: &Vector<F>) -> Vec<F::Elem> {
    let f = s.field();
    let mut powers = vec![e.clone()];
    let mut span = Subspace::zero(f, s.dim());
    span.insert(e);
    loop {
        let next = s.mul(powers.last().expect("nonempty"), c);
        if span.contains(&next) {
            let m = Mat::from_columns(f, s.dim(), &powers);
            let x = m
                .solve(&Mat::column_vector(f, &next))
                .expect("shapes agree")
                .expect("member of the span");
            let mut poly: Vec<F::Elem> = x.column(0).iter().map(|v| f.neg(v)).collect();
            poly.push(f.one());
            return poly;
        }
        span.insert(&next);
        powers.push(next);
    }
}

fn find_splitting<F: Field>(
    s: &Algebra<F>,
    e: &Vector<F>,
    corner: &Subspace<F>,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Vector<F>>> {
    let f = s.field();
    let basis = corner.basis().to_vec();
    let mut candidates: Vec<Vector<F>> = basis.clone();
    for x in &basis {
        for y in &basis {
            candidates.push(s.mul(x, y));
        }
    }
    let randoms = (0..RANDOM_CANDIDATES).map(|_| {
        let mut v = s.zero();
        for b in &basis {
            let c = f.sample(rng, 3);
            for (x, y) in v.iter_mut().zip(b) {
                f.add_mul_assign(x, &c, y);
            }
        }
        v
    });
    let all: Vec<Vector<F>> = candidates.into_iter().chain(randoms).collect();
    for c in all {
        if s.is_zero_element(&c) {
            continue;
        }
        let mu = minimal_polynomial(s, e, &c);
        if mu.len() <= 2 {
            continue;
        }
        for lambda in f.roots(&mu) {
            let y = s.sub(&c, &s.scale(&lambda, e));
            if let Some(part) = fitting_part(s, e, corner, &y) {
                return Ok(Some(part));
            }
        }
    }
    Ok(None)
}

/// Image component of `e` in the Fitting decomposition of `x ↦ xy` on the corner.
fn fitting_part<F: Field>(s: &Algebra<F>, e: &Vector<F>, corner: &Subspace<F>, y: &Vector<F>) -> Option<Vector<F>> {
    let f = s.field();
    let m = corner.dim();
    let cols: Vec<Vector<F>> = corner
        .basis()
        .iter()
        .map(|b| corner.coordinates(&s.mul(b, y)).expect("corner is a right ideal of itself"))
        .collect();
    let r = Mat::from_columns(f, m, &cols).pow(m as u64);
    let image = r.rref();
    if image.rank == 0 || image.rank == m {
        return None;
    }
    let im_basis = Subspace::column_space(&r).basis_matrix();
    let ker_basis = r.kernel_basis();
    let both = im_basis.hstack(&ker_basis);
    let ec = corner.coordinates(e).expect("e lies in its corner");
    let z = both.solve(&Mat::column_vector(f, &ec)).ok()??;
    let zi: Vec<F::Elem> = (0..im_basis.cols()).map(|k| z[(k, 0)].clone()).collect();
    let coords = im_basis.mul_vec(&zi);
    let mut part = s.zero();
    for (c, b) in coords.iter().zip(corner.basis()) {
        for (x, v) in part.iter_mut().zip(b) {
            f.add_mul_assign(x, c, v);
        }
    }
    (!s.is_zero_element(&part) && part != *e).then_some(part)
}
