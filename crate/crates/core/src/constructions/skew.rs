use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::frobenius::Extension;
use crate::linalg::{Field, Mat};

/// A finite group (multiplication table on `0..order`) acting on an algebra by automorphisms.
#[derive(Clone, Debug)]
pub struct GroupAction<F: Field> {
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    /// `action[g]` is the matrix of `a ↦ g(a)`.
    pub action: Vec<Mat<F>>,
}

/// Serializable form of a group action: the table and the action matrices as integer rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub table: Vec<Vec<usize>>,
    pub action: Vec<Vec<Vec<i64>>>,
}

impl<F: Field> GroupAction<F> {
    pub fn new(a: &Algebra<F>, table: Vec<Vec<usize>>, action: Vec<Mat<F>>) -> Result<Self> {
        let n = table.len();
        let bad = |s: &str| Err(Error::InvalidStructure(format!("group action: {s}")));
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("multiplication table must be square with entries in range");
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)) else {
            return bad("no identity element");
        };
        for g in 0..n {
            if !(0..n).any(|h| table[g][h] == identity) {
                return bad("an element has no inverse");
            }
            for h in 0..n {
                for k in 0..n {
                    if table[table[g][h]][k] != table[g][table[h][k]] {
                        return bad("table is not associative");
                    }
                }
            }
        }
        if action.len() != n {
            return bad("one automorphism per group element is required");
        }
        for (g, m) in action.iter().enumerate() {
            if !a.is_homomorphism_to(a, m) || !m.is_invertible() {
                return Err(Error::InvalidStructure(format!("group action: element {g} is not an automorphism")));
            }
        }
        for g in 0..n {
            for h in 0..n {
                if action[g].mul(&action[h]) != action[table[g][h]] {
                    return bad("action is not a homomorphism");
                }
            }
        }
        Ok(GroupAction { table, identity, action })
    }

    /// `Z/n` with generator acting by `generator`.
    pub fn cyclic(a: &Algebra<F>, n: usize, generator: &Mat<F>) -> Result<Self> {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let mut action = vec![Mat::identity(a.field(), a.dim())];
        for i in 1..n {
            action.push(generator.mul(&action[i - 1]));
        }
        Self::new(a, table, action)
    }

    /// `Z/n` acting trivially.
    pub fn trivial_cyclic(a: &Algebra<F>, n: usize) -> Result<Self> {
        Self::cyclic(a, n, &Mat::identity(a.field(), a.dim()))
    }

    pub fn from_spec(a: &Algebra<F>, spec: &GroupSpec) -> Result<Self> {
        let action = spec.action.iter().map(|rows| Mat::from_i64(a.field(), rows)).collect();
        Self::new(a, spec.table.clone(), action)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }
}

/// `A # G` on the basis `a_i ⊗ g` (index `i · |G| + g`) with `(a ⊗ g)(b ⊗ h) = a g(b) ⊗ gh`.
pub fn skew_group_algebra<F: Field>(a: &Algebra<F>, g: &GroupAction<F>) -> Result<Algebra<F>> {
    Ok(skew_group_extension(a, g)?.big)
}

/// `A ⊆ A # G` via `a ↦ a ⊗ 1`.
pub fn skew_group_extension<F: Field>(a: &Algebra<F>, g: &GroupAction<F>) -> Result<Extension<F>> {
    let f = a.field();
    let (n, order) = (a.dim(), g.order());
    let d = n * order;
    let mut left = Vec::with_capacity(d);
    let mut labels = Vec::with_capacity(d);
    for i in 0..n {
        let ai = a.basis_vector(i);
        for x in 0..order {
            let mut l = Mat::zeros(f, d, d);
            for j in 0..n {
                let prod = a.mul(&ai, &g.action[x].column(j));
                for y in 0..order {
                    let target = g.table[x][y];
                    for (k, v) in prod.iter().enumerate() {
                        if !f.is_zero(v) {
                            l.set(k * order + target, j * order + y, v.clone());
                        }
                    }
                }
            }
            left.push(l);
            labels.push(format!("{}#g{x}", a.labels()[i]));
        }
    }
    let mut unit = vec![f.zero(); d];
    for (k, v) in a.unit().iter().enumerate() {
        unit[k * order + g.identity] = v.clone();
    }
    let big = Algebra::from_left_unchecked(f, left, unit, Some(labels), None);
    let emb = Mat::from_fn(f, d, n, |r, c| if r == c * order + g.identity { f.one() } else { f.zero() });
    Extension::new(a, &big, emb)
}

/// The skew element `a ⊗ g`.
pub fn skew_element<F: Field>(a: &Algebra<F>, g: &GroupAction<F>, x: &[F::Elem], elem: usize) -> Vector<F> {
    let order = g.order();
    let mut v = vec![a.field().zero(); a.dim() * order];
    for (k, c) in x.iter().enumerate() {
        v[k * order + elem] = c.clone();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named;
    use crate::linalg::Rationals;

    #[test]
    fn trivial_c2_on_ground_field_is_semisimple() {
        let f = Rationals;
        let k = named::ground(&f);
        let g = GroupAction::trivial_cyclic(&k, 2).unwrap();
        let kc2 = skew_group_algebra(&k, &g).unwrap();
        kc2.validate().unwrap();
        assert_eq!(kc2.radical().dim(), 0);
        assert_eq!(kc2.num_simples().unwrap(), 2);
        let half = f.from_ratio(1, 2).unwrap();
        let e = kc2.scale(&half, &kc2.add(&kc2.one(), &skew_element(&k, &g, &[f.one()], 1)));
        assert!(kc2.is_idempotent(&e));
    }

    #[test]
    fn trivial_group_gives_the_algebra() {
        let f = Rationals;
        let a = named::a2(&f);
        let g = GroupAction::trivial_cyclic(&a, 1).unwrap();
        assert_eq!(skew_group_algebra(&a, &g).unwrap().structure(), a.structure());
    }

    #[test]
    fn swapping_action_on_product() {
        let f = Rationals;
        // k × k with the swap automorphism: (k × k) # C2 ≅ M2(k)
        let kk = named::semisimple(&f, 2);
        let swap = Mat::from_i64(&f, &[vec![0, 1], vec![1, 0]]);
        let g = GroupAction::cyclic(&kk, 2, &swap).unwrap();
        let s = skew_group_algebra(&kk, &g).unwrap();
        s.validate().unwrap();
        assert_eq!(s.radical().dim(), 0);
        assert_eq!(s.num_simples().unwrap(), 1);
        assert!(GroupAction::cyclic(&kk, 3, &swap).is_err());
    }
}
