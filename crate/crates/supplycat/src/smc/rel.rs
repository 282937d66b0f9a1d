//! Relations between finite sets, with the monoidal product inherited from
//! the cartesian product of sets. Objects are tensor trees over an alphabet
//! of finite-set sizes; a morphism stores a boolean matrix over the row-major
//! flattened elements, so all associators and unitors have identity matrices
//! while still being non-trivial morphisms between distinct trees.

use crate::report::render_capped;

use super::{ObjectExpr, SampleSpec, Smc, SmcError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelMorphism {
    pub dom: ObjectExpr,
    pub cod: ObjectExpr,
    /// `rows = |cod|`, `cols = |dom|`, entry `(y, x)` at `y * cols + x`.
    pub rows: usize,
    pub cols: usize,
    pub mat: Vec<bool>,
}

impl RelMorphism {
    pub fn entry(&self, y: usize, x: usize) -> bool {
        self.mat[y * self.cols + x]
    }

    pub fn is_identity_matrix(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|y| (0..self.cols).all(|x| self.entry(y, x) == (x == y)))
    }

    pub fn is_permutation_matrix(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|y| (0..self.cols).filter(|&x| self.entry(y, x)).count() == 1)
            && (0..self.cols).all(|x| (0..self.rows).filter(|&y| self.entry(y, x)).count() == 1)
    }

    /// Total and single-valued as a relation dom → cod.
    pub fn is_functional(&self) -> bool {
        (0..self.cols).all(|x| (0..self.rows).filter(|&y| self.entry(y, x)).count() == 1)
    }
}

/// The category of relations over a declared alphabet of set sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelCat {
    pub sizes: Vec<usize>,
}

impl RelCat {
    pub fn new(sizes: Vec<usize>) -> Self {
        RelCat { sizes }
    }

    pub fn size(&self, a: &ObjectExpr) -> usize {
        a.size(&self.sizes)
    }

    #[allow(clippy::wrong_self_convention)]
    pub fn from_fn(
        &self,
        dom: &ObjectExpr,
        cod: &ObjectExpr,
        f: impl Fn(usize, usize) -> bool,
    ) -> RelMorphism {
        let rows = self.size(cod);
        let cols = self.size(dom);
        let mut mat = vec![false; rows * cols];
        for y in 0..rows {
            for x in 0..cols {
                mat[y * cols + x] = f(y, x);
            }
        }
        RelMorphism {
            dom: dom.clone(),
            cod: cod.clone(),
            rows,
            cols,
            mat,
        }
    }

    /// The relation whose graph is a permutation of flattened indices:
    /// element `x` of the domain relates to `to(x)` in the codomain.
    #[allow(clippy::wrong_self_convention)]
    fn from_index_map(
        &self,
        dom: &ObjectExpr,
        cod: &ObjectExpr,
        to: impl Fn(usize) -> usize,
    ) -> RelMorphism {
        self.from_fn(dom, cod, |y, x| to(x) == y)
    }
}

impl Smc for RelCat {
    type Object = ObjectExpr;
    type Morphism = RelMorphism;

    fn name(&self) -> &str {
        "rel"
    }

    fn unit(&self) -> ObjectExpr {
        ObjectExpr::Unit
    }

    fn tensor_obj(&self, a: &ObjectExpr, b: &ObjectExpr) -> ObjectExpr {
        ObjectExpr::tensor(a.clone(), b.clone())
    }

    fn dom(&self, f: &RelMorphism) -> ObjectExpr {
        f.dom.clone()
    }

    fn cod(&self, f: &RelMorphism) -> ObjectExpr {
        f.cod.clone()
    }

    fn identity(&self, a: &ObjectExpr) -> RelMorphism {
        self.from_index_map(a, a, |x| x)
    }

    fn compose(&self, f: &RelMorphism, g: &RelMorphism) -> Result<RelMorphism, SmcError> {
        if f.cod != g.dom {
            return Err(self.compose_err(f, g));
        }
        let rows = g.rows;
        let cols = f.cols;
        let mid = f.rows;
        let mut mat = vec![false; rows * cols];
        for z in 0..rows {
            for y in 0..mid {
                if g.mat[z * g.cols + y] {
                    let frow = &f.mat[y * cols..(y + 1) * cols];
                    let out = &mut mat[z * cols..(z + 1) * cols];
                    for x in 0..cols {
                        out[x] |= frow[x];
                    }
                }
            }
        }
        Ok(RelMorphism {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            rows,
            cols,
            mat,
        })
    }

    fn tensor_mor(&self, f: &RelMorphism, g: &RelMorphism) -> RelMorphism {
        let dom = self.tensor_obj(&f.dom, &g.dom);
        let cod = self.tensor_obj(&f.cod, &g.cod);
        let rows = f.rows * g.rows;
        let cols = f.cols * g.cols;
        let mut mat = vec![false; rows * cols];
        for y1 in 0..f.rows {
            for y2 in 0..g.rows {
                let y = y1 * g.rows + y2;
                for x1 in 0..f.cols {
                    if !f.mat[y1 * f.cols + x1] {
                        continue;
                    }
                    for x2 in 0..g.cols {
                        if g.mat[y2 * g.cols + x2] {
                            mat[y * cols + x1 * g.cols + x2] = true;
                        }
                    }
                }
            }
        }
        RelMorphism {
            dom,
            cod,
            rows,
            cols,
            mat,
        }
    }

    fn equal(&self, f: &RelMorphism, g: &RelMorphism) -> bool {
        f == g
    }

    fn associator(&self, a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> RelMorphism {
        let src = ObjectExpr::tensor(ObjectExpr::tensor(a.clone(), b.clone()), c.clone());
        let tgt = ObjectExpr::tensor(a.clone(), ObjectExpr::tensor(b.clone(), c.clone()));
        self.from_index_map(&src, &tgt, |x| x)
    }

    fn associator_inv(&self, a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> RelMorphism {
        let src = ObjectExpr::tensor(a.clone(), ObjectExpr::tensor(b.clone(), c.clone()));
        let tgt = ObjectExpr::tensor(ObjectExpr::tensor(a.clone(), b.clone()), c.clone());
        self.from_index_map(&src, &tgt, |x| x)
    }

    fn left_unitor(&self, a: &ObjectExpr) -> RelMorphism {
        let src = ObjectExpr::tensor(ObjectExpr::Unit, a.clone());
        self.from_index_map(&src, a, |x| x)
    }

    fn left_unitor_inv(&self, a: &ObjectExpr) -> RelMorphism {
        let tgt = ObjectExpr::tensor(ObjectExpr::Unit, a.clone());
        self.from_index_map(a, &tgt, |x| x)
    }

    fn right_unitor(&self, a: &ObjectExpr) -> RelMorphism {
        let src = ObjectExpr::tensor(a.clone(), ObjectExpr::Unit);
        self.from_index_map(&src, a, |x| x)
    }

    fn right_unitor_inv(&self, a: &ObjectExpr) -> RelMorphism {
        let tgt = ObjectExpr::tensor(a.clone(), ObjectExpr::Unit);
        self.from_index_map(a, &tgt, |x| x)
    }

    fn braiding(&self, a: &ObjectExpr, b: &ObjectExpr) -> RelMorphism {
        let src = ObjectExpr::tensor(a.clone(), b.clone());
        let tgt = ObjectExpr::tensor(b.clone(), a.clone());
        let bs = self.size(b);
        let asz = self.size(a);
        self.from_index_map(&src, &tgt, |x| {
            let (xa, xb) = (x / bs, x % bs);
            xb * asz + xa
        })
    }

    fn hom_sample(&self, a: &ObjectExpr, b: &ObjectExpr, spec: &SampleSpec) -> Vec<RelMorphism> {
        let cols = self.size(a);
        let rows = self.size(b);
        let cells = rows * cols;
        let make = |mat: Vec<bool>| RelMorphism {
            dom: a.clone(),
            cod: b.clone(),
            rows,
            cols,
            mat,
        };
        if cells < 64 && (1u128 << cells) <= spec.exhaustive_limit as u128 {
            return (0..(1usize << cells))
                .map(|mask| make((0..cells).map(|i| mask >> i & 1 == 1).collect()))
                .collect();
        }
        let mut rng = spec.rng(0x7e1 ^ cells as u64);
        (0..spec.sample_size)
            .map(|_| make((0..cells).map(|_| rng.bool()).collect()))
            .collect()
    }

    fn approx_size(&self, a: &ObjectExpr) -> usize {
        self.size(a).max(1)
    }

    fn render(&self, f: &RelMorphism) -> String {
        let mut s = format!("{} → {} ({}×{})\n", f.dom, f.cod, f.rows, f.cols);
        for y in 0..f.rows {
            for x in 0..f.cols {
                s.push(if f.entry(y, x) { '1' } else { '0' });
            }
            s.push('\n');
        }
        render_capped(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> RelCat {
        RelCat::new(vec![0, 1, 2, 3])
    }

    #[test]
    fn coherence_matrices_are_trivial() {
        let c = cat();
        let a = ObjectExpr::leaf(2);
        let b = ObjectExpr::leaf(3);
        let u = ObjectExpr::leaf(1);
        assert!(c.associator(&a, &b, &u).is_identity_matrix());
        assert!(c.left_unitor(&a).is_identity_matrix());
        assert!(c.right_unitor(&b).is_identity_matrix());
        let braid = c.braiding(&a, &b);
        assert!(braid.is_permutation_matrix());
        assert!(!braid.is_identity_matrix());
    }

    #[test]
    fn braiding_squares_to_identity() {
        let c = cat();
        let a = ObjectExpr::leaf(2);
        let b = ObjectExpr::leaf(3);
        let round = c.compose(&c.braiding(&a, &b), &c.braiding(&b, &a)).unwrap();
        assert_eq!(round, c.identity(&ObjectExpr::tensor(a, b)));
    }

    #[test]
    fn empty_set_has_one_endomorphism() {
        let c = cat();
        let empty = ObjectExpr::leaf(0);
        assert_eq!(c.size(&empty), 0);
        let homs = c.hom_sample(&empty, &empty, &SampleSpec::default());
        assert_eq!(homs.len(), 1);
        assert_eq!(c.identity(&empty), homs[0]);
    }

    #[test]
    fn hom_sample_exhaustive_matches_count() {
        let c = cat();
        let two = ObjectExpr::leaf(2);
        let homs = c.hom_sample(&two, &two, &SampleSpec::default());
        assert_eq!(homs.len(), 16);
        assert_eq!(homs.iter().filter(|f| f.is_functional()).count(), 4);
    }
}
