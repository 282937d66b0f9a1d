//! Finite-dimensional rational matrices under the Kronecker product. Exact
//! arithmetic keeps every check an equality. Objects are tensor trees over an
//! alphabet of dimensions.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::report::render_capped;

use super::{ObjectExpr, SampleSpec, Smc, SmcError};

pub type Q = Rational64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatMorphism {
    pub dom: ObjectExpr,
    pub cod: ObjectExpr,
    /// `rows = dim(cod)`, `cols = dim(dom)`, entry `(y, x)` at `y * cols + x`.
    pub rows: usize,
    pub cols: usize,
    pub mat: Vec<Q>,
}

impl QMatMorphism {
    pub fn entry(&self, y: usize, x: usize) -> Q {
        self.mat[y * self.cols + x]
    }

    pub fn transpose_data(&self) -> (usize, usize, Vec<Q>) {
        let mut out = vec![Q::zero(); self.mat.len()];
        for y in 0..self.rows {
            for x in 0..self.cols {
                out[x * self.rows + y] = self.entry(y, x);
            }
        }
        (self.cols, self.rows, out)
    }

    pub fn is_identity_matrix(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|y| {
                (0..self.cols)
                    .all(|x| self.entry(y, x) == if x == y { Q::one() } else { Q::zero() })
            })
    }

    /// `MᵀM = I` and `MMᵀ = I`.
    pub fn is_orthogonal(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let n = self.rows;
        for i in 0..n {
            for j in 0..n {
                let mut tt = Q::zero();
                let mut mm = Q::zero();
                for k in 0..n {
                    tt += self.entry(k, i) * self.entry(k, j);
                    mm += self.entry(i, k) * self.entry(j, k);
                }
                let want = if i == j { Q::one() } else { Q::zero() };
                if tt != want || mm != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn scale(&self, q: Q) -> QMatMorphism {
        QMatMorphism {
            mat: self.mat.iter().map(|v| *v * q).collect(),
            ..self.clone()
        }
    }
}

/// Matrices over ℚ with a declared alphabet of leaf dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatQCat {
    pub dims: Vec<usize>,
}

impl MatQCat {
    pub fn new(dims: Vec<usize>) -> Self {
        MatQCat { dims }
    }

    pub fn dim(&self, a: &ObjectExpr) -> usize {
        a.size(&self.dims)
    }

    #[allow(clippy::wrong_self_convention)]
    pub fn from_fn(
        &self,
        dom: &ObjectExpr,
        cod: &ObjectExpr,
        f: impl Fn(usize, usize) -> Q,
    ) -> QMatMorphism {
        let rows = self.dim(cod);
        let cols = self.dim(dom);
        let mut mat = vec![Q::zero(); rows * cols];
        for y in 0..rows {
            for x in 0..cols {
                mat[y * cols + x] = f(y, x);
            }
        }
        QMatMorphism {
            dom: dom.clone(),
            cod: cod.clone(),
            rows,
            cols,
            mat,
        }
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_index_map(
        &self,
        dom: &ObjectExpr,
        cod: &ObjectExpr,
        to: impl Fn(usize) -> usize,
    ) -> QMatMorphism {
        self.from_fn(
            dom,
            cod,
            |y, x| {
                if to(x) == y {
                    Q::one()
                } else {
                    Q::zero()
                }
            },
        )
    }
}

impl Smc for MatQCat {
    type Object = ObjectExpr;
    type Morphism = QMatMorphism;

    fn name(&self) -> &str {
        "matq"
    }

    fn unit(&self) -> ObjectExpr {
        ObjectExpr::Unit
    }

    fn tensor_obj(&self, a: &ObjectExpr, b: &ObjectExpr) -> ObjectExpr {
        ObjectExpr::tensor(a.clone(), b.clone())
    }

    fn dom(&self, f: &QMatMorphism) -> ObjectExpr {
        f.dom.clone()
    }

    fn cod(&self, f: &QMatMorphism) -> ObjectExpr {
        f.cod.clone()
    }

    fn identity(&self, a: &ObjectExpr) -> QMatMorphism {
        self.from_index_map(a, a, |x| x)
    }

    fn compose(&self, f: &QMatMorphism, g: &QMatMorphism) -> Result<QMatMorphism, SmcError> {
        if f.cod != g.dom {
            return Err(self.compose_err(f, g));
        }
        let rows = g.rows;
        let cols = f.cols;
        let mid = f.rows;
        let mut mat = vec![Q::zero(); rows * cols];
        for z in 0..rows {
            for y in 0..mid {
                let gzy = g.mat[z * g.cols + y];
                if gzy.is_zero() {
                    continue;
                }
                let frow = &f.mat[y * cols..(y + 1) * cols];
                let out = &mut mat[z * cols..(z + 1) * cols];
                for x in 0..cols {
                    if !frow[x].is_zero() {
                        out[x] += gzy * frow[x];
                    }
                }
            }
        }
        Ok(QMatMorphism {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            rows,
            cols,
            mat,
        })
    }

    fn tensor_mor(&self, f: &QMatMorphism, g: &QMatMorphism) -> QMatMorphism {
        let rows = f.rows * g.rows;
        let cols = f.cols * g.cols;
        let mut mat = vec![Q::zero(); rows * cols];
        for y1 in 0..f.rows {
            for x1 in 0..f.cols {
                let v = f.mat[y1 * f.cols + x1];
                if v.is_zero() {
                    continue;
                }
                for y2 in 0..g.rows {
                    for x2 in 0..g.cols {
                        let w = g.mat[y2 * g.cols + x2];
                        if !w.is_zero() {
                            mat[(y1 * g.rows + y2) * cols + x1 * g.cols + x2] = v * w;
                        }
                    }
                }
            }
        }
        QMatMorphism {
            dom: self.tensor_obj(&f.dom, &g.dom),
            cod: self.tensor_obj(&f.cod, &g.cod),
            rows,
            cols,
            mat,
        }
    }

    fn equal(&self, f: &QMatMorphism, g: &QMatMorphism) -> bool {
        f == g
    }

    fn associator(&self, a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> QMatMorphism {
        let src = ObjectExpr::tensor(ObjectExpr::tensor(a.clone(), b.clone()), c.clone());
        let tgt = ObjectExpr::tensor(a.clone(), ObjectExpr::tensor(b.clone(), c.clone()));
        self.from_index_map(&src, &tgt, |x| x)
    }

    fn associator_inv(&self, a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> QMatMorphism {
        let src = ObjectExpr::tensor(a.clone(), ObjectExpr::tensor(b.clone(), c.clone()));
        let tgt = ObjectExpr::tensor(ObjectExpr::tensor(a.clone(), b.clone()), c.clone());
        self.from_index_map(&src, &tgt, |x| x)
    }

    fn left_unitor(&self, a: &ObjectExpr) -> QMatMorphism {
        let src = ObjectExpr::tensor(ObjectExpr::Unit, a.clone());
        self.from_index_map(&src, a, |x| x)
    }

    fn left_unitor_inv(&self, a: &ObjectExpr) -> QMatMorphism {
        let tgt = ObjectExpr::tensor(ObjectExpr::Unit, a.clone());
        self.from_index_map(a, &tgt, |x| x)
    }

    fn right_unitor(&self, a: &ObjectExpr) -> QMatMorphism {
        let src = ObjectExpr::tensor(a.clone(), ObjectExpr::Unit);
        self.from_index_map(&src, a, |x| x)
    }

    fn right_unitor_inv(&self, a: &ObjectExpr) -> QMatMorphism {
        let tgt = ObjectExpr::tensor(a.clone(), ObjectExpr::Unit);
        self.from_index_map(a, &tgt, |x| x)
    }

    /// The commutation (perfect shuffle) permutation matrix.
    fn braiding(&self, a: &ObjectExpr, b: &ObjectExpr) -> QMatMorphism {
        let src = ObjectExpr::tensor(a.clone(), b.clone());
        let tgt = ObjectExpr::tensor(b.clone(), a.clone());
        let bs = self.dim(b);
        let asz = self.dim(a);
        self.from_index_map(&src, &tgt, |x| {
            let (xa, xb) = (x / bs, x % bs);
            xb * asz + xa
        })
    }

    /// Hom-sets are infinite; sampling draws matrices with small entries,
    /// always including zero and (when square) the identity.
    fn hom_sample(&self, a: &ObjectExpr, b: &ObjectExpr, spec: &SampleSpec) -> Vec<QMatMorphism> {
        let cols = self.dim(a);
        let rows = self.dim(b);
        let mut out = Vec::new();
        out.push(self.from_fn(a, b, |_, _| Q::zero()));
        if rows == cols {
            out.push(self.from_index_map(a, b, |x| x));
        }
        let palette = [Q::zero(), Q::one(), -Q::one(), Q::new(2, 1), Q::new(1, 2)];
        let mut rng = spec.rng(0xa7_0b1 ^ ((rows as u64) << 16) ^ cols as u64);
        while out.len() < spec.sample_size {
            let mat: Vec<Q> = (0..rows * cols)
                .map(|_| palette[rng.below(palette.len())])
                .collect();
            out.push(QMatMorphism {
                dom: a.clone(),
                cod: b.clone(),
                rows,
                cols,
                mat,
            });
        }
        out
    }

    fn approx_size(&self, a: &ObjectExpr) -> usize {
        self.dim(a).max(1)
    }

    fn render(&self, f: &QMatMorphism) -> String {
        let mut s = format!("{} → {} ({}×{})\n", f.dom, f.cod, f.rows, f.cols);
        for y in 0..f.rows {
            let row: Vec<String> = (0..f.cols).map(|x| f.entry(y, x).to_string()).collect();
            s.push_str(&format!("[{}]\n", row.join(", ")));
        }
        render_capped(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> MatQCat {
        MatQCat::new(vec![1, 2, 3])
    }

    #[test]
    fn kronecker_layout() {
        let c = cat();
        let d2 = ObjectExpr::leaf(1);
        let f = c.from_fn(&d2, &d2, |y, x| Q::new((2 * y + x + 1) as i64, 1));
        let g = c.identity(&d2);
        let t = c.tensor_mor(&f, &g);
        assert_eq!(t.rows, 4);
        // (f ⊗ id)[(y1,y2),(x1,x2)] = f[y1,x1]·δ(y2,x2)
        for y1 in 0..2 {
            for y2 in 0..2 {
                for x1 in 0..2 {
                    for x2 in 0..2 {
                        let want = if y2 == x2 { f.entry(y1, x1) } else { Q::zero() };
                        assert_eq!(t.entry(y1 * 2 + y2, x1 * 2 + x2), want);
                    }
                }
            }
        }
    }

    #[test]
    fn braiding_is_commutation_matrix() {
        let c = cat();
        let d2 = ObjectExpr::leaf(1);
        let d3 = ObjectExpr::leaf(2);
        let s = c.braiding(&d2, &d3);
        // γ ; γ⁻¹ = id and the matrix is a permutation.
        let round = c.compose(&s, &c.braiding(&d3, &d2)).unwrap();
        assert!(round.is_identity_matrix());
        // Commutation law: γ ; (B ⊗ A) ; γ⁻¹ = A ⊗ B for sampled A, B.
        let a = c.from_fn(&d2, &d2, |y, x| Q::new((y + 2 * x) as i64, 2));
        let b = c.from_fn(&d3, &d3, |y, x| Q::new(y as i64 - x as i64, 1));
        let lhs = c
            .compose(
                &c.compose(&s, &c.tensor_mor(&b, &a)).unwrap(),
                &c.braiding(&d3, &d2),
            )
            .unwrap();
        let rhs = c.tensor_mor(&a, &b);
        assert_eq!(lhs.mat, rhs.mat);
    }

    #[test]
    fn orthogonality_detects_rotations() {
        let c = cat();
        let d2 = ObjectExpr::leaf(1);
        let rot = c.from_fn(&d2, &d2, |y, x| match (y, x) {
            (0, 0) => Q::new(3, 5),
            (0, 1) => Q::new(4, 5),
            (1, 0) => Q::new(-4, 5),
            (1, 1) => Q::new(3, 5),
            _ => unreachable!(),
        });
        assert!(rot.is_orthogonal());
        let shear = c.from_fn(&d2, &d2, |y, x| {
            if y == 0 || x == 1 {
                Q::one()
            } else {
                Q::zero()
            }
        });
        assert!(!shear.is_orthogonal());
    }
}
