//! Relations whose elements are nested tuples matching the exact tree shape
//! of their objects. Unlike [`super::RelCat`], associators here genuinely
//! re-bracket element representations, so coherence checks on this instance
//! are non-vacuous. [`FinSetCat`] is the wide subcategory of total,
//! single-valued relations, i.e. sets and functions.

use std::collections::{BTreeSet, HashMap};

use crate::report::render_capped;

use super::{ObjectExpr, SampleSpec, Smc, SmcError};

/// An element of a tree-shaped object: the unit element, a 1-based atom of a
/// finite-set leaf, or a pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Unit,
    Atom(usize),
    Pair(Box<Elem>, Box<Elem>),
}

impl Elem {
    pub fn pair(a: Elem, b: Elem) -> Elem {
        Elem::Pair(Box::new(a), Box::new(b))
    }

    /// Leaf atoms in left-to-right order.
    pub fn flatten(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.flatten_into(&mut out);
        out
    }

    fn flatten_into(&self, out: &mut Vec<usize>) {
        match self {
            Elem::Unit => {}
            Elem::Atom(v) => out.push(*v),
            Elem::Pair(a, b) => {
                a.flatten_into(out);
                b.flatten_into(out);
            }
        }
    }

    /// Rebuild an element of `shape` from a flat atom list.
    pub fn unflatten(shape: &ObjectExpr, atoms: &[usize]) -> Elem {
        let (e, used) = Self::unflatten_at(shape, atoms);
        debug_assert_eq!(used, atoms.len());
        e
    }

    fn unflatten_at(shape: &ObjectExpr, atoms: &[usize]) -> (Elem, usize) {
        match shape {
            ObjectExpr::Unit => (Elem::Unit, 0),
            ObjectExpr::Leaf(_) => (Elem::Atom(atoms[0]), 1),
            ObjectExpr::Tensor(l, r) => {
                let (el, ul) = Self::unflatten_at(l, atoms);
                let (er, ur) = Self::unflatten_at(r, &atoms[ul..]);
                (Elem::pair(el, er), ul + ur)
            }
        }
    }
}

impl std::fmt::Display for Elem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Elem::Unit => write!(f, "()"),
            Elem::Atom(v) => write!(f, "{v}"),
            Elem::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// All elements of an object, in row-major order (consistent with the
/// flattened indexing used by [`super::RelCat`]).
pub fn elements(shape: &ObjectExpr, sizes: &[usize]) -> Vec<Elem> {
    match shape {
        ObjectExpr::Unit => vec![Elem::Unit],
        ObjectExpr::Leaf(i) => (1..=sizes[*i]).map(Elem::Atom).collect(),
        ObjectExpr::Tensor(l, r) => {
            let ls = elements(l, sizes);
            let rs = elements(r, sizes);
            let mut out = Vec::with_capacity(ls.len() * rs.len());
            for a in &ls {
                for b in &rs {
                    out.push(Elem::pair(a.clone(), b.clone()));
                }
            }
            out
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedRelMorphism {
    pub dom: ObjectExpr,
    pub cod: ObjectExpr,
    pub pairs: BTreeSet<(Elem, Elem)>,
}

impl NestedRelMorphism {
    /// Total and single-valued over the given domain elements.
    pub fn is_functional(&self, sizes: &[usize]) -> bool {
        let dom_elems = elements(&self.dom, sizes);
        dom_elems
            .iter()
            .all(|x| self.pairs.iter().filter(|(a, _)| a == x).count() == 1)
    }

    pub fn apply(&self, x: &Elem) -> Option<&Elem> {
        self.pairs.iter().find(|(a, _)| a == x).map(|(_, b)| b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedRelCat {
    pub sizes: Vec<usize>,
}

impl NestedRelCat {
    pub fn new(sizes: Vec<usize>) -> Self {
        NestedRelCat { sizes }
    }

    pub fn size(&self, a: &ObjectExpr) -> usize {
        a.size(&self.sizes)
    }

    pub fn elements(&self, a: &ObjectExpr) -> Vec<Elem> {
        elements(a, &self.sizes)
    }

    pub fn from_pairs(
        &self,
        dom: &ObjectExpr,
        cod: &ObjectExpr,
        pairs: impl IntoIterator<Item = (Elem, Elem)>,
    ) -> NestedRelMorphism {
        NestedRelMorphism {
            dom: dom.clone(),
            cod: cod.clone(),
            pairs: pairs.into_iter().collect(),
        }
    }

    /// The graph of a function on elements.
    pub fn graph(
        &self,
        dom: &ObjectExpr,
        cod: &ObjectExpr,
        f: impl Fn(&Elem) -> Elem,
    ) -> NestedRelMorphism {
        self.from_pairs(
            dom,
            cod,
            self.elements(dom).into_iter().map(|x| {
                let y = f(&x);
                (x, y)
            }),
        )
    }
}

impl Smc for NestedRelCat {
    type Object = ObjectExpr;
    type Morphism = NestedRelMorphism;

    fn name(&self) -> &str {
        "nested-rel"
    }

    fn unit(&self) -> ObjectExpr {
        ObjectExpr::Unit
    }

    fn tensor_obj(&self, a: &ObjectExpr, b: &ObjectExpr) -> ObjectExpr {
        ObjectExpr::tensor(a.clone(), b.clone())
    }

    fn dom(&self, f: &NestedRelMorphism) -> ObjectExpr {
        f.dom.clone()
    }

    fn cod(&self, f: &NestedRelMorphism) -> ObjectExpr {
        f.cod.clone()
    }

    fn identity(&self, a: &ObjectExpr) -> NestedRelMorphism {
        self.graph(a, a, |x| x.clone())
    }

    fn compose(
        &self,
        f: &NestedRelMorphism,
        g: &NestedRelMorphism,
    ) -> Result<NestedRelMorphism, SmcError> {
        if f.cod != g.dom {
            return Err(self.compose_err(f, g));
        }
        let mut by_first: HashMap<&Elem, Vec<&Elem>> = HashMap::with_capacity(g.pairs.len());
        for (y, z) in &g.pairs {
            by_first.entry(y).or_default().push(z);
        }
        let mut pairs = BTreeSet::new();
        for (x, y) in &f.pairs {
            if let Some(zs) = by_first.get(y) {
                for z in zs {
                    pairs.insert((x.clone(), (*z).clone()));
                }
            }
        }
        Ok(NestedRelMorphism {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            pairs,
        })
    }

    fn tensor_mor(&self, f: &NestedRelMorphism, g: &NestedRelMorphism) -> NestedRelMorphism {
        let mut pairs = BTreeSet::new();
        for (x1, y1) in &f.pairs {
            for (x2, y2) in &g.pairs {
                pairs.insert((
                    Elem::pair(x1.clone(), x2.clone()),
                    Elem::pair(y1.clone(), y2.clone()),
                ));
            }
        }
        NestedRelMorphism {
            dom: self.tensor_obj(&f.dom, &g.dom),
            cod: self.tensor_obj(&f.cod, &g.cod),
            pairs,
        }
    }

    fn equal(&self, f: &NestedRelMorphism, g: &NestedRelMorphism) -> bool {
        f == g
    }

    fn associator(&self, a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> NestedRelMorphism {
        let src = ObjectExpr::tensor(ObjectExpr::tensor(a.clone(), b.clone()), c.clone());
        let tgt = ObjectExpr::tensor(a.clone(), ObjectExpr::tensor(b.clone(), c.clone()));
        self.graph(&src, &tgt, |e| match e {
            Elem::Pair(xy, z) => match xy.as_ref() {
                Elem::Pair(x, y) => Elem::pair(
                    x.as_ref().clone(),
                    Elem::pair(y.as_ref().clone(), z.as_ref().clone()),
                ),
                _ => unreachable!("element shape follows object shape"),
            },
            _ => unreachable!("element shape follows object shape"),
        })
    }

    fn associator_inv(&self, a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> NestedRelMorphism {
        let src = ObjectExpr::tensor(a.clone(), ObjectExpr::tensor(b.clone(), c.clone()));
        let tgt = ObjectExpr::tensor(ObjectExpr::tensor(a.clone(), b.clone()), c.clone());
        self.graph(&src, &tgt, |e| match e {
            Elem::Pair(x, yz) => match yz.as_ref() {
                Elem::Pair(y, z) => Elem::pair(
                    Elem::pair(x.as_ref().clone(), y.as_ref().clone()),
                    z.as_ref().clone(),
                ),
                _ => unreachable!("element shape follows object shape"),
            },
            _ => unreachable!("element shape follows object shape"),
        })
    }

    fn left_unitor(&self, a: &ObjectExpr) -> NestedRelMorphism {
        let src = ObjectExpr::tensor(ObjectExpr::Unit, a.clone());
        self.graph(&src, a, |e| match e {
            Elem::Pair(_, x) => x.as_ref().clone(),
            _ => unreachable!("element shape follows object shape"),
        })
    }

    fn left_unitor_inv(&self, a: &ObjectExpr) -> NestedRelMorphism {
        let tgt = ObjectExpr::tensor(ObjectExpr::Unit, a.clone());
        self.graph(a, &tgt, |e| Elem::pair(Elem::Unit, e.clone()))
    }

    fn right_unitor(&self, a: &ObjectExpr) -> NestedRelMorphism {
        let src = ObjectExpr::tensor(a.clone(), ObjectExpr::Unit);
        self.graph(&src, a, |e| match e {
            Elem::Pair(x, _) => x.as_ref().clone(),
            _ => unreachable!("element shape follows object shape"),
        })
    }

    fn right_unitor_inv(&self, a: &ObjectExpr) -> NestedRelMorphism {
        let tgt = ObjectExpr::tensor(a.clone(), ObjectExpr::Unit);
        self.graph(a, &tgt, |e| Elem::pair(e.clone(), Elem::Unit))
    }

    fn braiding(&self, a: &ObjectExpr, b: &ObjectExpr) -> NestedRelMorphism {
        let src = ObjectExpr::tensor(a.clone(), b.clone());
        let tgt = ObjectExpr::tensor(b.clone(), a.clone());
        self.graph(&src, &tgt, |e| match e {
            Elem::Pair(x, y) => Elem::pair(y.as_ref().clone(), x.as_ref().clone()),
            _ => unreachable!("element shape follows object shape"),
        })
    }

    fn hom_sample(
        &self,
        a: &ObjectExpr,
        b: &ObjectExpr,
        spec: &SampleSpec,
    ) -> Vec<NestedRelMorphism> {
        let xs = self.elements(a);
        let ys = self.elements(b);
        let cells: Vec<(Elem, Elem)> = xs
            .iter()
            .flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone())))
            .collect();
        let n = cells.len();
        let make = |picks: &dyn Fn(usize) -> bool| NestedRelMorphism {
            dom: a.clone(),
            cod: b.clone(),
            pairs: cells
                .iter()
                .enumerate()
                .filter(|(i, _)| picks(*i))
                .map(|(_, p)| p.clone())
                .collect(),
        };
        if n < 64 && (1u128 << n) <= spec.exhaustive_limit as u128 {
            return (0..(1usize << n))
                .map(|mask| make(&move |i| mask >> i & 1 == 1))
                .collect();
        }
        let mut rng = spec.rng(0x9e57ed ^ n as u64);
        (0..spec.sample_size)
            .map(|_| {
                let bits: Vec<bool> = (0..n).map(|_| rng.bool()).collect();
                make(&move |i| bits[i])
            })
            .collect()
    }

    fn approx_size(&self, a: &ObjectExpr) -> usize {
        self.size(a).max(1)
    }

    fn render(&self, f: &NestedRelMorphism) -> String {
        let pairs: Vec<String> = f.pairs.iter().map(|(x, y)| format!("{x}↦{y}")).collect();
        render_capped(format!("{} → {} {{{}}}", f.dom, f.cod, pairs.join(", ")))
    }
}

/// Sets and functions: the sub-model of [`NestedRelCat`] whose morphisms are
/// exactly the total single-valued relations. Composition, tensor, and all
/// coherence isomorphisms stay inside the sub-model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSetCat {
    pub rel: NestedRelCat,
}

impl FinSetCat {
    pub fn new(sizes: Vec<usize>) -> Self {
        FinSetCat {
            rel: NestedRelCat::new(sizes),
        }
    }

    pub fn size(&self, a: &ObjectExpr) -> usize {
        self.rel.size(a)
    }

    pub fn elements(&self, a: &ObjectExpr) -> Vec<Elem> {
        self.rel.elements(a)
    }

    pub fn graph(
        &self,
        dom: &ObjectExpr,
        cod: &ObjectExpr,
        f: impl Fn(&Elem) -> Elem,
    ) -> NestedRelMorphism {
        self.rel.graph(dom, cod, f)
    }
}

impl Smc for FinSetCat {
    type Object = ObjectExpr;
    type Morphism = NestedRelMorphism;

    fn name(&self) -> &str {
        "finset-cat"
    }

    fn unit(&self) -> ObjectExpr {
        ObjectExpr::Unit
    }

    fn tensor_obj(&self, a: &ObjectExpr, b: &ObjectExpr) -> ObjectExpr {
        self.rel.tensor_obj(a, b)
    }

    fn dom(&self, f: &NestedRelMorphism) -> ObjectExpr {
        f.dom.clone()
    }

    fn cod(&self, f: &NestedRelMorphism) -> ObjectExpr {
        f.cod.clone()
    }

    fn identity(&self, a: &ObjectExpr) -> NestedRelMorphism {
        self.rel.identity(a)
    }

    fn compose(
        &self,
        f: &NestedRelMorphism,
        g: &NestedRelMorphism,
    ) -> Result<NestedRelMorphism, SmcError> {
        self.rel.compose(f, g)
    }

    fn tensor_mor(&self, f: &NestedRelMorphism, g: &NestedRelMorphism) -> NestedRelMorphism {
        self.rel.tensor_mor(f, g)
    }

    fn equal(&self, f: &NestedRelMorphism, g: &NestedRelMorphism) -> bool {
        f == g
    }

    fn associator(&self, a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> NestedRelMorphism {
        self.rel.associator(a, b, c)
    }

    fn associator_inv(&self, a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> NestedRelMorphism {
        self.rel.associator_inv(a, b, c)
    }

    fn left_unitor(&self, a: &ObjectExpr) -> NestedRelMorphism {
        self.rel.left_unitor(a)
    }

    fn left_unitor_inv(&self, a: &ObjectExpr) -> NestedRelMorphism {
        self.rel.left_unitor_inv(a)
    }

    fn right_unitor(&self, a: &ObjectExpr) -> NestedRelMorphism {
        self.rel.right_unitor(a)
    }

    fn right_unitor_inv(&self, a: &ObjectExpr) -> NestedRelMorphism {
        self.rel.right_unitor_inv(a)
    }

    fn braiding(&self, a: &ObjectExpr, b: &ObjectExpr) -> NestedRelMorphism {
        self.rel.braiding(a, b)
    }

    /// All functions `a → b` (total single-valued graphs), or a seeded sample
    /// when there are too many.
    fn hom_sample(
        &self,
        a: &ObjectExpr,
        b: &ObjectExpr,
        spec: &SampleSpec,
    ) -> Vec<NestedRelMorphism> {
        let xs = self.elements(a);
        let ys = self.elements(b);
        let m = xs.len();
        let n = ys.len();
        let count = (n as u128).pow(m as u32);
        let make = |assign: &[usize]| NestedRelMorphism {
            dom: a.clone(),
            cod: b.clone(),
            pairs: xs
                .iter()
                .zip(assign.iter())
                .map(|(x, &yi)| (x.clone(), ys[yi].clone()))
                .collect(),
        };
        if n == 0 {
            // no functions unless the domain is empty
            return if m == 0 { vec![make(&[])] } else { vec![] };
        }
        if count <= spec.exhaustive_limit as u128 {
            let mut out = Vec::with_capacity(count as usize);
            let mut assign = vec![0usize; m];
            loop {
                out.push(make(&assign));
                let mut pos = m;
                loop {
                    if pos == 0 {
                        return out;
                    }
                    if assign[pos - 1] + 1 < n {
                        assign[pos - 1] += 1;
                        for a in assign.iter_mut().skip(pos) {
                            *a = 0;
                        }
                        break;
                    }
                    pos -= 1;
                }
            }
        }
        let mut rng = spec.rng(0xf1e5e7 ^ (m as u64) << 8 ^ n as u64);
        (0..spec.sample_size)
            .map(|_| {
                let assign: Vec<usize> = (0..m).map(|_| rng.below(n)).collect();
                make(&assign)
            })
            .collect()
    }

    fn approx_size(&self, a: &ObjectExpr) -> usize {
        self.rel.approx_size(a)
    }

    fn render(&self, f: &NestedRelMorphism) -> String {
        self.rel.render(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> NestedRelCat {
        NestedRelCat::new(vec![0, 1, 2])
    }

    #[test]
    fn associator_renests_elements() {
        let c = cat();
        let two = ObjectExpr::leaf(2);
        let alpha = c.associator(&two, &two, &two);
        for (x, y) in &alpha.pairs {
            // ((a,b),c) maps to (a,(b,c)) with the same atoms.
            assert_eq!(x.flatten(), y.flatten());
            assert_ne!(x, y);
        }
        assert_eq!(alpha.pairs.len(), 8);
    }

    #[test]
    fn associator_composes_with_inverse_to_identity() {
        let c = cat();
        let a = ObjectExpr::leaf(2);
        let b = ObjectExpr::leaf(1);
        let u = ObjectExpr::Unit;
        let fwd = c.associator(&a, &b, &u);
        let back = c.associator_inv(&a, &b, &u);
        let round = c.compose(&fwd, &back).unwrap();
        let src = ObjectExpr::tensor(ObjectExpr::tensor(a, b), u);
        assert_eq!(round, c.identity(&src));
    }

    #[test]
    fn element_order_is_row_major() {
        let c = cat();
        let e = ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(1));
        let els = c.elements(&e);
        assert_eq!(els.len(), 2);
        assert_eq!(els[0], Elem::pair(Elem::Atom(1), Elem::Atom(1)));
        assert_eq!(els[1], Elem::pair(Elem::Atom(2), Elem::Atom(1)));
    }

    #[test]
    fn finset_hom_sample_counts_functions() {
        let f = FinSetCat::new(vec![0, 1, 2]);
        let two = ObjectExpr::leaf(2);
        let homs = f.hom_sample(&two, &two, &SampleSpec::default());
        assert_eq!(homs.len(), 4);
        assert!(homs.iter().all(|h| h.is_functional(&f.rel.sizes)));
        // Empty domain: exactly the empty function, even into the empty set.
        let empty = ObjectExpr::leaf(0);
        assert_eq!(
            f.hom_sample(&empty, &empty, &SampleSpec::default()).len(),
            1
        );
        assert_eq!(f.hom_sample(&two, &empty, &SampleSpec::default()).len(), 0);
    }

    #[test]
    fn functions_are_closed_under_the_structure() {
        let f = FinSetCat::new(vec![0, 1, 2]);
        let spec = SampleSpec::default();
        let objs = [
            ObjectExpr::Unit,
            ObjectExpr::leaf(0),
            ObjectExpr::leaf(2),
            ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(1)),
        ];
        for a in &objs {
            for b in &objs {
                for g in f.hom_sample(a, b, &spec) {
                    assert!(g.is_functional(&f.rel.sizes));
                    for c in &objs {
                        for h in f.hom_sample(b, c, &spec).iter().take(4) {
                            assert!(f.compose(&g, h).unwrap().is_functional(&f.rel.sizes));
                        }
                    }
                    let t = f.tensor_mor(&g, &f.identity(a));
                    assert!(t.is_functional(&f.rel.sizes));
                }
                assert!(f.braiding(a, b).is_functional(&f.rel.sizes));
                for c in &objs {
                    assert!(f.associator(a, b, c).is_functional(&f.rel.sizes));
                }
            }
            assert!(f.left_unitor(a).is_functional(&f.rel.sizes));
            assert!(f.right_unitor_inv(a).is_functional(&f.rel.sizes));
        }
    }

    #[test]
    fn unflatten_roundtrip() {
        let shape = ObjectExpr::tensor(
            ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::Unit),
            ObjectExpr::leaf(2),
        );
        let c = cat();
        for e in c.elements(&shape) {
            assert_eq!(Elem::unflatten(&shape, &e.flatten()), e);
        }
    }
}
