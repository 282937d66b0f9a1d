//! The prop of cospans of finite sets (the theory of special commutative
//! frobenius monoids). A morphism `m → n` is a pair of functions into a
//! shared apex; composition pushes out along the shared boundary.
//!
//! Equality of cospans is equality up to apex isomorphism. Every stored
//! cospan is kept in a canonical form: apex elements are renumbered by first
//! boundary contact (left ports, then right ports) and elements hit by
//! neither leg ("floating") are moved to a trailing block, so structural
//! equality decides apex-isomorphism and cospans can be hashed.

use std::fmt;

use crate::finset::{block_braiding, compose_fn, enumerate_functions, FinFunction, Permutation};

use super::{Prop, PropError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CospanMorphism {
    apex: usize,
    left: FinFunction,
    right: FinFunction,
}

impl CospanMorphism {
    /// Canonicalize a raw cospan given by its two legs.
    pub fn new(left: FinFunction, right: FinFunction) -> Result<Self, PropError> {
        if left.cod() != right.cod() {
            return Err(PropError::Invalid(format!(
                "legs target different apexes: {} vs {}",
                left.cod(),
                right.cod()
            )));
        }
        Ok(Self::canonicalize(left.cod(), &left, &right))
    }

    fn canonicalize(apex: usize, left: &FinFunction, right: &FinFunction) -> Self {
        // Renumber apex elements by first boundary contact.
        let mut rename = vec![0usize; apex];
        let mut next = 0usize;
        for &e in left.table().iter().chain(right.table().iter()) {
            if rename[e - 1] == 0 {
                next += 1;
                rename[e - 1] = next;
            }
        }
        let reachable = next;
        // Floating elements keep their relative order in a trailing block;
        // any order would do since no leg mentions them.
        for r in rename.iter_mut() {
            if *r == 0 {
                next += 1;
                *r = next;
            }
        }
        let left = FinFunction::new(
            left.dom(),
            apex,
            left.table().iter().map(|&e| rename[e - 1]).collect(),
        )
        .unwrap();
        let right = FinFunction::new(
            right.dom(),
            apex,
            right.table().iter().map(|&e| rename[e - 1]).collect(),
        )
        .unwrap();
        debug_assert!(reachable <= apex);
        CospanMorphism { apex, left, right }
    }

    /// A function `f: m → n` viewed as the cospan `m → n ← n` with identity
    /// right leg.
    pub fn from_function(f: &FinFunction) -> Self {
        Self::canonicalize(f.cod(), f, &FinFunction::identity(f.cod()))
    }

    pub fn apex(&self) -> usize {
        self.apex
    }

    pub fn left(&self) -> &FinFunction {
        &self.left
    }

    pub fn right(&self) -> &FinFunction {
        &self.right
    }

    /// Apex elements hit by neither leg.
    pub fn floating(&self) -> usize {
        let mut hit = vec![false; self.apex];
        for &e in self.left.table().iter().chain(self.right.table().iter()) {
            hit[e - 1] = true;
        }
        hit.iter().filter(|h| !**h).count()
    }

    /// Relabel the apex by a permutation; used by tests to confirm canonical
    /// forms are relabeling-invariant.
    pub fn relabel(&self, p: &Permutation) -> Result<Self, PropError> {
        if p.size() != self.apex {
            return Err(PropError::Invalid(format!(
                "relabeling size {} does not match apex {}",
                p.size(),
                self.apex
            )));
        }
        CospanMorphism::new(
            compose_fn(&self.left, p.as_function()).unwrap(),
            compose_fn(&self.right, p.as_function()).unwrap(),
        )
    }
}

impl fmt::Display for CospanMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}→{}←{} (l={:?}, r={:?}, floating={})",
            self.left.dom(),
            self.apex,
            self.right.dom(),
            self.left.table(),
            self.right.table(),
            self.floating()
        )
    }
}

/// Compose two cospans: push out the span formed by `f.right` and `g.left`,
/// compose the outer legs into the pushout, and canonicalize. The pushout and
/// canonical renumbering are fused into one pass; `tests` confirm the result
/// agrees with composing via [`pushout`] and canonicalizing separately.
pub fn cospan_compose(f: &CospanMorphism, g: &CospanMorphism) -> Result<CospanMorphism, PropError> {
    if f.right.dom() != g.left.dom() {
        return Err(PropError::ComposeMismatch {
            f: f.to_string(),
            fdom: f.left.dom(),
            fcod: f.right.dom(),
            g: g.to_string(),
            gdom: g.left.dom(),
            gcod: g.right.dom(),
        });
    }
    let b = f.apex;
    let c = g.apex;
    let mut parent: Vec<u32> = (0..(b + c) as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    for i in 0..f.right.dom() {
        let x = find(&mut parent, (f.right.table()[i] - 1) as u32);
        let y = find(&mut parent, (b + g.left.table()[i] - 1) as u32);
        if x != y {
            let (lo, hi) = if x < y { (x, y) } else { (y, x) };
            parent[hi as usize] = lo;
        }
    }
    // Renumber classes by first boundary contact, left ports then right ports.
    let mut rename = vec![0u32; b + c];
    let mut next = 0u32;
    let mut left_table = Vec::with_capacity(f.left.dom());
    for &e in f.left.table() {
        let root = find(&mut parent, (e - 1) as u32) as usize;
        if rename[root] == 0 {
            next += 1;
            rename[root] = next;
        }
        left_table.push(rename[root] as usize);
    }
    let mut right_table = Vec::with_capacity(g.right.dom());
    for &e in g.right.table() {
        let root = find(&mut parent, (b + e - 1) as u32) as usize;
        if rename[root] == 0 {
            next += 1;
            rename[root] = next;
        }
        right_table.push(rename[root] as usize);
    }
    // Classes hit by neither outer leg are floating; count them into the apex.
    for x in 0..(b + c) as u32 {
        if find(&mut parent, x) == x && rename[x as usize] == 0 {
            next += 1;
            rename[x as usize] = next;
        }
    }
    let apex = next as usize;
    Ok(CospanMorphism {
        apex,
        left: FinFunction::new(f.left.dom(), apex, left_table).unwrap(),
        right: FinFunction::new(g.right.dom(), apex, right_table).unwrap(),
    })
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CospanProp;

impl CospanProp {
    /// `0 → 1 ← 2`: both right ports share one apex point.
    pub fn cup(&self) -> CospanMorphism {
        CospanMorphism::new(
            FinFunction::new(0, 1, vec![]).unwrap(),
            FinFunction::new(2, 1, vec![1, 1]).unwrap(),
        )
        .unwrap()
    }

    /// `2 → 1 ← 0`: both left ports share one apex point.
    pub fn cap(&self) -> CospanMorphism {
        CospanMorphism::new(
            FinFunction::new(2, 1, vec![1, 1]).unwrap(),
            FinFunction::new(0, 1, vec![]).unwrap(),
        )
        .unwrap()
    }

    /// The frobenius multiplication `2 → 1`.
    pub fn mult(&self) -> CospanMorphism {
        CospanMorphism::new(
            FinFunction::new(2, 1, vec![1, 1]).unwrap(),
            FinFunction::new(1, 1, vec![1]).unwrap(),
        )
        .unwrap()
    }

    /// The frobenius comultiplication `1 → 2`.
    pub fn comult(&self) -> CospanMorphism {
        CospanMorphism::new(
            FinFunction::new(1, 1, vec![1]).unwrap(),
            FinFunction::new(2, 1, vec![1, 1]).unwrap(),
        )
        .unwrap()
    }

    /// The unit `0 → 1`.
    pub fn unit(&self) -> CospanMorphism {
        CospanMorphism::new(
            FinFunction::new(0, 1, vec![]).unwrap(),
            FinFunction::new(1, 1, vec![1]).unwrap(),
        )
        .unwrap()
    }

    /// The counit `1 → 0`.
    pub fn counit(&self) -> CospanMorphism {
        CospanMorphism::new(
            FinFunction::new(1, 1, vec![1]).unwrap(),
            FinFunction::new(0, 1, vec![]).unwrap(),
        )
        .unwrap()
    }
}

impl Prop for CospanProp {
    type Morphism = CospanMorphism;

    fn name(&self) -> &str {
        "cospan"
    }

    fn dom(&self, f: &CospanMorphism) -> usize {
        f.left.dom()
    }

    fn cod(&self, f: &CospanMorphism) -> usize {
        f.right.dom()
    }

    fn identity(&self, n: usize) -> CospanMorphism {
        CospanMorphism {
            apex: n,
            left: FinFunction::identity(n),
            right: FinFunction::identity(n),
        }
    }

    fn compose(&self, f: &CospanMorphism, g: &CospanMorphism) -> Result<CospanMorphism, PropError> {
        cospan_compose(f, g)
    }

    fn monoidal_sum(&self, f: &CospanMorphism, g: &CospanMorphism) -> CospanMorphism {
        let apex = f.apex + g.apex;
        let left = crate::finset::tensor_fn(&f.left, &g.left);
        let right = crate::finset::tensor_fn(&f.right, &g.right);
        debug_assert_eq!(left.cod(), apex);
        CospanMorphism::canonicalize(apex, &left, &right)
    }

    fn braiding(&self, m: usize, n: usize) -> CospanMorphism {
        CospanMorphism::from_function(block_braiding(m, n).as_function())
    }

    /// All cospans `m → n` with apex at most `size_bound`, including every
    /// floating-element count the bound allows.
    fn enumerate_hom(&self, m: usize, n: usize, size_bound: usize) -> Option<Vec<CospanMorphism>> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for apex in 0..=size_bound {
            for l in enumerate_functions(m, apex) {
                for r in enumerate_functions(n, apex) {
                    let c = CospanMorphism::canonicalize(apex, &l, &r);
                    if seen.insert(c.clone()) {
                        out.push(c);
                    }
                }
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::SplitMix64;
    use crate::props::{check_prop_axioms, PropBounds};

    fn fun(dom: usize, cod: usize, table: &[usize]) -> FinFunction {
        FinFunction::new(dom, cod, table.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form_identifies_relabelings() {
        // Same connectivity written with two different apex labelings.
        let a = CospanMorphism::new(fun(2, 2, &[2, 1]), fun(0, 2, &[])).unwrap();
        let b = CospanMorphism::new(fun(2, 2, &[1, 2]), fun(0, 2, &[])).unwrap();
        assert_eq!(a, b);

        // One floating apex point vs none.
        let c = CospanMorphism::new(fun(0, 1, &[]), fun(0, 1, &[])).unwrap();
        let d = CospanMorphism::new(fun(0, 0, &[]), fun(0, 0, &[])).unwrap();
        assert_ne!(c, d);
        assert_eq!(c.floating(), 1);

        let id = CospanProp.identity(3);
        assert_eq!(
            CospanMorphism::new(id.left.clone(), id.right.clone()).unwrap(),
            id
        );
    }

    /// Oracle for apex isomorphism: search every apex bijection commuting
    /// with the legs.
    fn apex_isomorphic(a: &CospanMorphism, b: &CospanMorphism) -> bool {
        if a.apex != b.apex || a.left.dom() != b.left.dom() || a.right.dom() != b.right.dom() {
            return false;
        }
        crate::finset::enumerate_permutations(a.apex)
            .into_iter()
            .any(|p| {
                compose_fn(&a.left, p.as_function()).unwrap() == b.left
                    && compose_fn(&a.right, p.as_function()).unwrap() == b.right
            })
    }

    #[test]
    fn canonical_form_matches_isomorphism_search() {
        let p = CospanProp;
        let homs = p.enumerate_hom(2, 1, 3).unwrap();
        for a in &homs {
            for b in &homs {
                assert_eq!(a == b, apex_isomorphic(a, b), "a = {a}, b = {b}");
            }
        }
    }

    #[test]
    fn canonical_form_invariant_under_random_relabeling() {
        let p = CospanProp;
        let mut rng = SplitMix64::new(0x5eed);
        for c in p.enumerate_hom(2, 2, 3).unwrap() {
            for _ in 0..200 {
                let perm = random_permutation(c.apex(), &mut rng);
                assert_eq!(c.relabel(&perm).unwrap(), c);
            }
        }
    }

    fn random_permutation(n: usize, rng: &mut SplitMix64) -> Permutation {
        let mut table: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = rng.below(i + 1);
            table.swap(i, j);
        }
        Permutation::from_table(table).unwrap()
    }

    #[test]
    fn snake_composites_are_identities() {
        let p = CospanProp;
        let cup = p.cup();
        let cap = p.cap();
        let id1 = p.identity(1);
        let left_snake = p
            .compose(&p.monoidal_sum(&cup, &id1), &p.monoidal_sum(&id1, &cap))
            .unwrap();
        assert_eq!(left_snake, id1);
        let right_snake = p
            .compose(&p.monoidal_sum(&id1, &cup), &p.monoidal_sum(&cap, &id1))
            .unwrap();
        assert_eq!(right_snake, id1);
    }

    #[test]
    fn cup_then_cap_leaves_a_floating_point() {
        let p = CospanProp;
        let c = p.compose(&p.cup(), &p.cap()).unwrap();
        assert_eq!(p.dom(&c), 0);
        assert_eq!(p.cod(&c), 0);
        assert_eq!(c.apex(), 1);
        assert_eq!(c.floating(), 1);
    }

    #[test]
    fn compose_with_identity() {
        let p = CospanProp;
        for f in p.enumerate_hom(2, 2, 3).unwrap() {
            assert_eq!(p.compose(&f, &p.identity(2)).unwrap(), f);
            assert_eq!(p.compose(&p.identity(2), &f).unwrap(), f);
        }
    }

    /// The fused composition must agree with composing through the standalone
    /// pushout and canonicalizing afterwards.
    #[test]
    fn fused_compose_matches_pushout_route() {
        let p = CospanProp;
        for (m, k, n) in [(0, 1, 2), (1, 1, 1), (2, 2, 2), (2, 1, 0)] {
            for f in p.enumerate_hom(m, k, 3).unwrap() {
                for g in p.enumerate_hom(k, n, 3).unwrap() {
                    let fused = cospan_compose(&f, &g).unwrap();
                    let po = crate::finset::pushout(f.right(), g.left()).unwrap();
                    let via_pushout = CospanMorphism::new(
                        compose_fn(f.left(), &po.left_leg).unwrap(),
                        compose_fn(g.right(), &po.right_leg).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(fused, via_pushout);
                }
            }
        }
    }

    #[test]
    fn permutation_cospans_compose_like_functions() {
        let p = CospanProp;
        for a in crate::finset::enumerate_permutations(3) {
            for b in crate::finset::enumerate_permutations(3) {
                let via_cospans = p
                    .compose(
                        &CospanMorphism::from_function(a.as_function()),
                        &CospanMorphism::from_function(b.as_function()),
                    )
                    .unwrap();
                let direct = CospanMorphism::from_function(a.compose(&b).unwrap().as_function());
                assert_eq!(via_cospans, direct);
            }
        }
    }

    #[test]
    fn axioms_hold_small() {
        let r = check_prop_axioms(&CospanProp, &PropBounds::new(2, 3));
        assert!(r.passed(), "{r}");
    }
}
