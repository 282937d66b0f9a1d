//! Finite-set combinatorics: total functions between ordinals, permutations,
//! block braidings, pushouts, and exhaustive enumeration.
//!
//! Ordinals are 1-based: the ordinal `n` is `{1, …, n}` and every table entry
//! is a position in that range. Everything here is an immutable value and all
//! operations are pure.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FinSetError {
    #[error("cannot compose {f}: codomain {fcod} differs from domain {gdom} of {g}")]
    ComposeMismatch {
        f: String,
        fcod: usize,
        g: String,
        gdom: usize,
    },
    #[error("span legs must share a domain: {left} vs {right}")]
    SpanMismatch { left: usize, right: usize },
    #[error("table entry {entry} out of range 1..={cod}")]
    EntryOutOfRange { entry: usize, cod: usize },
    #[error("table length {len} does not match domain {dom}")]
    TableLength { len: usize, dom: usize },
    #[error("table is not a bijection")]
    NotBijective,
}

/// A total function between finite ordinals, stored as its value table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinFunction {
    dom: usize,
    cod: usize,
    table: Vec<usize>,
}

impl FinFunction {
    pub fn new(dom: usize, cod: usize, table: Vec<usize>) -> Result<Self, FinSetError> {
        if table.len() != dom {
            return Err(FinSetError::TableLength {
                len: table.len(),
                dom,
            });
        }
        for &e in &table {
            if e == 0 || e > cod {
                return Err(FinSetError::EntryOutOfRange { entry: e, cod });
            }
        }
        Ok(FinFunction { dom, cod, table })
    }

    pub fn identity(n: usize) -> Self {
        FinFunction {
            dom: n,
            cod: n,
            table: (1..=n).collect(),
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Value at a 1-based position.
    pub fn apply(&self, i: usize) -> usize {
        self.table[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.table.iter().enumerate().all(|(i, &e)| e == i + 1)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        for &e in &self.table {
            if seen[e - 1] {
                return false;
            }
            seen[e - 1] = true;
        }
        true
    }

    pub fn is_bijective(&self) -> bool {
        self.dom == self.cod && self.is_injective()
    }
}

impl fmt::Display for FinFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{}:[", self.dom, self.cod)?;
        for (i, e) in self.table.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// Composition in diagrammatic order: `(compose_fn(f, g))(i) = g(f(i))`.
pub fn compose_fn(f: &FinFunction, g: &FinFunction) -> Result<FinFunction, FinSetError> {
    if f.cod != g.dom {
        return Err(FinSetError::ComposeMismatch {
            f: f.to_string(),
            fcod: f.cod,
            g: g.to_string(),
            gdom: g.dom,
        });
    }
    let table = f.table.iter().map(|&i| g.table[i - 1]).collect();
    Ok(FinFunction {
        dom: f.dom,
        cod: g.cod,
        table,
    })
}

/// Disjoint union of functions, with the second block shifted past the first.
pub fn tensor_fn(f: &FinFunction, g: &FinFunction) -> FinFunction {
    let mut table = f.table.clone();
    table.extend(g.table.iter().map(|&e| e + f.cod));
    FinFunction {
        dom: f.dom + g.dom,
        cod: f.cod + g.cod,
        table,
    }
}

/// A bijective endo-function on an ordinal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(FinFunction);

impl Permutation {
    pub fn from_function(f: FinFunction) -> Result<Self, FinSetError> {
        if !f.is_bijective() {
            return Err(FinSetError::NotBijective);
        }
        Ok(Permutation(f))
    }

    pub fn from_table(table: Vec<usize>) -> Result<Self, FinSetError> {
        let n = table.len();
        Self::from_function(FinFunction::new(n, n, table)?)
    }

    pub fn identity(n: usize) -> Self {
        Permutation(FinFunction::identity(n))
    }

    pub fn size(&self) -> usize {
        self.0.dom
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0.apply(i)
    }

    pub fn as_function(&self) -> &FinFunction {
        &self.0
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation, FinSetError> {
        Ok(Permutation(compose_fn(&self.0, &other.0)?))
    }

    pub fn tensor(&self, other: &Permutation) -> Permutation {
        Permutation(tensor_fn(&self.0, &other.0))
    }

    pub fn inverse(&self) -> Permutation {
        let n = self.size();
        let mut table = vec![0usize; n];
        for i in 1..=n {
            table[self.apply(i) - 1] = i;
        }
        Permutation(FinFunction {
            dom: n,
            cod: n,
            table,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// Adjacent transpositions (1-based positions `j ↔ j+1`) whose left-to-right
    /// composite equals this permutation.
    pub fn adjacent_transpositions(&self) -> Vec<usize> {
        // Bubble sort the destination array; each swap of slots j, j+1 is the
        // transposition applied at that point of the composite.
        let n = self.size();
        let mut dest: Vec<usize> = (1..=n).map(|i| self.apply(i)).collect();
        let mut swaps = Vec::new();
        loop {
            let mut moved = false;
            for j in 0..n.saturating_sub(1) {
                if dest[j] > dest[j + 1] {
                    dest.swap(j, j + 1);
                    swaps.push(j + 1);
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        swaps
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The braiding permutation on `m + n` that moves the first block of `m` past
/// the block of `n`: positions `i ≤ m` go to `n + i`, positions `m + j` go to `j`.
pub fn block_braiding(m: usize, n: usize) -> Permutation {
    let mut table = Vec::with_capacity(m + n);
    for i in 1..=m {
        table.push(n + i);
    }
    for j in 1..=n {
        table.push(j);
    }
    Permutation(FinFunction {
        dom: m + n,
        cod: m + n,
        table,
    })
}

/// The grid transpose on `a·b`, reading `a·b` as `b` blocks of size `a` and
/// producing `a` blocks of size `b`: slot `i` of block `j` goes to slot `j` of
/// block `i`.
pub fn transpose_perm(a: usize, b: usize) -> Permutation {
    let mut table = vec![0usize; a * b];
    for j in 1..=b {
        for i in 1..=a {
            table[(j - 1) * a + i - 1] = (i - 1) * b + j;
        }
    }
    Permutation(FinFunction {
        dom: a * b,
        cod: a * b,
        table,
    })
}

/// Pushout of a span `f: a→b`, `g: a→c`, with apex classes renumbered by their
/// smallest member (elements of `b` ordered before elements of `c`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushoutResult {
    pub apex: usize,
    pub left_leg: FinFunction,
    pub right_leg: FinFunction,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            // Root at the smaller index so representatives are canonical.
            let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
            self.parent[hi] = lo;
        }
    }
}

#[allow(clippy::needless_range_loop)]
pub fn pushout(f: &FinFunction, g: &FinFunction) -> Result<PushoutResult, FinSetError> {
    if f.dom != g.dom {
        return Err(FinSetError::SpanMismatch {
            left: f.dom,
            right: g.dom,
        });
    }
    let b = f.cod;
    let c = g.cod;
    let mut uf = UnionFind::new(b + c);
    for i in 1..=f.dom {
        uf.union(f.apply(i) - 1, b + g.apply(i) - 1);
    }
    // Number classes by smallest member, walking b-elements then c-elements.
    let mut class_of = vec![0usize; b + c];
    let mut next = 0usize;
    for x in 0..b + c {
        let root = uf.find(x);
        if root == x {
            next += 1;
            class_of[x] = next;
        }
    }
    let apex = next;
    let left_table: Vec<usize> = (0..b).map(|x| class_of[uf.find(x)]).collect();
    let right_table: Vec<usize> = (0..c).map(|x| class_of[uf.find(b + x)]).collect();
    Ok(PushoutResult {
        apex,
        left_leg: FinFunction {
            dom: b,
            cod: apex,
            table: left_table,
        },
        right_leg: FinFunction {
            dom: c,
            cod: apex,
            table: right_table,
        },
    })
}

/// All `n^m` functions `m → n` in lexicographic table order.
pub fn enumerate_functions(m: usize, n: usize) -> Vec<FinFunction> {
    if m == 0 {
        return vec![FinFunction {
            dom: 0,
            cod: n,
            table: vec![],
        }];
    }
    if n == 0 {
        return vec![];
    }
    let mut out = Vec::with_capacity(n.pow(m as u32));
    let mut table = vec![1usize; m];
    loop {
        out.push(FinFunction {
            dom: m,
            cod: n,
            table: table.clone(),
        });
        let mut pos = m;
        loop {
            if pos == 0 {
                return out;
            }
            if table[pos - 1] < n {
                table[pos - 1] += 1;
                for t in table.iter_mut().skip(pos) {
                    *t = 1;
                }
                break;
            }
            pos -= 1;
        }
    }
}

/// All `n!` permutations of the ordinal `n`, in lexicographic table order.
pub fn enumerate_permutations(n: usize) -> Vec<Permutation> {
    enumerate_functions(n, n)
        .into_iter()
        .filter(|f| f.is_bijective())
        .map(Permutation)
        .collect()
}

/// Deterministic splittable PRNG used for all sampled (non-exhaustive) checks,
/// so that reports are reproducible for a fixed seed.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn bool(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fun(dom: usize, cod: usize, table: &[usize]) -> FinFunction {
        FinFunction::new(dom, cod, table.to_vec()).unwrap()
    }

    #[test]
    fn compose_pointwise() {
        let f = fun(2, 1, &[1, 1]);
        let g = fun(1, 3, &[2]);
        assert_eq!(compose_fn(&f, &g).unwrap(), fun(2, 3, &[2, 2]));

        let id3 = FinFunction::identity(3);
        assert_eq!(compose_fn(&id3, &id3).unwrap(), id3);

        let f = fun(3, 2, &[1, 2, 1]);
        let swap = fun(2, 2, &[2, 1]);
        assert_eq!(compose_fn(&f, &swap).unwrap(), fun(3, 2, &[2, 1, 2]));
    }

    #[test]
    fn compose_mismatch_reports_signatures() {
        let f = fun(1, 2, &[1]);
        let g = fun(3, 1, &[1, 1, 1]);
        let err = compose_fn(&f, &g).unwrap_err();
        assert!(matches!(
            err,
            FinSetError::ComposeMismatch {
                fcod: 2,
                gdom: 3,
                ..
            }
        ));
    }

    #[test]
    fn tensor_shifts_second_block() {
        let eta = fun(0, 1, &[]);
        let t = tensor_fn(&FinFunction::identity(1), &eta);
        assert_eq!(t, fun(1, 2, &[1]));

        let mu = fun(2, 1, &[1, 1]);
        assert_eq!(tensor_fn(&mu, &mu), fun(4, 2, &[1, 1, 2, 2]));

        let f = fun(3, 2, &[2, 1, 1]);
        assert_eq!(tensor_fn(&f, &FinFunction::identity(0)), f);
        assert_eq!(tensor_fn(&FinFunction::identity(0), &f), f);
    }

    #[test]
    fn braiding_table() {
        assert_eq!(block_braiding(1, 1).as_function(), &fun(2, 2, &[2, 1]));
        assert!(block_braiding(0, 4).is_identity());
        assert!(block_braiding(4, 0).is_identity());
        assert_eq!(block_braiding(2, 1).as_function(), &fun(3, 3, &[2, 3, 1]));
    }

    #[test]
    fn braiding_self_inverse_and_natural() {
        for m in 0..=3 {
            for n in 0..=3 {
                let b = block_braiding(m, n);
                let back = block_braiding(n, m);
                assert!(b.compose(&back).unwrap().is_identity());
            }
        }
        // Naturality: (f + g) ; braid(cod f, cod g) = braid(dom f, dom g) ; (g + f).
        for (fd, fc) in [(1, 2), (2, 1), (2, 2), (0, 1), (3, 1)] {
            for (gd, gc) in [(1, 1), (2, 1), (1, 2), (0, 2)] {
                for f in enumerate_functions(fd, fc) {
                    for g in enumerate_functions(gd, gc) {
                        let lhs =
                            compose_fn(&tensor_fn(&f, &g), block_braiding(fc, gc).as_function())
                                .unwrap();
                        let rhs =
                            compose_fn(block_braiding(fd, gd).as_function(), &tensor_fn(&g, &f))
                                .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn transpose_perm_grid() {
        // 2 blocks of 2: slots (1,2|3,4) go to (1,3|2,4).
        let t = transpose_perm(2, 2);
        assert_eq!(t.as_function().table(), &[1, 3, 2, 4]);
        assert!(transpose_perm(1, 3).is_identity());
        assert!(transpose_perm(3, 1).is_identity());
        for a in 0..=3 {
            for b in 0..=3 {
                let t = transpose_perm(a, b);
                let back = transpose_perm(b, a);
                assert!(t.compose(&back).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn composition_associative_unital_exhaustive() {
        let sizes = 0..=3usize;
        for a in sizes.clone() {
            for b in sizes.clone() {
                for f in enumerate_functions(a, b) {
                    let ia = FinFunction::identity(a);
                    let ib = FinFunction::identity(b);
                    assert_eq!(compose_fn(&ia, &f).unwrap(), f);
                    assert_eq!(compose_fn(&f, &ib).unwrap(), f);
                }
            }
        }
        for a in 0..=2usize {
            for b in 0..=2usize {
                for c in 0..=2usize {
                    for d in 0..=2usize {
                        for f in enumerate_functions(a, b) {
                            for g in enumerate_functions(b, c) {
                                for h in enumerate_functions(c, d) {
                                    let fg = compose_fn(&f, &g).unwrap();
                                    let gh = compose_fn(&g, &h).unwrap();
                                    assert_eq!(
                                        compose_fn(&fg, &h).unwrap(),
                                        compose_fn(&f, &gh).unwrap()
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn interchange_exhaustive() {
        let arities: Vec<(usize, usize)> =
            (0..=2).flat_map(|m| (0..=2).map(move |n| (m, n))).collect();
        for &(a1, b1) in &arities {
            for c1 in 0..=2usize {
                for &(a2, b2) in &arities {
                    for c2 in 0..=2usize {
                        for f in enumerate_functions(a1, b1) {
                            for h in enumerate_functions(b1, c1) {
                                for g in enumerate_functions(a2, b2) {
                                    for k in enumerate_functions(b2, c2) {
                                        let lhs =
                                            compose_fn(&tensor_fn(&f, &g), &tensor_fn(&h, &k))
                                                .unwrap();
                                        let rhs = tensor_fn(
                                            &compose_fn(&f, &h).unwrap(),
                                            &compose_fn(&g, &k).unwrap(),
                                        );
                                        assert_eq!(lhs, rhs);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_functions(2, 2).len(), 4);
        assert_eq!(enumerate_functions(0, 5).len(), 1);
        assert!(enumerate_functions(0, 5)[0].table().is_empty());
        assert!(enumerate_functions(1, 0).is_empty());
        assert_eq!(enumerate_functions(3, 2).len(), 8);
        assert_eq!(enumerate_permutations(3).len(), 6);
        assert_eq!(enumerate_permutations(0).len(), 1);
    }

    #[test]
    fn pushout_examples() {
        // Span 2 ←f– 1 –g→ 2 hitting the first element on both sides.
        let f = fun(1, 2, &[1]);
        let g = fun(1, 2, &[1]);
        let p = pushout(&f, &g).unwrap();
        assert_eq!(p.apex, 3);
        assert_eq!(p.left_leg, fun(2, 3, &[1, 2]));
        assert_eq!(p.right_leg, fun(2, 3, &[1, 3]));

        // Empty span: apex is the disjoint union with its coprojections.
        let f = fun(0, 2, &[]);
        let g = fun(0, 3, &[]);
        let p = pushout(&f, &g).unwrap();
        assert_eq!(p.apex, 5);
        assert_eq!(p.left_leg, fun(2, 5, &[1, 2]));
        assert_eq!(p.right_leg, fun(3, 5, &[3, 4, 5]));

        let id = FinFunction::identity(1);
        let p = pushout(&id, &id).unwrap();
        assert_eq!(p.apex, 1);
        assert!(p.left_leg.is_identity() && p.right_leg.is_identity());
    }

    /// Universal-property oracle: the result commutes with the span, and for
    /// every cocone into a small vertex there is exactly one mediating map.
    fn check_pushout_universal(f: &FinFunction, g: &FinFunction) {
        let p = pushout(f, g).unwrap();
        assert_eq!(
            compose_fn(f, &p.left_leg).unwrap(),
            compose_fn(g, &p.right_leg).unwrap()
        );
        for v in 0..=p.apex + 1 {
            for u in enumerate_functions(f.cod(), v) {
                for w in enumerate_functions(g.cod(), v) {
                    if compose_fn(f, &u).unwrap() != compose_fn(g, &w).unwrap() {
                        continue;
                    }
                    let mediators: Vec<_> = enumerate_functions(p.apex, v)
                        .into_iter()
                        .filter(|h| {
                            compose_fn(&p.left_leg, h).unwrap() == u
                                && compose_fn(&p.right_leg, h).unwrap() == w
                        })
                        .collect();
                    assert_eq!(mediators.len(), 1, "cocone must factor uniquely");
                }
            }
        }
    }

    #[test]
    fn pushout_universal_property_small() {
        for a in 0..=2usize {
            for b in 0..=2usize {
                for c in 0..=2usize {
                    for f in enumerate_functions(a, b) {
                        for g in enumerate_functions(a, c) {
                            check_pushout_universal(&f, &g);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pushout_symmetric_up_to_iso() {
        for a in 0..=2usize {
            for b in 0..=3usize {
                for c in 0..=3usize {
                    for f in enumerate_functions(a, b) {
                        for g in enumerate_functions(a, c) {
                            let p = pushout(&f, &g).unwrap();
                            let q = pushout(&g, &f).unwrap();
                            assert_eq!(p.apex, q.apex);
                            let found = enumerate_permutations(p.apex).into_iter().any(|h| {
                                compose_fn(&p.left_leg, h.as_function()).unwrap() == q.right_leg
                                    && compose_fn(&p.right_leg, h.as_function()).unwrap()
                                        == q.left_leg
                            });
                            assert!(found, "pushouts of swapped spans must be isomorphic");
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn permutation_inverse_roundtrip(table in proptest::sample::select(
            enumerate_permutations(4).iter().map(|p| p.as_function().table().to_vec()).collect::<Vec<_>>()
        )) {
            let p = Permutation::from_table(table).unwrap();
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        }

        #[test]
        fn adjacent_transpositions_rebuild(table in proptest::sample::select(
            enumerate_permutations(4).iter().map(|p| p.as_function().table().to_vec()).collect::<Vec<_>>()
        )) {
            let p = Permutation::from_table(table).unwrap();
            let n = p.size();
            let mut acc = Permutation::identity(n);
            for j in p.adjacent_transpositions() {
                let mut swap = Permutation::identity(j - 1);
                swap = swap.tensor(&block_braiding(1, 1));
                swap = swap.tensor(&Permutation::identity(n - j - 1));
                acc = acc.compose(&swap).unwrap();
            }
            prop_assert_eq!(acc, p);
        }
    }
}
