//! The prop of self-dualities, modeled as unoriented one-dimensional
//! cobordisms: a morphism `m → n` is a perfect matching on the `m + n`
//! boundary points plus a count of closed circles. Composition follows
//! matched paths through the shared boundary; paths that close up become
//! circles.
//!
//! Boundary points are numbered `1..=m` (domain) then `m+1..=m+n` (codomain).

use std::fmt;

use crate::finset::block_braiding;

use super::{Prop, PropError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CobMorphism {
    dom: usize,
    cod: usize,
    /// `pairing[i]` is the 1-based partner of boundary point `i + 1`; a
    /// fixed-point-free involution on `dom + cod` points.
    pairing: Vec<usize>,
    circles: usize,
}

impl CobMorphism {
    pub fn new(
        dom: usize,
        cod: usize,
        pairing: Vec<usize>,
        circles: usize,
    ) -> Result<Self, PropError> {
        let total = dom + cod;
        if pairing.len() != total {
            return Err(PropError::Invalid(format!(
                "pairing on {} points for boundary {}+{}",
                pairing.len(),
                dom,
                cod
            )));
        }
        for (i, &p) in pairing.iter().enumerate() {
            if p == 0 || p > total || p == i + 1 || pairing[p - 1] != i + 1 {
                return Err(PropError::Invalid(
                    "pairing must be a fixed-point-free involution".to_string(),
                ));
            }
        }
        Ok(CobMorphism {
            dom,
            cod,
            pairing,
            circles,
        })
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn circles(&self) -> usize {
        self.circles
    }

    /// Partner of a 1-based boundary point.
    pub fn partner(&self, i: usize) -> usize {
        self.pairing[i - 1]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.pairing.len() {
            let j = self.partner(i);
            if i < j {
                out.push((i, j));
            }
        }
        out
    }

    pub fn with_circles(&self, circles: usize) -> Self {
        CobMorphism {
            circles,
            ..self.clone()
        }
    }

    /// The cup `0 → 2`: the two codomain points are joined.
    pub fn cup() -> Self {
        CobMorphism {
            dom: 0,
            cod: 2,
            pairing: vec![2, 1],
            circles: 0,
        }
    }

    /// The cap `2 → 0`: the two domain points are joined.
    pub fn cap() -> Self {
        CobMorphism {
            dom: 2,
            cod: 0,
            pairing: vec![2, 1],
            circles: 0,
        }
    }
}

impl fmt::Display for CobMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{} pairs{:?}", self.dom, self.cod, self.pairs())?;
        if self.circles > 0 {
            write!(f, " +{}○", self.circles)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CobProp;

impl Prop for CobProp {
    type Morphism = CobMorphism;

    fn name(&self) -> &str {
        "cobordisms"
    }

    fn dom(&self, f: &CobMorphism) -> usize {
        f.dom
    }

    fn cod(&self, f: &CobMorphism) -> usize {
        f.cod
    }

    fn identity(&self, n: usize) -> CobMorphism {
        let mut pairing = vec![0usize; 2 * n];
        for i in 1..=n {
            pairing[i - 1] = n + i;
            pairing[n + i - 1] = i;
        }
        CobMorphism {
            dom: n,
            cod: n,
            pairing,
            circles: 0,
        }
    }

    fn compose(&self, f: &CobMorphism, g: &CobMorphism) -> Result<CobMorphism, PropError> {
        if f.cod != g.dom {
            return Err(self.compose_err(f, g));
        }
        let m = f.dom;
        let k = f.cod;
        let p = g.cod;

        // A walk state (side, pt) means "follow `side`'s pairing from boundary
        // point pt" where side = true is f, false is g. One step follows the
        // pairing and, when it lands on an interface point (f-codomain /
        // g-domain), hops across onto the other morphism. Everything touched
        // is marked visited. Returns (state, reached_free_end).
        #[allow(clippy::too_many_arguments)]
        fn walk_step(
            f: &CobMorphism,
            g: &CobMorphism,
            m: usize,
            k: usize,
            side: bool,
            pt: usize,
            visited_f: &mut [bool],
            visited_g: &mut [bool],
        ) -> (bool, usize, bool) {
            if side {
                let q = f.partner(pt);
                visited_f[q - 1] = true;
                if q <= m {
                    (true, q, true)
                } else {
                    let wire = q - m;
                    visited_g[wire - 1] = true;
                    (false, wire, false)
                }
            } else {
                let q = g.partner(pt);
                visited_g[q - 1] = true;
                if q > k {
                    (false, q, true)
                } else {
                    visited_f[m + q - 1] = true;
                    (true, m + q, false)
                }
            }
        }

        let total = m + p;
        let mut pairing = vec![0usize; total];
        let mut visited_f = vec![false; m + k];
        let mut visited_g = vec![false; k + p];

        // Open paths between free ends: f's domain points and g's codomain
        // points. In the result, f-domain point i stays i and g-codomain
        // point k + j becomes m + j.
        let free_ends: Vec<(bool, usize)> = (1..=m)
            .map(|i| (true, i))
            .chain((1..=p).map(|j| (false, k + j)))
            .collect();
        for &(in_f, start) in &free_ends {
            let seen = if in_f {
                &mut visited_f[start - 1]
            } else {
                &mut visited_g[start - 1]
            };
            if *seen {
                continue;
            }
            *seen = true;
            let (mut side, mut pt) = (in_f, start);
            loop {
                let (ns, np, free) =
                    walk_step(f, g, m, k, side, pt, &mut visited_f, &mut visited_g);
                if free {
                    let a = result_index(in_f, start, m, k);
                    let b = result_index(ns, np, m, k);
                    pairing[a - 1] = b;
                    pairing[b - 1] = a;
                    break;
                }
                side = ns;
                pt = np;
            }
        }

        // Remaining interface wires lie on closed loops.
        let mut loops = 0usize;
        for q in 1..=k {
            if visited_f[m + q - 1] {
                continue;
            }
            loops += 1;
            visited_f[m + q - 1] = true;
            visited_g[q - 1] = true;
            let (mut side, mut pt) = (true, m + q);
            loop {
                let (ns, np, free) =
                    walk_step(f, g, m, k, side, pt, &mut visited_f, &mut visited_g);
                debug_assert!(!free, "closed loops have no free ends");
                if (ns, np) == (true, m + q) {
                    break;
                }
                side = ns;
                pt = np;
            }
        }
        CobMorphism::new(m, p, pairing, f.circles + g.circles + loops)
    }

    fn monoidal_sum(&self, f: &CobMorphism, g: &CobMorphism) -> CobMorphism {
        let (m1, n1, m2, n2) = (f.dom, f.cod, g.dom, g.cod);
        // Point relabeling into the combined boundary.
        let relabel_f = |i: usize| if i <= m1 { i } else { m1 + m2 + (i - m1) };
        let relabel_g = |i: usize| {
            if i <= m2 {
                m1 + i
            } else {
                m1 + m2 + n1 + (i - m2)
            }
        };
        let total = m1 + m2 + n1 + n2;
        let mut pairing = vec![0usize; total];
        for (a, b) in f.pairs() {
            let (a, b) = (relabel_f(a), relabel_f(b));
            pairing[a - 1] = b;
            pairing[b - 1] = a;
        }
        for (a, b) in g.pairs() {
            let (a, b) = (relabel_g(a), relabel_g(b));
            pairing[a - 1] = b;
            pairing[b - 1] = a;
        }
        CobMorphism {
            dom: m1 + m2,
            cod: n1 + n2,
            pairing,
            circles: f.circles + g.circles,
        }
    }

    fn braiding(&self, m: usize, n: usize) -> CobMorphism {
        let p = block_braiding(m, n);
        let total = m + n;
        let mut pairing = vec![0usize; 2 * total];
        for i in 1..=total {
            let j = total + p.apply(i);
            pairing[i - 1] = j;
            pairing[j - 1] = i;
        }
        CobMorphism {
            dom: total,
            cod: total,
            pairing,
            circles: 0,
        }
    }

    /// Matchings on `m + n` points with at most `size_bound` circles.
    fn enumerate_hom(&self, m: usize, n: usize, size_bound: usize) -> Option<Vec<CobMorphism>> {
        let total = m + n;
        if !total.is_multiple_of(2) {
            return Some(vec![]);
        }
        let mut matchings: Vec<Vec<usize>> = Vec::new();
        let mut current = vec![0usize; total];
        fn rec(current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let total = current.len();
            let first = match current.iter().position(|&x| x == 0) {
                None => {
                    out.push(current.clone());
                    return;
                }
                Some(i) => i,
            };
            for j in first + 1..total {
                if current[j] == 0 {
                    current[first] = j + 1;
                    current[j] = first + 1;
                    rec(current, out);
                    current[first] = 0;
                    current[j] = 0;
                }
            }
        }
        rec(&mut current, &mut matchings);
        let mut out = Vec::new();
        for pairing in matchings {
            for circles in 0..=size_bound {
                out.push(CobMorphism {
                    dom: m,
                    cod: n,
                    pairing: pairing.clone(),
                    circles,
                });
            }
        }
        Some(out)
    }
}

fn result_index(in_f: bool, pt: usize, m: usize, k: usize) -> usize {
    if in_f {
        debug_assert!(pt <= m);
        pt
    } else {
        debug_assert!(pt > k);
        m + (pt - k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::{check_prop_axioms, PropBounds};

    #[test]
    fn cup_cap_composite_closes_a_circle() {
        let p = CobProp;
        let c = p.compose(&CobMorphism::cup(), &CobMorphism::cap()).unwrap();
        assert_eq!(c.dom(), 0);
        assert_eq!(c.cod(), 0);
        assert!(c.pairs().is_empty());
        assert_eq!(c.circles(), 1);
    }

    #[test]
    fn snake_composites_are_identity() {
        let p = CobProp;
        let id1 = p.identity(1);
        let lhs = p
            .compose(
                &p.monoidal_sum(&CobMorphism::cup(), &id1),
                &p.monoidal_sum(&id1, &CobMorphism::cap()),
            )
            .unwrap();
        assert_eq!(lhs, id1);
        let rhs = p
            .compose(
                &p.monoidal_sum(&id1, &CobMorphism::cup()),
                &p.monoidal_sum(&CobMorphism::cap(), &id1),
            )
            .unwrap();
        assert_eq!(rhs, id1);
    }

    #[test]
    fn identity_composes_trivially() {
        let p = CobProp;
        for n in 0..=3 {
            let id = p.identity(n);
            assert_eq!(p.compose(&id, &id).unwrap(), id);
            assert_eq!(id.circles(), 0);
        }
    }

    #[test]
    fn circles_add_under_sum() {
        let p = CobProp;
        let a = p.identity(1).with_circles(2);
        let b = CobMorphism::cup().with_circles(1);
        assert_eq!(p.monoidal_sum(&a, &b).circles(), 3);
    }

    #[test]
    fn hom_counts_are_double_factorials() {
        let p = CobProp;
        // Matchings on 4 points: 3; on 6 points: 15. One circle level.
        assert_eq!(p.enumerate_hom(2, 2, 0).unwrap().len(), 3);
        assert_eq!(p.enumerate_hom(3, 3, 0).unwrap().len(), 15);
        assert_eq!(p.enumerate_hom(1, 2, 0).unwrap().len(), 0);
        assert_eq!(p.enumerate_hom(0, 0, 2).unwrap().len(), 3);
    }

    #[test]
    fn axioms_hold() {
        let r = check_prop_axioms(&CobProp, &PropBounds::new(3, 1));
        assert!(r.passed(), "{r}");
    }
}
