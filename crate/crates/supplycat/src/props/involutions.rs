//! The prop of involution-marked wires. A morphism on `m` wires is a
//! permutation together with one boolean flag per input wire; flags compose
//! by XOR along wires, so flipping a wire twice is the identity.
//!
//! This is the wreath completion of the two-element involution hom-sets: the
//! distinguished involution on `m` wires is `(id, all marks set)`, and the
//! completion is the smallest family closed under composition and the
//! monoidal sum that contains it together with the symmetries.

use std::fmt;

use crate::finset::{block_braiding, enumerate_permutations, Permutation};

use super::{Prop, PropError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvolutionMorphism {
    pub perm: Permutation,
    /// `flags[i]` marks the wire entering at input `i + 1`.
    pub flags: Vec<bool>,
}

impl InvolutionMorphism {
    pub fn new(perm: Permutation, flags: Vec<bool>) -> Self {
        assert_eq!(perm.size(), flags.len());
        InvolutionMorphism { perm, flags }
    }

    /// The distinguished involution on `m` wires.
    pub fn involution(m: usize) -> Self {
        InvolutionMorphism {
            perm: Permutation::identity(m),
            flags: vec![true; m],
        }
    }
}

impl fmt::Display for InvolutionMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⟨", self.perm)?;
        for (i, &b) in self.flags.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", if b { "i" } else { "·" })?;
        }
        write!(f, "⟩")
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct InvolutionProp;

impl Prop for InvolutionProp {
    type Morphism = InvolutionMorphism;

    fn name(&self) -> &str {
        "involutions"
    }

    fn dom(&self, f: &InvolutionMorphism) -> usize {
        f.perm.size()
    }

    fn cod(&self, f: &InvolutionMorphism) -> usize {
        f.perm.size()
    }

    fn identity(&self, n: usize) -> InvolutionMorphism {
        InvolutionMorphism {
            perm: Permutation::identity(n),
            flags: vec![false; n],
        }
    }

    fn compose(
        &self,
        f: &InvolutionMorphism,
        g: &InvolutionMorphism,
    ) -> Result<InvolutionMorphism, PropError> {
        let perm = f
            .perm
            .compose(&g.perm)
            .map_err(|_| self.compose_err(f, g))?;
        // The wire entering f at input i exits at f.perm(i), so it picks up
        // g's mark at that position.
        let flags = (1..=f.perm.size())
            .map(|i| f.flags[i - 1] ^ g.flags[f.perm.apply(i) - 1])
            .collect();
        Ok(InvolutionMorphism { perm, flags })
    }

    fn monoidal_sum(&self, f: &InvolutionMorphism, g: &InvolutionMorphism) -> InvolutionMorphism {
        let perm = f.perm.tensor(&g.perm);
        let mut flags = f.flags.clone();
        flags.extend_from_slice(&g.flags);
        InvolutionMorphism { perm, flags }
    }

    fn braiding(&self, m: usize, n: usize) -> InvolutionMorphism {
        InvolutionMorphism {
            perm: block_braiding(m, n),
            flags: vec![false; m + n],
        }
    }

    fn enumerate_hom(
        &self,
        m: usize,
        n: usize,
        _size_bound: usize,
    ) -> Option<Vec<InvolutionMorphism>> {
        if m != n {
            return Some(vec![]);
        }
        let mut out = Vec::new();
        for perm in enumerate_permutations(m) {
            for mask in 0..(1usize << m) {
                let flags = (0..m).map(|i| mask >> i & 1 == 1).collect();
                out.push(InvolutionMorphism {
                    perm: perm.clone(),
                    flags,
                });
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::{check_prop_axioms, PropBounds};

    #[test]
    fn involution_squares_to_identity() {
        let p = InvolutionProp;
        for m in 0..=4 {
            let i = InvolutionMorphism::involution(m);
            assert_eq!(p.compose(&i, &i).unwrap(), p.identity(m));
        }
    }

    #[test]
    fn involutions_add_under_sum() {
        let p = InvolutionProp;
        for m in 0..=3 {
            for n in 0..=3 {
                let lhs = p.monoidal_sum(
                    &InvolutionMorphism::involution(m),
                    &InvolutionMorphism::involution(n),
                );
                assert_eq!(lhs, InvolutionMorphism::involution(m + n));
            }
        }
    }

    #[test]
    fn hom_counts_are_wreath_orders() {
        let p = InvolutionProp;
        assert_eq!(p.enumerate_hom(3, 3, 0).unwrap().len(), 48);
        assert_eq!(p.enumerate_hom(2, 2, 0).unwrap().len(), 8);
        assert!(p.enumerate_hom(1, 2, 0).unwrap().is_empty());
    }

    #[test]
    fn axioms_hold() {
        let report = check_prop_axioms(&InvolutionProp, &PropBounds::new(3, 0));
        assert!(report.passed(), "{report}");
    }
}
