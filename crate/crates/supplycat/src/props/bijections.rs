//! The initial prop: hom(m, n) is the set of bijections between the ordinals
//! `m` and `n`, so it is empty unless `m = n`.

use crate::finset::{block_braiding, enumerate_permutations, Permutation};

use super::{Prop, PropError};

#[derive(Debug, Clone, Copy, Default)]
pub struct BijProp;

impl Prop for BijProp {
    type Morphism = Permutation;

    fn name(&self) -> &str {
        "bijections"
    }

    fn dom(&self, f: &Permutation) -> usize {
        f.size()
    }

    fn cod(&self, f: &Permutation) -> usize {
        f.size()
    }

    fn identity(&self, n: usize) -> Permutation {
        Permutation::identity(n)
    }

    fn compose(&self, f: &Permutation, g: &Permutation) -> Result<Permutation, PropError> {
        f.compose(g).map_err(|_| self.compose_err(f, g))
    }

    fn monoidal_sum(&self, f: &Permutation, g: &Permutation) -> Permutation {
        f.tensor(g)
    }

    fn braiding(&self, m: usize, n: usize) -> Permutation {
        block_braiding(m, n)
    }

    fn enumerate_hom(&self, m: usize, n: usize, _size_bound: usize) -> Option<Vec<Permutation>> {
        if m == n {
            Some(enumerate_permutations(m))
        } else {
            Some(vec![])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::{check_prop_axioms, PropBounds};

    #[test]
    fn hom_counts() {
        let b = BijProp;
        assert_eq!(b.enumerate_hom(3, 3, 0).unwrap().len(), 6);
        assert!(b.enumerate_hom(2, 3, 0).unwrap().is_empty());
    }

    #[test]
    fn axioms_hold() {
        let report = check_prop_axioms(&BijProp, &PropBounds::new(3, 0));
        assert!(report.passed(), "{report}");
    }
}
