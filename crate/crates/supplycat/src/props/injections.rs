//! The free prop on a single point `0 → 1`: morphisms `m → n` are injective
//! functions, where outputs outside the image are freshly created points.

use crate::finset::{block_braiding, compose_fn, enumerate_functions, tensor_fn, FinFunction};

use super::{Prop, PropError};

#[derive(Debug, Clone, Copy, Default)]
pub struct InjProp;

impl InjProp {
    /// The generating point `0 → 1`.
    pub fn point(&self) -> FinFunction {
        FinFunction::new(0, 1, vec![]).unwrap()
    }
}

impl Prop for InjProp {
    type Morphism = FinFunction;

    fn name(&self) -> &str {
        "injections"
    }

    fn dom(&self, f: &FinFunction) -> usize {
        f.dom()
    }

    fn cod(&self, f: &FinFunction) -> usize {
        f.cod()
    }

    fn identity(&self, n: usize) -> FinFunction {
        FinFunction::identity(n)
    }

    fn compose(&self, f: &FinFunction, g: &FinFunction) -> Result<FinFunction, PropError> {
        compose_fn(f, g).map_err(|_| self.compose_err(f, g))
    }

    fn monoidal_sum(&self, f: &FinFunction, g: &FinFunction) -> FinFunction {
        tensor_fn(f, g)
    }

    fn braiding(&self, m: usize, n: usize) -> FinFunction {
        block_braiding(m, n).as_function().clone()
    }

    fn enumerate_hom(&self, m: usize, n: usize, _size_bound: usize) -> Option<Vec<FinFunction>> {
        Some(
            enumerate_functions(m, n)
                .into_iter()
                .filter(FinFunction::is_injective)
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::{check_prop_axioms, PropBounds};

    #[test]
    fn hom_counts_are_falling_factorials() {
        assert_eq!(InjProp.enumerate_hom(2, 3, 0).unwrap().len(), 6);
        assert_eq!(InjProp.enumerate_hom(3, 2, 0).unwrap().len(), 0);
        assert_eq!(InjProp.enumerate_hom(0, 2, 0).unwrap().len(), 1);
    }

    #[test]
    fn axioms_hold() {
        let r = check_prop_axioms(&InjProp, &PropBounds::new(3, 0));
        assert!(r.passed(), "{r}");
    }
}
