//! The prop of finite-set functions (the theory of commutative monoids) and
//! its formal dual (the theory of commutative comonoids).

use std::fmt;

use crate::finset::{block_braiding, compose_fn, enumerate_functions, tensor_fn, FinFunction};

use super::{Prop, PropError};

/// Skeleton of finite sets: hom(m, n) is every function `m → n`.
#[derive(Debug, Clone, Copy, Default)]
pub struct FinSetProp;

impl Prop for FinSetProp {
    type Morphism = FinFunction;

    fn name(&self) -> &str {
        "finset"
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
        Some(enumerate_functions(m, n))
    }
}

/// A morphism `m → n` of the dual prop: a function `n → m` composed in the
/// reversed order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpFinFunction(pub FinFunction);

impl OpFinFunction {
    pub fn inner(&self) -> &FinFunction {
        &self.0
    }
}

impl fmt::Display for OpFinFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "op({})", self.0)
    }
}

/// Formal dual of [`FinSetProp`]; no separate data, just reversed composition.
#[derive(Debug, Clone, Copy, Default)]
pub struct FinSetOpProp;

impl FinSetOpProp {
    /// The comonoid comultiplication on one wire: `1 → 2`.
    pub fn comult(&self) -> OpFinFunction {
        OpFinFunction(FinFunction::new(2, 1, vec![1, 1]).unwrap())
    }

    /// The comonoid counit on one wire: `1 → 0`.
    pub fn counit(&self) -> OpFinFunction {
        OpFinFunction(FinFunction::new(0, 1, vec![]).unwrap())
    }
}

impl Prop for FinSetOpProp {
    type Morphism = OpFinFunction;

    fn name(&self) -> &str {
        "finset-op"
    }

    fn dom(&self, f: &OpFinFunction) -> usize {
        f.0.cod()
    }

    fn cod(&self, f: &OpFinFunction) -> usize {
        f.0.dom()
    }

    fn identity(&self, n: usize) -> OpFinFunction {
        OpFinFunction(FinFunction::identity(n))
    }

    fn compose(&self, f: &OpFinFunction, g: &OpFinFunction) -> Result<OpFinFunction, PropError> {
        compose_fn(&g.0, &f.0)
            .map(OpFinFunction)
            .map_err(|_| self.compose_err(f, g))
    }

    fn monoidal_sum(&self, f: &OpFinFunction, g: &OpFinFunction) -> OpFinFunction {
        OpFinFunction(tensor_fn(&f.0, &g.0))
    }

    fn braiding(&self, m: usize, n: usize) -> OpFinFunction {
        OpFinFunction(block_braiding(n, m).as_function().clone())
    }

    fn enumerate_hom(&self, m: usize, n: usize, _size_bound: usize) -> Option<Vec<OpFinFunction>> {
        Some(
            enumerate_functions(n, m)
                .into_iter()
                .map(OpFinFunction)
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::{check_prop_axioms, PropBounds};

    #[test]
    fn finset_hom_counts() {
        assert_eq!(FinSetProp.enumerate_hom(3, 2, 0).unwrap().len(), 8);
        assert_eq!(FinSetProp.enumerate_hom(0, 0, 0).unwrap().len(), 1);
    }

    #[test]
    fn op_composition_reverses() {
        let p = FinSetOpProp;
        // δ: 1→2 then δ+id: 2→3 under the dual reading.
        let delta = p.comult();
        let step = p.monoidal_sum(&delta, &p.identity(1));
        let both = p.compose(&delta, &step).unwrap();
        assert_eq!(p.dom(&both), 1);
        assert_eq!(p.cod(&both), 3);
        // Underlying function 3 → 1 is the unique one.
        assert_eq!(both.0, FinFunction::new(3, 1, vec![1, 1, 1]).unwrap());
    }

    #[test]
    fn axioms_hold_for_both() {
        let r = check_prop_axioms(&FinSetProp, &PropBounds::new(3, 0));
        assert!(r.passed(), "{r}");
        let r = check_prop_axioms(&FinSetOpProp, &PropBounds::new(3, 0));
        assert!(r.passed(), "{r}");
    }
}
