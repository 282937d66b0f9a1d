//! A prop viewed as a (strict) symmetric monoidal category: objects are the
//! natural numbers, the tensor is addition, and all structural isomorphisms
//! except the braiding are identities.

use crate::props::{Prop, PropBounds};

use super::{SampleSpec, Smc, SmcError};

#[derive(Debug, Clone)]
pub struct PropCat<P: Prop> {
    pub prop: P,
    /// Size bound handed to the prop's hom enumeration when sampling.
    pub size_bound: usize,
}

impl<P: Prop> PropCat<P> {
    pub fn new(prop: P, size_bound: usize) -> Self {
        PropCat { prop, size_bound }
    }

    pub fn bounds(&self, max_arity: usize) -> PropBounds {
        PropBounds::new(max_arity, self.size_bound)
    }
}

impl<P: Prop> Smc for PropCat<P> {
    type Object = usize;
    type Morphism = P::Morphism;

    fn name(&self) -> &str {
        self.prop.name()
    }

    fn unit(&self) -> usize {
        0
    }

    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a + b
    }

    fn dom(&self, f: &P::Morphism) -> usize {
        self.prop.dom(f)
    }

    fn cod(&self, f: &P::Morphism) -> usize {
        self.prop.cod(f)
    }

    fn identity(&self, a: &usize) -> P::Morphism {
        self.prop.identity(*a)
    }

    fn compose(&self, f: &P::Morphism, g: &P::Morphism) -> Result<P::Morphism, SmcError> {
        self.prop
            .compose(f, g)
            .map_err(|e| SmcError::Invalid(e.to_string()))
    }

    fn tensor_mor(&self, f: &P::Morphism, g: &P::Morphism) -> P::Morphism {
        self.prop.monoidal_sum(f, g)
    }

    fn equal(&self, f: &P::Morphism, g: &P::Morphism) -> bool {
        self.prop.equal(f, g)
    }

    fn associator(&self, a: &usize, b: &usize, c: &usize) -> P::Morphism {
        self.prop.identity(a + b + c)
    }

    fn associator_inv(&self, a: &usize, b: &usize, c: &usize) -> P::Morphism {
        self.prop.identity(a + b + c)
    }

    fn left_unitor(&self, a: &usize) -> P::Morphism {
        self.prop.identity(*a)
    }

    fn left_unitor_inv(&self, a: &usize) -> P::Morphism {
        self.prop.identity(*a)
    }

    fn right_unitor(&self, a: &usize) -> P::Morphism {
        self.prop.identity(*a)
    }

    fn right_unitor_inv(&self, a: &usize) -> P::Morphism {
        self.prop.identity(*a)
    }

    fn braiding(&self, a: &usize, b: &usize) -> P::Morphism {
        self.prop.braiding(*a, *b)
    }

    fn hom_sample(&self, a: &usize, b: &usize, spec: &SampleSpec) -> Vec<P::Morphism> {
        match self.prop.enumerate_hom(*a, *b, self.size_bound) {
            Some(mut homs) => {
                if homs.len() > spec.exhaustive_limit {
                    homs.truncate(spec.sample_size.max(1));
                }
                homs
            }
            None => vec![],
        }
    }

    fn approx_size(&self, a: &usize) -> usize {
        (*a).max(1)
    }

    fn render(&self, f: &P::Morphism) -> String {
        f.to_string()
    }
}
