//! The one-object symmetric monoidal category: every hom-set has exactly one
//! morphism, so every equation holds. Objects are kept as tensor trees over a
//! single formal generator so the ambient machinery can still build shapes.

use super::{ObjectExpr, SampleSpec, Smc, SmcError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminalMorphism {
    pub dom: ObjectExpr,
    pub cod: ObjectExpr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TerminalCat;

impl TerminalCat {
    fn arrow(&self, dom: &ObjectExpr, cod: &ObjectExpr) -> TerminalMorphism {
        TerminalMorphism {
            dom: dom.clone(),
            cod: cod.clone(),
        }
    }
}

impl Smc for TerminalCat {
    type Object = ObjectExpr;
    type Morphism = TerminalMorphism;

    fn name(&self) -> &str {
        "terminal"
    }

    fn unit(&self) -> ObjectExpr {
        ObjectExpr::Unit
    }

    fn tensor_obj(&self, a: &ObjectExpr, b: &ObjectExpr) -> ObjectExpr {
        ObjectExpr::tensor(a.clone(), b.clone())
    }

    fn dom(&self, f: &TerminalMorphism) -> ObjectExpr {
        f.dom.clone()
    }

    fn cod(&self, f: &TerminalMorphism) -> ObjectExpr {
        f.cod.clone()
    }

    fn identity(&self, a: &ObjectExpr) -> TerminalMorphism {
        self.arrow(a, a)
    }

    fn compose(
        &self,
        f: &TerminalMorphism,
        g: &TerminalMorphism,
    ) -> Result<TerminalMorphism, SmcError> {
        if f.cod != g.dom {
            return Err(self.compose_err(f, g));
        }
        Ok(self.arrow(&f.dom, &g.cod))
    }

    fn tensor_mor(&self, f: &TerminalMorphism, g: &TerminalMorphism) -> TerminalMorphism {
        self.arrow(
            &self.tensor_obj(&f.dom, &g.dom),
            &self.tensor_obj(&f.cod, &g.cod),
        )
    }

    /// Parallel morphisms are always equal; there is only one.
    fn equal(&self, _f: &TerminalMorphism, _g: &TerminalMorphism) -> bool {
        true
    }

    fn associator(&self, a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> TerminalMorphism {
        self.arrow(
            &ObjectExpr::tensor(ObjectExpr::tensor(a.clone(), b.clone()), c.clone()),
            &ObjectExpr::tensor(a.clone(), ObjectExpr::tensor(b.clone(), c.clone())),
        )
    }

    fn associator_inv(&self, a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> TerminalMorphism {
        self.arrow(
            &ObjectExpr::tensor(a.clone(), ObjectExpr::tensor(b.clone(), c.clone())),
            &ObjectExpr::tensor(ObjectExpr::tensor(a.clone(), b.clone()), c.clone()),
        )
    }

    fn left_unitor(&self, a: &ObjectExpr) -> TerminalMorphism {
        self.arrow(&ObjectExpr::tensor(ObjectExpr::Unit, a.clone()), a)
    }

    fn left_unitor_inv(&self, a: &ObjectExpr) -> TerminalMorphism {
        self.arrow(a, &ObjectExpr::tensor(ObjectExpr::Unit, a.clone()))
    }

    fn right_unitor(&self, a: &ObjectExpr) -> TerminalMorphism {
        self.arrow(&ObjectExpr::tensor(a.clone(), ObjectExpr::Unit), a)
    }

    fn right_unitor_inv(&self, a: &ObjectExpr) -> TerminalMorphism {
        self.arrow(a, &ObjectExpr::tensor(a.clone(), ObjectExpr::Unit))
    }

    fn braiding(&self, a: &ObjectExpr, b: &ObjectExpr) -> TerminalMorphism {
        self.arrow(
            &ObjectExpr::tensor(a.clone(), b.clone()),
            &ObjectExpr::tensor(b.clone(), a.clone()),
        )
    }

    fn hom_sample(
        &self,
        a: &ObjectExpr,
        b: &ObjectExpr,
        _spec: &SampleSpec,
    ) -> Vec<TerminalMorphism> {
        vec![self.arrow(a, b)]
    }

    fn render(&self, f: &TerminalMorphism) -> String {
        format!("!: {} → {}", f.dom, f.cod)
    }
}
