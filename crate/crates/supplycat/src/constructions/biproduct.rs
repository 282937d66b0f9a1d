//! The biproduct of two symmetric monoidal categories: objects and morphisms
//! are pairs, the unit is `(I, I)`, and all structure is pointwise. The
//! projections are strict; the coprojections pad with the unit.
//!
//! Wider biproducts are iterated binary ones. Over a finite index set the
//! coproduct-side restriction (all but finitely many components equal to the
//! unit) is automatic, so it never appears as a runtime condition here.

use crate::props::Prop;
use crate::smc::{canonical_iso, ObjectExpr, SampleSpec, Smc, SmcError};
use crate::supply::{Supply, SupplyError};

use super::SmFunctor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiproductCat<C: Smc, D: Smc> {
    pub left: C,
    pub right: D,
}

impl<C: Smc, D: Smc> BiproductCat<C, D> {
    pub fn new(left: C, right: D) -> Self {
        BiproductCat { left, right }
    }
}

impl<C: Smc, D: Smc> Smc for BiproductCat<C, D> {
    type Object = (C::Object, D::Object);
    type Morphism = (C::Morphism, D::Morphism);

    fn name(&self) -> &str {
        "biproduct"
    }

    fn unit(&self) -> Self::Object {
        (self.left.unit(), self.right.unit())
    }

    fn tensor_obj(&self, a: &Self::Object, b: &Self::Object) -> Self::Object {
        (
            self.left.tensor_obj(&a.0, &b.0),
            self.right.tensor_obj(&a.1, &b.1),
        )
    }

    fn dom(&self, f: &Self::Morphism) -> Self::Object {
        (self.left.dom(&f.0), self.right.dom(&f.1))
    }

    fn cod(&self, f: &Self::Morphism) -> Self::Object {
        (self.left.cod(&f.0), self.right.cod(&f.1))
    }

    fn identity(&self, a: &Self::Object) -> Self::Morphism {
        (self.left.identity(&a.0), self.right.identity(&a.1))
    }

    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism, SmcError> {
        Ok((
            self.left.compose(&f.0, &g.0)?,
            self.right.compose(&f.1, &g.1)?,
        ))
    }

    fn tensor_mor(&self, f: &Self::Morphism, g: &Self::Morphism) -> Self::Morphism {
        (
            self.left.tensor_mor(&f.0, &g.0),
            self.right.tensor_mor(&f.1, &g.1),
        )
    }

    fn equal(&self, f: &Self::Morphism, g: &Self::Morphism) -> bool {
        self.left.equal(&f.0, &g.0) && self.right.equal(&f.1, &g.1)
    }

    fn associator(&self, a: &Self::Object, b: &Self::Object, c: &Self::Object) -> Self::Morphism {
        (
            self.left.associator(&a.0, &b.0, &c.0),
            self.right.associator(&a.1, &b.1, &c.1),
        )
    }

    fn associator_inv(
        &self,
        a: &Self::Object,
        b: &Self::Object,
        c: &Self::Object,
    ) -> Self::Morphism {
        (
            self.left.associator_inv(&a.0, &b.0, &c.0),
            self.right.associator_inv(&a.1, &b.1, &c.1),
        )
    }

    fn left_unitor(&self, a: &Self::Object) -> Self::Morphism {
        (self.left.left_unitor(&a.0), self.right.left_unitor(&a.1))
    }

    fn left_unitor_inv(&self, a: &Self::Object) -> Self::Morphism {
        (
            self.left.left_unitor_inv(&a.0),
            self.right.left_unitor_inv(&a.1),
        )
    }

    fn right_unitor(&self, a: &Self::Object) -> Self::Morphism {
        (self.left.right_unitor(&a.0), self.right.right_unitor(&a.1))
    }

    fn right_unitor_inv(&self, a: &Self::Object) -> Self::Morphism {
        (
            self.left.right_unitor_inv(&a.0),
            self.right.right_unitor_inv(&a.1),
        )
    }

    fn braiding(&self, a: &Self::Object, b: &Self::Object) -> Self::Morphism {
        (
            self.left.braiding(&a.0, &b.0),
            self.right.braiding(&a.1, &b.1),
        )
    }

    fn hom_sample(
        &self,
        a: &Self::Object,
        b: &Self::Object,
        spec: &SampleSpec,
    ) -> Vec<Self::Morphism> {
        let ls = self.left.hom_sample(&a.0, &b.0, spec);
        let rs = self.right.hom_sample(&a.1, &b.1, spec);
        let mut out = Vec::new();
        // Cap the product so pair hom-sets stay within the exhaustive budget.
        let cap = spec.exhaustive_limit.max(1);
        'outer: for l in &ls {
            for r in &rs {
                if out.len() >= cap {
                    break 'outer;
                }
                out.push((l.clone(), r.clone()));
            }
        }
        out
    }

    fn approx_size(&self, a: &Self::Object) -> usize {
        self.left
            .approx_size(&a.0)
            .max(self.right.approx_size(&a.1))
    }

    fn render(&self, f: &Self::Morphism) -> String {
        format!("⟨{} , {}⟩", self.left.render(&f.0), self.right.render(&f.1))
    }
}

/// `π_C : C ⊕ D → C`, strict.
pub fn projection_left<C, D>(cat: BiproductCat<C, D>) -> SmFunctor<BiproductCat<C, D>, C>
where
    C: Smc + Clone + 'static,
    D: Smc + Clone + 'static,
{
    let left = cat.left.clone();
    SmFunctor::strict(
        "projection-left",
        cat,
        left,
        |_s, _t, o| o.0.clone(),
        |_s, _t, f| Ok(f.0.clone()),
    )
}

/// `π_D : C ⊕ D → D`, strict.
pub fn projection_right<C, D>(cat: BiproductCat<C, D>) -> SmFunctor<BiproductCat<C, D>, D>
where
    C: Smc + Clone + 'static,
    D: Smc + Clone + 'static,
{
    let right = cat.right.clone();
    SmFunctor::strict(
        "projection-right",
        cat,
        right,
        |_s, _t, o| o.1.clone(),
        |_s, _t, f| Ok(f.1.clone()),
    )
}

/// `c ↦ (c, I) : C → C ⊕ D`; the second component is mediated by the unique
/// unit structure, so the strongators are `(id, λ_I)`.
pub fn coprojection_left<C, D>(cat: BiproductCat<C, D>) -> SmFunctor<C, BiproductCat<C, D>>
where
    C: Smc + Clone + 'static,
    D: Smc + Clone + 'static,
{
    let left = cat.left.clone();
    SmFunctor::new(
        "coprojection-left",
        left,
        cat,
        |_s, t, o| (o.clone(), t.right.unit()),
        |_s, t, f| Ok((f.clone(), t.right.identity(&t.right.unit()))),
        |_s, t| t.identity(&t.unit()),
        |_s, t, a, b| {
            (
                t.left.identity(&t.left.tensor_obj(a, b)),
                t.right.left_unitor(&t.right.unit()),
            )
        },
    )
}

/// `d ↦ (I, d) : D → C ⊕ D`.
pub fn coprojection_right<C, D>(cat: BiproductCat<C, D>) -> SmFunctor<D, BiproductCat<C, D>>
where
    C: Smc + Clone + 'static,
    D: Smc + Clone + 'static,
{
    let right = cat.right.clone();
    SmFunctor::new(
        "coprojection-right",
        right,
        cat,
        |_s, t, o| (t.left.unit(), o.clone()),
        |_s, t, f| Ok((t.left.identity(&t.left.unit()), f.clone())),
        |_s, t| t.identity(&t.unit()),
        |_s, t, a, b| {
            (
                t.left.left_unitor(&t.left.unit()),
                t.right.identity(&t.right.tensor_obj(a, b)),
            )
        },
    )
}

/// `⟨F, G⟩ : X → C ⊕ D`, the universal map into the product; strongators are
/// the component strongators paired.
pub fn pairing<X, C, D>(f: SmFunctor<X, C>, g: SmFunctor<X, D>) -> SmFunctor<X, BiproductCat<C, D>>
where
    X: Smc + Clone + 'static,
    C: Smc + Clone + 'static,
    D: Smc + Clone + 'static,
{
    let label = format!("⟨{},{}⟩", f.label, g.label);
    let source = f.source.clone();
    let target = BiproductCat::new(f.target.clone(), g.target.clone());
    let (f2, g2) = (f.clone(), g.clone());
    let (f3, g3) = (f.clone(), g.clone());
    let (f4, g4) = (f.clone(), g.clone());
    SmFunctor::new(
        label,
        source,
        target,
        move |_s, _t, o| (f.obj(o), g.obj(o)),
        move |_s, _t, m| Ok((f2.mor(m)?, g2.mor(m)?)),
        move |_s, _t| (f3.phi_unit(), g3.phi_unit()),
        move |_s, _t, a, b| (f4.phi(a, b), g4.phi(a, b)),
    )
}

/// `[F, G] : C ⊕ D → X` with `[F,G](c,d) = F(c) ⊗ G(d)`; the strongator
/// routes through the middle-four interchange.
pub fn copairing<C, D, X>(
    f: SmFunctor<C, X>,
    g: SmFunctor<D, X>,
) -> SmFunctor<BiproductCat<C, D>, X>
where
    C: Smc + Clone + 'static,
    D: Smc + Clone + 'static,
    X: Smc + Clone + 'static,
{
    let label = format!("[{},{}]", f.label, g.label);
    let source = BiproductCat::new(f.source.clone(), g.source.clone());
    let target = f.target.clone();
    let (f2, g2) = (f.clone(), g.clone());
    let (f3, g3) = (f.clone(), g.clone());
    let (f4, g4) = (f.clone(), g.clone());
    SmFunctor::new(
        label,
        source,
        target,
        move |_s, t, o: &(C::Object, D::Object)| t.tensor_obj(&f.obj(&o.0), &g.obj(&o.1)),
        move |_s, t, m: &(C::Morphism, D::Morphism)| {
            Ok(t.tensor_mor(&f2.mor(&m.0)?, &g2.mor(&m.1)?))
        },
        move |_s, t| {
            let expand = t.left_unitor_inv(&t.unit());
            let both = t.tensor_mor(&f3.phi_unit(), &g3.phi_unit());
            t.compose(&expand, &both).expect("copairing unit composes")
        },
        move |_s, t, a: &(C::Object, D::Object), b: &(C::Object, D::Object)| {
            let base = [f4.obj(&a.0), g4.obj(&a.1), f4.obj(&b.0), g4.obj(&b.1)];
            let src = ObjectExpr::tensor(
                ObjectExpr::tensor(ObjectExpr::leaf(0), ObjectExpr::leaf(1)),
                ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(3)),
            );
            let tgt = ObjectExpr::tensor(
                ObjectExpr::tensor(ObjectExpr::leaf(0), ObjectExpr::leaf(2)),
                ObjectExpr::tensor(ObjectExpr::leaf(1), ObjectExpr::leaf(3)),
            );
            let perm = crate::finset::Permutation::from_table(vec![1, 3, 2, 4]).unwrap();
            let mid4 = canonical_iso(t, &src, &tgt, &perm, &base).expect("middle four");
            let phis = t.tensor_mor(&f4.phi(&a.0, &b.0), &g4.phi(&a.1, &b.1));
            t.compose(&mid4, &phis)
                .expect("copairing strongator composes")
        },
    )
}

/// The componentwise supply on a biproduct: both components act in parallel.
pub fn biproduct_supply<P, C, D>(
    sc: Supply<P, C>,
    sd: Supply<P, D>,
) -> Result<Supply<P, BiproductCat<C, D>>, SupplyError>
where
    P: Prop + Clone + 'static,
    C: Smc + Clone + 'static,
    D: Smc + Clone + 'static,
{
    if sc.prop.name() != sd.prop.name() {
        return Err(SupplyError::Invalid(format!(
            "biproduct supply needs a shared prop, got {} and {}",
            sc.prop.name(),
            sd.prop.name()
        )));
    }
    let label = format!("{}⊕{}", sc.label, sd.label);
    let prop = sc.prop.clone();
    let cat = BiproductCat::new(sc.category.clone(), sd.category.clone());
    Ok(Supply::new(label, prop, cat, move |_p, _cat, c, mu| {
        Ok((sc.act(&c.0, mu)?, sd.act(&c.1, mu)?))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        check_preserves_supply, check_smf, copairing, identity_functor, pairing,
    };
    use crate::props::PropBounds;
    use crate::smc::{check_smc_axioms, ObjectExpr, RelCat};
    use crate::supply::builtin::rel_comonoid_supply_direct;
    use crate::supply::check_supply;

    fn rel() -> RelCat {
        RelCat::new(vec![0, 1, 2])
    }

    fn pair_sample() -> Vec<(ObjectExpr, ObjectExpr)> {
        let trees = vec![
            ObjectExpr::Unit,
            ObjectExpr::leaf(0),
            ObjectExpr::leaf(2),
            ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(1)),
        ];
        let mut out = Vec::new();
        for a in &trees {
            for b in trees.iter().take(2) {
                out.push((a.clone(), b.clone()));
            }
        }
        out.push((ObjectExpr::leaf(1), ObjectExpr::leaf(2)));
        out
    }

    #[test]
    fn biproduct_is_an_smc_with_pointwise_unit() {
        let cat = BiproductCat::new(rel(), rel());
        assert_eq!(cat.unit(), (ObjectExpr::Unit, ObjectExpr::Unit));
        let r = check_smc_axioms(&cat, &pair_sample(), &crate::smc::SampleSpec::default());
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn projections_are_strict_and_preserve_the_supply() {
        let cat = BiproductCat::new(rel(), rel());
        let s = biproduct_supply(
            rel_comonoid_supply_direct(rel()),
            rel_comonoid_supply_direct(rel()),
        )
        .unwrap();
        let bounds = PropBounds::new(2, 0);
        let r = check_supply(&s, &pair_sample(), &bounds);
        assert!(r.passed(), "{r}");

        let proj = projection_left(cat.clone());
        assert!(proj.is_strict_on(&pair_sample()));
        let t = rel_comonoid_supply_direct(rel());
        let r = check_preserves_supply(&proj, &s, &t, &pair_sample(), &bounds);
        assert!(r.passed(), "{r}");

        let copr = coprojection_left(cat);
        let objs: Vec<ObjectExpr> =
            vec![ObjectExpr::Unit, ObjectExpr::leaf(0), ObjectExpr::leaf(2)];
        let r = check_smf(&copr, &objs, &crate::smc::SampleSpec::default());
        assert!(r.passed(), "{r}");
        let r = check_preserves_supply(&copr, &t, &s, &objs, &bounds);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn pairing_projects_back_strictly_and_copairing_tensors() {
        let cat = BiproductCat::new(rel(), rel());
        let idc = identity_functor(rel());
        let idd = identity_functor(rel());
        let paired = pairing(idc, idd);
        let objs = vec![ObjectExpr::Unit, ObjectExpr::leaf(2)];
        // ⟨F,G⟩ ; π = F on objects and morphisms, strictly.
        let proj = projection_left(cat);
        for o in &objs {
            assert_eq!(proj.obj(&paired.obj(o)), *o);
        }
        let r = check_smf(&paired, &objs, &crate::smc::SampleSpec::default());
        assert!(r.passed(), "{r}");

        let cop = copairing(identity_functor(rel()), identity_functor(rel()));
        for a in &objs {
            for b in &objs {
                assert_eq!(
                    cop.obj(&(a.clone(), b.clone())),
                    ObjectExpr::tensor(a.clone(), b.clone())
                );
            }
        }
        let pairs = vec![
            (ObjectExpr::Unit, ObjectExpr::Unit),
            (ObjectExpr::leaf(2), ObjectExpr::leaf(1)),
            (ObjectExpr::leaf(1), ObjectExpr::leaf(2)),
            (ObjectExpr::leaf(2), ObjectExpr::Unit),
        ];
        let r = check_smf(&cop, &pairs, &crate::smc::SampleSpec::default());
        assert!(r.passed(), "{r}");
    }
}
