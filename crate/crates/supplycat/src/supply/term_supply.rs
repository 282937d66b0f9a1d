//! Supplies built from a presentation: generator images per object, extended
//! to all free terms by structural evaluation. Braid terms become canonical
//! braiding isomorphisms and sum terms become canonical-iso-conjugated
//! tensors, so the extension is forced by the supply laws.

use std::rc::Rc;

use crate::finset::{block_braiding, Permutation};
use crate::props::{PropError, PropPresentation, PropTerm};
use crate::report::CheckReport;
use crate::smc::{canonical_iso, power_obj, power_shape, ObjectExpr, Smc};

use super::SupplyError;

type GenAction<C> =
    dyn Fn(&C, &<C as Smc>::Object, &str) -> Result<<C as Smc>::Morphism, SupplyError>;

pub struct TermSupply<C: Smc> {
    pub label: String,
    pub presentation: PropPresentation,
    pub category: C,
    generator_action: Rc<GenAction<C>>,
}

impl<C: Smc> TermSupply<C> {
    /// Evaluate a term at an object by structural recursion.
    pub fn act(&self, c: &C::Object, term: &PropTerm) -> Result<C::Morphism, SupplyError> {
        let cat = &self.category;
        match term {
            PropTerm::Generator(name) => {
                let (dom, cod) = self
                    .presentation
                    .generators
                    .get(name)
                    .copied()
                    .ok_or_else(|| SupplyError::Prop(PropError::UnknownGenerator(name.clone())))?;
                let img = (self.generator_action)(cat, c, name)?;
                let (want_dom, want_cod) = (power_obj(cat, c, dom), power_obj(cat, c, cod));
                if cat.dom(&img) != want_dom || cat.cod(&img) != want_cod {
                    return Err(SupplyError::Invalid(format!(
                        "image of {name} ({dom}→{cod}) at {c:?} does not land on the tensor powers"
                    )));
                }
                Ok(img)
            }
            PropTerm::Id(n) => Ok(cat.identity(&power_obj(cat, c, *n))),
            PropTerm::Braid(m, n) => canonical_iso(
                cat,
                &power_shape(m + n),
                &power_shape(m + n),
                &block_braiding(*m, *n),
                std::slice::from_ref(c),
            )
            .map_err(SupplyError::Smc),
            PropTerm::Compose(a, b) => {
                let fa = self.act(c, a)?;
                let fb = self.act(c, b)?;
                cat.compose(&fa, &fb).map_err(SupplyError::Smc)
            }
            PropTerm::Sum(a, b) => {
                let (m1, n1) = a.arity(&self.presentation.generators)?;
                let (m2, n2) = b.arity(&self.presentation.generators)?;
                let fa = self.act(c, a)?;
                let fb = self.act(c, b)?;
                // c^(m1+m2) → c^m1 ⊗ c^m2 → c^n1 ⊗ c^n2 → c^(n1+n2)
                let split = canonical_iso(
                    cat,
                    &power_shape(m1 + m2),
                    &ObjectExpr::tensor(power_shape(m1), power_shape(m2)),
                    &Permutation::identity(m1 + m2),
                    std::slice::from_ref(c),
                )
                .map_err(SupplyError::Smc)?;
                let merge = canonical_iso(
                    cat,
                    &ObjectExpr::tensor(power_shape(n1), power_shape(n2)),
                    &power_shape(n1 + n2),
                    &Permutation::identity(n1 + n2),
                    std::slice::from_ref(c),
                )
                .map_err(SupplyError::Smc)?;
                let mid = cat.tensor_mor(&fa, &fb);
                let first = cat.compose(&split, &mid).map_err(SupplyError::Smc)?;
                cat.compose(&first, &merge).map_err(SupplyError::Smc)
            }
        }
    }

    /// Evaluate both sides of every relation at every object.
    pub fn verify_relations(&self, objects: &[C::Object]) -> CheckReport {
        let mut report = CheckReport::new(format!("term-supply/{}", self.label));
        let cat = &self.category;
        for (oi, c) in objects.iter().enumerate() {
            for (ri, (lhs, rhs)) in self.presentation.relations.iter().enumerate() {
                let id = format!("relation/{ri}/obj{oi}");
                match (self.act(c, lhs), self.act(c, rhs)) {
                    (Ok(l), Ok(r)) => {
                        report.check(id, "term-supply.relation", cat.equal(&l, &r), || {
                            format!(
                                "{lhs} = {rhs} fails at object {c:?}\nlhs = {}\nrhs = {}",
                                cat.render(&l),
                                cat.render(&r)
                            )
                        })
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        report.fail(id, "term-supply.relation", e.to_string())
                    }
                }
            }
        }
        report.sort();
        report
    }
}

/// Build a supply from a presentation, eagerly verifying every relation at
/// every listed object; a violation is an error naming the object and the
/// relation.
pub fn make_supply<C: Smc>(
    label: impl Into<String>,
    presentation: PropPresentation,
    category: C,
    objects: &[C::Object],
    generator_action: impl Fn(&C, &C::Object, &str) -> Result<C::Morphism, SupplyError> + 'static,
) -> Result<TermSupply<C>, SupplyError> {
    presentation.validate()?;
    let supply = TermSupply {
        label: label.into(),
        presentation,
        category,
        generator_action: Rc::new(generator_action),
    };
    for c in objects {
        for (lhs, rhs) in &supply.presentation.relations {
            let l = supply.act(c, lhs)?;
            let r = supply.act(c, rhs)?;
            if !supply.category.equal(&l, &r) {
                return Err(SupplyError::RelationViolation {
                    relation: format!("{lhs} = {rhs}"),
                    object: format!("{c:?}"),
                    detail: format!(
                        "lhs = {}\nrhs = {}",
                        supply.category.render(&l),
                        supply.category.render(&r)
                    ),
                });
            }
        }
    }
    Ok(supply)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::PropPresentation;
    use crate::smc::{Elem, FinSetCat, NestedRelCat, ObjectExpr, RelCat};

    fn frobenius_presentation() -> PropPresentation {
        use PropTerm as T;
        // Multiplication, unit, comultiplication, counit with the monoid,
        // comonoid, frobenius, and special equations.
        PropPresentation::new("frobenius")
            .generator("mu", 2, 1)
            .generator("eta", 0, 1)
            .generator("delta", 1, 2)
            .generator("epsilon", 1, 0)
            .relation(
                T::comp(T::sum(T::gen("eta"), T::Id(1)), T::gen("mu")),
                T::Id(1),
            )
            .relation(
                T::comp(T::sum(T::gen("mu"), T::Id(1)), T::gen("mu")),
                T::comp(T::sum(T::Id(1), T::gen("mu")), T::gen("mu")),
            )
            .relation(T::comp(T::Braid(1, 1), T::gen("mu")), T::gen("mu"))
            .relation(
                T::comp(T::gen("delta"), T::sum(T::gen("epsilon"), T::Id(1))),
                T::Id(1),
            )
            .relation(
                T::comp(T::gen("delta"), T::sum(T::Id(1), T::gen("delta"))),
                T::comp(T::gen("delta"), T::sum(T::gen("delta"), T::Id(1))),
            )
            .relation(T::comp(T::gen("delta"), T::Braid(1, 1)), T::gen("delta"))
            // frobenius law and specialness
            .relation(T::comp(T::gen("delta"), T::gen("mu")), T::Id(1))
            .relation(
                T::comp(
                    T::sum(T::gen("delta"), T::Id(1)),
                    T::sum(T::Id(1), T::gen("mu")),
                ),
                T::comp(T::gen("mu"), T::gen("delta")),
            )
    }

    /// Frobenius images in relations: diagonal/codiagonal and the two
    /// "everything relates to the unit point" maps.
    fn frobenius_images(cat: &RelCat, c: &ObjectExpr, name: &str) -> RelMorphism {
        let sz = cat.size(c);
        let c2 = ObjectExpr::tensor(c.clone(), c.clone());
        match name {
            "mu" => cat.from_fn(&c2, c, |y, x| x == y * sz + y),
            "eta" => cat.from_fn(&ObjectExpr::Unit, c, |_, _| true),
            "delta" => cat.from_fn(c, &c2, |y, x| y == x * sz + x),
            "epsilon" => cat.from_fn(c, &ObjectExpr::Unit, |_, _| true),
            _ => unreachable!(),
        }
    }

    use crate::smc::RelMorphism;

    #[test]
    fn frobenius_supply_in_rel_verifies() {
        let cat = RelCat::new(vec![0, 1, 2]);
        let objects = vec![
            ObjectExpr::Unit,
            ObjectExpr::leaf(0),
            ObjectExpr::leaf(1),
            ObjectExpr::leaf(2),
            ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(1)),
        ];
        let supply = make_supply(
            "rel-frobenius",
            frobenius_presentation(),
            cat,
            &objects,
            |cat, c, name| Ok(frobenius_images(cat, c, name)),
        )
        .expect("relations hold");
        let report = supply.verify_relations(&objects);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn make_supply_rejects_broken_images() {
        let cat = RelCat::new(vec![2]);
        let objects = vec![ObjectExpr::leaf(0)];
        let err = make_supply(
            "broken",
            frobenius_presentation(),
            cat,
            &objects,
            |cat, c, name| {
                Ok(match name {
                    // Empty relation instead of the counit.
                    "epsilon" => cat.from_fn(c, &ObjectExpr::Unit, |_, _| false),
                    other => frobenius_images(cat, c, other),
                })
            },
        )
        .err()
        .expect("must reject");
        match err {
            SupplyError::RelationViolation { relation, .. } => {
                assert!(relation.contains("epsilon"), "{relation}");
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn braid_terms_act_through_canonical_isomorphisms() {
        // δ followed by the braiding fixes the diagonal, and the evaluated
        // braid term is the genuine pair swap on elements.
        let cat = NestedRelCat::new(vec![2]);
        let c = ObjectExpr::leaf(0);
        let pres = PropPresentation::new("comonoid-frag")
            .generator("delta", 1, 2)
            .relation(
                PropTerm::comp(PropTerm::gen("delta"), PropTerm::Braid(1, 1)),
                PropTerm::gen("delta"),
            );
        let supply = make_supply(
            "nested-frag",
            pres,
            cat,
            std::slice::from_ref(&c),
            |cat, c, _| {
                Ok(
                    cat.graph(c, &ObjectExpr::tensor(c.clone(), c.clone()), |e| {
                        Elem::pair(e.clone(), e.clone())
                    }),
                )
            },
        )
        .unwrap();
        let braid = supply.act(&c, &PropTerm::Braid(1, 1)).unwrap();
        for (x, y) in &braid.pairs {
            match (x, y) {
                (Elem::Pair(a, b), Elem::Pair(b2, a2)) => {
                    assert_eq!(a, a2);
                    assert_eq!(b, b2);
                }
                _ => panic!("braid must swap pairs"),
            }
        }
    }

    #[test]
    fn finset_supply_from_monoid_presentation() {
        let cat = FinSetCat::new(vec![1, 2]);
        let objects = vec![ObjectExpr::leaf(0), ObjectExpr::leaf(1)];
        // μ drops the second coordinate... that is NOT commutative; use a
        // genuine commutative monoid: max on {1,2}.
        let supply = make_supply(
            "finset-max-monoid",
            PropPresentation::commutative_monoid(),
            cat,
            &objects,
            |cat, c, name| {
                let c2 = ObjectExpr::tensor(c.clone(), c.clone());
                Ok(match name {
                    "mu" => cat.graph(&c2, c, |e| match e {
                        Elem::Pair(a, b) => {
                            let (x, y) = (a.flatten()[0], b.flatten()[0]);
                            Elem::Atom(x.max(y))
                        }
                        _ => unreachable!(),
                    }),
                    _ => cat.graph(&ObjectExpr::Unit, c, |_| Elem::Atom(1)),
                })
            },
        )
        .expect("max/1 is a commutative monoid");
        let r = supply.verify_relations(&objects);
        assert!(r.passed(), "{r}");
    }
}
