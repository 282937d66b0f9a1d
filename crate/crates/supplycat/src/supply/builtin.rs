//! The concrete supplies shipped with the library: frobenius structure on
//! relations (flat and nested), self-dualities on rational matrices,
//! comonoids on sets and on relations, points on sets, the unique symmetry
//! supply, and the unique supply in the terminal category.

use num_rational::Rational64;
use num_traits::One;

use crate::finset::Permutation;
use crate::props::{
    BijProp, CobMorphism, CobProp, CospanMorphism, CospanProp, FinSetOpProp, InjProp,
    OpFinFunction, Prop,
};
use crate::smc::{
    canonical_iso, power_shape, Elem, FinSetCat, MatQCat, NestedRelCat, ObjectExpr, RelCat, Smc,
    TerminalCat, TerminalMorphism,
};

use super::{Supply, SupplyError};

/// Digits of a row-major flattened index, most significant first. The index
/// enumerates tuples of `len` values in `0..base`.
pub fn index_digits(mut x: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0usize; len];
    for slot in out.iter_mut().rev() {
        *slot = x % base;
        x /= base;
    }
    out
}

/// Does a cospan admit a consistent assignment of carrier values to its apex,
/// given boundary values? Floating apex elements need a nonempty carrier.
fn cospan_consistent(
    apex: usize,
    left: &[usize],
    right: &[usize],
    xs: &[usize],
    ys: &[usize],
    carrier_size: usize,
) -> bool {
    let mut val: Vec<Option<usize>> = vec![None; apex];
    for (i, &a) in left.iter().enumerate() {
        match val[a - 1] {
            None => val[a - 1] = Some(xs[i]),
            Some(v) if v == xs[i] => {}
            _ => return false,
        }
    }
    for (j, &a) in right.iter().enumerate() {
        match val[a - 1] {
            None => val[a - 1] = Some(ys[j]),
            Some(v) if v == ys[j] => {}
            _ => return false,
        }
    }
    carrier_size > 0 || val.iter().all(Option::is_some)
}

/// The frobenius (hypergraph) supply on flat relations: a cospan acts as the
/// relation "the boundary values extend to a consistent apex labeling".
pub fn rel_hypergraph_supply(cat: RelCat) -> Supply<CospanProp, RelCat> {
    Supply::new(
        "rel-hypergraph",
        CospanProp,
        cat,
        |_p, cat, c, mu: &CospanMorphism| {
            let sz = cat.size(c);
            let m = mu.left().dom();
            let n = mu.right().dom();
            let dom = ObjectExpr::power(c, m);
            let cod = ObjectExpr::power(c, n);
            Ok(cat.from_fn(&dom, &cod, |y, x| {
                let xs = index_digits(x, sz.max(1), m);
                let ys = index_digits(y, sz.max(1), n);
                cospan_consistent(
                    mu.apex(),
                    mu.left().table(),
                    mu.right().table(),
                    &xs,
                    &ys,
                    sz,
                )
            }))
        },
    )
}

/// Leading components of an element of `c^⊗m` under the left-nested power.
pub fn power_components(e: &Elem, m: usize) -> Vec<Elem> {
    match m {
        0 => vec![],
        1 => vec![e.clone()],
        _ => match e {
            Elem::Pair(init, last) => {
                let mut out = power_components(init, m - 1);
                out.push(last.as_ref().clone());
                out
            }
            _ => panic!("element shape must follow the power shape"),
        },
    }
}

/// Left-nested pairing of components back into an element of `c^⊗m`.
pub fn power_element(parts: &[Elem]) -> Elem {
    match parts {
        [] => Elem::Unit,
        [e] => e.clone(),
        [init @ .., last] => Elem::pair(power_element(init), last.clone()),
    }
}

/// The frobenius supply on nested relations; same consistency condition, but
/// elements are nested tuples rather than flat indices.
pub fn nested_hypergraph_supply(cat: NestedRelCat) -> Supply<CospanProp, NestedRelCat> {
    Supply::new(
        "nested-hypergraph",
        CospanProp,
        cat,
        |_p, cat, c, mu: &CospanMorphism| {
            let m = mu.left().dom();
            let n = mu.right().dom();
            let dom = ObjectExpr::power(c, m);
            let cod = ObjectExpr::power(c, n);
            let xs_all = cat.elements(&dom);
            let ys_all = cat.elements(&cod);
            let carrier = cat.size(c);
            let mut pairs = Vec::new();
            for x in &xs_all {
                let xs = power_components(x, m);
                for y in &ys_all {
                    let ys = power_components(y, n);
                    // Compare whole component elements; consistency is value
                    // equality at shared apex points.
                    let mut val: Vec<Option<&Elem>> = vec![None; mu.apex()];
                    let mut ok = true;
                    for (i, &a) in mu.left().table().iter().enumerate() {
                        match val[a - 1] {
                            None => val[a - 1] = Some(&xs[i]),
                            Some(v) if *v == xs[i] => {}
                            _ => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if ok {
                        for (j, &a) in mu.right().table().iter().enumerate() {
                            match val[a - 1] {
                                None => val[a - 1] = Some(&ys[j]),
                                Some(v) if *v == ys[j] => {}
                                _ => {
                                    ok = false;
                                    break;
                                }
                            }
                        }
                    }
                    if ok && (carrier > 0 || val.iter().all(Option::is_some)) {
                        pairs.push((x.clone(), y.clone()));
                    }
                }
            }
            Ok(cat.from_pairs(&dom, &cod, pairs))
        },
    )
}

/// The self-duality supply on rational matrices: a matching acts as the
/// product of Kronecker deltas over its pairs, each closed circle contributes
/// a factor of the dimension.
///
/// `leaf_scale` rescales the structure: the cup at an object `c` is weighted
/// by `w(c) = leaf_scale^(#leaves of c)` and the cap by its reciprocal. The
/// weight must be multiplicative in `c` (not a constant across objects) or
/// the tensor-compatibility square fails; on a single-generator object this
/// restricts to `cup' = leaf_scale·cup`, `cap' = cap/leaf_scale`, which still
/// satisfies all four self-duality equations.
pub fn matq_self_dual_supply_scaled(
    cat: MatQCat,
    leaf_scale: Rational64,
    label: &str,
) -> Supply<CobProp, MatQCat> {
    Supply::new(label, CobProp, cat, move |_p, cat, c, mu: &CobMorphism| {
        let d = cat.dim(c);
        let m = mu.dom();
        let n = mu.cod();
        let dom = ObjectExpr::power(c, m);
        let cod = ObjectExpr::power(c, n);
        let pairs = mu.pairs();
        let w = leaf_scale.pow(c.flatten().len() as i32);
        let mut weight = Rational64::one();
        for &(a, b) in &pairs {
            if a > m && b > m {
                weight *= w;
            } else if a <= m && b <= m {
                weight /= w;
            }
        }
        for _ in 0..mu.circles() {
            weight *= Rational64::new(d as i64, 1);
        }
        Ok(cat.from_fn(&dom, &cod, |y, x| {
            let xs = index_digits(x, d.max(1), m);
            let ys = index_digits(y, d.max(1), n);
            let value = |pt: usize| if pt <= m { xs[pt - 1] } else { ys[pt - m - 1] };
            if pairs.iter().all(|&(a, b)| value(a) == value(b)) {
                weight
            } else {
                Rational64::from_integer(0)
            }
        }))
    })
}

pub fn matq_self_dual_supply(cat: MatQCat) -> Supply<CobProp, MatQCat> {
    matq_self_dual_supply_scaled(cat, Rational64::one(), "matq-self-dual")
}

/// The comonoid supply on sets and functions: the dual of a function `g`
/// reindexes tuples, `y_j = x_{g(j)}`.
pub fn finset_comonoid_supply(cat: FinSetCat) -> Supply<FinSetOpProp, FinSetCat> {
    Supply::new(
        "finset-comonoid",
        FinSetOpProp,
        cat,
        |p, cat, c, mu: &OpFinFunction| {
            let m = p.dom(mu);
            let n = p.cod(mu);
            let dom = ObjectExpr::power(c, m);
            let cod = ObjectExpr::power(c, n);
            Ok(cat.graph(&dom, &cod, |e| {
                let xs = power_components(e, m);
                let ys: Vec<Elem> = (1..=n)
                    .map(|j| xs[mu.inner().apply(j) - 1].clone())
                    .collect();
                power_element(&ys)
            }))
        },
    )
}

/// The comonoid supply on flat relations, built directly; the transfer from
/// sets must agree with this reference construction.
pub fn rel_comonoid_supply_direct(cat: RelCat) -> Supply<FinSetOpProp, RelCat> {
    Supply::new(
        "rel-comonoid",
        FinSetOpProp,
        cat,
        |p, cat, c, mu: &OpFinFunction| {
            let sz = cat.size(c);
            let m = p.dom(mu);
            let n = p.cod(mu);
            let dom = ObjectExpr::power(c, m);
            let cod = ObjectExpr::power(c, n);
            Ok(cat.from_fn(&dom, &cod, |y, x| {
                let xs = index_digits(x, sz.max(1), m);
                let ys = index_digits(y, sz.max(1), n);
                (1..=n).all(|j| ys[j - 1] == xs[mu.inner().apply(j) - 1])
            }))
        },
    )
}

/// The unique supply of symmetries: bijections act as the canonical
/// permutation isomorphisms on tensor powers.
pub fn symmetry_supply<C: Smc + Clone + 'static>(cat: C, label: &str) -> Supply<BijProp, C> {
    Supply::new(label, BijProp, cat, |_p, cat, c, mu: &Permutation| {
        let m = mu.size();
        canonical_iso(
            cat,
            &power_shape(m),
            &power_shape(m),
            mu,
            std::slice::from_ref(c),
        )
        .map_err(SupplyError::Smc)
    })
}

/// The unique supply of any prop in the terminal category.
pub fn terminal_supply<P: Prop + Clone + 'static>(prop: P) -> Supply<P, TerminalCat> {
    let label = format!("terminal/{}", prop.name());
    Supply::new(label, prop, TerminalCat, |p, _cat, c, mu| {
        Ok(TerminalMorphism {
            dom: ObjectExpr::power(c, p.dom(mu)),
            cod: ObjectExpr::power(c, p.cod(mu)),
        })
    })
}

/// A supply of the point prop on nonempty sets: injections reindex, and
/// missing outputs take the basepoint (the all-ones tuple component).
pub fn finset_point_supply(cat: FinSetCat) -> Supply<InjProp, FinSetCat> {
    Supply::new(
        "finset-point",
        InjProp,
        cat,
        |p, cat, c, mu: &crate::finset::FinFunction| {
            if cat.size(c) == 0 {
                return Err(SupplyError::Invalid(
                    "the point supply needs a nonempty carrier".to_string(),
                ));
            }
            let m = p.dom(mu);
            let n = p.cod(mu);
            let dom = ObjectExpr::power(c, m);
            let cod = ObjectExpr::power(c, n);
            let base = cat.elements(c).into_iter().next().expect("nonempty");
            Ok(cat.graph(&dom, &cod, |e| {
                let xs = power_components(e, m);
                let ys: Vec<Elem> = (1..=n)
                    .map(|j| {
                        (1..=m)
                            .find(|&i| mu.apply(i) == j)
                            .map(|i| xs[i - 1].clone())
                            .unwrap_or_else(|| base.clone())
                    })
                    .collect();
                power_element(&ys)
            }))
        },
    )
}

/// The supply of self-dualities carried by every hypergraph structure: a
/// matching becomes a cospan (pairs become apex points, circles float), then
/// the hypergraph supply acts.
pub fn cob_to_cospan(mu: &CobMorphism) -> CospanMorphism {
    let m = mu.dom();
    let n = mu.cod();
    let pairs = mu.pairs();
    let apex = pairs.len() + mu.circles();
    let mut left = vec![0usize; m];
    let mut right = vec![0usize; n];
    for (k, &(a, b)) in pairs.iter().enumerate() {
        for pt in [a, b] {
            if pt <= m {
                left[pt - 1] = k + 1;
            } else {
                right[pt - m - 1] = k + 1;
            }
        }
    }
    CospanMorphism::new(
        crate::finset::FinFunction::new(m, apex, left).unwrap(),
        crate::finset::FinFunction::new(n, apex, right).unwrap(),
    )
    .unwrap()
}

/// Relations with the comonoid supply corrupted at one object: the counit there is
/// replaced by the empty relation, which breaks the tensor square.
pub fn broken_rel_comonoid_supply(cat: RelCat, bad: ObjectExpr) -> Supply<FinSetOpProp, RelCat> {
    rel_comonoid_supply_direct(cat).with_override(
        "rel-comonoid-broken",
        move |cat, c, mu: &OpFinFunction| {
            let is_counit = mu.inner().dom() == 0 && mu.inner().cod() == 1;
            if is_counit && *c == bad {
                Some(cat.from_fn(c, &ObjectExpr::Unit, |_, _| false))
            } else {
                None
            }
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::{FinSetOpProp, PropBounds};
    use crate::supply::{check_supply, is_homomorphism};

    fn rel_objects() -> Vec<ObjectExpr> {
        vec![
            ObjectExpr::Unit,
            ObjectExpr::leaf(0),
            ObjectExpr::leaf(1),
            ObjectExpr::leaf(2),
            ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(1)),
        ]
    }

    #[test]
    fn hypergraph_supply_passes_small_bounds() {
        let s = rel_hypergraph_supply(RelCat::new(vec![0, 1, 2]));
        let r = check_supply(&s, &rel_objects(), &PropBounds::new(2, 3));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn hypergraph_counit_and_comult_are_the_expected_relations() {
        let s = rel_hypergraph_supply(RelCat::new(vec![0, 1, 2]));
        let c = ObjectExpr::leaf(2);
        let counit = s.act(&c, &CospanProp.counit()).unwrap();
        assert_eq!(counit.rows, 1);
        assert_eq!(counit.cols, 2);
        assert!(
            counit.mat.iter().all(|&b| b),
            "ε is the total relation to I"
        );
        let comult = s.act(&c, &CospanProp.comult()).unwrap();
        for y in 0..4 {
            for x in 0..2 {
                assert_eq!(comult.entry(y, x), y == x * 2 + x, "δ is the diagonal");
            }
        }
    }

    #[test]
    fn floating_cospan_needs_nonempty_carrier() {
        let s = rel_hypergraph_supply(RelCat::new(vec![0, 2]));
        let p = CospanProp;
        let float = p.compose(&p.cup(), &p.cap()).unwrap();
        let empty = ObjectExpr::leaf(0);
        let nonempty = ObjectExpr::leaf(1);
        let at_empty = s.act(&empty, &float).unwrap();
        assert!(!at_empty.mat[0], "no apex labeling over the empty carrier");
        let at_two = s.act(&nonempty, &float).unwrap();
        assert!(at_two.mat[0]);
        // The identity-on-I cospan acts as the identity even on ∅.
        let at_empty_id = s.act(&empty, &p.identity(0)).unwrap();
        assert!(at_empty_id.mat[0]);
    }

    #[test]
    fn matq_self_dual_satisfies_snakes_by_matrix_arithmetic() {
        let cat = MatQCat::new(vec![1, 2, 3]);
        let s = matq_self_dual_supply(cat.clone());
        for c in [ObjectExpr::leaf(1), ObjectExpr::leaf(2)] {
            let p = CobProp;
            let id1 = p.identity(1);
            let cup_id = p.monoidal_sum(&CobMorphism::cup(), &id1);
            let id_cap = p.monoidal_sum(&id1, &CobMorphism::cap());
            let lhs = cat
                .compose(&s.act(&c, &cup_id).unwrap(), &s.act(&c, &id_cap).unwrap())
                .unwrap();
            assert!(lhs.is_identity_matrix(), "snake at {c}");
            // cup;cap closes a loop worth the dimension.
            let loop_val = cat
                .compose(
                    &s.act(&c, &CobMorphism::cup()).unwrap(),
                    &s.act(&c, &CobMorphism::cap()).unwrap(),
                )
                .unwrap();
            assert_eq!(loop_val.entry(0, 0), Rational64::new(cat.dim(&c) as i64, 1));
        }
    }

    #[test]
    fn matq_supply_passes_check() {
        let s = matq_self_dual_supply(MatQCat::new(vec![1, 2]));
        let objects = vec![ObjectExpr::Unit, ObjectExpr::leaf(0), ObjectExpr::leaf(1)];
        let r = check_supply(&s, &objects, &PropBounds::new(2, 1));
        assert!(r.passed(), "{r}");
        // The rescaled variant is still a supply, and on a one-generator
        // object its cup is exactly twice the standard one.
        let s2 = matq_self_dual_supply_scaled(
            MatQCat::new(vec![1, 2]),
            Rational64::new(2, 1),
            "matq-self-dual-rescaled",
        );
        let r = check_supply(&s2, &objects, &PropBounds::new(2, 1));
        assert!(r.passed(), "{r}");
        let s1 = matq_self_dual_supply(MatQCat::new(vec![1, 2]));
        let d2 = ObjectExpr::leaf(1);
        let cup_std = s1.act(&d2, &CobMorphism::cup()).unwrap();
        let cup_scaled = s2.act(&d2, &CobMorphism::cup()).unwrap();
        assert_eq!(cup_scaled, cup_std.scale(Rational64::new(2, 1)));
        let cap_std = s1.act(&d2, &CobMorphism::cap()).unwrap();
        let cap_scaled = s2.act(&d2, &CobMorphism::cap()).unwrap();
        assert_eq!(cap_scaled, cap_std.scale(Rational64::new(1, 2)));
    }

    #[test]
    fn orthogonal_matrix_is_a_self_dual_homomorphism() {
        let cat = MatQCat::new(vec![1, 2]);
        let s = matq_self_dual_supply(cat.clone());
        let d2 = ObjectExpr::leaf(1);
        let rot = cat.from_fn(&d2, &d2, |y, x| match (y, x) {
            (0, 0) => Rational64::new(3, 5),
            (0, 1) => Rational64::new(4, 5),
            (1, 0) => Rational64::new(-4, 5),
            (1, 1) => Rational64::new(3, 5),
            _ => unreachable!(),
        });
        assert!(is_homomorphism(&s, &rot, &PropBounds::new(2, 1)).is_ok());
        let shear = cat.from_fn(&d2, &d2, |y, x| {
            if y == 0 || x == 1 {
                Rational64::one()
            } else {
                Rational64::from_integer(0)
            }
        });
        assert!(is_homomorphism(&s, &shear, &PropBounds::new(2, 1)).is_err());
    }

    #[test]
    fn empty_relation_fails_the_counit_square() {
        let cat = RelCat::new(vec![1]);
        let s = rel_comonoid_supply_direct(cat.clone());
        let one = ObjectExpr::leaf(0);
        let empty = cat.from_fn(&one, &one, |_, _| false);
        let violation = is_homomorphism(&s, &empty, &PropBounds::new(2, 0))
            .expect_err("the empty relation is not a comonoid homomorphism");
        // Witness is the counit 1 → 0.
        assert_eq!(FinSetOpProp.dom(&violation.mu), 1);
        assert_eq!(FinSetOpProp.cod(&violation.mu), 0);
    }

    #[test]
    fn comonoid_supplies_agree_between_models() {
        let rel = rel_comonoid_supply_direct(RelCat::new(vec![0, 1, 2]));
        let r = check_supply(&rel, &rel_objects(), &PropBounds::new(3, 0));
        assert!(r.passed(), "{r}");
        let fs = finset_comonoid_supply(FinSetCat::new(vec![0, 1, 2]));
        let r = check_supply(&fs, &rel_objects(), &PropBounds::new(3, 0));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn symmetry_supply_is_a_supply_everywhere() {
        let s = symmetry_supply(RelCat::new(vec![0, 1, 2]), "rel-symmetries");
        let r = check_supply(&s, &rel_objects(), &PropBounds::new(3, 0));
        assert!(r.passed(), "{r}");
        let t = terminal_supply(CospanProp);
        let objects = vec![ObjectExpr::Unit, ObjectExpr::leaf(0)];
        let r = check_supply(&t, &objects, &PropBounds::new(2, 3));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn cob_to_cospan_is_functorial_small() {
        let p = CobProp;
        let q = CospanProp;
        for m in 0..=3usize {
            for k in 0..=3usize {
                for n in 0..=3usize {
                    for f in p.enumerate_hom(m, k, 1).unwrap() {
                        for g in p.enumerate_hom(k, n, 1).unwrap() {
                            let lhs = cob_to_cospan(&p.compose(&f, &g).unwrap());
                            let rhs = q.compose(&cob_to_cospan(&f), &cob_to_cospan(&g)).unwrap();
                            assert_eq!(lhs, rhs, "f = {f}, g = {g}");
                        }
                    }
                }
            }
        }
        // Sums and braidings too.
        for m in 0..=3usize {
            for n in 0..=3usize {
                assert_eq!(cob_to_cospan(&p.braiding(m, n)), q.braiding(m, n));
                for f in p.enumerate_hom(m, m, 1).unwrap() {
                    for g in p.enumerate_hom(n, n, 1).unwrap() {
                        assert_eq!(
                            cob_to_cospan(&p.monoidal_sum(&f, &g)),
                            q.monoidal_sum(&cob_to_cospan(&f), &cob_to_cospan(&g))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn point_supply_unit_is_initial_among_homomorphisms() {
        let cat = FinSetCat::new(vec![1, 2, 3]);
        let s = finset_point_supply(cat.clone());
        let bounds = PropBounds::new(2, 0);
        for c in [ObjectExpr::leaf(1), ObjectExpr::leaf(2)] {
            let all = cat.hom_sample(&ObjectExpr::Unit, &c, &crate::smc::SampleSpec::default());
            let hom_count = all
                .iter()
                .filter(|f| is_homomorphism(&s, f, &bounds).is_ok())
                .count();
            assert_eq!(hom_count, 1, "exactly one point preserves the basepoint");
        }
    }

    #[test]
    fn comonoid_homomorphisms_are_exactly_functional_relations() {
        use crate::smc::SampleSpec;
        for size in 0..=3usize {
            let cat = RelCat::new(vec![size]);
            let s = rel_comonoid_supply_direct(cat.clone());
            let c = ObjectExpr::leaf(0);
            for f in cat.hom_sample(&c, &c, &SampleSpec::default()) {
                let hom = is_homomorphism(&s, &f, &PropBounds::new(2, 0)).is_ok();
                assert_eq!(hom, f.is_functional(), "size {size}: {}", cat.render(&f));
            }
        }
    }

    #[test]
    fn broken_supply_fails_tensor_square_with_counit_witness() {
        let cat = RelCat::new(vec![2, 1]);
        let bad = ObjectExpr::leaf(0);
        let s = broken_rel_comonoid_supply(cat, bad.clone());
        let objects = vec![ObjectExpr::Unit, bad, ObjectExpr::leaf(1)];
        let r = check_supply(&s, &objects, &PropBounds::new(2, 0));
        assert!(!r.passed());
        let failing: Vec<_> = r.failures().collect();
        assert!(failing.iter().any(|e| e.anchor == "supply.tensor-square"
            && e.witness.as_deref().is_some_and(|w| w.contains("op(0→1"))));
    }
}

#[cfg(test)]
mod coherence_coverage_tests {
    use super::*;
    use crate::constructions::biproduct_supply;
    use crate::props::{CospanProp, PropBounds};
    use crate::supply::{check_coherence_homomorphisms, self_supply};

    /// Coherence isomorphisms are homomorphisms for every shipped supply,
    /// not just the ones named in the main suites.
    #[test]
    fn coherence_isos_are_homomorphisms_for_remaining_supplies() {
        let trees = vec![
            ObjectExpr::Unit,
            ObjectExpr::leaf(0),
            ObjectExpr::leaf(2),
            ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(1)),
        ];
        let bounds = PropBounds::new(2, 3);

        let r = check_coherence_homomorphisms(&terminal_supply(CospanProp), &trees, &bounds);
        assert!(r.passed(), "{r}");

        let r = check_coherence_homomorphisms(
            &symmetry_supply(RelCat::new(vec![0, 1, 2]), "rel-symmetries"),
            &trees,
            &PropBounds::new(3, 0),
        );
        assert!(r.passed(), "{r}");

        let pairs: Vec<(ObjectExpr, ObjectExpr)> = vec![
            (ObjectExpr::Unit, ObjectExpr::Unit),
            (ObjectExpr::leaf(2), ObjectExpr::leaf(1)),
            (ObjectExpr::leaf(0), ObjectExpr::leaf(2)),
        ];
        let s = biproduct_supply(
            rel_comonoid_supply_direct(RelCat::new(vec![0, 1, 2])),
            rel_comonoid_supply_direct(RelCat::new(vec![0, 1, 2])),
        )
        .unwrap();
        let r = check_coherence_homomorphisms(&s, &pairs, &PropBounds::new(2, 0));
        assert!(r.passed(), "{r}");

        let r = check_coherence_homomorphisms(
            &self_supply(crate::props::FinSetProp, 0),
            &[0usize, 1, 2],
            &PropBounds::new(2, 0),
        );
        assert!(r.passed(), "{r}");
    }
}
