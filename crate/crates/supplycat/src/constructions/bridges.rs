//! Concrete strict functors between the built-in category models: nested
//! relations flatten onto boolean matrices, functions include into relations,
//! and the identity functor on any instance.

use std::collections::BTreeMap;

use crate::smc::nested_rel::elements;
use crate::smc::{Elem, FinSetCat, NestedRelCat, NestedRelMorphism, RelCat, RelMorphism, Smc};
use crate::supply::SupplyError;

use super::SmFunctor;

/// The identity functor, strict by construction.
pub fn identity_functor<C: Smc + Clone + 'static>(cat: C) -> SmFunctor<C, C> {
    SmFunctor::strict(
        format!("id/{}", cat.name()),
        cat.clone(),
        cat,
        |_s, _t, o| o.clone(),
        |_s, _t, f| Ok(f.clone()),
    )
}

fn pairs_to_matrix(
    rel: &RelCat,
    sizes: &[usize],
    f: &NestedRelMorphism,
) -> Result<RelMorphism, SupplyError> {
    let dom_elems = elements(&f.dom, sizes);
    let cod_elems = elements(&f.cod, sizes);
    let dom_index: BTreeMap<&Elem, usize> =
        dom_elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let cod_index: BTreeMap<&Elem, usize> =
        cod_elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut out = rel.from_fn(&f.dom, &f.cod, |_, _| false);
    for (x, y) in &f.pairs {
        let xi = *dom_index
            .get(x)
            .ok_or_else(|| SupplyError::Invalid(format!("element {x} outside its object")))?;
        let yi = *cod_index
            .get(y)
            .ok_or_else(|| SupplyError::Invalid(format!("element {y} outside its object")))?;
        out.mat[yi * out.cols + xi] = true;
    }
    Ok(out)
}

/// Flattening: identity on object trees, nested pair sets to boolean
/// matrices over the row-major element order. Strict and bijective on
/// objects.
pub fn nested_to_rel(src: NestedRelCat, dst: RelCat) -> SmFunctor<NestedRelCat, RelCat> {
    assert_eq!(src.sizes, dst.sizes, "models must share an alphabet");
    SmFunctor::strict(
        "flatten",
        src,
        dst,
        |_s, _t, o| o.clone(),
        |s, t, f| pairs_to_matrix(t, &s.sizes, f),
    )
}

/// The inclusion of sets-and-functions into relations (graphs of functions
/// as boolean matrices). Strict and identity on objects.
pub fn finset_to_rel(src: FinSetCat, dst: RelCat) -> SmFunctor<FinSetCat, RelCat> {
    assert_eq!(src.rel.sizes, dst.sizes, "models must share an alphabet");
    SmFunctor::strict(
        "include-functions",
        src,
        dst,
        |_s, _t, o| o.clone(),
        |s, t, f| pairs_to_matrix(t, &s.rel.sizes, f),
    )
}

/// The inclusion of sets-and-functions into nested relations; morphism values
/// are reused as-is.
pub fn finset_to_nested(src: FinSetCat, dst: NestedRelCat) -> SmFunctor<FinSetCat, NestedRelCat> {
    assert_eq!(src.rel.sizes, dst.sizes, "models must share an alphabet");
    SmFunctor::strict(
        "include-functions-nested",
        src,
        dst,
        |_s, _t, o| o.clone(),
        |_s, _t, f| Ok(f.clone()),
    )
}
