//! Supplies transfer along prop functors and along strict essentially
//! surjective functors. Both routes here produce the comonoid supply on
//! relations and agree with the direct construction.

use supplycat::constructions::{
    finset_to_rel, transfer_along_prop_functor, transfer_along_strict_surjection, SectionData,
};
use supplycat::finset::FinFunction;
use supplycat::props::{CospanMorphism, FinSetOpProp, PropBounds};
use supplycat::smc::{FinSetCat, ObjectExpr, RelCat, Smc};
use supplycat::supply::builtin::{finset_comonoid_supply, rel_hypergraph_supply};
use supplycat::supply::check_supply;

fn main() {
    let sizes = vec![0usize, 1, 2];
    let objects = vec![
        ObjectExpr::Unit,
        ObjectExpr::leaf(0),
        ObjectExpr::leaf(1),
        ObjectExpr::leaf(2),
    ];

    // Route one: comonoids embed into cospans, which relations interpret.
    let via_cospans = transfer_along_prop_functor(
        "rel-comonoid-via-cospans",
        FinSetOpProp,
        |mu| {
            CospanMorphism::new(FinFunction::identity(mu.inner().cod()), mu.inner().clone())
                .unwrap()
        },
        rel_hypergraph_supply(RelCat::new(sizes.clone())),
    );
    println!(
        "{}\n",
        check_supply(&via_cospans, &objects, &PropBounds::new(2, 0))
    );

    // Route two: push the supply on functions through the strict inclusion.
    let fcat = FinSetCat::new(sizes.clone());
    let incl = finset_to_rel(fcat.clone(), RelCat::new(sizes.clone()));
    let via_inclusion = transfer_along_strict_surjection(
        "rel-comonoid-via-inclusion",
        incl,
        finset_comonoid_supply(fcat),
        &objects,
        |cat, d| SectionData::on_the_nose(cat, d.clone(), d),
    )
    .unwrap();

    let two = ObjectExpr::leaf(2);
    let delta = via_inclusion.act(&two, &FinSetOpProp.comult()).unwrap();
    println!("the transferred comultiplication is the diagonal relation:");
    println!("{}", via_inclusion.category.render(&delta));
    let same = via_cospans.act(&two, &FinSetOpProp.comult()).unwrap() == delta;
    println!("both transfer routes agree on it: {same}");
}
