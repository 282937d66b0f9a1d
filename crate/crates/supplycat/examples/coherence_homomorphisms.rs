//! Associators, unitors, and braidings are homomorphisms for any supply.
//! Verified here on the nested-relation model, whose associators genuinely
//! re-bracket element representations.

use supplycat::props::PropBounds;
use supplycat::smc::{NestedRelCat, ObjectExpr, Smc};
use supplycat::supply::builtin::nested_hypergraph_supply;
use supplycat::supply::check_coherence_homomorphisms;

fn main() {
    let cat = NestedRelCat::new(vec![0, 1, 2]);
    let supply = nested_hypergraph_supply(cat.clone());
    let objects = vec![
        ObjectExpr::Unit,
        ObjectExpr::leaf(0),
        ObjectExpr::leaf(2),
        ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(1)),
    ];
    let report = check_coherence_homomorphisms(&supply, &objects, &PropBounds::new(2, 3));
    println!("{report}\n");

    let two = ObjectExpr::leaf(2);
    let alpha = cat.associator(&two, &two, &two);
    println!("one of the associators that was exercised:");
    println!("{}", cat.render(&alpha));
}
