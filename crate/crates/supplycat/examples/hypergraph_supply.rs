//! The frobenius supply on relations: cospans act by apex-labeling
//! consistency. Every object carries the structure, compatibly with ⊗, and
//! the empty relation famously fails to be a homomorphism for it.

use supplycat::props::{FinSetOpProp, Prop, PropBounds};
use supplycat::smc::{ObjectExpr, RelCat};
use supplycat::supply::builtin::{rel_comonoid_supply_direct, rel_hypergraph_supply};
use supplycat::supply::{check_supply, is_homomorphism};

fn main() {
    let cat = RelCat::new(vec![0, 1, 2]);
    let supply = rel_hypergraph_supply(cat.clone());
    let objects = vec![
        ObjectExpr::Unit,
        ObjectExpr::leaf(0), // the empty set matters: it starves floating apex points
        ObjectExpr::leaf(1),
        ObjectExpr::leaf(2),
        ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(1)),
    ];
    println!(
        "{}\n",
        check_supply(&supply, &objects, &PropBounds::new(2, 3))
    );

    // The comonoid fragment: the empty relation is not a homomorphism.
    let comonoid = rel_comonoid_supply_direct(RelCat::new(vec![1]));
    let one = ObjectExpr::leaf(0);
    let empty = comonoid.category.from_fn(&one, &one, |_, _| false);
    match is_homomorphism(&comonoid, &empty, &PropBounds::new(2, 0)) {
        Ok(()) => println!("unexpected: the empty relation passed"),
        Err(v) => {
            println!(
                "the empty relation fails the square at μ = {} ({}→{})",
                v.mu,
                FinSetOpProp.dom(&v.mu),
                FinSetOpProp.cod(&v.mu)
            );
            println!("{}", v.render(&comonoid.category));
        }
    }
}
