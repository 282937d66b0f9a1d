//! Exhaustively check the prop laws for the built-in props and print the
//! merged reports.

use supplycat::props::{
    check_prop_axioms, BijProp, CobProp, CospanProp, FinSetOpProp, FinSetProp, InvolutionProp,
    PropBounds,
};

fn main() {
    let bounds = PropBounds::new(2, 3);
    println!("{}\n", check_prop_axioms(&BijProp, &bounds));
    println!("{}\n", check_prop_axioms(&InvolutionProp, &bounds));
    println!("{}\n", check_prop_axioms(&FinSetProp, &bounds));
    println!("{}\n", check_prop_axioms(&FinSetOpProp, &bounds));
    println!("{}\n", check_prop_axioms(&CospanProp, &bounds));
    println!("{}", check_prop_axioms(&CobProp, &PropBounds::new(2, 1)));
}
