//! Every prop supplies itself: the action on the object k conjugates the
//! k-fold monoidal sum with grid-transpose symmetries.

use supplycat::finset::FinFunction;
use supplycat::props::{CospanProp, FinSetProp, PropBounds};
use supplycat::supply::{check_supply, self_supply};

fn main() {
    let s = self_supply(FinSetProp, 0);
    let mu = FinFunction::new(2, 1, vec![1, 1]).unwrap();
    println!("fold μ = {mu}");
    for k in 0..=3 {
        println!("  action at k = {k}: {}", s.act(&k, &mu).unwrap());
    }
    println!();
    println!(
        "{}\n",
        check_supply(&s, &[0, 1, 2, 3], &PropBounds::new(3, 0))
    );

    let s = self_supply(CospanProp, 3);
    println!("{}", check_supply(&s, &[0, 1, 2], &PropBounds::new(2, 3)));
}
