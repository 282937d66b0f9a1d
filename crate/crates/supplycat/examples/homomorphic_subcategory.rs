//! Homomorphisms for a supply always form a monoidal subcategory. For the
//! comonoid supply on relations they are exactly the total single-valued
//! relations: the graphs of functions.

use supplycat::props::PropBounds;
use supplycat::smc::RelCat;
use supplycat::smc::{ObjectExpr, SampleSpec};
use supplycat::supply::builtin::rel_comonoid_supply_direct;
use supplycat::supply::homomorphic_subcategory;

fn main() {
    let supply = rel_comonoid_supply_direct(RelCat::new(vec![0, 1, 2]));
    let objects = vec![
        ObjectExpr::Unit,
        ObjectExpr::leaf(0),
        ObjectExpr::leaf(1),
        ObjectExpr::leaf(2),
    ];
    let out = homomorphic_subcategory(
        &supply,
        &objects,
        &SampleSpec::default(),
        &PropBounds::new(2, 0),
    );
    println!("{}\n", out.report);
    println!(
        "classified {} homomorphisms and {} other relations",
        out.homomorphisms.len(),
        out.others.len()
    );
}
