//! The biproduct of two symmetric monoidal categories, its projections and
//! coprojections, and the componentwise supply.

use supplycat::constructions::{
    biproduct_supply, check_preserves_supply, coprojection_left, projection_left, BiproductCat,
};
use supplycat::props::PropBounds;
use supplycat::smc::{ObjectExpr, RelCat, Smc};
use supplycat::supply::builtin::rel_comonoid_supply_direct;
use supplycat::supply::check_supply;

fn main() {
    let rel = || RelCat::new(vec![0, 1, 2]);
    let cat = BiproductCat::new(rel(), rel());
    println!("unit of the biproduct: {:?}\n", cat.unit());

    let supply = biproduct_supply(
        rel_comonoid_supply_direct(rel()),
        rel_comonoid_supply_direct(rel()),
    )
    .unwrap();
    let pairs = vec![
        (ObjectExpr::Unit, ObjectExpr::Unit),
        (ObjectExpr::leaf(2), ObjectExpr::leaf(1)),
        (ObjectExpr::leaf(0), ObjectExpr::leaf(2)),
    ];
    let bounds = PropBounds::new(2, 0);
    println!("{}\n", check_supply(&supply, &pairs, &bounds));

    let proj = projection_left(cat.clone());
    println!("projection strict: {}\n", proj.is_strict_on(&pairs));
    let t = rel_comonoid_supply_direct(rel());
    println!(
        "{}\n",
        check_preserves_supply(&proj, &supply, &t, &pairs, &bounds)
    );

    let copr = coprojection_left(cat);
    let objs = vec![ObjectExpr::Unit, ObjectExpr::leaf(2)];
    println!(
        "{}",
        check_preserves_supply(&copr, &t, &supply, &objs, &bounds)
    );
}
