//! Rational matrices supply self-dualities; the homomorphisms for that
//! structure are exactly the orthogonal matrices.

use num_rational::Rational64;
use supplycat::props::PropBounds;
use supplycat::smc::{MatQCat, ObjectExpr, Smc};
use supplycat::supply::builtin::matq_self_dual_supply;
use supplycat::supply::{check_supply, is_homomorphism};

fn main() {
    let cat = MatQCat::new(vec![1, 2, 3]);
    let supply = matq_self_dual_supply(cat.clone());
    let objects = vec![ObjectExpr::Unit, ObjectExpr::leaf(0), ObjectExpr::leaf(1)];
    println!(
        "{}\n",
        check_supply(&supply, &objects, &PropBounds::new(2, 1))
    );

    let d2 = ObjectExpr::leaf(1);
    let fixtures = [
        ("identity", cat.identity(&d2)),
        (
            "rotation by a 3-4-5 triangle",
            cat.from_fn(&d2, &d2, |y, x| match (y, x) {
                (0, 0) => Rational64::new(3, 5),
                (0, 1) => Rational64::new(4, 5),
                (1, 0) => Rational64::new(-4, 5),
                (1, 1) => Rational64::new(3, 5),
                _ => unreachable!(),
            }),
        ),
        (
            "shear",
            cat.from_fn(&d2, &d2, |y, x| {
                if y == 0 || x == 1 {
                    Rational64::new(1, 1)
                } else {
                    Rational64::new(0, 1)
                }
            }),
        ),
    ];
    for (name, m) in fixtures {
        let hom = is_homomorphism(&supply, &m, &PropBounds::new(2, 1)).is_ok();
        println!(
            "{name}: orthogonal = {}, homomorphism = {hom}",
            m.is_orthogonal()
        );
    }
}
