//! Load generator/relation presentations from the text format and check
//! their images in a target prop, including a deliberately broken image.

use std::collections::BTreeMap;

use supplycat::finset::FinFunction;
use supplycat::props::{
    check_presentation_functor, CospanMorphism, CospanProp, FinSetProp, PropPresentation,
};

fn main() {
    // Commutative monoids land in finite sets: μ is the fold, η the point.
    let monoid = PropPresentation::commutative_monoid();
    let mut images = BTreeMap::new();
    images.insert(
        "mu".to_string(),
        FinFunction::new(2, 1, vec![1, 1]).unwrap(),
    );
    images.insert("eta".to_string(), FinFunction::new(0, 1, vec![]).unwrap());
    println!(
        "{}\n",
        check_presentation_functor(&monoid, &FinSetProp, &images)
    );

    // Self-dualities land in cospans: cup and cap share one apex point.
    let self_dual = PropPresentation::self_dual();
    let p = CospanProp;
    let mut images = BTreeMap::new();
    images.insert("cup".to_string(), p.cup());
    images.insert("cap".to_string(), p.cap());
    println!("{}\n", check_presentation_functor(&self_dual, &p, &images));

    // A wrong cap image breaks the snake equations, with both sides printed.
    let mut broken = BTreeMap::new();
    broken.insert("cup".to_string(), p.cup());
    broken.insert(
        "cap".to_string(),
        CospanMorphism::new(
            FinFunction::identity(2),
            FinFunction::new(0, 2, vec![]).unwrap(),
        )
        .unwrap(),
    );
    println!("{}", check_presentation_functor(&self_dual, &p, &broken));
}
