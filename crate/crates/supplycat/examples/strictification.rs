//! Strictify a category (objects become lists, associators become
//! identities), induce the supply on it, and confirm the evaluation functor
//! carries the induced supply back to the original one.

use supplycat::constructions::{
    check_preserves_supply, check_strongators_homomorphisms, strictify, strictify_supply,
};
use supplycat::props::PropBounds;
use supplycat::smc::{check_smc_axioms, ObjectExpr, RelCat, SampleSpec, Smc};
use supplycat::supply::builtin::rel_hypergraph_supply;
use supplycat::supply::check_supply;

fn main() {
    let base = RelCat::new(vec![0, 1, 2]);
    let (strict, evaluate) = strictify(base.clone());
    let lists = vec![
        vec![],
        vec![ObjectExpr::leaf(2)],
        vec![ObjectExpr::leaf(2), ObjectExpr::leaf(1)],
        vec![ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(1))],
    ];
    println!(
        "{}\n",
        check_smc_axioms(&strict, &lists, &SampleSpec::default())
    );

    let alpha = strict.associator(&lists[1], &lists[2], &lists[1]);
    println!(
        "associator on lists is an identity: {}\n",
        strict.equal(&alpha, &strict.identity(&strict.dom(&alpha)))
    );

    let s = rel_hypergraph_supply(base);
    let induced = strictify_supply(s.clone());
    let bounds = PropBounds::new(2, 3);
    println!("{}\n", check_supply(&induced, &lists, &bounds));
    println!(
        "{}\n",
        check_preserves_supply(&evaluate, &induced, &s, &lists, &bounds)
    );
    println!(
        "{}",
        check_strongators_homomorphisms(
            &evaluate,
            &induced,
            &s,
            &lists,
            &SampleSpec::default(),
            &bounds
        )
    );
}
