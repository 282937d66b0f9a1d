//! Canonical (coherence) isomorphisms in any [`Smc`], built uniformly from
//! the instance's associators, unitors, and braidings.
//!
//! A canonical isomorphism is specified by a source shape, a target shape,
//! and a permutation of leaves; shapes are [`ObjectExpr`] trees whose leaves
//! index a slice of base objects. The construction routes through the
//! right-nested normal form of each shape, so any two routings agree; the
//! tests assert this rather than assume it.

use crate::finset::Permutation;

use super::{ObjectExpr, Smc, SmcError};

/// Evaluate a shape against base objects.
pub fn realize<C: Smc>(cat: &C, shape: &ObjectExpr, base: &[C::Object]) -> C::Object {
    match shape {
        ObjectExpr::Unit => cat.unit(),
        ObjectExpr::Leaf(i) => base[*i].clone(),
        ObjectExpr::Tensor(l, r) => {
            let lo = realize(cat, l, base);
            let ro = realize(cat, r, base);
            cat.tensor_obj(&lo, &ro)
        }
    }
}

/// The left-nested tensor power of an object; `power_obj(c, 0)` is the unit.
pub fn power_obj<C: Smc>(cat: &C, c: &C::Object, m: usize) -> C::Object {
    match m {
        0 => cat.unit(),
        _ => {
            let mut acc = c.clone();
            for _ in 1..m {
                acc = cat.tensor_obj(&acc, c);
            }
            acc
        }
    }
}

/// The left-nested tensor power of a morphism; the 0-th power is `id_I`.
pub fn power_mor<C: Smc>(cat: &C, f: &C::Morphism, m: usize) -> C::Morphism {
    match m {
        0 => cat.identity(&cat.unit()),
        _ => {
            let mut acc = f.clone();
            for _ in 1..m {
                acc = cat.tensor_mor(&acc, f);
            }
            acc
        }
    }
}

/// The shape of `c^⊗m` over a single base object.
pub fn power_shape(m: usize) -> ObjectExpr {
    ObjectExpr::power(&ObjectExpr::leaf(0), m)
}

/// Right-nested realization of a leaf list: `[] ↦ I`, `[x] ↦ x`,
/// `x:rest ↦ x ⊗ R(rest)`.
fn realize_list<C: Smc>(cat: &C, leaves: &[usize], base: &[C::Object]) -> C::Object {
    match leaves {
        [] => cat.unit(),
        [x] => base[*x].clone(),
        [x, rest @ ..] => {
            let r = realize_list(cat, rest, base);
            cat.tensor_obj(&base[*x], &r)
        }
    }
}

/// The merge isomorphism `R(A) ⊗ R(B) → R(A ++ B)` between right-nested
/// realizations.
fn merge<C: Smc>(cat: &C, a: &[usize], b: &[usize], base: &[C::Object]) -> C::Morphism {
    match a {
        [] => cat.left_unitor(&realize_list(cat, b, base)),
        [x] if b.is_empty() => cat.right_unitor(&base[*x]),
        [_] => cat.identity(&realize_list(
            cat,
            &a.iter().chain(b.iter()).copied().collect::<Vec<_>>(),
            base,
        )),
        [x, rest @ ..] => {
            // (x ⊗ R(rest)) ⊗ R(B) → x ⊗ (R(rest) ⊗ R(B)) → x ⊗ R(rest ++ B)
            let alpha = cat.associator(
                &base[*x],
                &realize_list(cat, rest, base),
                &realize_list(cat, b, base),
            );
            let inner = merge(cat, rest, b, base);
            let step = cat.tensor_mor(&cat.identity(&base[*x]), &inner);
            cat.compose(&alpha, &step).expect("merge composes")
        }
    }
}

/// Inverse of [`merge`]: `R(A ++ B) → R(A) ⊗ R(B)`.
fn split<C: Smc>(cat: &C, a: &[usize], b: &[usize], base: &[C::Object]) -> C::Morphism {
    match a {
        [] => cat.left_unitor_inv(&realize_list(cat, b, base)),
        [x] if b.is_empty() => cat.right_unitor_inv(&base[*x]),
        [_] => cat.identity(&realize_list(
            cat,
            &a.iter().chain(b.iter()).copied().collect::<Vec<_>>(),
            base,
        )),
        [x, rest @ ..] => {
            let inner = split(cat, rest, b, base);
            let step = cat.tensor_mor(&cat.identity(&base[*x]), &inner);
            let alpha_inv = cat.associator_inv(
                &base[*x],
                &realize_list(cat, rest, base),
                &realize_list(cat, b, base),
            );
            cat.compose(&step, &alpha_inv).expect("split composes")
        }
    }
}

/// Normalization isomorphism `realize(shape) → R(flatten(shape))`.
fn normalize<C: Smc>(cat: &C, shape: &ObjectExpr, base: &[C::Object]) -> (Vec<usize>, C::Morphism) {
    match shape {
        ObjectExpr::Unit => (vec![], cat.identity(&cat.unit())),
        ObjectExpr::Leaf(i) => (vec![*i], cat.identity(&base[*i])),
        ObjectExpr::Tensor(l, r) => {
            let (ls, nl) = normalize(cat, l, base);
            let (rs, nr) = normalize(cat, r, base);
            let tens = cat.tensor_mor(&nl, &nr);
            let m = merge(cat, &ls, &rs, base);
            let mor = cat.compose(&tens, &m).expect("normalize composes");
            let mut leaves = ls;
            leaves.extend(rs);
            (leaves, mor)
        }
    }
}

/// Denormalization isomorphism `R(flatten(shape)) → realize(shape)`.
fn denormalize<C: Smc>(cat: &C, shape: &ObjectExpr, base: &[C::Object]) -> C::Morphism {
    match shape {
        ObjectExpr::Unit => cat.identity(&cat.unit()),
        ObjectExpr::Leaf(i) => cat.identity(&base[*i]),
        ObjectExpr::Tensor(l, r) => {
            let ls = l.flatten();
            let rs = r.flatten();
            let s = split(cat, &ls, &rs, base);
            let dl = denormalize(cat, l, base);
            let dr = denormalize(cat, r, base);
            let tens = cat.tensor_mor(&dl, &dr);
            cat.compose(&s, &tens).expect("denormalize composes")
        }
    }
}

/// Swap of adjacent entries `j, j+1` (0-based `j`) of a right-nested list.
fn swap_adjacent<C: Smc>(cat: &C, list: &[usize], j: usize, base: &[C::Object]) -> C::Morphism {
    if j == 0 {
        let x = &base[list[0]];
        let y = &base[list[1]];
        if list.len() == 2 {
            cat.braiding(x, y)
        } else {
            // x ⊗ (y ⊗ R) → (x⊗y) ⊗ R → (y⊗x) ⊗ R → y ⊗ (x ⊗ R)
            let rest = realize_list(cat, &list[2..], base);
            let a_inv = cat.associator_inv(x, y, &rest);
            let braid = cat.tensor_mor(&cat.braiding(x, y), &cat.identity(&rest));
            let a = cat.associator(y, x, &rest);
            cat.compose(&cat.compose(&a_inv, &braid).unwrap(), &a)
                .expect("swap composes")
        }
    } else {
        let head = &base[list[0]];
        let inner = swap_adjacent(cat, &list[1..], j - 1, base);
        cat.tensor_mor(&cat.identity(head), &inner)
    }
}

/// Isomorphism permuting the entries of a right-nested list: entry at
/// position `i` (0-based) moves to position `dest[i]`.
fn perm_iso<C: Smc>(
    cat: &C,
    list: &[usize],
    dest: &[usize],
    base: &[C::Object],
) -> (Vec<usize>, C::Morphism) {
    let mut cur = list.to_vec();
    let mut d = dest.to_vec();
    let mut mor = cat.identity(&realize_list(cat, &cur, base));
    loop {
        let mut moved = false;
        for j in 0..cur.len().saturating_sub(1) {
            if d[j] > d[j + 1] {
                let s = swap_adjacent(cat, &cur, j, base);
                mor = cat.compose(&mor, &s).expect("perm step composes");
                cur.swap(j, j + 1);
                d.swap(j, j + 1);
                moved = true;
            }
        }
        if !moved {
            return (cur, mor);
        }
    }
}

/// Build the canonical isomorphism `realize(source) → realize(target)` that
/// sends the `i`-th source leaf (1-based) to target position `perm(i)`.
/// Requires the base objects at matched positions to agree.
pub fn canonical_iso<C: Smc>(
    cat: &C,
    source: &ObjectExpr,
    target: &ObjectExpr,
    perm: &Permutation,
    base: &[C::Object],
) -> Result<C::Morphism, SmcError> {
    let src_leaves = source.flatten();
    let tgt_leaves = target.flatten();
    if src_leaves.len() != tgt_leaves.len() || perm.size() != src_leaves.len() {
        return Err(SmcError::LeafMismatch(format!(
            "source has {} leaves, target has {}, permutation on {}",
            src_leaves.len(),
            tgt_leaves.len(),
            perm.size()
        )));
    }
    for (i, &s) in src_leaves.iter().enumerate() {
        let t = tgt_leaves[perm.apply(i + 1) - 1];
        if base[s] != base[t] {
            return Err(SmcError::LeafMismatch(format!(
                "source leaf {} and its target position carry different objects",
                i + 1
            )));
        }
    }
    let (_, n) = normalize(cat, source, base);
    let dest: Vec<usize> = (1..=src_leaves.len()).map(|i| perm.apply(i) - 1).collect();
    let (permuted, pm) = perm_iso(cat, &src_leaves, &dest, base);
    debug_assert_eq!(
        permuted
            .iter()
            .map(|&l| format!("{:?}", base[l]))
            .collect::<Vec<_>>(),
        tgt_leaves
            .iter()
            .map(|&l| format!("{:?}", base[l]))
            .collect::<Vec<_>>()
    );
    let d = denormalize(cat, target, base);
    let mor = cat.compose(&n, &pm).expect("canonical iso composes");
    cat.compose(&mor, &d).map_err(|_| {
        SmcError::Invalid("canonical isomorphism did not compose to the target".to_string())
    })
}

/// The interleaving isomorphism `c^⊗n ⊗ d^⊗n → (c⊗d)^⊗n`.
pub fn sigma_interleave<C: Smc>(cat: &C, n: usize, c: &C::Object, d: &C::Object) -> C::Morphism {
    let source = ObjectExpr::tensor(
        ObjectExpr::power(&ObjectExpr::leaf(0), n),
        ObjectExpr::power(&ObjectExpr::leaf(1), n),
    );
    let target = ObjectExpr::power(
        &ObjectExpr::tensor(ObjectExpr::leaf(0), ObjectExpr::leaf(1)),
        n,
    );
    let mut table = vec![0usize; 2 * n];
    for i in 1..=n {
        table[i - 1] = 2 * i - 1;
        table[n + i - 1] = 2 * i;
    }
    let perm = Permutation::from_table(table).expect("interleave is a permutation");
    canonical_iso(cat, &source, &target, &perm, &[c.clone(), d.clone()])
        .expect("interleave leaves match")
}

/// The unit isomorphism `I → I^⊗n`.
pub fn sigma_unit<C: Smc>(cat: &C, n: usize) -> C::Morphism {
    let target = ObjectExpr::power(&ObjectExpr::Unit, n);
    canonical_iso(
        cat,
        &ObjectExpr::Unit,
        &target,
        &Permutation::identity(0),
        &[],
    )
    .expect("unit shapes have no leaves")
}
