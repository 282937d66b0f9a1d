//! Strictification: the equivalent strict category whose objects are finite
//! lists of base objects. A morphism between lists is a base morphism between
//! their left-nested products, so hom-sets (and equality) are borrowed
//! through the evaluation functor, which is fully faithful by construction.

use crate::finset::{block_braiding, transpose_perm, Permutation};
use crate::props::Prop;
use crate::smc::{canonical_iso, ObjectExpr, SampleSpec, Smc, SmcError};
use crate::supply::{Supply, SupplyError};

use super::SmFunctor;

pub struct StrictMorphism<C: Smc> {
    pub dom: Vec<C::Object>,
    pub cod: Vec<C::Object>,
    pub inner: C::Morphism,
}

impl<C: Smc> Clone for StrictMorphism<C> {
    fn clone(&self) -> Self {
        StrictMorphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            inner: self.inner.clone(),
        }
    }
}

impl<C: Smc> std::fmt::Debug for StrictMorphism<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StrictMorphism")
            .field("dom", &self.dom)
            .field("cod", &self.cod)
            .field("inner", &self.inner)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictCat<C: Smc> {
    pub base: C,
}

impl<C: Smc> StrictCat<C> {
    pub fn new(base: C) -> Self {
        StrictCat { base }
    }

    /// The left-nested product of a list; the empty list is the unit.
    pub fn product(&self, objs: &[C::Object]) -> C::Object {
        match objs {
            [] => self.base.unit(),
            [first, rest @ ..] => {
                let mut acc = first.clone();
                for o in rest {
                    acc = self.base.tensor_obj(&acc, o);
                }
                acc
            }
        }
    }

    /// Left-nested shape whose leaves are `lo..hi` into a base-object list.
    fn leftnest(range: std::ops::Range<usize>) -> ObjectExpr {
        let leaves: Vec<ObjectExpr> = range.map(ObjectExpr::leaf).collect();
        Self::leftnest_exprs(&leaves)
    }

    fn leftnest_exprs(es: &[ObjectExpr]) -> ObjectExpr {
        match es {
            [] => ObjectExpr::Unit,
            [first, rest @ ..] => {
                let mut acc = first.clone();
                for e in rest {
                    acc = ObjectExpr::tensor(acc, e.clone());
                }
                acc
            }
        }
    }

    /// Canonical iso `⊗A ⊗ ⊗B → ⊗(A ++ B)` in the base category.
    pub fn merge_iso(&self, a: &[C::Object], b: &[C::Object]) -> C::Morphism {
        let mut base: Vec<C::Object> = a.to_vec();
        base.extend_from_slice(b);
        let src = ObjectExpr::tensor(
            Self::leftnest(0..a.len()),
            Self::leftnest(a.len()..a.len() + b.len()),
        );
        let tgt = Self::leftnest(0..a.len() + b.len());
        canonical_iso(
            &self.base,
            &src,
            &tgt,
            &Permutation::identity(base.len()),
            &base,
        )
        .expect("merge shapes agree")
    }

    /// Canonical iso `⊗(A ++ B) → ⊗A ⊗ ⊗B` in the base category.
    pub fn split_iso(&self, a: &[C::Object], b: &[C::Object]) -> C::Morphism {
        let mut base: Vec<C::Object> = a.to_vec();
        base.extend_from_slice(b);
        let src = Self::leftnest(0..a.len() + b.len());
        let tgt = ObjectExpr::tensor(
            Self::leftnest(0..a.len()),
            Self::leftnest(a.len()..a.len() + b.len()),
        );
        canonical_iso(
            &self.base,
            &src,
            &tgt,
            &Permutation::identity(base.len()),
            &base,
        )
        .expect("split shapes agree")
    }

    /// Wrap a base morphism `⊗A → ⊗B` as a strict morphism `A → B`.
    pub fn promote(
        &self,
        dom: Vec<C::Object>,
        cod: Vec<C::Object>,
        inner: C::Morphism,
    ) -> Result<StrictMorphism<C>, SmcError> {
        if self.base.dom(&inner) != self.product(&dom)
            || self.base.cod(&inner) != self.product(&cod)
        {
            return Err(SmcError::Invalid(
                "inner morphism does not match the list products".to_string(),
            ));
        }
        Ok(StrictMorphism { dom, cod, inner })
    }
}

impl<C: Smc> Smc for StrictCat<C> {
    type Object = Vec<C::Object>;
    type Morphism = StrictMorphism<C>;

    fn name(&self) -> &str {
        "strictified"
    }

    fn unit(&self) -> Vec<C::Object> {
        vec![]
    }

    fn tensor_obj(&self, a: &Vec<C::Object>, b: &Vec<C::Object>) -> Vec<C::Object> {
        let mut out = a.clone();
        out.extend_from_slice(b);
        out
    }

    fn dom(&self, f: &StrictMorphism<C>) -> Vec<C::Object> {
        f.dom.clone()
    }

    fn cod(&self, f: &StrictMorphism<C>) -> Vec<C::Object> {
        f.cod.clone()
    }

    fn identity(&self, a: &Vec<C::Object>) -> StrictMorphism<C> {
        StrictMorphism {
            dom: a.clone(),
            cod: a.clone(),
            inner: self.base.identity(&self.product(a)),
        }
    }

    fn compose(
        &self,
        f: &StrictMorphism<C>,
        g: &StrictMorphism<C>,
    ) -> Result<StrictMorphism<C>, SmcError> {
        if f.cod != g.dom {
            return Err(self.compose_err(f, g));
        }
        Ok(StrictMorphism {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            inner: self.base.compose(&f.inner, &g.inner)?,
        })
    }

    fn tensor_mor(&self, f: &StrictMorphism<C>, g: &StrictMorphism<C>) -> StrictMorphism<C> {
        let split = self.split_iso(&f.dom, &g.dom);
        let merge = self.merge_iso(&f.cod, &g.cod);
        let mid = self.base.tensor_mor(&f.inner, &g.inner);
        let inner = self
            .base
            .compose(&self.base.compose(&split, &mid).unwrap(), &merge)
            .unwrap();
        StrictMorphism {
            dom: self.tensor_obj(&f.dom, &g.dom),
            cod: self.tensor_obj(&f.cod, &g.cod),
            inner,
        }
    }

    fn equal(&self, f: &StrictMorphism<C>, g: &StrictMorphism<C>) -> bool {
        f.dom == g.dom && f.cod == g.cod && self.base.equal(&f.inner, &g.inner)
    }

    fn associator(
        &self,
        a: &Vec<C::Object>,
        b: &Vec<C::Object>,
        c: &Vec<C::Object>,
    ) -> StrictMorphism<C> {
        let all = self.tensor_obj(&self.tensor_obj(a, b), c);
        self.identity(&all)
    }

    fn associator_inv(
        &self,
        a: &Vec<C::Object>,
        b: &Vec<C::Object>,
        c: &Vec<C::Object>,
    ) -> StrictMorphism<C> {
        self.associator(a, b, c)
    }

    fn left_unitor(&self, a: &Vec<C::Object>) -> StrictMorphism<C> {
        self.identity(a)
    }

    fn left_unitor_inv(&self, a: &Vec<C::Object>) -> StrictMorphism<C> {
        self.identity(a)
    }

    fn right_unitor(&self, a: &Vec<C::Object>) -> StrictMorphism<C> {
        self.identity(a)
    }

    fn right_unitor_inv(&self, a: &Vec<C::Object>) -> StrictMorphism<C> {
        self.identity(a)
    }

    fn braiding(&self, a: &Vec<C::Object>, b: &Vec<C::Object>) -> StrictMorphism<C> {
        let mut base: Vec<C::Object> = a.clone();
        base.extend_from_slice(b);
        let src = Self::leftnest(0..base.len());
        // Target lists b ++ a, with the block permutation routing.
        let mut tgt_leaves: Vec<ObjectExpr> =
            (a.len()..a.len() + b.len()).map(ObjectExpr::leaf).collect();
        tgt_leaves.extend((0..a.len()).map(ObjectExpr::leaf));
        let tgt = Self::leftnest_exprs(&tgt_leaves);
        let inner = canonical_iso(
            &self.base,
            &src,
            &tgt,
            &block_braiding(a.len(), b.len()),
            &base,
        )
        .expect("braiding shapes agree");
        StrictMorphism {
            dom: self.tensor_obj(a, b),
            cod: self.tensor_obj(b, a),
            inner,
        }
    }

    fn hom_sample(
        &self,
        a: &Vec<C::Object>,
        b: &Vec<C::Object>,
        spec: &SampleSpec,
    ) -> Vec<StrictMorphism<C>> {
        self.base
            .hom_sample(&self.product(a), &self.product(b), spec)
            .into_iter()
            .map(|inner| StrictMorphism {
                dom: a.clone(),
                cod: b.clone(),
                inner,
            })
            .collect()
    }

    fn approx_size(&self, a: &Vec<C::Object>) -> usize {
        self.base.approx_size(&self.product(a))
    }

    fn render(&self, f: &StrictMorphism<C>) -> String {
        format!("[{}-list] {}", f.dom.len(), self.base.render(&f.inner))
    }
}

/// The strictification of a category together with the evaluation functor
/// back to it (full, faithful, essentially surjective, with merge-iso
/// strongators).
pub fn strictify<C: Smc + Clone + 'static>(base: C) -> (StrictCat<C>, SmFunctor<StrictCat<C>, C>) {
    let strict = StrictCat::new(base.clone());
    let functor = SmFunctor::new(
        "evaluate-product",
        strict.clone(),
        base,
        |s: &StrictCat<C>, _t, o: &Vec<C::Object>| s.product(o),
        |_s, _t, f: &StrictMorphism<C>| Ok(f.inner.clone()),
        |_s, t: &C| t.identity(&t.unit()),
        |s: &StrictCat<C>, _t, a: &Vec<C::Object>, b: &Vec<C::Object>| s.merge_iso(a, b),
    );
    (strict, functor)
}

/// The induced supply on the strictification: on a singleton list the action
/// is the strict factorization of the original action; on a general list the
/// action conjugates the blockwise actions with the grid-transpose
/// symmetries.
pub fn strictify_supply<P, C>(s: Supply<P, C>) -> Supply<P, StrictCat<C>>
where
    P: Prop + Clone + 'static,
    C: Smc + Clone + 'static,
{
    let label = format!("strictified/{}", s.label);
    let prop = s.prop.clone();
    let strict = StrictCat::new(s.category.clone());
    Supply::new(label, prop, strict, move |p, strict, list, mu| {
        let base_cat = &strict.base;
        let k = list.len();
        let m = p.dom(mu);
        let n = p.cod(mu);
        // ⊗(list·m) → ⊗(block powers) → blockwise action → back.
        let repeat = |times: usize| -> Vec<ObjectExpr> {
            (0..times)
                .flat_map(|_| (0..k).map(ObjectExpr::leaf))
                .collect()
        };
        let blocks = |times: usize| -> ObjectExpr {
            let bs: Vec<ObjectExpr> = (0..k)
                .map(|i| StrictCat::<C>::leftnest_exprs(&vec![ObjectExpr::leaf(i); times]))
                .collect();
            StrictCat::<C>::leftnest_exprs(&bs)
        };
        let src = StrictCat::<C>::leftnest_exprs(&repeat(m));
        let mid_src = blocks(m);
        let into = canonical_iso(base_cat, &src, &mid_src, &transpose_perm(k, m), list)
            .map_err(SupplyError::Smc)?;
        let mut bulk: Option<C::Morphism> = None;
        for c in list.iter() {
            let step = s.act(c, mu)?;
            bulk = Some(match bulk {
                None => step,
                Some(acc) => base_cat.tensor_mor(&acc, &step),
            });
        }
        let bulk = bulk.unwrap_or_else(|| base_cat.identity(&base_cat.unit()));
        let mid_tgt = blocks(n);
        let tgt = StrictCat::<C>::leftnest_exprs(&repeat(n));
        let back = canonical_iso(base_cat, &mid_tgt, &tgt, &transpose_perm(n, k), list)
            .map_err(SupplyError::Smc)?;
        let inner = base_cat
            .compose(
                &base_cat.compose(&into, &bulk).map_err(SupplyError::Smc)?,
                &back,
            )
            .map_err(SupplyError::Smc)?;
        let dom: Vec<C::Object> = (0..m).flat_map(|_| list.iter().cloned()).collect();
        let cod: Vec<C::Object> = (0..n).flat_map(|_| list.iter().cloned()).collect();
        strict.promote(dom, cod, inner).map_err(SupplyError::Smc)
    })
}
