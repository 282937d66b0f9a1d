//! Strong monoidal functors with explicit strongators, supply preservation
//! checking, and the construction toolbox: transfer along prop functors,
//! biproducts, transfer along strict essentially-surjective functors,
//! strictification, and the pointwise tensor of functors.

use std::rc::Rc;

use crate::props::{Prop, PropBounds};
use crate::report::CheckReport;
use crate::smc::{canonical_iso, power_mor, power_obj, ObjectExpr, SampleSpec, Smc};
use crate::supply::{is_homomorphism, Supply, SupplyError};

pub mod biproduct;
pub mod bridges;
pub mod strictify;

pub use biproduct::{
    biproduct_supply, copairing, coprojection_left, coprojection_right, pairing, projection_left,
    projection_right, BiproductCat,
};
pub use bridges::{finset_to_nested, finset_to_rel, identity_functor, nested_to_rel};
pub use strictify::{strictify, strictify_supply, StrictCat, StrictMorphism};

type ObjMap<C, D> = dyn Fn(&C, &D, &<C as Smc>::Object) -> <D as Smc>::Object;
type MorMap<C, D> =
    dyn Fn(&C, &D, &<C as Smc>::Morphism) -> Result<<D as Smc>::Morphism, SupplyError>;
type UnitStrongator<C, D> = dyn Fn(&C, &D) -> <D as Smc>::Morphism;
type Strongator<C, D> =
    dyn Fn(&C, &D, &<C as Smc>::Object, &<C as Smc>::Object) -> <D as Smc>::Morphism;

/// A strong symmetric monoidal functor `F : C → D` with its unit strongator
/// `I → F(I)` and binary strongators `F(c)⊗F(c') → F(c⊗c')`.
pub struct SmFunctor<C: Smc, D: Smc> {
    pub label: String,
    pub source: C,
    pub target: D,
    obj_map: Rc<ObjMap<C, D>>,
    mor_map: Rc<MorMap<C, D>>,
    unit_strongator: Rc<UnitStrongator<C, D>>,
    strongator: Rc<Strongator<C, D>>,
}

impl<C: Smc + Clone, D: Smc + Clone> Clone for SmFunctor<C, D> {
    fn clone(&self) -> Self {
        SmFunctor {
            label: self.label.clone(),
            source: self.source.clone(),
            target: self.target.clone(),
            obj_map: Rc::clone(&self.obj_map),
            mor_map: Rc::clone(&self.mor_map),
            unit_strongator: Rc::clone(&self.unit_strongator),
            strongator: Rc::clone(&self.strongator),
        }
    }
}

impl<C: Smc, D: Smc> SmFunctor<C, D> {
    pub fn new(
        label: impl Into<String>,
        source: C,
        target: D,
        obj_map: impl Fn(&C, &D, &C::Object) -> D::Object + 'static,
        mor_map: impl Fn(&C, &D, &C::Morphism) -> Result<D::Morphism, SupplyError> + 'static,
        unit_strongator: impl Fn(&C, &D) -> D::Morphism + 'static,
        strongator: impl Fn(&C, &D, &C::Object, &C::Object) -> D::Morphism + 'static,
    ) -> Self {
        SmFunctor {
            label: label.into(),
            source,
            target,
            obj_map: Rc::new(obj_map),
            mor_map: Rc::new(mor_map),
            unit_strongator: Rc::new(unit_strongator),
            strongator: Rc::new(strongator),
        }
    }

    /// A strict functor: object map commutes with tensors on the nose and all
    /// strongators are identities.
    pub fn strict(
        label: impl Into<String>,
        source: C,
        target: D,
        obj_map: impl Fn(&C, &D, &C::Object) -> D::Object + 'static,
        mor_map: impl Fn(&C, &D, &C::Morphism) -> Result<D::Morphism, SupplyError> + 'static,
    ) -> Self
    where
        C: 'static,
        D: 'static,
    {
        let unit_obj = Rc::new(obj_map);
        let obj_for_phi = Rc::clone(&unit_obj);
        let obj_for_unit = Rc::clone(&unit_obj);
        SmFunctor {
            label: label.into(),
            source,
            target,
            obj_map: Rc::new(move |c, d, o| unit_obj(c, d, o)),
            mor_map: Rc::new(mor_map),
            unit_strongator: Rc::new(move |c: &C, d: &D| {
                d.identity(&obj_for_unit(c, d, &c.unit()))
            }),
            strongator: Rc::new(move |c: &C, d: &D, a: &C::Object, b: &C::Object| {
                d.identity(&obj_for_phi(c, d, &c.tensor_obj(a, b)))
            }),
        }
    }

    pub fn obj(&self, c: &C::Object) -> D::Object {
        (self.obj_map)(&self.source, &self.target, c)
    }

    pub fn mor(&self, f: &C::Morphism) -> Result<D::Morphism, SupplyError> {
        (self.mor_map)(&self.source, &self.target, f)
    }

    /// `φ_I : I_D → F(I_C)`.
    pub fn phi_unit(&self) -> D::Morphism {
        (self.unit_strongator)(&self.source, &self.target)
    }

    /// `φ_{c,c'} : F(c) ⊗ F(c') → F(c ⊗ c')`.
    pub fn phi(&self, c: &C::Object, c2: &C::Object) -> D::Morphism {
        (self.strongator)(&self.source, &self.target, c, c2)
    }

    /// The canonical composite of binary strongators along the left-nested
    /// power: `F(c)^⊗m → F(c^⊗m)`.
    pub fn phi_power(&self, c: &C::Object, m: usize) -> D::Morphism {
        let d = &self.target;
        match m {
            0 => self.phi_unit(),
            1 => d.identity(&self.obj(c)),
            _ => {
                let prev = self.phi_power(c, m - 1);
                let step = d.tensor_mor(&prev, &d.identity(&self.obj(c)));
                let cm1 = power_obj(&self.source, c, m - 1);
                let outer = self.phi(&cm1, c);
                d.compose(&step, &outer).expect("phi powers compose")
            }
        }
    }

    /// Do the strongators evaluate to identities on the sampled objects?
    pub fn is_strict_on(&self, objects: &[C::Object]) -> bool {
        let d = &self.target;
        let unit_ok = d.equal(
            &self.phi_unit(),
            &d.identity(&self.obj(&self.source.unit())),
        );
        unit_ok
            && objects.iter().all(|a| {
                objects.iter().all(|b| {
                    let want = d.identity(&self.obj(&self.source.tensor_obj(a, b)));
                    d.equal(&self.phi(a, b), &want)
                })
            })
    }
}

/// Verify the strong-monoidal-functor laws on a sample: functoriality,
/// naturality of the strongators, their associativity and unit coherence,
/// and compatibility with the braiding.
pub fn check_smf<C: Smc, D: Smc>(
    f: &SmFunctor<C, D>,
    objects: &[C::Object],
    spec: &SampleSpec,
) -> CheckReport {
    let mut report = CheckReport::new(format!("smf/{}", f.label));
    let (c, d) = (&f.source, &f.target);

    let mut ok = true;
    for (ai, a) in objects.iter().enumerate() {
        let got = f.mor(&c.identity(a)).unwrap();
        let want = d.identity(&f.obj(a));
        if !d.equal(&got, &want) {
            report.fail(
                format!("identity/obj{ai}"),
                "smf.functoriality",
                format!("F(id) ≠ id at {a:?}: {}", d.render(&got)),
            );
            ok = false;
        }
    }
    let small: Vec<&C::Object> = objects.iter().filter(|o| c.approx_size(o) <= 16).collect();
    'comp: for a in &small {
        for b in &small {
            let fs = c.hom_sample(a, b, spec);
            for x in &small {
                let gs = c.hom_sample(b, x, spec);
                for p in fs.iter().take(8) {
                    for q in gs.iter().take(8) {
                        let lhs = f.mor(&c.compose(p, q).unwrap()).unwrap();
                        let rhs = d.compose(&f.mor(p).unwrap(), &f.mor(q).unwrap()).unwrap();
                        if !d.equal(&lhs, &rhs) {
                            report.fail(
                                "compose",
                                "smf.functoriality",
                                format!(
                                    "F(p;q) ≠ F(p);F(q)\np = {}\nq = {}",
                                    c.render(p),
                                    c.render(q)
                                ),
                            );
                            ok = false;
                            break 'comp;
                        }
                    }
                }
            }
        }
    }
    if ok {
        report.pass("functoriality", "smf.functoriality");
    }

    // Naturality of φ: (F(p)⊗F(q)) ; φ = φ ; F(p⊗q).
    let mut ok = true;
    'nat: for a in &small {
        for b in &small {
            let fs = c.hom_sample(a, b, spec);
            for a2 in &small {
                for b2 in &small {
                    let gs = c.hom_sample(a2, b2, spec);
                    for p in fs.iter().take(6) {
                        for q in gs.iter().take(6) {
                            let lhs = d
                                .compose(
                                    &d.tensor_mor(&f.mor(p).unwrap(), &f.mor(q).unwrap()),
                                    &f.phi(b, b2),
                                )
                                .unwrap();
                            let rhs = d
                                .compose(&f.phi(a, a2), &f.mor(&c.tensor_mor(p, q)).unwrap())
                                .unwrap();
                            if !d.equal(&lhs, &rhs) {
                                report.fail(
                                    "strongator-naturality",
                                    "smf.strongator-naturality",
                                    format!(
                                        "(F(p)⊗F(q));φ ≠ φ;F(p⊗q)\np = {}\nq = {}",
                                        c.render(p),
                                        c.render(q)
                                    ),
                                );
                                ok = false;
                                break 'nat;
                            }
                        }
                    }
                }
            }
        }
    }
    if ok {
        report.pass("strongator-naturality", "smf.strongator-naturality");
    }

    // Associativity coherence:
    // (φ_{a,b}⊗id) ; φ_{a⊗b,c} ; F(α) = α ; (id⊗φ_{b,c}) ; φ_{a,b⊗c}.
    let mut ok = true;
    for a in objects {
        for b in objects {
            for x in objects {
                let lhs = {
                    let s1 = d.tensor_mor(&f.phi(a, b), &d.identity(&f.obj(x)));
                    let s2 = f.phi(&c.tensor_obj(a, b), x);
                    let s3 = f.mor(&c.associator(a, b, x)).unwrap();
                    d.compose(&d.compose(&s1, &s2).unwrap(), &s3).unwrap()
                };
                let rhs = {
                    let s1 = d.associator(&f.obj(a), &f.obj(b), &f.obj(x));
                    let s2 = d.tensor_mor(&d.identity(&f.obj(a)), &f.phi(b, x));
                    let s3 = f.phi(a, &c.tensor_obj(b, x));
                    d.compose(&d.compose(&s1, &s2).unwrap(), &s3).unwrap()
                };
                if !d.equal(&lhs, &rhs) {
                    report.fail(
                        format!("strongator-associativity/{a:?},{b:?},{x:?}"),
                        "smf.strongator-coherence",
                        format!("lhs = {}\nrhs = {}", d.render(&lhs), d.render(&rhs)),
                    );
                    ok = false;
                }
            }
        }
    }
    // Unit coherence: (φ_I⊗id) ; φ_{I,a} ; F(λ) = λ and its mirror.
    for a in objects {
        let fa = f.obj(a);
        let lhs = {
            let s1 = d.tensor_mor(&f.phi_unit(), &d.identity(&fa));
            let s2 = f.phi(&c.unit(), a);
            let s3 = f.mor(&c.left_unitor(a)).unwrap();
            d.compose(&d.compose(&s1, &s2).unwrap(), &s3).unwrap()
        };
        if !d.equal(&lhs, &d.left_unitor(&fa)) {
            report.fail(
                format!("strongator-left-unit/{a:?}"),
                "smf.strongator-coherence",
                d.render(&lhs),
            );
            ok = false;
        }
        let rhs = {
            let s1 = d.tensor_mor(&d.identity(&fa), &f.phi_unit());
            let s2 = f.phi(a, &c.unit());
            let s3 = f.mor(&c.right_unitor(a)).unwrap();
            d.compose(&d.compose(&s1, &s2).unwrap(), &s3).unwrap()
        };
        if !d.equal(&rhs, &d.right_unitor(&fa)) {
            report.fail(
                format!("strongator-right-unit/{a:?}"),
                "smf.strongator-coherence",
                d.render(&rhs),
            );
            ok = false;
        }
    }
    // Symmetry: φ ; F(γ) = γ ; φ.
    for a in objects {
        for b in objects {
            let lhs = d
                .compose(&f.phi(a, b), &f.mor(&c.braiding(a, b)).unwrap())
                .unwrap();
            let rhs = d
                .compose(&d.braiding(&f.obj(a), &f.obj(b)), &f.phi(b, a))
                .unwrap();
            if !d.equal(&lhs, &rhs) {
                report.fail(
                    format!("strongator-symmetry/{a:?},{b:?}"),
                    "smf.strongator-coherence",
                    format!("lhs = {}\nrhs = {}", d.render(&lhs), d.render(&rhs)),
                );
                ok = false;
            }
        }
    }
    if ok {
        report.pass("strongator-coherence", "smf.strongator-coherence");
    }

    report.sort();
    report
}

/// Does `F` carry the supply `s` to the supply `t`? For every sampled object
/// and enumerated prop morphism the square
/// `t_{F(c)}(μ) ; φ^(n) = φ^(m) ; F(s_c(μ))` must commute, where `φ^(m)` is
/// the canonical composite of binary strongators along the left-nested power.
pub fn check_preserves_supply<P: Prop, C: Smc, D: Smc>(
    f: &SmFunctor<C, D>,
    s: &Supply<P, C>,
    t: &Supply<P, D>,
    objects: &[C::Object],
    bounds: &PropBounds,
) -> CheckReport {
    let mut report = CheckReport::new(format!("preserves-supply/{}", f.label))
        .with_bound("max-arity", bounds.max_arity as u64)
        .with_bound("size-bound", bounds.size_bound as u64);
    let d = &f.target;
    let p = &s.prop;
    for (ci, c) in objects.iter().enumerate() {
        let fc = f.obj(c);
        let mut ok = true;
        let mut count = 0usize;
        'obj: for m in 0..=bounds.max_arity {
            let phi_m = f.phi_power(c, m);
            for n in 0..=bounds.max_arity {
                let phi_n = f.phi_power(c, n);
                let Some(mus) = p.enumerate_hom(m, n, bounds.size_bound) else {
                    report.skip(
                        format!("square/obj{ci}"),
                        "preserve.square",
                        "prop not enumerable",
                    );
                    break 'obj;
                };
                for mu in mus {
                    count += 1;
                    let lhs = d.compose(&t.act(&fc, &mu).unwrap(), &phi_n).unwrap();
                    let rhs = d
                        .compose(&phi_m, &f.mor(&s.act(c, &mu).unwrap()).unwrap())
                        .unwrap();
                    if !d.equal(&lhs, &rhs) {
                        report.fail(
                            format!("square/obj{ci}"),
                            "preserve.square",
                            format!(
                                "t_F(c)(μ);φ ≠ φ;F(s_c(μ)) at c = {c:?}\nμ = {mu}\nlhs = {}\nrhs = {}",
                                d.render(&lhs),
                                d.render(&rhs)
                            ),
                        );
                        ok = false;
                        break 'obj;
                    }
                }
            }
        }
        if ok {
            report.pass(
                format!("square/obj{ci} ({c:?}, {count} morphisms)"),
                "preserve.square",
            );
        }
    }
    report.sort();
    report
}

/// For a supply-preserving functor, the strongators are homomorphisms for the
/// target supply (both the binary and the unit square), and the functor sends
/// homomorphisms to homomorphisms.
pub fn check_strongators_homomorphisms<P: Prop, C: Smc, D: Smc>(
    f: &SmFunctor<C, D>,
    s: &Supply<P, C>,
    t: &Supply<P, D>,
    objects: &[C::Object],
    spec: &SampleSpec,
    bounds: &PropBounds,
) -> CheckReport {
    let mut report = CheckReport::new(format!("strongators-homomorphisms/{}", f.label))
        .with_bound("max-arity", bounds.max_arity as u64);
    let d = &f.target;
    for (ai, a) in objects.iter().enumerate() {
        for (bi, b) in objects.iter().enumerate() {
            match is_homomorphism(t, &f.phi(a, b), bounds) {
                Ok(()) => report.pass(format!("binary/obj{ai},obj{bi}"), "strongator.homomorphism"),
                Err(v) => report.fail(
                    format!("binary/obj{ai},obj{bi}"),
                    "strongator.homomorphism",
                    v.render(d),
                ),
            }
        }
    }
    match is_homomorphism(t, &f.phi_unit(), bounds) {
        Ok(()) => report.pass("unit", "strongator.homomorphism"),
        Err(v) => report.fail("unit", "strongator.homomorphism", v.render(d)),
    }

    // Image of a homomorphism is a homomorphism.
    let c = &f.source;
    let small: Vec<&C::Object> = objects.iter().filter(|o| c.approx_size(o) <= 16).collect();
    let mut ok = true;
    let mut count = 0usize;
    'outer: for a in &small {
        for b in &small {
            for g in c.hom_sample(a, b, spec).iter().take(24) {
                if is_homomorphism(s, g, bounds).is_err() {
                    continue;
                }
                count += 1;
                let fg = f.mor(g).unwrap();
                if let Err(v) = is_homomorphism(t, &fg, bounds) {
                    report.fail(
                        "maps-homomorphisms",
                        "strongator.maps-homomorphisms",
                        format!(
                            "F sends the homomorphism {} to a non-homomorphism\n{}",
                            c.render(g),
                            v.render(d)
                        ),
                    );
                    ok = false;
                    break 'outer;
                }
            }
        }
    }
    if ok {
        report.pass(
            format!("maps-homomorphisms ({count} checked)"),
            "strongator.maps-homomorphisms",
        );
    }
    report.sort();
    report
}

/// Pull a supply back along a prop functor given as a morphism map
/// `P → Q`: the new action evaluates the image.
pub fn transfer_along_prop_functor<P, Q, C>(
    label: impl Into<String>,
    prop: P,
    map: impl Fn(&P::Morphism) -> Q::Morphism + 'static,
    s: Supply<Q, C>,
) -> Supply<P, C>
where
    P: Prop + Clone + 'static,
    Q: Prop + Clone + 'static,
    C: Smc + Clone + 'static,
{
    let category = s.category.clone();
    Supply::new(label, prop, category, move |_p, _cat, c, mu| {
        let image = map(mu);
        s.act(c, &image)
    })
}

/// Functoriality of a prop-functor candidate on enumerated morphisms:
/// identities, composites, sums, and braidings are preserved.
pub fn check_prop_functor<P: Prop, Q: Prop>(
    label: &str,
    p: &P,
    q: &Q,
    map: impl Fn(&P::Morphism) -> Q::Morphism,
    bounds: &PropBounds,
) -> CheckReport {
    let mut report = CheckReport::new(format!("prop-functor/{label}"))
        .with_bound("max-arity", bounds.max_arity as u64);
    let a = bounds.max_arity;
    let mut ok = true;
    for m in 0..=a {
        if !q.equal(&map(&p.identity(m)), &q.identity(m)) {
            report.fail(
                format!("identity/{m}"),
                "prop-functor.identity",
                format!("image of id_{m} is not id"),
            );
            ok = false;
        }
        for n in 0..=a.saturating_sub(m) {
            if !q.equal(&map(&p.braiding(m, n)), &q.braiding(m, n)) {
                report.fail(
                    format!("braiding/{m},{n}"),
                    "prop-functor.braiding",
                    format!("image of σ({m},{n}) is not the braiding"),
                );
                ok = false;
            }
        }
    }
    if ok {
        report.pass("identity-and-braiding", "prop-functor.identity");
    }

    let mut ok = true;
    'comp: for m in 0..=a {
        for k in 0..=a {
            for n in 0..=a {
                let (Some(fs), Some(gs)) = (
                    p.enumerate_hom(m, k, bounds.size_bound),
                    p.enumerate_hom(k, n, bounds.size_bound),
                ) else {
                    report.skip("compose", "prop-functor.compose", "not enumerable");
                    break 'comp;
                };
                for f in &fs {
                    for g in &gs {
                        let lhs = map(&p.compose(f, g).unwrap());
                        let rhs = q.compose(&map(f), &map(g)).unwrap();
                        if !q.equal(&lhs, &rhs) {
                            report.fail(
                                "compose",
                                "prop-functor.compose",
                                format!("G(f;g) ≠ G(f);G(g)\nf = {f}\ng = {g}"),
                            );
                            ok = false;
                            break 'comp;
                        }
                    }
                }
            }
        }
    }
    if ok {
        report.pass("compose", "prop-functor.compose");
    }

    let mut ok = true;
    'sum: for m1 in 0..=a {
        for n1 in 0..=a {
            for m2 in 0..=a - m1 {
                for n2 in 0..=a - n1 {
                    let (Some(fs), Some(gs)) = (
                        p.enumerate_hom(m1, n1, bounds.size_bound),
                        p.enumerate_hom(m2, n2, bounds.size_bound),
                    ) else {
                        break 'sum;
                    };
                    for f in &fs {
                        for g in &gs {
                            let lhs = map(&p.monoidal_sum(f, g));
                            let rhs = q.monoidal_sum(&map(f), &map(g));
                            if !q.equal(&lhs, &rhs) {
                                report.fail(
                                    "sum",
                                    "prop-functor.sum",
                                    format!("G(f+g) ≠ G(f)+G(g)\nf = {f}\ng = {g}"),
                                );
                                ok = false;
                                break 'sum;
                            }
                        }
                    }
                }
            }
        }
    }
    if ok {
        report.pass("sum", "prop-functor.sum");
    }
    report.sort();
    report
}

/// One entry of a chosen section: a source object isomorphic to the given
/// target object, with the mediating isomorphism in both directions.
pub struct SectionData<C: Smc, D: Smc> {
    pub object: C::Object,
    /// `F(object) → d`
    pub fwd: D::Morphism,
    /// `d → F(object)`
    pub back: D::Morphism,
}

impl<C: Smc, D: Smc> SectionData<C, D> {
    /// Section entry for a functor that hits `d` on the nose.
    pub fn on_the_nose(cat: &D, object: C::Object, d: &D::Object) -> Self {
        SectionData {
            object,
            fwd: cat.identity(d),
            back: cat.identity(d),
        }
    }
}

/// Transfer a supply along a strict, essentially surjective functor. The
/// section provides, for each target object, a source object and the
/// mediating isomorphism `F(section(d)) ≅ d`; the transferred action
/// conjugates through its tensor powers. The section is explicit input
/// rather than a choice inside the library, so transfers stay deterministic
/// and testable.
pub fn transfer_along_strict_surjection<P, C, D>(
    label: impl Into<String>,
    f: SmFunctor<C, D>,
    s: Supply<P, C>,
    strictness_witnesses: &[C::Object],
    section: impl Fn(&D, &D::Object) -> SectionData<C, D> + 'static,
) -> Result<Supply<P, D>, SupplyError>
where
    P: Prop + Clone + 'static,
    C: Smc + Clone + 'static,
    D: Smc + Clone + 'static,
{
    if !f.is_strict_on(strictness_witnesses) {
        return Err(SupplyError::Invalid(format!(
            "functor {} is not strict on the witness objects",
            f.label
        )));
    }
    let prop = s.prop.clone();
    let target = f.target.clone();
    Ok(Supply::new(
        label,
        prop,
        target,
        move |p, cat, d_obj, mu| {
            let sec = section(cat, d_obj);
            let fc = f.obj(&sec.object);
            let ok_boundaries = cat.dom(&sec.fwd) == fc
                && cat.cod(&sec.fwd) == *d_obj
                && cat.dom(&sec.back) == *d_obj
                && cat.cod(&sec.back) == fc;
            let two_sided = ok_boundaries
                && cat.equal(
                    &cat.compose(&sec.fwd, &sec.back).map_err(SupplyError::Smc)?,
                    &cat.identity(&fc),
                )
                && cat.equal(
                    &cat.compose(&sec.back, &sec.fwd).map_err(SupplyError::Smc)?,
                    &cat.identity(d_obj),
                );
            if !two_sided {
                return Err(SupplyError::Invalid(format!(
                    "section at {d_obj:?} is not a two-sided isomorphism"
                )));
            }
            let m = p.dom(mu);
            let n = p.cod(mu);
            let back_m = power_mor(cat, &sec.back, m);
            let fwd_n = power_mor(cat, &sec.fwd, n);
            let mid = f.mor(&s.act(&sec.object, mu)?)?;
            let first = cat.compose(&back_m, &mid).map_err(SupplyError::Smc)?;
            cat.compose(&first, &fwd_n).map_err(SupplyError::Smc)
        },
    ))
}

/// The pointwise tensor of parallel strong monoidal functors:
/// `(F⊗G)(c) = F(c)⊗G(c)` with interleaving-mediated strongators.
pub fn smf_tensor<C, D>(f: SmFunctor<C, D>, g: SmFunctor<C, D>) -> SmFunctor<C, D>
where
    C: Smc + Clone + 'static,
    D: Smc + Clone + 'static,
{
    let label = format!("({})⊗({})", f.label, g.label);
    let source = f.source.clone();
    let target = f.target.clone();
    let f2 = f.clone();
    let g2 = g.clone();
    let f3 = f.clone();
    let g3 = g.clone();
    let f4 = f.clone();
    let g4 = g.clone();
    SmFunctor::new(
        label,
        source,
        target,
        move |_c, d, o| d.tensor_obj(&f.obj(o), &g.obj(o)),
        move |_c, d, m| Ok(d.tensor_mor(&f2.mor(m)?, &g2.mor(m)?)),
        move |_c, d: &D| -> D::Morphism {
            // I → I⊗I → F(I)⊗G(I)
            let expand = d.left_unitor_inv(&d.unit());
            let both = d.tensor_mor(&f3.phi_unit(), &g3.phi_unit());
            d.compose(&expand, &both).expect("unit strongator composes")
        },
        move |_c, d: &D, a: &C::Object, b: &C::Object| {
            // (F(a)⊗G(a))⊗(F(b)⊗G(b)) → (F(a)⊗F(b))⊗(G(a)⊗G(b)) → F(a⊗b)⊗G(a⊗b)
            let base = [f4.obj(a), g4.obj(a), f4.obj(b), g4.obj(b)];
            let src = ObjectExpr::tensor(
                ObjectExpr::tensor(ObjectExpr::leaf(0), ObjectExpr::leaf(1)),
                ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(3)),
            );
            let tgt = ObjectExpr::tensor(
                ObjectExpr::tensor(ObjectExpr::leaf(0), ObjectExpr::leaf(2)),
                ObjectExpr::tensor(ObjectExpr::leaf(1), ObjectExpr::leaf(3)),
            );
            let perm = crate::finset::Permutation::from_table(vec![1, 3, 2, 4]).unwrap();
            let mid4 = canonical_iso(d, &src, &tgt, &perm, &base).expect("middle four");
            let phis = d.tensor_mor(&f4.phi(a, b), &g4.phi(a, b));
            d.compose(&mid4, &phis).expect("tensor strongator composes")
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::{CobProp, CospanMorphism, CospanProp, FinSetOpProp, OpFinFunction};
    use crate::smc::{FinSetCat, MatQCat, NestedRelCat, RelCat};
    use crate::supply::builtin::{
        cob_to_cospan, finset_comonoid_supply, matq_self_dual_supply, matq_self_dual_supply_scaled,
        nested_hypergraph_supply, rel_comonoid_supply_direct, rel_hypergraph_supply,
    };
    use crate::supply::check_supply;
    use num_rational::Rational64;

    fn tree_sample() -> Vec<ObjectExpr> {
        vec![
            ObjectExpr::Unit,
            ObjectExpr::leaf(0),
            ObjectExpr::leaf(1),
            ObjectExpr::leaf(2),
            ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(1)),
        ]
    }

    #[test]
    fn flatten_functor_is_a_strict_smf() {
        let f = nested_to_rel(NestedRelCat::new(vec![0, 1, 2]), RelCat::new(vec![0, 1, 2]));
        assert!(f.is_strict_on(&tree_sample()));
        let r = check_smf(&f, &tree_sample(), &SampleSpec::default());
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn function_inclusion_is_a_strict_smf() {
        let f = finset_to_rel(FinSetCat::new(vec![0, 1, 2]), RelCat::new(vec![0, 1, 2]));
        assert!(f.is_strict_on(&tree_sample()));
        let r = check_smf(&f, &tree_sample(), &SampleSpec::default());
        assert!(r.passed(), "{r}");
    }

    /// The dual of a finite-set function as the cospan with identity left leg.
    fn op_to_cospan(mu: &OpFinFunction) -> CospanMorphism {
        let g = mu.inner();
        CospanMorphism::new(crate::finset::FinFunction::identity(g.cod()), g.clone()).unwrap()
    }

    #[test]
    fn comonoid_prop_functor_into_cospans_is_functorial() {
        let r = check_prop_functor(
            "dual-functions-to-cospans",
            &FinSetOpProp,
            &CospanProp,
            op_to_cospan,
            &PropBounds::new(3, 4),
        );
        assert!(r.passed(), "{r}");
        let r = check_prop_functor(
            "matchings-to-cospans",
            &CobProp,
            &CospanProp,
            cob_to_cospan,
            &PropBounds::new(3, 1),
        );
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn transferred_comonoid_supply_is_the_expected_one() {
        let rel = RelCat::new(vec![0, 1, 2]);
        let hyper = rel_hypergraph_supply(rel.clone());
        let transferred = transfer_along_prop_functor(
            "rel-comonoid-via-cospans",
            FinSetOpProp,
            op_to_cospan,
            hyper,
        );
        let direct = rel_comonoid_supply_direct(rel.clone());
        let bounds = PropBounds::new(3, 0);
        // Same action values on every enumerated morphism and sampled object.
        for c in tree_sample() {
            for m in 0..=2usize {
                for n in 0..=2usize {
                    for mu in FinSetOpProp.enumerate_hom(m, n, 0).unwrap() {
                        assert_eq!(
                            transferred.act(&c, &mu).unwrap(),
                            direct.act(&c, &mu).unwrap(),
                            "μ = {mu} at {c}"
                        );
                    }
                }
            }
        }
        let r = check_supply(&transferred, &tree_sample(), &bounds);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn hypergraph_transfer_along_matchings_gives_self_duals_on_rel() {
        let rel = RelCat::new(vec![0, 1, 2]);
        let hyper = rel_hypergraph_supply(rel);
        let self_dual = transfer_along_prop_functor("rel-self-dual", CobProp, cob_to_cospan, hyper);
        let r = check_supply(&self_dual, &tree_sample(), &PropBounds::new(2, 1));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn strict_surjection_transfer_flattens_the_hypergraph_supply() {
        let sizes = vec![0, 1, 2];
        let nested = NestedRelCat::new(sizes.clone());
        let rel = RelCat::new(sizes.clone());
        let f = nested_to_rel(nested.clone(), rel.clone());
        let transferred = transfer_along_strict_surjection(
            "rel-hypergraph-via-flatten",
            f,
            nested_hypergraph_supply(nested),
            &tree_sample(),
            |cat, d| SectionData::on_the_nose(cat, d.clone(), d),
        )
        .unwrap();
        let direct = rel_hypergraph_supply(rel);
        for c in tree_sample() {
            for m in 0..=2usize {
                for n in 0..=2usize {
                    for mu in CospanProp.enumerate_hom(m, n, 3).unwrap() {
                        assert_eq!(
                            transferred.act(&c, &mu).unwrap(),
                            direct.act(&c, &mu).unwrap()
                        );
                    }
                }
            }
        }
        let r = check_supply(&transferred, &tree_sample(), &PropBounds::new(2, 3));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn rescaled_self_dual_supply_is_not_preserved_by_identity() {
        let cat = MatQCat::new(vec![1, 2]);
        let standard = matq_self_dual_supply(cat.clone());
        let rescaled = matq_self_dual_supply_scaled(cat.clone(), Rational64::new(2, 1), "rescaled");
        let objects = vec![ObjectExpr::Unit, ObjectExpr::leaf(0), ObjectExpr::leaf(1)];
        let bounds = PropBounds::new(2, 1);
        // Both are supplies…
        assert!(check_supply(&standard, &objects, &bounds).passed());
        assert!(check_supply(&rescaled, &objects, &bounds).passed());
        // …but the identity functor does not carry one to the other.
        let idf = identity_functor(cat);
        let r = check_preserves_supply(&idf, &rescaled, &standard, &objects, &bounds);
        assert!(!r.passed());
        let witness = r
            .failures()
            .next()
            .and_then(|e| e.witness.clone())
            .unwrap_or_default();
        assert!(
            witness.contains("0→2 pairs[(1, 2)]"),
            "witness should be the cup, got:\n{witness}"
        );
        // Against itself everything is fine.
        let idf = identity_functor(MatQCat::new(vec![1, 2]));
        let r = check_preserves_supply(&idf, &standard, &standard, &objects, &bounds);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn inclusion_preserves_comonoid_supplies() {
        let sizes = vec![0, 1, 2];
        let fcat = FinSetCat::new(sizes.clone());
        let rcat = RelCat::new(sizes.clone());
        let f = finset_to_rel(fcat.clone(), rcat.clone());
        let s = finset_comonoid_supply(fcat);
        let t = rel_comonoid_supply_direct(rcat);
        let bounds = PropBounds::new(2, 0);
        let r = check_preserves_supply(&f, &s, &t, &tree_sample(), &bounds);
        assert!(r.passed(), "{r}");
        let r = check_strongators_homomorphisms(
            &f,
            &s,
            &t,
            &tree_sample(),
            &SampleSpec::default(),
            &bounds,
        );
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn smf_tensor_builds_a_strong_monoidal_functor() {
        let cat = RelCat::new(vec![0, 1, 2]);
        let f = identity_functor(cat.clone());
        let g = identity_functor(cat);
        let fg = smf_tensor(f, g);
        let r = check_smf(&fg, &tree_sample(), &SampleSpec::default());
        assert!(r.passed(), "{r}");
        // (F⊗G)(c) = F(c)⊗G(c).
        let c = ObjectExpr::leaf(2);
        assert_eq!(fg.obj(&c), ObjectExpr::tensor(c.clone(), c));
    }
}

#[cfg(test)]
mod factoring_tests {
    use super::*;
    use crate::props::Prop;
    use crate::props::PropBounds;
    use crate::smc::Smc;
    use crate::smc::{FinSetCat, MatQCat, ObjectExpr, RelCat};
    use crate::supply::builtin::{
        finset_comonoid_supply, matq_self_dual_supply, matq_self_dual_supply_scaled,
        rel_comonoid_supply_direct,
    };
    use crate::supply::{is_homomorphism, Supply};
    use num_rational::Rational64;

    /// Does the functor send every coherence generator over the sample to a
    /// homomorphism for the target supply?
    fn maps_coherence_to_homs<P: Prop, C: Smc, D: Smc>(
        f: &SmFunctor<C, D>,
        t: &Supply<P, D>,
        objects: &[C::Object],
        bounds: &PropBounds,
    ) -> bool {
        let c = &f.source;
        for a in objects {
            for b in objects {
                let gens = [
                    c.braiding(a, b),
                    c.left_unitor(a),
                    c.right_unitor(a),
                    c.associator(a, b, a),
                ];
                for g in gens {
                    let img = f.mor(&g).unwrap();
                    if is_homomorphism(t, &img, bounds).is_err() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Preservation is equivalent to mapping coherence generators to
    /// homomorphisms together with the conjugation squares; compare verdicts
    /// on a passing and on a failing instance.
    #[test]
    fn preservation_verdict_matches_generator_and_square_checks() {
        let objects = vec![ObjectExpr::Unit, ObjectExpr::leaf(0), ObjectExpr::leaf(1)];
        let bounds = PropBounds::new(2, 0);

        // Positive: the inclusion of functions into relations.
        let fcat = FinSetCat::new(vec![1, 2]);
        let rcat = RelCat::new(vec![1, 2]);
        let incl = finset_to_rel(fcat.clone(), rcat.clone());
        let s = finset_comonoid_supply(fcat);
        let t = rel_comonoid_supply_direct(rcat);
        let preserves = check_preserves_supply(&incl, &s, &t, &objects, &bounds).passed();
        let gens = maps_coherence_to_homs(&incl, &t, &objects, &bounds);
        assert!(preserves && gens);

        // Negative: identity against the rescaled self-duality structure.
        let mbounds = PropBounds::new(2, 1);
        let cat = MatQCat::new(vec![1, 2]);
        let std_supply = matq_self_dual_supply(cat.clone());
        let rescaled = matq_self_dual_supply_scaled(cat.clone(), Rational64::new(2, 1), "rescaled");
        let idf = identity_functor(cat);
        let preserves =
            check_preserves_supply(&idf, &rescaled, &std_supply, &objects, &mbounds).passed();
        let gens = maps_coherence_to_homs(&idf, &std_supply, &objects, &mbounds);
        // Coherence generators still land on homomorphisms; the failure is in
        // the squares, and the combined verdict matches.
        assert!(!preserves && gens);
        assert_eq!(preserves, gens && preserves);
    }
}

#[cfg(test)]
mod tensor_unit_tests {
    use super::*;
    use crate::smc::{ObjectExpr, RelCat, Smc};

    /// Tensoring with the constant unit functor is isomorphic to the
    /// original functor, with unitors as the mediating components.
    #[test]
    fn tensor_with_constant_unit_is_unitor_isomorphic() {
        let cat = RelCat::new(vec![0, 1, 2]);
        let f = identity_functor(cat.clone());
        let constant_unit = SmFunctor::new(
            "constant-unit",
            cat.clone(),
            cat.clone(),
            |_s, t: &RelCat, _o| t.unit(),
            |_s, t: &RelCat, _m| Ok(t.identity(&t.unit())),
            |_s, t: &RelCat| t.identity(&t.unit()),
            |_s, t: &RelCat, _a, _b| t.left_unitor(&ObjectExpr::Unit),
        );
        let fk = smf_tensor(f, constant_unit);
        let objs = [
            ObjectExpr::Unit,
            ObjectExpr::leaf(2),
            ObjectExpr::tensor(ObjectExpr::leaf(2), ObjectExpr::leaf(1)),
        ];
        for c in &objs {
            assert_eq!(fk.obj(c), ObjectExpr::tensor(c.clone(), ObjectExpr::Unit));
            // Naturality of the unitor components over sampled morphisms.
            for g in cat.hom_sample(c, c, &SampleSpec::default()).iter().take(6) {
                let lhs = cat
                    .compose(&fk.mor(g).unwrap(), &cat.right_unitor(c))
                    .unwrap();
                let rhs = cat.compose(&cat.right_unitor(c), g).unwrap();
                assert!(cat.equal(&lhs, &rhs));
            }
        }
    }
}
