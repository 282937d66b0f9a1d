//! Supplies: a family of strong monoidal functors `s_c : P → C`, one per
//! object `c`, sending the prop object `m` to `c^⊗m` with canonical-iso
//! strongators, compatible with the tensor and unit of `C`.
//!
//! A supply is stored as an evaluator from prop morphisms (props have
//! unboundedly many morphisms, while the action is structural), plus the prop
//! and category it connects. [`check_supply`] verifies functoriality,
//! monoidality, braiding preservation, and the two compatibility squares on a
//! bounded enumeration; [`is_homomorphism`] checks the commuting square that
//! defines structure-preserving morphisms.

use std::rc::Rc;

use thiserror::Error;

use crate::finset::block_braiding;
use crate::props::{Prop, PropBounds, PropError};
use crate::report::CheckReport;
use crate::smc::{
    canonical_iso, power_mor, power_obj, power_shape, sigma_interleave, sigma_unit, ObjectExpr,
    PropCat, SampleSpec, Smc, SmcError,
};

pub mod builtin;
pub mod term_supply;

pub use term_supply::{make_supply, TermSupply};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SupplyError {
    #[error("prop error: {0}")]
    Prop(#[from] PropError),
    #[error("category error: {0}")]
    Smc(#[from] SmcError),
    #[error("relation {relation} fails at object {object}:\n{detail}")]
    RelationViolation {
        relation: String,
        object: String,
        detail: String,
    },
    #[error("{0}")]
    Invalid(String),
}

type Action<P, C> = dyn Fn(
    &P,
    &C,
    &<C as Smc>::Object,
    &<P as Prop>::Morphism,
) -> Result<<C as Smc>::Morphism, SupplyError>;

/// A supply of the prop `P` in the category `C`.
pub struct Supply<P: Prop, C: Smc> {
    pub label: String,
    pub prop: P,
    pub category: C,
    action: Rc<Action<P, C>>,
}

impl<P: Prop, C: Smc> Clone for Supply<P, C>
where
    P: Clone,
    C: Clone,
{
    fn clone(&self) -> Self {
        Supply {
            label: self.label.clone(),
            prop: self.prop.clone(),
            category: self.category.clone(),
            action: Rc::clone(&self.action),
        }
    }
}

impl<P: Prop, C: Smc> Supply<P, C> {
    pub fn new(
        label: impl Into<String>,
        prop: P,
        category: C,
        action: impl Fn(&P, &C, &C::Object, &P::Morphism) -> Result<C::Morphism, SupplyError> + 'static,
    ) -> Self {
        Supply {
            label: label.into(),
            prop,
            category,
            action: Rc::new(action),
        }
    }

    /// The action `s_c(μ) : c^⊗m → c^⊗n`.
    pub fn act(&self, c: &C::Object, mu: &P::Morphism) -> Result<C::Morphism, SupplyError> {
        (self.action)(&self.prop, &self.category, c, mu)
    }

    /// Same supply with selected actions replaced; the fixture hook for
    /// deliberately corrupted supplies.
    pub fn with_override(
        self,
        label: impl Into<String>,
        over: impl Fn(&C, &C::Object, &P::Morphism) -> Option<C::Morphism> + 'static,
    ) -> Self
    where
        P: Clone + 'static,
        C: Clone + 'static,
    {
        let base = self.action.clone();
        Supply {
            label: label.into(),
            prop: self.prop,
            category: self.category,
            action: Rc::new(move |p, cat, c, mu| match over(cat, c, mu) {
                Some(m) => Ok(m),
                None => base(p, cat, c, mu),
            }),
        }
    }
}

/// Enumerate prop hom-sets within bounds; `None` means the prop cannot
/// enumerate, which the callers report as a skipped suite.
fn enumerate_all<P: Prop>(p: &P, bounds: &PropBounds) -> Option<Vec<Vec<Vec<P::Morphism>>>> {
    let a = bounds.max_arity;
    let mut out = Vec::with_capacity(a + 1);
    for m in 0..=a {
        let mut row = Vec::with_capacity(a + 1);
        for n in 0..=a {
            row.push(p.enumerate_hom(m, n, bounds.size_bound)?);
        }
        out.push(row);
    }
    Some(out)
}

fn render_obj<C: Smc>(_cat: &C, c: &C::Object) -> String {
    format!("{c:?}")
}

/// Verify the supply laws on the object sample, exhaustively over the prop
/// morphisms enumerable within `bounds`:
///
/// * functoriality of each `s_c` (identities and composites),
/// * monoidality: `s_c(μ+ν)` agrees with `s_c(μ) ⊗ s_c(ν)` through the
///   canonical strongators,
/// * braidings of the prop land on the canonical braiding isomorphisms,
/// * the tensor-compatibility square relating `s_c`, `s_d`, and `s_{c⊗d}`
///   through the interleaving isomorphism,
/// * the unit square forcing `s_I` to collapse onto the unit isomorphisms.
#[allow(clippy::needless_range_loop)]
pub fn check_supply<P: Prop, C: Smc>(
    s: &Supply<P, C>,
    objects: &[C::Object],
    bounds: &PropBounds,
) -> CheckReport {
    let mut report = CheckReport::new(format!("supply/{}", s.label))
        .with_bound("max-arity", bounds.max_arity as u64)
        .with_bound("size-bound", bounds.size_bound as u64);
    let p = &s.prop;
    let cat = &s.category;
    let homs = match enumerate_all(p, bounds) {
        Some(h) => h,
        None => {
            report.skip(
                "enumerate",
                "supply.enumerable",
                format!("prop {} does not support enumeration", p.name()),
            );
            return report;
        }
    };
    let a = bounds.max_arity;

    // Composites repeat heavily across the law instances; actions are cached
    // per (object, prop morphism).
    type ActCache<P, C> = std::collections::HashMap<
        (<C as Smc>::Object, <P as Prop>::Morphism),
        <C as Smc>::Morphism,
    >;
    let act_cache: std::cell::RefCell<ActCache<P, C>> =
        std::cell::RefCell::new(std::collections::HashMap::new());
    let act = |c: &C::Object, mu: &P::Morphism| -> Result<C::Morphism, SupplyError> {
        if let Some(v) = act_cache.borrow().get(&(c.clone(), mu.clone())) {
            return Ok(v.clone());
        }
        let v = s.act(c, mu)?;
        let m = p.dom(mu);
        let n = p.cod(mu);
        let want_dom = power_obj(cat, c, m);
        let want_cod = power_obj(cat, c, n);
        if cat.dom(&v) != want_dom || cat.cod(&v) != want_cod {
            return Err(SupplyError::Invalid(format!(
                "action of {mu} at {} has boundary {:?} → {:?}, expected the tensor powers",
                render_obj(cat, c),
                cat.dom(&v),
                cat.cod(&v),
            )));
        }
        act_cache
            .borrow_mut()
            .insert((c.clone(), mu.clone()), v.clone());
        Ok(v)
    };

    // Pre-flight: the action must be total on every enumerated morphism at
    // every sampled object (and their tensors and the unit, which the law
    // squares evaluate at). A partial action is reported, not unwound.
    let mut probes: Vec<C::Object> = objects.to_vec();
    for c in objects {
        for d in objects {
            probes.push(cat.tensor_obj(c, d));
        }
    }
    probes.push(cat.unit());
    for (pi, c) in probes.iter().enumerate() {
        for row in &homs {
            for hom in row {
                for mu in hom {
                    if let Err(e) = act(c, mu) {
                        report.fail(
                            format!("action-total/probe{pi}"),
                            "supply.action",
                            e.to_string(),
                        );
                        report.sort();
                        return report;
                    }
                }
            }
        }
    }

    for (ci, c) in objects.iter().enumerate() {
        let cname = render_obj(cat, c);

        // Identities.
        let mut ok = true;
        for m in 0..=a {
            let got = match act(c, &p.identity(m)) {
                Ok(v) => v,
                Err(e) => {
                    report.fail(
                        format!("identity/obj{ci}"),
                        "supply.functoriality",
                        e.to_string(),
                    );
                    ok = false;
                    break;
                }
            };
            let want = cat.identity(&power_obj(cat, c, m));
            if !cat.equal(&got, &want) {
                report.fail(
                    format!("identity/obj{ci}"),
                    "supply.functoriality",
                    format!(
                        "s(id_{m}) at {cname} is not the identity:\n{}",
                        cat.render(&got)
                    ),
                );
                ok = false;
                break;
            }
        }
        if ok {
            report.pass(
                format!("identity/obj{ci} ({cname})"),
                "supply.functoriality",
            );
        }

        // Functoriality over composable pairs.
        let mut ok = true;
        let mut count = 0usize;
        'func: for m in 0..=a {
            for k in 0..=a {
                for n in 0..=a {
                    for mu in &homs[m][k] {
                        let smu = act(c, mu).unwrap();
                        for nu in &homs[k][n] {
                            count += 1;
                            let comp = p.compose(mu, nu).unwrap();
                            let lhs = act(c, &comp).expect("action must be total on composites");
                            let rhs = cat.compose(&smu, &act(c, nu).unwrap()).unwrap();
                            if !cat.equal(&lhs, &rhs) {
                                report.fail(
                                    format!("functoriality/obj{ci}"),
                                    "supply.functoriality",
                                    format!(
                                        "s(μ;ν) ≠ s(μ);s(ν) at {cname}\nμ = {mu}\nν = {nu}\ns(μ;ν) = {}\ns(μ);s(ν) = {}",
                                        cat.render(&lhs),
                                        cat.render(&rhs)
                                    ),
                                );
                                ok = false;
                                break 'func;
                            }
                        }
                    }
                }
            }
        }
        if ok {
            report.pass(
                format!("functoriality/obj{ci} ({cname}, {count} pairs)"),
                "supply.functoriality",
            );
        }

        // Monoidality through the canonical strongators, tabulated once per
        // object.
        let phis: Vec<Vec<C::Morphism>> = (0..=a)
            .map(|m| (0..=a).map(|n| strongator(cat, c, m, n)).collect())
            .collect();
        let mut ok = true;
        let mut count = 0usize;
        'monoid: for m1 in 0..=a {
            for n1 in 0..=a {
                for m2 in 0..=a - m1 {
                    for n2 in 0..=a - n1 {
                        for mu in &homs[m1][n1] {
                            let smu = act(c, mu).unwrap();
                            for nu in &homs[m2][n2] {
                                count += 1;
                                let snu = act(c, nu).unwrap();
                                let phi_dom = &phis[m1][m2];
                                let phi_cod = &phis[n1][n2];
                                let lhs = cat
                                    .compose(phi_dom, &act(c, &p.monoidal_sum(mu, nu)).unwrap())
                                    .unwrap();
                                let rhs =
                                    cat.compose(&cat.tensor_mor(&smu, &snu), phi_cod).unwrap();
                                if !cat.equal(&lhs, &rhs) {
                                    report.fail(
                                        format!("monoidality/obj{ci}"),
                                        "supply.monoidality",
                                        format!(
                                            "φ;s(μ+ν) ≠ (s(μ)⊗s(ν));φ at {cname}\nμ = {mu}\nν = {nu}\nlhs = {}\nrhs = {}",
                                            cat.render(&lhs),
                                            cat.render(&rhs)
                                        ),
                                    );
                                    ok = false;
                                    break 'monoid;
                                }
                            }
                        }
                    }
                }
            }
        }
        if ok {
            report.pass(
                format!("monoidality/obj{ci} ({cname}, {count} pairs)"),
                "supply.monoidality",
            );
        }

        // Prop braidings act as the canonical braiding isomorphisms.
        let mut ok = true;
        for m in 0..=a {
            for n in 0..=a - m {
                let got = act(c, &p.braiding(m, n)).unwrap();
                let want = canonical_iso(
                    cat,
                    &power_shape(m + n),
                    &power_shape(m + n),
                    &block_braiding(m, n),
                    std::slice::from_ref(c),
                )
                .unwrap();
                if !cat.equal(&got, &want) {
                    report.fail(
                        format!("braiding/obj{ci}"),
                        "supply.braiding",
                        format!(
                            "s(σ({m},{n})) at {cname} is not the canonical braiding:\ngot  {}\nwant {}",
                            cat.render(&got),
                            cat.render(&want)
                        ),
                    );
                    ok = false;
                }
            }
        }
        if ok {
            report.pass(format!("braiding/obj{ci} ({cname})"), "supply.braiding");
        }
    }

    // Tensor square: σ ; s_{c⊗d}(μ) = (s_c(μ) ⊗ s_d(μ)) ; σ.
    for (ci, c) in objects.iter().enumerate() {
        for (di, d) in objects.iter().enumerate() {
            let cd = cat.tensor_obj(c, d);
            let sigmas: Vec<C::Morphism> =
                (0..=a).map(|m| sigma_interleave(cat, m, c, d)).collect();
            let mut ok = true;
            let mut count = 0usize;
            'tensor: for m in 0..=a {
                for n in 0..=a {
                    for mu in &homs[m][n] {
                        count += 1;
                        let sigma_m = &sigmas[m];
                        let sigma_n = &sigmas[n];
                        let lhs = cat.compose(sigma_m, &act(&cd, mu).unwrap()).unwrap();
                        let rhs = cat
                            .compose(
                                &cat.tensor_mor(&act(c, mu).unwrap(), &act(d, mu).unwrap()),
                                sigma_n,
                            )
                            .unwrap();
                        if !cat.equal(&lhs, &rhs) {
                            report.fail(
                                format!("tensor-square/obj{ci},obj{di}"),
                                "supply.tensor-square",
                                format!(
                                    "σ;s_(c⊗d)(μ) ≠ (s_c(μ)⊗s_d(μ));σ\nc = {}, d = {}\nμ = {mu}\nlhs = {}\nrhs = {}",
                                    render_obj(cat, c),
                                    render_obj(cat, d),
                                    cat.render(&lhs),
                                    cat.render(&rhs)
                                ),
                            );
                            ok = false;
                            break 'tensor;
                        }
                    }
                }
            }
            if ok {
                report.pass(
                    format!("tensor-square/obj{ci},obj{di} ({count} morphisms)"),
                    "supply.tensor-square",
                );
            }
        }
    }

    // Unit square: σ ; s_I(μ) = σ.
    let unit = cat.unit();
    let mut ok = true;
    'unitsq: for m in 0..=a {
        for n in 0..=a {
            for mu in &homs[m][n] {
                let lhs = cat
                    .compose(&sigma_unit(cat, m), &act(&unit, mu).unwrap())
                    .unwrap();
                let rhs = sigma_unit(cat, n);
                if !cat.equal(&lhs, &rhs) {
                    report.fail(
                        "unit-square",
                        "supply.unit-square",
                        format!(
                            "σ;s_I(μ) ≠ σ for μ = {mu}\nlhs = {}\nrhs = {}",
                            cat.render(&lhs),
                            cat.render(&rhs)
                        ),
                    );
                    ok = false;
                    break 'unitsq;
                }
            }
        }
    }
    if ok {
        report.pass("unit-square", "supply.unit-square");
    }

    report.sort();
    report
}

/// The canonical strongator `c^⊗m ⊗ c^⊗n → c^⊗(m+n)`.
pub fn strongator<C: Smc>(cat: &C, c: &C::Object, m: usize, n: usize) -> C::Morphism {
    let src = ObjectExpr::tensor(power_shape(m), power_shape(n));
    let tgt = power_shape(m + n);
    canonical_iso(
        cat,
        &src,
        &tgt,
        &crate::finset::Permutation::identity(m + n),
        std::slice::from_ref(c),
    )
    .expect("strongator shapes agree")
}

/// A failed structure-preservation square, with the offending prop morphism
/// and both evaluated sides.
#[derive(Debug, Clone)]
pub struct HomViolation<P: Prop, C: Smc> {
    pub mu: P::Morphism,
    pub lhs: C::Morphism,
    pub rhs: C::Morphism,
}

impl<P: Prop, C: Smc> HomViolation<P, C> {
    pub fn render(&self, cat: &C) -> String {
        format!(
            "square fails at μ = {}\nf^⊗m;s(μ) = {}\ns(μ);f^⊗n = {}",
            self.mu,
            cat.render(&self.lhs),
            cat.render(&self.rhs)
        )
    }
}

/// Is `f : c → d` a homomorphism for the supplied structure? Checks
/// `f^⊗m ; s_d(μ) = s_c(μ) ; f^⊗n` for every enumerated `μ`, returning the
/// first violation.
pub fn is_homomorphism<P: Prop, C: Smc>(
    s: &Supply<P, C>,
    f: &C::Morphism,
    bounds: &PropBounds,
) -> Result<(), Box<HomViolation<P, C>>> {
    let cat = &s.category;
    let c = cat.dom(f);
    let d = cat.cod(f);
    for m in 0..=bounds.max_arity {
        let fm = power_mor(cat, f, m);
        for n in 0..=bounds.max_arity {
            let fn_ = power_mor(cat, f, n);
            for mu in s
                .prop
                .enumerate_hom(m, n, bounds.size_bound)
                .unwrap_or_default()
            {
                let lhs = cat.compose(&fm, &s.act(&d, &mu).unwrap()).unwrap();
                let rhs = cat.compose(&s.act(&c, &mu).unwrap(), &fn_).unwrap();
                if !cat.equal(&lhs, &rhs) {
                    return Err(Box::new(HomViolation { mu, lhs, rhs }));
                }
            }
        }
    }
    Ok(())
}

/// Outcome of classifying a hom-set sample into homomorphisms and
/// non-homomorphisms, with closure checks.
pub struct HomClassification<C: Smc> {
    pub homomorphisms: Vec<C::Morphism>,
    pub others: Vec<C::Morphism>,
    pub report: CheckReport,
}

/// Classify enumerated morphisms between sampled objects, then verify the
/// homomorphisms form a monoidal subcategory: closed under composition and
/// tensor, and containing identities and all coherence isomorphisms.
#[allow(clippy::needless_range_loop)]
pub fn homomorphic_subcategory<P: Prop, C: Smc>(
    s: &Supply<P, C>,
    objects: &[C::Object],
    spec: &SampleSpec,
    bounds: &PropBounds,
) -> HomClassification<C> {
    let cat = &s.category;
    let mut report = CheckReport::new(format!("homomorphic-subcategory/{}", s.label))
        .with_bound("max-arity", bounds.max_arity as u64);
    let mut homomorphisms = Vec::new();
    let mut others = Vec::new();
    // Morphisms grouped by (dom index, cod index) for the closure loops.
    type ClassifiedHoms<M> = Vec<Vec<(Vec<M>, Vec<bool>)>>;
    let mut table: ClassifiedHoms<C::Morphism> = Vec::new();
    for a in objects {
        let mut row = Vec::new();
        for b in objects {
            let fs = cat.hom_sample(a, b, spec);
            let classes: Vec<bool> = fs
                .iter()
                .map(|f| is_homomorphism(s, f, bounds).is_ok())
                .collect();
            for (f, is_hom) in fs.iter().zip(&classes) {
                if *is_hom {
                    homomorphisms.push(f.clone());
                } else {
                    others.push(f.clone());
                }
            }
            row.push((fs, classes));
        }
        table.push(row);
    }
    report.pass(
        format!(
            "classification ({} homomorphisms, {} others)",
            homomorphisms.len(),
            others.len()
        ),
        "homomorphic.classification",
    );

    // Identities are homomorphisms.
    let mut ok = true;
    for (i, c) in objects.iter().enumerate() {
        if let Err(v) = is_homomorphism(s, &cat.identity(c), bounds) {
            report.fail(
                format!("identities/obj{i}"),
                "homomorphic.identities",
                v.render(cat),
            );
            ok = false;
        }
    }
    if ok {
        report.pass("identities", "homomorphic.identities");
    }

    // Closure under composition.
    let mut ok = true;
    let mut count = 0usize;
    'comp: for (ai, _) in objects.iter().enumerate() {
        for bi in 0..objects.len() {
            for ci in 0..objects.len() {
                let (fs, fclass) = &table[ai][bi];
                let (gs, gclass) = &table[bi][ci];
                for (f, fh) in fs.iter().zip(fclass) {
                    if !fh {
                        continue;
                    }
                    for (g, gh) in gs.iter().zip(gclass) {
                        if !gh {
                            continue;
                        }
                        count += 1;
                        let fg = cat.compose(f, g).unwrap();
                        if let Err(v) = is_homomorphism(s, &fg, bounds) {
                            report.fail(
                                "closure-compose",
                                "homomorphic.closure-compose",
                                format!(
                                    "composite of homomorphisms is not a homomorphism\nf = {}\ng = {}\n{}",
                                    cat.render(f),
                                    cat.render(g),
                                    v.render(cat)
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
        report.pass(
            format!("closure-compose ({count} pairs)"),
            "homomorphic.closure-compose",
        );
    }

    // Closure under tensor.
    let mut ok = true;
    let mut count = 0usize;
    'tens: for (ai, _) in objects.iter().enumerate() {
        for bi in 0..objects.len() {
            let (fs, fclass) = &table[ai][bi];
            for (f, fh) in fs.iter().zip(fclass) {
                if !fh {
                    continue;
                }
                for (ai2, _) in objects.iter().enumerate() {
                    for bi2 in 0..objects.len() {
                        let (gs, gclass) = &table[ai2][bi2];
                        for (g, gh) in gs.iter().zip(gclass) {
                            if !gh {
                                continue;
                            }
                            count += 1;
                            let fg = cat.tensor_mor(f, g);
                            if let Err(v) = is_homomorphism(s, &fg, bounds) {
                                report.fail(
                                    "closure-tensor",
                                    "homomorphic.closure-tensor",
                                    format!(
                                        "tensor of homomorphisms is not a homomorphism\nf = {}\ng = {}\n{}",
                                        cat.render(f),
                                        cat.render(g),
                                        v.render(cat)
                                    ),
                                );
                                ok = false;
                                break 'tens;
                            }
                        }
                    }
                }
            }
        }
    }
    if ok {
        report.pass(
            format!("closure-tensor ({count} pairs)"),
            "homomorphic.closure-tensor",
        );
    }

    // All coherence isomorphisms are in the class.
    let mut coherence = CheckReport::new("");
    check_coherence_into(s, objects, bounds, &mut coherence);
    report.merge(coherence);

    report.sort();
    HomClassification {
        homomorphisms,
        others,
        report,
    }
}

/// Verify that every coherence isomorphism over the sample (associators,
/// unitors, braidings, and their inverses) is a homomorphism for the supply.
pub fn check_coherence_homomorphisms<P: Prop, C: Smc>(
    s: &Supply<P, C>,
    objects: &[C::Object],
    bounds: &PropBounds,
) -> CheckReport {
    let mut report = CheckReport::new(format!("coherence-homomorphisms/{}", s.label))
        .with_bound("max-arity", bounds.max_arity as u64);
    check_coherence_into(s, objects, bounds, &mut report);
    report.sort();
    report
}

fn check_coherence_into<P: Prop, C: Smc>(
    s: &Supply<P, C>,
    objects: &[C::Object],
    bounds: &PropBounds,
    report: &mut CheckReport,
) {
    let cat = &s.category;
    let mut candidates: Vec<(String, C::Morphism)> = Vec::new();
    for (ai, a) in objects.iter().enumerate() {
        candidates.push((format!("λ/obj{ai}"), cat.left_unitor(a)));
        candidates.push((format!("λ⁻¹/obj{ai}"), cat.left_unitor_inv(a)));
        candidates.push((format!("ρ/obj{ai}"), cat.right_unitor(a)));
        candidates.push((format!("ρ⁻¹/obj{ai}"), cat.right_unitor_inv(a)));
        for (bi, b) in objects.iter().enumerate() {
            candidates.push((format!("γ/obj{ai},obj{bi}"), cat.braiding(a, b)));
            for (ci, c) in objects.iter().enumerate() {
                candidates.push((
                    format!("α/obj{ai},obj{bi},obj{ci}"),
                    cat.associator(a, b, c),
                ));
                candidates.push((
                    format!("α⁻¹/obj{ai},obj{bi},obj{ci}"),
                    cat.associator_inv(a, b, c),
                ));
            }
        }
    }
    for (name, f) in candidates {
        match is_homomorphism(s, &f, bounds) {
            Ok(()) => report.pass(name, "coherence.homomorphism"),
            Err(v) => report.fail(name, "coherence.homomorphism", v.render(cat)),
        }
    }
}

/// The supply of a prop in itself: the action on `k` conjugates the `k`-fold
/// monoidal sum of a morphism with the grid-transpose symmetries.
pub fn self_supply<P: Prop + Clone + 'static>(prop: P, size_bound: usize) -> Supply<P, PropCat<P>> {
    let label = format!("self-supply/{}", prop.name());
    let cat = PropCat::new(prop.clone(), size_bound);
    Supply::new(label, prop, cat, |p, _cat, k, mu| {
        let m = p.dom(mu);
        let n = p.cod(mu);
        let into = p.permutation_morphism(&crate::finset::transpose_perm(*k, m));
        let mut bulk = p.identity(0);
        for _ in 0..*k {
            bulk = p.monoidal_sum(&bulk, mu);
        }
        let back = p.permutation_morphism(&crate::finset::transpose_perm(n, *k));
        let first = p.compose(&into, &bulk).map_err(SupplyError::Prop)?;
        p.compose(&first, &back).map_err(SupplyError::Prop)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::{tensor_fn, FinFunction};
    use crate::props::{BijProp, CospanProp, FinSetProp};

    #[test]
    fn self_supply_on_finset_matches_conjugation_oracle() {
        let s = self_supply(FinSetProp, 0);
        // k = 1 is just the morphism itself.
        let mu = FinFunction::new(2, 1, vec![1, 1]).unwrap();
        assert_eq!(s.act(&1, &mu).unwrap(), mu);
        // id stays id.
        assert_eq!(
            s.act(&3, &FinFunction::identity(2)).unwrap(),
            FinFunction::identity(6)
        );
        // k = 2, μ: 2 → 1. Oracle built from the raw pieces: the transpose on
        // a 2×2 grid is id₁ + swap + id₁, then μ + μ, then the trivial
        // transpose on the 1×2 grid.
        let swap_mid = tensor_fn(
            &tensor_fn(
                &FinFunction::identity(1),
                crate::finset::block_braiding(1, 1).as_function(),
            ),
            &FinFunction::identity(1),
        );
        let mumu = tensor_fn(&mu, &mu);
        let expected = crate::finset::compose_fn(&swap_mid, &mumu).unwrap();
        assert_eq!(expected.table(), &[1, 2, 1, 2]);
        assert_eq!(s.act(&2, &mu).unwrap(), expected);
    }

    #[test]
    fn self_supply_passes_check_for_small_props() {
        let s = self_supply(BijProp, 0);
        let r = check_supply(&s, &[0, 1, 2], &PropBounds::new(2, 0));
        assert!(r.passed(), "{r}");

        let s = self_supply(FinSetProp, 0);
        let r = check_supply(&s, &[0, 1, 2], &PropBounds::new(2, 0));
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn self_supply_on_cospans_small() {
        let s = self_supply(CospanProp, 2);
        let r = check_supply(&s, &[0, 1, 2], &PropBounds::new(2, 2));
        assert!(r.passed(), "{r}");
    }
}
