//! Free terms over a prop signature, presentations (generators + equations),
//! evaluation of terms into any prop, and relation checking.
//!
//! Presentations can be loaded from a plain-text format:
//!
//! ```text
//! gen NAME m n          # a generator NAME : m → n
//! rel TERM = TERM       # an equation between two terms
//! ```
//!
//! Terms use a whitespace-separated prefix syntax: `comp T T`, `sum T T`,
//! `braid m n`, `id n`, or a generator name. Lines starting with `#` are
//! comments.

use std::collections::BTreeMap;
use std::fmt;

use crate::report::{render_capped, CheckReport};

use super::{Prop, PropError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PropTerm {
    Generator(String),
    Id(usize),
    Braid(usize, usize),
    Compose(Box<PropTerm>, Box<PropTerm>),
    Sum(Box<PropTerm>, Box<PropTerm>),
}

impl PropTerm {
    pub fn gen(name: &str) -> Self {
        PropTerm::Generator(name.to_string())
    }

    pub fn comp(a: PropTerm, b: PropTerm) -> Self {
        PropTerm::Compose(Box::new(a), Box::new(b))
    }

    pub fn sum(a: PropTerm, b: PropTerm) -> Self {
        PropTerm::Sum(Box::new(a), Box::new(b))
    }

    /// Compute the arity of a term against a generator signature, checking
    /// well-formedness along the way.
    pub fn arity(
        &self,
        sig: &BTreeMap<String, (usize, usize)>,
    ) -> Result<(usize, usize), PropError> {
        match self {
            PropTerm::Generator(name) => sig
                .get(name)
                .copied()
                .ok_or_else(|| PropError::UnknownGenerator(name.clone())),
            PropTerm::Id(n) => Ok((*n, *n)),
            PropTerm::Braid(m, n) => Ok((m + n, m + n)),
            PropTerm::Compose(a, b) => {
                let (ad, ac) = a.arity(sig)?;
                let (bd, bc) = b.arity(sig)?;
                if ac != bd {
                    return Err(PropError::Invalid(format!(
                        "ill-formed composite: {a} has codomain {ac} but {b} has domain {bd}"
                    )));
                }
                Ok((ad, bc))
            }
            PropTerm::Sum(a, b) => {
                let (ad, ac) = a.arity(sig)?;
                let (bd, bc) = b.arity(sig)?;
                Ok((ad + bd, ac + bc))
            }
        }
    }
}

impl fmt::Display for PropTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropTerm::Generator(name) => write!(f, "{name}"),
            PropTerm::Id(n) => write!(f, "id {n}"),
            PropTerm::Braid(m, n) => write!(f, "braid {m} {n}"),
            PropTerm::Compose(a, b) => write!(f, "({a} ; {b})"),
            PropTerm::Sum(a, b) => write!(f, "({a} + {b})"),
        }
    }
}

/// A finitely presented prop signature: named generators with arities, plus
/// equations between terms over them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropPresentation {
    pub name: String,
    pub generators: BTreeMap<String, (usize, usize)>,
    pub relations: Vec<(PropTerm, PropTerm)>,
}

impl PropPresentation {
    pub fn new(name: &str) -> Self {
        PropPresentation {
            name: name.to_string(),
            generators: BTreeMap::new(),
            relations: Vec::new(),
        }
    }

    pub fn generator(mut self, name: &str, dom: usize, cod: usize) -> Self {
        self.generators.insert(name.to_string(), (dom, cod));
        self
    }

    pub fn relation(mut self, lhs: PropTerm, rhs: PropTerm) -> Self {
        self.relations.push((lhs, rhs));
        self
    }

    /// Check that every relation is well-formed with matching boundaries.
    pub fn validate(&self) -> Result<(), PropError> {
        for (lhs, rhs) in &self.relations {
            let la = lhs.arity(&self.generators)?;
            let ra = rhs.arity(&self.generators)?;
            if la != ra {
                return Err(PropError::Invalid(format!(
                    "relation sides have different boundaries: {lhs} : {}→{} vs {rhs} : {}→{}",
                    la.0, la.1, ra.0, ra.1
                )));
            }
        }
        Ok(())
    }

    /// Parse the plain-text presentation format.
    pub fn parse(name: &str, text: &str) -> Result<Self, PropError> {
        let mut pres = PropPresentation::new(name);
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let at = |msg: &str| PropError::Invalid(format!("line {}: {msg}: {raw}", lineno + 1));
            match tokens.next() {
                Some("gen") => {
                    let gname = tokens.next().ok_or_else(|| at("missing generator name"))?;
                    let m: usize = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| at("missing or bad domain arity"))?;
                    let n: usize = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| at("missing or bad codomain arity"))?;
                    if tokens.next().is_some() {
                        return Err(at("trailing tokens after generator"));
                    }
                    pres.generators.insert(gname.to_string(), (m, n));
                }
                Some("rel") => {
                    let rest: Vec<&str> = tokens.collect();
                    let eq = rest
                        .iter()
                        .position(|t| *t == "=")
                        .ok_or_else(|| at("relation needs an `=`"))?;
                    let (lhs_toks, rhs_toks) = (&rest[..eq], &rest[eq + 1..]);
                    let lhs = parse_term(lhs_toks).map_err(|e| at(&e))?;
                    let rhs = parse_term(rhs_toks).map_err(|e| at(&e))?;
                    pres.relations.push((lhs, rhs));
                }
                Some(other) => {
                    return Err(at(&format!("unknown directive `{other}`")));
                }
                None => {}
            }
        }
        pres.validate()?;
        Ok(pres)
    }

    /// The two-generator, three-equation theory of commutative monoids.
    pub fn commutative_monoid() -> Self {
        Self::parse(
            "commutative-monoid",
            include_str!("../../fixtures/monoid.prop"),
        )
        .expect("built-in presentation parses")
    }

    /// The cup/cap theory of self-dualities: two symmetry equations and two
    /// snake equations.
    pub fn self_dual() -> Self {
        Self::parse("self-dual", include_str!("../../fixtures/self-dual.prop"))
            .expect("built-in presentation parses")
    }
}

fn parse_term(tokens: &[&str]) -> Result<PropTerm, String> {
    let mut pos = 0usize;
    let term = parse_term_at(tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(format!("trailing tokens after term: {:?}", &tokens[pos..]));
    }
    Ok(term)
}

fn parse_term_at(tokens: &[&str], pos: &mut usize) -> Result<PropTerm, String> {
    let tok = tokens.get(*pos).ok_or("unexpected end of term")?;
    *pos += 1;
    match *tok {
        "comp" => {
            let a = parse_term_at(tokens, pos)?;
            let b = parse_term_at(tokens, pos)?;
            Ok(PropTerm::comp(a, b))
        }
        "sum" => {
            let a = parse_term_at(tokens, pos)?;
            let b = parse_term_at(tokens, pos)?;
            Ok(PropTerm::sum(a, b))
        }
        "id" => {
            let n = parse_nat(tokens, pos)?;
            Ok(PropTerm::Id(n))
        }
        "braid" => {
            let m = parse_nat(tokens, pos)?;
            let n = parse_nat(tokens, pos)?;
            Ok(PropTerm::Braid(m, n))
        }
        name => Ok(PropTerm::gen(name)),
    }
}

fn parse_nat(tokens: &[&str], pos: &mut usize) -> Result<usize, String> {
    let tok = tokens.get(*pos).ok_or("expected a number")?;
    *pos += 1;
    tok.parse().map_err(|_| format!("not a number: {tok}"))
}

/// Evaluate a term in a target prop by structural recursion, sending `braid`
/// to the target braiding and generators to their given images.
pub fn eval_prop_term<P: Prop>(
    term: &PropTerm,
    target: &P,
    images: &BTreeMap<String, P::Morphism>,
) -> Result<P::Morphism, PropError> {
    match term {
        PropTerm::Generator(name) => images
            .get(name)
            .cloned()
            .ok_or_else(|| PropError::UnknownGenerator(name.clone())),
        PropTerm::Id(n) => Ok(target.identity(*n)),
        PropTerm::Braid(m, n) => Ok(target.braiding(*m, *n)),
        PropTerm::Compose(a, b) => {
            let fa = eval_prop_term(a, target, images)?;
            let fb = eval_prop_term(b, target, images)?;
            target.compose(&fa, &fb)
        }
        PropTerm::Sum(a, b) => {
            let fa = eval_prop_term(a, target, images)?;
            let fb = eval_prop_term(b, target, images)?;
            Ok(target.monoidal_sum(&fa, &fb))
        }
    }
}

/// Check that generator images satisfy every relation of a presentation in
/// the target prop. Failures are report entries carrying both evaluated
/// morphisms, not errors.
pub fn check_presentation_functor<P: Prop>(
    pres: &PropPresentation,
    target: &P,
    images: &BTreeMap<String, P::Morphism>,
) -> CheckReport {
    let mut report = CheckReport::new(format!("presentation/{}→{}", pres.name, target.name()));
    for (name, &(dom, cod)) in &pres.generators {
        match images.get(name) {
            None => report.fail(
                format!("image/{name}"),
                "presentation.image-arity",
                format!("no image given for generator {name}"),
            ),
            Some(img) => {
                let (idom, icod) = (target.dom(img), target.cod(img));
                report.check(
                    format!("image/{name}"),
                    "presentation.image-arity",
                    idom == dom && icod == cod,
                    || {
                        PropError::ImageArity {
                            name: name.clone(),
                            expected_dom: dom,
                            expected_cod: cod,
                            dom: idom,
                            cod: icod,
                        }
                        .to_string()
                    },
                );
            }
        }
    }
    if !report.passed() {
        report.sort();
        return report;
    }
    for (i, (lhs, rhs)) in pres.relations.iter().enumerate() {
        let id = format!("relation/{i}");
        match (
            eval_prop_term(lhs, target, images),
            eval_prop_term(rhs, target, images),
        ) {
            (Ok(l), Ok(r)) => {
                report.check(id, "presentation.relation", target.equal(&l, &r), || {
                    render_capped(format!(
                        "{lhs} = {rhs} fails:\nlhs evaluates to {l}\nrhs evaluates to {r}"
                    ))
                });
            }
            (Err(e), _) | (_, Err(e)) => {
                report.fail(
                    id,
                    "presentation.relation",
                    format!("evaluation error: {e}"),
                );
            }
        }
    }
    report.sort();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::FinFunction;
    use crate::props::{BijProp, CospanProp, FinSetProp};

    #[test]
    fn braid_twice_is_identity_in_bijections() {
        let term = PropTerm::comp(PropTerm::Braid(1, 1), PropTerm::Braid(1, 1));
        let v = eval_prop_term(&term, &BijProp, &BTreeMap::new()).unwrap();
        assert!(v.is_identity());
    }

    #[test]
    fn generator_and_sum_evaluation() {
        let mut images = BTreeMap::new();
        images.insert(
            "mu".to_string(),
            FinFunction::new(2, 1, vec![1, 1]).unwrap(),
        );
        images.insert("eta".to_string(), FinFunction::new(0, 1, vec![]).unwrap());
        let v = eval_prop_term(&PropTerm::gen("mu"), &FinSetProp, &images).unwrap();
        assert_eq!(v, FinFunction::new(2, 1, vec![1, 1]).unwrap());

        let term = PropTerm::sum(PropTerm::Id(1), PropTerm::gen("eta"));
        let v = eval_prop_term(&term, &FinSetProp, &images).unwrap();
        assert_eq!(v, FinFunction::new(1, 2, vec![1]).unwrap());
    }

    #[test]
    fn monoid_presentation_holds_in_finset() {
        let pres = PropPresentation::commutative_monoid();
        assert_eq!(pres.relations.len(), 3);
        let mut images = BTreeMap::new();
        images.insert(
            "mu".to_string(),
            FinFunction::new(2, 1, vec![1, 1]).unwrap(),
        );
        images.insert("eta".to_string(), FinFunction::new(0, 1, vec![]).unwrap());
        let report = check_presentation_functor(&pres, &FinSetProp, &images);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn self_dual_presentation_holds_in_cospans() {
        let pres = PropPresentation::self_dual();
        assert_eq!(pres.relations.len(), 4);
        let p = CospanProp;
        let mut images = BTreeMap::new();
        images.insert("cup".to_string(), p.cup());
        images.insert("cap".to_string(), p.cap());
        let report = check_presentation_functor(&pres, &p, &images);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn corrupted_cap_image_fails_snake() {
        let pres = PropPresentation::self_dual();
        let p = CospanProp;
        let mut images = BTreeMap::new();
        images.insert("cup".to_string(), p.cup());
        // Identity-left-leg cospan 2 → 2 ← 0 instead of the genuine cap.
        images.insert(
            "cap".to_string(),
            CospanMorphism::new(
                FinFunction::identity(2),
                FinFunction::new(0, 2, vec![]).unwrap(),
            )
            .unwrap(),
        );
        let report = check_presentation_functor(&pres, &p, &images);
        assert!(!report.passed());
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.iter().any(|e| e
            .witness
            .as_deref()
            .is_some_and(|w| w.contains("evaluates to"))));
    }

    use crate::props::CospanMorphism;

    #[test]
    fn parser_rejects_malformed_lines() {
        assert!(PropPresentation::parse("x", "gen f 1").is_err());
        assert!(PropPresentation::parse("x", "rel id 1 id 1").is_err());
        assert!(PropPresentation::parse("x", "frob f 1 1").is_err());
        // Boundary mismatch between relation sides.
        assert!(PropPresentation::parse("x", "gen f 1 2\nrel f = id 1").is_err());
    }

    #[test]
    fn parser_roundtrip_smoke() {
        let text = "gen f 2 1 # multiply\nrel comp braid 1 1 f = f\n";
        let pres = PropPresentation::parse("smoke", text).unwrap();
        assert_eq!(pres.generators["f"], (2, 1));
        assert_eq!(pres.relations.len(), 1);
        assert_eq!(
            pres.relations[0].0,
            PropTerm::comp(PropTerm::Braid(1, 1), PropTerm::gen("f"))
        );
    }
}
