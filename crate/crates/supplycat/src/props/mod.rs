//! Props: strict symmetric monoidal categories whose objects are the natural
//! numbers under addition. The trait below is the contract every built-in
//! prop implements; [`check_prop_axioms`] verifies the laws exhaustively on
//! every hom-set enumerable within the given bounds.

use std::collections::HashMap;
use std::fmt::{Debug, Display};
use std::hash::Hash;

use thiserror::Error;

use crate::finset::Permutation;
use crate::report::{render_capped, CheckReport};

pub mod bijections;
pub mod cobordisms;
pub mod cospans;
pub mod functions;
pub mod injections;
pub mod involutions;
pub mod terms;

pub use bijections::BijProp;
pub use cobordisms::{CobMorphism, CobProp};
pub use cospans::{CospanMorphism, CospanProp};
pub use functions::{FinSetOpProp, FinSetProp, OpFinFunction};
pub use injections::InjProp;
pub use involutions::{InvolutionMorphism, InvolutionProp};
pub use terms::{check_presentation_functor, eval_prop_term, PropPresentation, PropTerm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PropError {
    #[error("cannot compose {f} : {fdom}→{fcod} with {g} : {gdom}→{gcod}")]
    ComposeMismatch {
        f: String,
        fdom: usize,
        fcod: usize,
        g: String,
        gdom: usize,
        gcod: usize,
    },
    #[error("prop {prop} does not support hom enumeration")]
    NotEnumerable { prop: String },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error(
        "arity mismatch for {name}: expected {expected_dom}→{expected_cod}, image has {dom}→{cod}"
    )]
    ImageArity {
        name: String,
        expected_dom: usize,
        expected_cod: usize,
        dom: usize,
        cod: usize,
    },
    #[error("{0}")]
    Invalid(String),
}

/// Contract for a prop: objects are naturals under `+`, morphisms carry
/// arities, and hom-sets are enumerable within a size bound (apex size for
/// cospans, circle count for cobordisms, …).
///
/// Morphisms are stored in canonical form, so structural equality is
/// morphism equality; `equal` is provided for readability at call sites.
pub trait Prop {
    type Morphism: Clone + Eq + Hash + Debug + Display;

    fn name(&self) -> &str;
    fn dom(&self, f: &Self::Morphism) -> usize;
    fn cod(&self, f: &Self::Morphism) -> usize;
    fn identity(&self, n: usize) -> Self::Morphism;
    /// Diagrammatic composition: `f` first, then `g`.
    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism, PropError>;
    fn monoidal_sum(&self, f: &Self::Morphism, g: &Self::Morphism) -> Self::Morphism;
    fn braiding(&self, m: usize, n: usize) -> Self::Morphism;
    /// All morphisms `m → n` whose internal size is at most `size_bound`, or
    /// `None` when the prop cannot enumerate.
    fn enumerate_hom(&self, m: usize, n: usize, size_bound: usize) -> Option<Vec<Self::Morphism>>;

    fn equal(&self, f: &Self::Morphism, g: &Self::Morphism) -> bool {
        f == g
    }

    fn compose_err(&self, f: &Self::Morphism, g: &Self::Morphism) -> PropError {
        PropError::ComposeMismatch {
            f: f.to_string(),
            fdom: self.dom(f),
            fcod: self.cod(f),
            g: g.to_string(),
            gdom: self.dom(g),
            gcod: self.cod(g),
        }
    }

    /// Realize an arbitrary permutation of wires as a morphism, as a composite
    /// of adjacent braidings.
    fn permutation_morphism(&self, p: &Permutation) -> Self::Morphism {
        let n = p.size();
        let mut acc = self.identity(n);
        for j in p.adjacent_transpositions() {
            let mut swap = self.identity(j - 1);
            swap = self.monoidal_sum(&swap, &self.braiding(1, 1));
            swap = self.monoidal_sum(&swap, &self.identity(n - j - 1));
            acc = self
                .compose(&acc, &swap)
                .expect("adjacent swaps preserve arity");
        }
        acc
    }
}

/// Arity and size bounds for exhaustive prop checks.
#[derive(Debug, Clone, Copy)]
pub struct PropBounds {
    pub max_arity: usize,
    pub size_bound: usize,
}

impl PropBounds {
    pub fn new(max_arity: usize, size_bound: usize) -> Self {
        PropBounds {
            max_arity,
            size_bound,
        }
    }
}

/// Hom-sets tabulated up to the arity bound, with a reverse index so that
/// repeated composites can be compared by position instead of by value.
pub struct HomTables<M> {
    pub homs: Vec<Vec<Vec<M>>>,
    index: Vec<Vec<HashMap<M, usize>>>,
}

impl<M: Clone + Eq + Hash> HomTables<M> {
    pub fn build<P: Prop<Morphism = M>>(p: &P, bounds: &PropBounds) -> Option<Self> {
        let a = bounds.max_arity;
        let mut homs = Vec::with_capacity(a + 1);
        let mut index = Vec::with_capacity(a + 1);
        for m in 0..=a {
            let mut row = Vec::with_capacity(a + 1);
            let mut irow = Vec::with_capacity(a + 1);
            for n in 0..=a {
                let hs = p.enumerate_hom(m, n, bounds.size_bound)?;
                let mut map = HashMap::with_capacity(hs.len());
                for (i, h) in hs.iter().enumerate() {
                    map.insert(h.clone(), i);
                }
                row.push(hs);
                irow.push(map);
            }
            homs.push(row);
            index.push(irow);
        }
        Some(HomTables { homs, index })
    }

    pub fn lookup(&self, m: usize, n: usize, f: &M) -> Option<usize> {
        self.index[m][n].get(f).copied()
    }
}

/// Exhaustively check the prop laws: composition unit/associativity,
/// interchange, sum associativity and unit, braiding inverse and naturality,
/// on every morphism enumerable within the bounds.
#[allow(clippy::needless_range_loop)]
pub fn check_prop_axioms<P: Prop>(p: &P, bounds: &PropBounds) -> CheckReport {
    let mut report = CheckReport::new(format!("prop-axioms/{}", p.name()))
        .with_bound("max-arity", bounds.max_arity as u64)
        .with_bound("size-bound", bounds.size_bound as u64);
    let a = bounds.max_arity;
    let tables = match HomTables::build(p, bounds) {
        Some(t) => t,
        None => {
            report.fail(
                "enumerate",
                "prop.enumerable",
                format!("{} does not support hom enumeration", p.name()),
            );
            return report;
        }
    };

    // Identity laws.
    let mut failed = false;
    let mut count = 0usize;
    'ids: for m in 0..=a {
        for n in 0..=a {
            for f in &tables.homs[m][n] {
                count += 1;
                let lhs = p.compose(&p.identity(m), f).unwrap();
                let rhs = p.compose(f, &p.identity(n)).unwrap();
                if !p.equal(&lhs, f) || !p.equal(&rhs, f) {
                    report.fail(
                        "identity",
                        "prop.identity",
                        render_capped(format!("id;f or f;id differs from f = {f}")),
                    );
                    failed = true;
                    break 'ids;
                }
            }
        }
    }
    if !failed {
        report.pass(format!("identity ({count} morphisms)"), "prop.identity");
    }

    // Associativity of composition. Composites of enumerated morphisms can
    // escape the enumeration bound (a composed cospan may have a larger
    // apex), so composites are interned into their own value tables; the
    // triple loop then reduces to index comparisons.
    type PairTables<M> = HashMap<(usize, usize, usize), (Vec<M>, Vec<u32>)>;
    let mut pair_tables: PairTables<P::Morphism> = HashMap::new();
    for m in 0..=a {
        for k in 0..=a {
            for n in 0..=a {
                let fs = &tables.homs[m][k];
                let gs = &tables.homs[k][n];
                let mut vals: Vec<P::Morphism> = Vec::new();
                let mut intern: HashMap<P::Morphism, u32> = HashMap::new();
                let mut t = Vec::with_capacity(fs.len() * gs.len());
                for f in fs {
                    for g in gs {
                        let fg = p.compose(f, g).unwrap();
                        let id = *intern.entry(fg.clone()).or_insert_with(|| {
                            vals.push(fg);
                            (vals.len() - 1) as u32
                        });
                        t.push(id);
                    }
                }
                pair_tables.insert((m, k, n), (vals, t));
            }
        }
    }
    let mut assoc_checked = 0u64;
    let mut failed = false;
    'assoc: for m in 0..=a {
        for k in 0..=a {
            for l in 0..=a {
                let (fg_vals, t_fg) = &pair_tables[&(m, k, l)];
                for n in 0..=a {
                    let (gh_vals, t_gh) = &pair_tables[&(k, l, n)];
                    let hs = &tables.homs[l][n];
                    let fs = &tables.homs[m][k];
                    if hs.is_empty() || fs.is_empty() || fg_vals.is_empty() {
                        continue;
                    }
                    // Results of both bracketings, interned together.
                    let mut res: HashMap<P::Morphism, u32> = HashMap::new();
                    let intern = |v: P::Morphism, res: &mut HashMap<P::Morphism, u32>| {
                        let next = res.len() as u32;
                        *res.entry(v).or_insert(next)
                    };
                    let mut left = Vec::with_capacity(fg_vals.len() * hs.len());
                    for fg in fg_vals {
                        for h in hs {
                            let v = p.compose(fg, h).unwrap();
                            left.push(intern(v, &mut res));
                        }
                    }
                    let mut right = Vec::with_capacity(fs.len() * gh_vals.len());
                    for f in fs {
                        for gh in gh_vals {
                            let v = p.compose(f, gh).unwrap();
                            right.push(intern(v, &mut res));
                        }
                    }
                    let gs_len = tables.homs[k][l].len();
                    for fi in 0..fs.len() {
                        for gi in 0..gs_len {
                            let fg = t_fg[fi * gs_len + gi] as usize;
                            for hi in 0..hs.len() {
                                let gh = t_gh[gi * hs.len() + hi] as usize;
                                assoc_checked += 1;
                                if left[fg * hs.len() + hi] != right[fi * gh_vals.len() + gh] {
                                    let f = &fs[fi];
                                    let g = &tables.homs[k][l][gi];
                                    let h = &hs[hi];
                                    report.fail(
                                        "associativity",
                                        "prop.associativity",
                                        render_capped(format!(
                                            "(f;g);h ≠ f;(g;h)\nf = {f}\ng = {g}\nh = {h}"
                                        )),
                                    );
                                    failed = true;
                                    break 'assoc;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    if !failed {
        report.pass(
            format!("associativity ({assoc_checked} triples)"),
            "prop.associativity",
        );
    }

    // Monoidal sum: unit and associativity.
    let mut failed = false;
    'sum: for m1 in 0..=a {
        for n1 in 0..=a {
            for f in &tables.homs[m1][n1] {
                let zero = p.identity(0);
                if !p.equal(&p.monoidal_sum(f, &zero), f) || !p.equal(&p.monoidal_sum(&zero, f), f)
                {
                    report.fail(
                        "sum-unit",
                        "prop.sum-unit",
                        render_capped(format!("f + id_0 ≠ f at {f}")),
                    );
                    failed = true;
                    break 'sum;
                }
            }
        }
    }
    if !failed {
        report.pass("sum-unit", "prop.sum-unit");
    }

    let mut failed = false;
    'sumassoc: for (m1, n1, m2, n2, m3, n3) in arity_triples(a) {
        for f in &tables.homs[m1][n1] {
            for g in &tables.homs[m2][n2] {
                for h in &tables.homs[m3][n3] {
                    let lhs = p.monoidal_sum(&p.monoidal_sum(f, g), h);
                    let rhs = p.monoidal_sum(f, &p.monoidal_sum(g, h));
                    if !p.equal(&lhs, &rhs) {
                        report.fail(
                            "sum-associativity",
                            "prop.sum-associativity",
                            render_capped(format!("(f+g)+h ≠ f+(g+h)\nf = {f}\ng = {g}\nh = {h}")),
                        );
                        failed = true;
                        break 'sumassoc;
                    }
                }
            }
        }
    }
    if !failed {
        report.pass("sum-associativity", "prop.sum-associativity");
    }

    // Interchange: (f+g);(h+k) = (f;h)+(g;k) whenever both sides stay within
    // the arity bound. Sums of enumerated morphisms are tabulated once per
    // arity split, and the right-hand side is memoized over pairs of
    // composite values (composites collapse heavily).
    let mut sum_tables: HashMap<(usize, usize, usize, usize), Vec<P::Morphism>> = HashMap::new();
    for m1 in 0..=a {
        for n1 in 0..=a {
            for m2 in 0..=a - m1 {
                for n2 in 0..=a - n1 {
                    let fs = &tables.homs[m1][n1];
                    let gs = &tables.homs[m2][n2];
                    let mut t = Vec::with_capacity(fs.len() * gs.len());
                    for f in fs {
                        for g in gs {
                            t.push(p.monoidal_sum(f, g));
                        }
                    }
                    sum_tables.insert((m1, n1, m2, n2), t);
                }
            }
        }
    }
    let mut interchanged = 0u64;
    let mut failed = false;
    'inter: for (a1, b1, a2, b2) in arity_pairs(a) {
        for c1 in 0..=a {
            for c2 in 0..=a.saturating_sub(c1) {
                let nf = tables.homs[a1][b1].len();
                let ng = tables.homs[a2][b2].len();
                let nh = tables.homs[b1][c1].len();
                let nk = tables.homs[b2][c2].len();
                if nf * ng * nh * nk == 0 {
                    continue;
                }
                let sums_fg = &sum_tables[&(a1, b1, a2, b2)];
                let sums_hk = &sum_tables[&(b1, c1, b2, c2)];
                let (fh_vals, t_fh) = &pair_tables[&(a1, b1, c1)];
                let (gk_vals, t_gk) = &pair_tables[&(a2, b2, c2)];
                let mut rhs_memo: HashMap<(u32, u32), P::Morphism> = HashMap::new();
                for fi in 0..nf {
                    for gi in 0..ng {
                        let s1 = &sums_fg[fi * ng + gi];
                        for hi in 0..nh {
                            let fh = t_fh[fi * nh + hi];
                            for ki in 0..nk {
                                let s2 = &sums_hk[hi * nk + ki];
                                let gk = t_gk[gi * nk + ki];
                                let lhs = p.compose(s1, s2).unwrap();
                                let rhs = rhs_memo.entry((fh, gk)).or_insert_with(|| {
                                    p.monoidal_sum(&fh_vals[fh as usize], &gk_vals[gk as usize])
                                });
                                interchanged += 1;
                                if !p.equal(&lhs, rhs) {
                                    let f = &tables.homs[a1][b1][fi];
                                    let g = &tables.homs[a2][b2][gi];
                                    let h = &tables.homs[b1][c1][hi];
                                    let k = &tables.homs[b2][c2][ki];
                                    report.fail(
                                        "interchange",
                                        "prop.interchange",
                                        render_capped(format!(
                                            "(f+g);(h+k) ≠ (f;h)+(g;k)\nf = {f}\ng = {g}\nh = {h}\nk = {k}"
                                        )),
                                    );
                                    failed = true;
                                    break 'inter;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    if !failed {
        report.pass(
            format!("interchange ({interchanged} quadruples)"),
            "prop.interchange",
        );
    }

    // Braiding: self-inverse and naturality.
    let mut failed = false;
    for m in 0..=a {
        for n in 0..=a - m {
            let round = p.compose(&p.braiding(m, n), &p.braiding(n, m)).unwrap();
            if !p.equal(&round, &p.identity(m + n)) {
                report.fail(
                    "braiding-inverse",
                    "prop.braiding-inverse",
                    render_capped(format!("σ({m},{n});σ({n},{m}) ≠ id, got {round}")),
                );
                failed = true;
            }
        }
    }
    if !failed {
        report.pass("braiding-inverse", "prop.braiding-inverse");
    }

    let mut failed = false;
    'nat: for (a1, b1, a2, b2) in arity_pairs(a) {
        for f in &tables.homs[a1][b1] {
            for g in &tables.homs[a2][b2] {
                let lhs = p
                    .compose(&p.monoidal_sum(f, g), &p.braiding(b1, b2))
                    .unwrap();
                let rhs = p
                    .compose(&p.braiding(a1, a2), &p.monoidal_sum(g, f))
                    .unwrap();
                if !p.equal(&lhs, &rhs) {
                    report.fail(
                        "braiding-naturality",
                        "prop.braiding-naturality",
                        render_capped(format!(
                            "(f+g);σ ≠ σ;(g+f)\nf = {f}\ng = {g}\nlhs = {lhs}\nrhs = {rhs}"
                        )),
                    );
                    failed = true;
                    break 'nat;
                }
            }
        }
    }
    if !failed {
        report.pass("braiding-naturality", "prop.braiding-naturality");
    }

    report.sort();
    report
}

fn arity_pairs(a: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for a1 in 0..=a {
        for b1 in 0..=a {
            for a2 in 0..=a.saturating_sub(a1) {
                for b2 in 0..=a.saturating_sub(b1) {
                    out.push((a1, b1, a2, b2));
                }
            }
        }
    }
    out
}

fn arity_triples(a: usize) -> Vec<(usize, usize, usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for m1 in 0..=a {
        for n1 in 0..=a {
            for m2 in 0..=a.saturating_sub(m1) {
                for n2 in 0..=a.saturating_sub(n1) {
                    for m3 in 0..=a.saturating_sub(m1 + m2) {
                        for n3 in 0..=a.saturating_sub(n1 + n2) {
                            out.push((m1, n1, m2, n2, m3, n3));
                        }
                    }
                }
            }
        }
    }
    out
}
