//! Symmetric monoidal categories with explicit, possibly non-strict,
//! coherence data.
//!
//! Objects are left abstract in the [`Smc`] trait (concrete instances use
//! tensor trees, pairs of objects, lists, or plain numbers); the coherence
//! machinery in [`coherence`] works uniformly over formal tensor expressions
//! evaluated against a list of base objects.

use std::fmt::{Debug, Display};

use thiserror::Error;

use crate::finset::SplitMix64;

pub mod axioms;
pub mod coherence;
pub mod matq;
pub mod nested_rel;
pub mod prop_cat;
pub mod rel;
pub mod terminal;

pub use axioms::check_smc_axioms;
pub use coherence::{
    canonical_iso, power_mor, power_obj, power_shape, realize, sigma_interleave, sigma_unit,
};
pub use matq::{MatQCat, QMatMorphism};
pub use nested_rel::{Elem, FinSetCat, NestedRelCat, NestedRelMorphism};
pub use prop_cat::PropCat;
pub use rel::{RelCat, RelMorphism};
pub use terminal::{TerminalCat, TerminalMorphism};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SmcError {
    #[error("cannot compose: codomain {fcod} differs from domain {gdom}")]
    ComposeMismatch { fcod: String, gdom: String },
    #[error("leaf mismatch building a canonical isomorphism: {0}")]
    LeafMismatch(String),
    #[error("{0}")]
    Invalid(String),
}

/// A binary tensor tree over object generators, with explicit unit leaves.
/// This is both the object language of the tree-based instances (leaves index
/// a declared alphabet) and the shape language of the coherence machinery
/// (leaves index a list of base objects).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectExpr {
    Unit,
    Leaf(usize),
    Tensor(Box<ObjectExpr>, Box<ObjectExpr>),
}

impl ObjectExpr {
    pub fn leaf(i: usize) -> Self {
        ObjectExpr::Leaf(i)
    }

    pub fn tensor(l: ObjectExpr, r: ObjectExpr) -> Self {
        ObjectExpr::Tensor(Box::new(l), Box::new(r))
    }

    /// The left-nested `m`-fold tensor power; `power(c, 0)` is the unit.
    pub fn power(c: &ObjectExpr, m: usize) -> Self {
        match m {
            0 => ObjectExpr::Unit,
            _ => {
                let mut acc = c.clone();
                for _ in 1..m {
                    acc = ObjectExpr::tensor(acc, c.clone());
                }
                acc
            }
        }
    }

    /// Leaf indices in left-to-right order; unit leaves disappear.
    pub fn flatten(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.flatten_into(&mut out);
        out
    }

    fn flatten_into(&self, out: &mut Vec<usize>) {
        match self {
            ObjectExpr::Unit => {}
            ObjectExpr::Leaf(i) => out.push(*i),
            ObjectExpr::Tensor(l, r) => {
                l.flatten_into(out);
                r.flatten_into(out);
            }
        }
    }

    /// Number of elements of this object when leaf `i` has `sizes[i]`
    /// elements; the unit has one.
    pub fn size(&self, sizes: &[usize]) -> usize {
        match self {
            ObjectExpr::Unit => 1,
            ObjectExpr::Leaf(i) => sizes[*i],
            ObjectExpr::Tensor(l, r) => l.size(sizes) * r.size(sizes),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            ObjectExpr::Unit | ObjectExpr::Leaf(_) => 0,
            ObjectExpr::Tensor(l, r) => 1 + l.depth().max(r.depth()),
        }
    }
}

impl Display for ObjectExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ObjectExpr::Unit => write!(f, "I"),
            ObjectExpr::Leaf(i) => write!(f, "x{i}"),
            ObjectExpr::Tensor(l, r) => write!(f, "({l}⊗{r})"),
        }
    }
}

/// Budget for drawing morphisms out of a hom-set: enumerate exhaustively when
/// the hom-set is at most `exhaustive_limit`, otherwise draw `sample_size`
/// seeded samples.
#[derive(Debug, Clone, Copy)]
pub struct SampleSpec {
    pub exhaustive_limit: usize,
    pub sample_size: usize,
    pub seed: u64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            exhaustive_limit: 512,
            sample_size: 12,
            seed: 0,
        }
    }
}

impl SampleSpec {
    pub fn with_seed(seed: u64) -> Self {
        SampleSpec {
            seed,
            ..Default::default()
        }
    }

    pub fn rng(&self, salt: u64) -> SplitMix64 {
        SplitMix64::new(self.seed ^ salt.wrapping_mul(0x9e3779b97f4a7c15))
    }
}

/// Contract for a symmetric monoidal category with decidable morphism
/// equality on parallel morphisms and explicit coherence isomorphisms.
pub trait Smc {
    type Object: Clone + Eq + std::hash::Hash + Debug;
    type Morphism: Clone + Debug;

    fn name(&self) -> &str;
    fn unit(&self) -> Self::Object;
    fn tensor_obj(&self, a: &Self::Object, b: &Self::Object) -> Self::Object;
    fn dom(&self, f: &Self::Morphism) -> Self::Object;
    fn cod(&self, f: &Self::Morphism) -> Self::Object;
    fn identity(&self, a: &Self::Object) -> Self::Morphism;
    /// Diagrammatic composition: `f` first, then `g`.
    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism, SmcError>;
    fn tensor_mor(&self, f: &Self::Morphism, g: &Self::Morphism) -> Self::Morphism;
    fn equal(&self, f: &Self::Morphism, g: &Self::Morphism) -> bool;

    /// `α(a,b,c): (a⊗b)⊗c → a⊗(b⊗c)`.
    fn associator(&self, a: &Self::Object, b: &Self::Object, c: &Self::Object) -> Self::Morphism;
    fn associator_inv(
        &self,
        a: &Self::Object,
        b: &Self::Object,
        c: &Self::Object,
    ) -> Self::Morphism;
    /// `λ(a): I⊗a → a`.
    fn left_unitor(&self, a: &Self::Object) -> Self::Morphism;
    fn left_unitor_inv(&self, a: &Self::Object) -> Self::Morphism;
    /// `ρ(a): a⊗I → a`.
    fn right_unitor(&self, a: &Self::Object) -> Self::Morphism;
    fn right_unitor_inv(&self, a: &Self::Object) -> Self::Morphism;
    /// `γ(a,b): a⊗b → b⊗a`; its inverse is `γ(b,a)`.
    fn braiding(&self, a: &Self::Object, b: &Self::Object) -> Self::Morphism;

    /// Morphisms `a → b`: exhaustive when the hom-set fits the budget,
    /// otherwise a deterministic seeded sample.
    fn hom_sample(
        &self,
        a: &Self::Object,
        b: &Self::Object,
        spec: &SampleSpec,
    ) -> Vec<Self::Morphism>;

    /// Rough cost measure of an object (element count, dimension, arity…),
    /// used to keep bounded checks within budget.
    fn approx_size(&self, _a: &Self::Object) -> usize {
        1
    }

    fn render(&self, f: &Self::Morphism) -> String {
        format!("{f:?}")
    }

    fn compose_err(&self, f: &Self::Morphism, g: &Self::Morphism) -> SmcError {
        SmcError::ComposeMismatch {
            fcod: format!("{:?}", self.cod(f)),
            gdom: format!("{:?}", self.dom(g)),
        }
    }
}
