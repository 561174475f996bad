//! Edge-colored complete graphs ("cographs"): canonical forms and counting,
//! realizability in abelian groups, set systems and linear spaces, and chain
//! groups with a coset enumerator.

#![allow(clippy::needless_range_loop)]

pub mod cograph;
pub mod difference;
pub mod enumeration;
pub mod exec;
pub mod group;
pub mod intersection;
pub mod lattice;
pub mod pl;
pub mod representations;
pub mod sum;

pub use cograph::{
    canonical_form, canonical_labeling, canonicalize, is_isomorphic, parse, serialize, type_signature, CanonicalKey,
    Cograph, CographError, ParseError, TypeSignature,
};
pub use exec::Exec;
