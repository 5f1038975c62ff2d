//! Exact coefficient fields: finite fields `GF(p^m)`, the rationals, and
//! cyclotomic numbers for character values.

mod cyclo;
mod gf;
pub mod poly;
mod rational;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

pub use cyclo::Cyclo;
pub use gf::{Gf, MAX_FIELD_SIZE};
pub use rational::{Rationals, Q};

/// Describes a coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FieldDesc {
    Prime(u32),
    /// `GF(p^m)` with the given monic defining polynomial, constant term first.
    Extension { p: u32, m: u32, poly: Vec<u32> },
    Rationals,
    Cyclotomic(u32),
}

impl core::fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FieldDesc::Prime(p) => write!(f, "GF({p})"),
            FieldDesc::Extension { p, m, .. } => write!(f, "GF({p}^{m})"),
            FieldDesc::Rationals => write!(f, "Q"),
            FieldDesc::Cyclotomic(n) => write!(f, "Q(z{n})"),
        }
    }
}

/// A field with runtime parameters; elements are plain values and all
/// arithmetic goes through the field object.
pub trait Field: Clone + Debug + Send + Sync {
    type Elt: Clone + PartialEq + Eq + Ord + Debug + Send + Sync;

    fn zero(&self) -> Self::Elt;
    fn one(&self) -> Self::Elt;
    fn from_int(&self, n: i64) -> Self::Elt;
    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn sub(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn neg(&self, a: &Self::Elt) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn inv(&self, a: &Self::Elt) -> Option<Self::Elt>;
    fn is_zero(&self, a: &Self::Elt) -> bool;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when infinite.
    fn size(&self) -> Option<u64>;
    fn desc(&self) -> FieldDesc;
    /// Element enumeration for finite fields, in a fixed order starting
    /// with 0 and 1.
    fn elements(&self) -> Option<Vec<Self::Elt>>;
    fn render(&self, a: &Self::Elt) -> String;

    fn is_one(&self, a: &Self::Elt) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elt, b: &Self::Elt) -> Option<Self::Elt> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `a + b c`.
    fn mul_add(&self, a: &Self::Elt, b: &Self::Elt, c: &Self::Elt) -> Self::Elt {
        self.add(a, &self.mul(b, c))
    }

    fn pow(&self, a: &Self::Elt, mut e: u64) -> Self::Elt {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}
