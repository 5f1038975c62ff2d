use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::{Field, FieldDesc};

pub type Q = Ratio<i128>;

/// The rational numbers with `i128` numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elt = Q;

    fn zero(&self) -> Q {
        Q::zero()
    }

    fn one(&self) -> Q {
        Q::one()
    }

    fn from_int(&self, n: i64) -> Q {
        Q::from_integer(n as i128)
    }

    fn add(&self, a: &Q, b: &Q) -> Q {
        a + b
    }

    fn sub(&self, a: &Q, b: &Q) -> Q {
        a - b
    }

    fn neg(&self, a: &Q) -> Q {
        -a
    }

    fn mul(&self, a: &Q, b: &Q) -> Q {
        a * b
    }

    fn inv(&self, a: &Q) -> Option<Q> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &Q) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn size(&self) -> Option<u64> {
        None
    }

    fn desc(&self) -> FieldDesc {
        FieldDesc::Rationals
    }

    fn elements(&self) -> Option<Vec<Q>> {
        None
    }

    fn render(&self, a: &Q) -> String {
        format!("{a}")
    }
}
