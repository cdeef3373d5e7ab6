//! Residues modulo 3.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of Z3, stored as 0, 1 or 2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z3(u8);

impl Z3 {
    pub const ZERO: Z3 = Z3(0);
    pub const ONE: Z3 = Z3(1);
    pub const TWO: Z3 = Z3(2);
    pub const ALL: [Z3; 3] = [Z3(0), Z3(1), Z3(2)];

    pub fn new(v: i64) -> Z3 {
        Z3(v.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Representative in {-1, 0, 1}.
    pub fn signed(self) -> i8 {
        if self.0 == 2 {
            -1
        } else {
            self.0 as i8
        }
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl From<u8> for Z3 {
    fn from(v: u8) -> Z3 {
        Z3(v % 3)
    }
}

impl Add for Z3 {
    type Output = Z3;
    fn add(self, o: Z3) -> Z3 {
        Z3((self.0 + o.0) % 3)
    }
}

impl Sub for Z3 {
    type Output = Z3;
    fn sub(self, o: Z3) -> Z3 {
        Z3((self.0 + 3 - o.0) % 3)
    }
}

impl Neg for Z3 {
    type Output = Z3;
    fn neg(self) -> Z3 {
        Z3((3 - self.0) % 3)
    }
}

impl AddAssign for Z3 {
    fn add_assign(&mut self, o: Z3) {
        *self = *self + o;
    }
}

impl SubAssign for Z3 {
    fn sub_assign(&mut self, o: Z3) {
        *self = *self - o;
    }
}

impl Sum for Z3 {
    fn sum<I: Iterator<Item = Z3>>(iter: I) -> Z3 {
        iter.fold(Z3::ZERO, |a, b| a + b)
    }
}

impl<'a> Sum<&'a Z3> for Z3 {
    fn sum<I: Iterator<Item = &'a Z3>>(iter: I) -> Z3 {
        iter.fold(Z3::ZERO, |a, b| a + *b)
    }
}

impl fmt::Display for Z3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Z3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.0)
    }
}

impl<'de> Deserialize<'de> for Z3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Z3, D::Error> {
        let v = u8::deserialize(d)?;
        if v > 2 {
            return Err(serde::de::Error::custom(format!("residue {v} not in 0..3")));
        }
        Ok(Z3(v))
    }
}
