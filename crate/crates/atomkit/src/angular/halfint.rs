use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Half-integer quantum number, stored exactly as twice its value.
///
/// Angular-momentum labels (J, M, j, k) live on the lattice {0, 1/2, 1, ...};
/// keeping the doubled value in an `i32` makes validity checks and ladder
/// coefficient formulas exact integer arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    /// Builds from twice the desired value, so `from_doubled(3)` is 3/2.
    pub const fn from_doubled(twice: i32) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i32) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn doubled(self) -> i32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// True when `self - other` is a whole integer, i.e. both are integers
    /// or both are half-odd. Magnetic numbers of a representation all share
    /// the parity of J.
    pub const fn same_parity(self, other: HalfInt) -> bool {
        (self.twice - other.twice) % 2 == 0
    }

    pub const fn abs(self) -> HalfInt {
        HalfInt { twice: self.twice.abs() }
    }

    /// J(J+1), the quadratic Casimir eigenvalue, exact for small J.
    pub fn casimir(self) -> f64 {
        let d = i64::from(self.twice);
        (d * (d + 2)) as f64 / 4.0
    }
}

/// Checks that (J, M) labels a state: J >= 0, |M| <= J, and M runs over
/// J, J-1, ..., -J (so J - M must be integral).
pub(crate) fn valid_pair(j: HalfInt, m: HalfInt) -> bool {
    j.twice >= 0 && m.twice.abs() <= j.twice && j.same_parity(m)
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}
