//! The three-element structure `3 = {1, 0, -1}` and its fixed
//! representation relations.

use serde::Serialize;
use std::fmt;
use std::ops::{Mul, Neg};

/// A value of `3`.
///
/// The derived `Ord` is `Zero < One < MinusOne`; this is the value order
/// used by the canonical sort of characters.  The representation order
/// (`1 < 0 < -1`) is [`Three::repr_le`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Three {
    Zero,
    One,
    MinusOne,
}

impl Three {
    /// Carrier in listing order: 1, 0, -1.  Element `i` of
    /// [`crate::examples::three`] is `Three::LISTING[i]`.
    pub const LISTING: [Three; 3] = [Three::One, Three::Zero, Three::MinusOne];

    pub fn sq(self) -> Three {
        self * self
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Three::One => 1,
            Three::Zero => 0,
            Three::MinusOne => -1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Three> {
        match v {
            1 => Some(Three::One),
            0 => Some(Three::Zero),
            -1 => Some(Three::MinusOne),
            _ => None,
        }
    }

    /// Rank in the representation order `1 < 0 < -1`.
    fn repr_rank(self) -> u8 {
        match self {
            Three::One => 0,
            Three::Zero => 1,
            Three::MinusOne => 2,
        }
    }

    pub fn repr_le(self, other: Three) -> bool {
        self.repr_rank() <= other.repr_rank()
    }

    fn bit(self) -> u8 {
        1 << self.repr_rank()
    }
}

impl Mul for Three {
    type Output = Three;

    fn mul(self, other: Three) -> Three {
        match (self, other) {
            (Three::Zero, _) | (_, Three::Zero) => Three::Zero,
            (a, b) if a == b => Three::One,
            _ => Three::MinusOne,
        }
    }
}

impl Neg for Three {
    type Output = Three;

    fn neg(self) -> Three {
        self * Three::MinusOne
    }
}

impl fmt::Display for Three {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Three::One => "1",
            Three::Zero => "0",
            Three::MinusOne => "-1",
        })
    }
}

const ALL: u8 = 0b111;

// Bit masks over {1, 0, -1} (bit 0 = 1, bit 1 = 0, bit 2 = -1).
fn mask(b: Three, c: Three, transversal: bool) -> u8 {
    use Three::*;
    let (zero, one, minus) = (Zero.bit(), One.bit(), MinusOne.bit());
    match (b, c) {
        (Zero, Zero) => zero,
        (Zero, One) | (One, Zero) | (One, One) => {
            if transversal {
                one
            } else {
                zero | one
            }
        }
        (Zero, MinusOne) | (MinusOne, Zero) | (MinusOne, MinusOne) => {
            if transversal {
                minus
            } else {
                zero | minus
            }
        }
        (One, MinusOne) | (MinusOne, One) => ALL,
    }
}

/// `a ∈ D₃(b, c)`, read off the fixed table.
pub fn d3(a: Three, b: Three, c: Three) -> bool {
    mask(b, c, false) & a.bit() != 0
}

/// `a ∈ Dᵗ₃(b, c)`, read off the fixed table.
pub fn dt3(a: Three, b: Three, c: Three) -> bool {
    mask(b, c, true) & a.bit() != 0
}

/// `D₃(b, c)` as a list in listing order.
pub fn d3_set(b: Three, c: Three) -> Vec<Three> {
    Three::LISTING.into_iter().filter(|&a| d3(a, b, c)).collect()
}

/// `Dᵗ₃(b, c)` as a list in listing order.
pub fn dt3_set(b: Three, c: Three) -> Vec<Three> {
    Three::LISTING.into_iter().filter(|&a| dt3(a, b, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::Three::*;
    use super::*;

    #[test]
    fn multiplication_is_integer_multiplication() {
        for a in Three::LISTING {
            for b in Three::LISTING {
                assert_eq!(a.mul(b).to_i8(), a.to_i8() * b.to_i8());
            }
        }
    }

    #[test]
    fn listed_values() {
        assert_eq!(d3_set(One, One), vec![One, Zero]);
        assert_eq!(d3_set(Zero, Zero), vec![Zero]);
        assert_eq!(d3_set(MinusOne, Zero), vec![Zero, MinusOne]);
        assert_eq!(d3_set(One, MinusOne).len(), 3);
        assert_eq!(dt3_set(Zero, One), vec![One]);
        assert_eq!(dt3_set(MinusOne, MinusOne), vec![MinusOne]);
        assert_eq!(dt3_set(MinusOne, One).len(), 3);
        assert_eq!(dt3_set(Zero, Zero), vec![Zero]);
    }

    // The tables against the plain-language clauses: x is represented by
    // <y, z> iff x is 0 or equals one of them; transversally, 0 needs
    // y = -z and a nonzero x must equal y or z.
    #[test]
    fn tables_match_clauses() {
        for x in Three::LISTING {
            for y in Three::LISTING {
                for z in Three::LISTING {
                    let d = x == Zero || x == y || x == z;
                    let t = if x == Zero { y == z.neg() } else { x == y || x == z };
                    assert_eq!(d3(x, y, z), d, "{x} {y} {z}");
                    assert_eq!(dt3(x, y, z), t, "{x} {y} {z}");
                }
            }
        }
    }

    #[test]
    fn repr_order_in_three() {
        assert!(One.repr_le(Zero) && Zero.repr_le(MinusOne) && One.repr_le(MinusOne));
        assert!(!Zero.repr_le(One) && !MinusOne.repr_le(Zero));
    }
}
