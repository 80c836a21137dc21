//! Coefficient domains: exact integers, rationals, and prime fields.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which arithmetic a polynomial ring uses. This is a run-wide choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientMode {
    /// Arbitrary precision integers. Division is never performed.
    Integer,
    /// Arbitrary precision rationals.
    Rational,
    /// The prime field with the given characteristic.
    Prime(u64),
}

/// A coefficient value. `Exact` holds integers and rationals; `Modular` holds
/// a representative in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Exact(BigRational),
    Modular(u64),
}

impl fmt::Display for CoefficientMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientMode::Integer => write!(f, "integer"),
            CoefficientMode::Rational => write!(f, "rational"),
            CoefficientMode::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Exact(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Coefficient::Exact(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Coefficient::Modular(v) => write!(f, "{v}"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (g, x, _) = egcd(a as i128, p as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(p as i128) as u64)
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl CoefficientMode {
    /// Validates the mode: prime-field modes need a prime below 2^31 so that
    /// products fit in `u64`.
    pub fn validate(self) -> Result<Self> {
        if let CoefficientMode::Prime(p) = self {
            if !is_prime(p) || p >= (1 << 31) {
                return Err(Error::Domain(format!("{p} is not a supported prime")));
            }
        }
        Ok(self)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            CoefficientMode::Prime(p) => p,
            _ => 0,
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, CoefficientMode::Integer)
    }

    pub fn zero(self) -> Coefficient {
        match self {
            CoefficientMode::Prime(_) => Coefficient::Modular(0),
            _ => Coefficient::Exact(BigRational::zero()),
        }
    }

    pub fn one(self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Coefficient {
        match self {
            CoefficientMode::Prime(p) => Coefficient::Modular(v.rem_euclid(p as i64) as u64),
            _ => Coefficient::Exact(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Coefficient {
        match self {
            CoefficientMode::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Coefficient::Modular(r.to_u64().expect("residue fits"))
            }
            _ => Coefficient::Exact(BigRational::from_integer(v.clone())),
        }
    }

    fn check(self, c: &Coefficient) {
        debug_assert!(
            matches!(
                (self, c),
                (CoefficientMode::Prime(_), Coefficient::Modular(_))
                    | (CoefficientMode::Integer | CoefficientMode::Rational, Coefficient::Exact(_))
            ),
            "coefficient {c:?} does not belong to mode {self}"
        );
    }

    pub fn is_zero(self, c: &Coefficient) -> bool {
        self.check(c);
        match c {
            Coefficient::Exact(q) => q.is_zero(),
            Coefficient::Modular(v) => *v == 0,
        }
    }

    pub fn is_one(self, c: &Coefficient) -> bool {
        match c {
            Coefficient::Exact(q) => q.is_one(),
            Coefficient::Modular(v) => *v == 1,
        }
    }

    pub fn add(self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        match (a, b, self) {
            (Coefficient::Exact(x), Coefficient::Exact(y), _) => Coefficient::Exact(x + y),
            (Coefficient::Modular(x), Coefficient::Modular(y), CoefficientMode::Prime(p)) => {
                Coefficient::Modular((x + y) % p)
            }
            _ => panic!("mixed coefficient modes"),
        }
    }

    pub fn neg(self, a: &Coefficient) -> Coefficient {
        match (a, self) {
            (Coefficient::Exact(x), _) => Coefficient::Exact(-x),
            (Coefficient::Modular(x), CoefficientMode::Prime(p)) => Coefficient::Modular((p - x) % p),
            _ => panic!("mixed coefficient modes"),
        }
    }

    pub fn sub(self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        self.add(a, &self.neg(b))
    }

    pub fn mul(self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        match (a, b, self) {
            (Coefficient::Exact(x), Coefficient::Exact(y), _) => Coefficient::Exact(x * y),
            (Coefficient::Modular(x), Coefficient::Modular(y), CoefficientMode::Prime(p)) => {
                Coefficient::Modular(x * y % p)
            }
            _ => panic!("mixed coefficient modes"),
        }
    }

    /// Multiplicative inverse. Integer mode only inverts units.
    pub fn inv(self, a: &Coefficient) -> Result<Coefficient> {
        match (a, self) {
            (Coefficient::Exact(x), CoefficientMode::Integer) => {
                if x.is_integer() && x.numer().abs().is_one() {
                    Ok(a.clone())
                } else if x.is_zero() {
                    Err(Error::NotInvertible)
                } else {
                    Err(Error::UnsupportedMode(self.to_string()))
                }
            }
            (Coefficient::Exact(x), _) => {
                if x.is_zero() {
                    Err(Error::NotInvertible)
                } else {
                    Ok(Coefficient::Exact(x.recip()))
                }
            }
            (Coefficient::Modular(x), CoefficientMode::Prime(p)) => {
                inv_mod(*x, p).map(Coefficient::Modular).ok_or(Error::NotInvertible)
            }
            _ => panic!("mixed coefficient modes"),
        }
    }

    /// Re-reads a coefficient of another mode in this mode. Rationals map to
    /// a prime field when their denominator is invertible; integer mode only
    /// accepts integral values.
    pub fn convert(self, c: &Coefficient, from: CoefficientMode) -> Result<Coefficient> {
        match (c, self) {
            (Coefficient::Exact(q), CoefficientMode::Prime(p)) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                let Coefficient::Modular(d) = den else { unreachable!() };
                if d == 0 {
                    return Err(Error::Domain(format!("denominator of {c} vanishes mod {p}")));
                }
                Ok(self.mul(&num, &self.inv(&Coefficient::Modular(d))?))
            }
            (Coefficient::Exact(q), CoefficientMode::Integer) => {
                if q.is_integer() {
                    Ok(c.clone())
                } else {
                    Err(Error::UnsupportedMode(format!("{c} is not an integer")))
                }
            }
            (Coefficient::Exact(_), CoefficientMode::Rational) => Ok(c.clone()),
            (Coefficient::Modular(v), CoefficientMode::Prime(p)) => {
                if from == self {
                    Ok(c.clone())
                } else {
                    Err(Error::DimensionMismatch(format!(
                        "cannot move {v} from {from} to F{p}"
                    )))
                }
            }
            (Coefficient::Modular(_), _) => Err(Error::DimensionMismatch(format!(
                "cannot lift a residue from {from} to {self}"
            ))),
        }
    }

    /// Residue of `c` modulo `p`, used when evaluating polynomials in finite rings.
    pub fn residue(self, c: &Coefficient, p: u64) -> Result<u64> {
        match CoefficientMode::Prime(p).convert(c, self)? {
            Coefficient::Modular(v) => Ok(v),
            Coefficient::Exact(_) => unreachable!(),
        }
    }

    /// True when the value is the integer `-1` (or `p - 1`).
    pub fn is_minus_one(self, c: &Coefficient) -> bool {
        self.is_one(&self.neg(c))
    }
}

impl Coefficient {
    /// The exact value, if this is an exact coefficient.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coefficient::Exact(q) => Some(q),
            Coefficient::Modular(_) => None,
        }
    }

    /// For exact values: true when the value is a nonnegative integer.
    pub fn is_nonnegative_integer(&self) -> bool {
        match self {
            Coefficient::Exact(q) => q.is_integer() && !q.is_negative(),
            Coefficient::Modular(_) => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_reduces() {
        let m = CoefficientMode::Prime(5);
        assert_eq!(m.from_i64(-1), Coefficient::Modular(4));
        assert_eq!(m.add(&m.from_i64(3), &m.from_i64(4)), Coefficient::Modular(2));
        assert_eq!(m.inv(&m.from_i64(2)).unwrap(), Coefficient::Modular(3));
        assert!(m.inv(&m.zero()).is_err());
    }

    #[test]
    fn integer_mode_refuses_division() {
        let m = CoefficientMode::Integer;
        assert_eq!(m.inv(&m.from_i64(-1)).unwrap(), m.from_i64(-1));
        assert!(matches!(m.inv(&m.from_i64(2)), Err(Error::UnsupportedMode(_))));
    }

    #[test]
    fn conversion_to_prime_field() {
        let q = CoefficientMode::Rational;
        let half = Coefficient::Exact(BigRational::new(1.into(), 2.into()));
        assert_eq!(CoefficientMode::Prime(3).convert(&half, q).unwrap(), Coefficient::Modular(2));
        assert!(CoefficientMode::Prime(2).convert(&half, q).is_err());
        assert_eq!(q.residue(&q.from_i64(2), 2).unwrap(), 0);
    }

    #[test]
    fn validate_rejects_composites() {
        assert!(CoefficientMode::Prime(4).validate().is_err());
        assert!(CoefficientMode::Prime(7).validate().is_ok());
    }
}
