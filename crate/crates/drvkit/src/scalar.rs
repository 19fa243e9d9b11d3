//! Exact scalars over ℚ and prime fields F_p.
//!
//! Integer coefficients are represented as rationals; integrality is a
//! predicate checked on demand, not a separate scalar kind. F_p residues
//! are `u32` with `p < 2^31`, so products fit a widening `u64`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} exceeds 2^31 - 1")]
    ModulusTooLarge(u32),
    #[error("cannot parse {text:?} as a coefficient over {ring}")]
    Parse { text: String, ring: CoefficientRing },
    #[error("division by zero")]
    DivisionByZero,
}

/// A verified odd or even prime below 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Prime, ScalarError> {
        if p >= 1 << 31 {
            return Err(ScalarError::ModulusTooLarge(p));
        }
        if !is_prime_u32(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    let n64 = u64::from(n);
    while d * d <= n64 {
        if n64 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Coefficient ring of a group-ring element or matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    /// The rational field ℚ.
    Rational,
    /// The integers ℤ, stored as rationals and checked for integrality on demand.
    Integer,
    /// The prime field F_p.
    ModP(Prime),
}

impl CoefficientRing {
    pub fn modp(p: u32) -> Result<Self, ScalarError> {
        Ok(CoefficientRing::ModP(Prime::new(p)?))
    }

    /// Characteristic: 0 for ℚ and ℤ, p for F_p.
    pub fn characteristic(self) -> u32 {
        match self {
            CoefficientRing::Rational | CoefficientRing::Integer => 0,
            CoefficientRing::ModP(p) => p.get(),
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, CoefficientRing::Integer)
    }

    /// The field in which linear solves over this ring take place.
    pub fn solve_field(self) -> CoefficientRing {
        match self {
            CoefficientRing::Integer => CoefficientRing::Rational,
            other => other,
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Rational => write!(f, "Q"),
            CoefficientRing::Integer => write!(f, "Z"),
            CoefficientRing::ModP(p) => write!(f, "Fp:{}", p.get()),
        }
    }
}

/// An exact scalar: a reduced rational or a residue mod p.
///
/// Rationals are kept in lowest terms with positive denominator (zero is 0/1),
/// which `BigRational` maintains on every operation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rational(BigRational),
    ModP { residue: u32, modulus: Prime },
}

impl Scalar {
    pub fn zero(ring: CoefficientRing) -> Scalar {
        Scalar::from_i64(0, ring)
    }

    pub fn one(ring: CoefficientRing) -> Scalar {
        Scalar::from_i64(1, ring)
    }

    pub fn from_i64(v: i64, ring: CoefficientRing) -> Scalar {
        match ring {
            CoefficientRing::Rational | CoefficientRing::Integer => {
                Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
            }
            CoefficientRing::ModP(p) => {
                let m = i64::from(p.get());
                Scalar::ModP {
                    residue: v.rem_euclid(m) as u32,
                    modulus: p,
                }
            }
        }
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar::Rational(r)
    }

    pub fn matches_ring(&self, ring: CoefficientRing) -> bool {
        match (self, ring) {
            (Scalar::Rational(_), CoefficientRing::Rational | CoefficientRing::Integer) => true,
            (Scalar::ModP { modulus, .. }, CoefficientRing::ModP(p)) => *modulus == p,
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::ModP { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::ModP { residue, .. } => *residue == 1,
        }
    }

    /// True for rationals with denominator 1; always true mod p.
    pub fn is_integral(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_integer(),
            Scalar::ModP { .. } => true,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::ModP {
                    residue: a,
                    modulus,
                },
                Scalar::ModP {
                    residue: b,
                    modulus: m2,
                },
            ) => {
                debug_assert_eq!(modulus, m2, "scalar ring mismatch");
                let p = u64::from(modulus.get());
                Scalar::ModP {
                    residue: ((u64::from(*a) + u64::from(*b)) % p) as u32,
                    modulus: *modulus,
                }
            }
            _ => panic!("scalar ring mismatch"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::ModP { residue, modulus } => {
                let p = modulus.get();
                Scalar::ModP {
                    residue: if *residue == 0 { 0 } else { p - residue },
                    modulus: *modulus,
                }
            }
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::ModP {
                    residue: a,
                    modulus,
                },
                Scalar::ModP {
                    residue: b,
                    modulus: m2,
                },
            ) => {
                debug_assert_eq!(modulus, m2, "scalar ring mismatch");
                let p = u64::from(modulus.get());
                Scalar::ModP {
                    residue: ((u64::from(*a) * u64::from(*b)) % p) as u32,
                    modulus: *modulus,
                }
            }
            _ => panic!("scalar ring mismatch"),
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a / b)),
            (
                Scalar::ModP {
                    residue: a,
                    modulus,
                },
                Scalar::ModP { residue: b, .. },
            ) => {
                let p = modulus.get();
                let inv = mod_inverse(*b, p).ok_or(ScalarError::DivisionByZero)?;
                let prod = (u64::from(*a) * u64::from(inv)) % u64::from(p);
                Ok(Scalar::ModP {
                    residue: prod as u32,
                    modulus: *modulus,
                })
            }
            _ => panic!("scalar ring mismatch"),
        }
    }

    /// Fractional part {q} = q - ⌊q⌋ in [0, 1), and the integral part ⌊q⌋.
    ///
    /// Only defined over ℚ/ℤ.
    pub fn floor_split(&self) -> (BigInt, Scalar) {
        match self {
            Scalar::Rational(r) => {
                let fl = r.floor();
                let frac = r - &fl;
                (fl.to_integer(), Scalar::Rational(frac))
            }
            Scalar::ModP { .. } => panic!("floor_split is only defined over Q"),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::ModP { .. } => None,
        }
    }

    pub fn as_residue(&self) -> Option<u32> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::ModP { residue, .. } => Some(*residue),
        }
    }

    /// Reduce a rational scalar modulo p. Fails when the denominator
    /// vanishes mod p.
    pub fn reduce_mod(&self, p: Prime) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(r) => {
                let m = BigInt::from(p.get());
                let num = r.numer().mod_floor_big(&m);
                let den = r.denom().mod_floor_big(&m);
                if den == 0 {
                    return Err(ScalarError::DivisionByZero);
                }
                let inv = mod_inverse(den, p.get()).ok_or(ScalarError::DivisionByZero)?;
                let res = (u64::from(num) * u64::from(inv)) % u64::from(p.get());
                Ok(Scalar::ModP {
                    residue: res as u32,
                    modulus: p,
                })
            }
            Scalar::ModP { .. } => panic!("reduce_mod expects a rational scalar"),
        }
    }

    /// Parse "a" or "a/b". Over F_p the value is reduced mod p, with "a/b"
    /// read as a·b⁻¹.
    pub fn parse(text: &str, ring: CoefficientRing) -> Result<Scalar, ScalarError> {
        let err = || ScalarError::Parse {
            text: text.to_string(),
            ring,
        };
        let text = text.trim();
        let (num_s, den_s) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num: BigInt = num_s.parse().map_err(|_| err())?;
        let den: Option<BigInt> = match den_s {
            Some(d) => Some(d.parse().map_err(|_| err())?),
            None => None,
        };
        if let Some(d) = &den {
            if d.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
        }
        match ring {
            CoefficientRing::Rational | CoefficientRing::Integer => {
                let den = den.unwrap_or_else(BigInt::one);
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            CoefficientRing::ModP(p) => {
                let rat = BigRational::new(num, den.unwrap_or_else(BigInt::one));
                Scalar::Rational(rat).reduce_mod(p)
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", r),
            Scalar::ModP { residue, .. } => write!(f, "{}", residue),
        }
    }
}

/// Modular inverse by extended Euclid; `None` when gcd(a, p) != 1.
fn mod_inverse(a: u32, p: u32) -> Option<u32> {
    if a == 0 {
        return None;
    }
    let (mut t, mut new_t): (i64, i64) = (0, 1);
    let (mut r, mut new_r): (i64, i64) = (i64::from(p), i64::from(a));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(i64::from(p)) as u32)
}

/// Non-negative residue of a big integer mod a small positive modulus.
trait ModFloorBig {
    fn mod_floor_big(&self, m: &BigInt) -> u32;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> u32 {
        use num_integer::Integer;
        let r = self.mod_floor(m);
        // m < 2^31 so the residue fits u32.
        let (_, digits) = r.to_u32_digits();
        if digits.is_empty() {
            0
        } else {
            digits[0]
        }
    }
}
