use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Height bound used when a rationals field is named without one.
pub const DEFAULT_HEIGHT: u32 = 2;

/// The scalar field: a prime field GF(p), or the rationals with an
/// enumeration-height bound that limits exhaustive searches to fractions
/// `a/b` with `|a|, b <= height`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Prime(u32),
    Rationals { height: u32 },
}

/// A field element. Residues are kept in `[0, p)`, fractions in lowest terms
/// with positive denominator (which `Ratio` guarantees).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Residue(u32),
    Fraction(Ratio<i64>),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::InvalidField(format!("gf{p}: {p} is not prime")))
        }
    }

    pub fn rationals(height: u32) -> Result<Field> {
        if height == 0 {
            return Err(Error::InvalidField("q0: height must be positive".into()));
        }
        Ok(Field::Rationals { height })
    }

    pub fn gf2() -> Field {
        Field::Prime(2)
    }

    pub fn gf3() -> Field {
        Field::Prime(3)
    }

    /// Field order, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match *self {
            Field::Prime(p) => Some(p as u64),
            Field::Rationals { .. } => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Residue(0),
            Field::Rationals { .. } => Scalar::Fraction(Ratio::from_integer(0)),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Prime(p) => Scalar::Residue(n.rem_euclid(p as i64) as u32),
            Field::Rationals { .. } => Scalar::Fraction(Ratio::from_integer(n)),
        }
    }

    pub fn fraction(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::InvalidScalar(format!("{num}/0")));
        }
        match *self {
            Field::Prime(_) => {
                let inv = self
                    .inv(self.from_i64(den))
                    .ok_or_else(|| Error::InvalidScalar(format!("{num}/{den}")))?;
                Ok(self.mul(self.from_i64(num), inv))
            }
            Field::Rationals { .. } => Ok(Scalar::Fraction(Ratio::new(num, den))),
        }
    }

    pub fn is_zero(&self, a: Scalar) -> bool {
        a == self.zero()
    }

    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        match (*self, a, b) {
            (Field::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((x as u64 + y as u64) % p as u64) as u32)
            }
            (Field::Rationals { .. }, Scalar::Fraction(x), Scalar::Fraction(y)) => {
                Scalar::Fraction(x + y)
            }
            _ => panic!("scalar {a:?} or {b:?} does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: Scalar) -> Scalar {
        match (*self, a) {
            (Field::Prime(p), Scalar::Residue(x)) => Scalar::Residue((p - x % p) % p),
            (Field::Rationals { .. }, Scalar::Fraction(x)) => Scalar::Fraction(-x),
            _ => panic!("scalar {a:?} does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        match (*self, a, b) {
            (Field::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((x as u64 * y as u64) % p as u64) as u32)
            }
            (Field::Rationals { .. }, Scalar::Fraction(x), Scalar::Fraction(y)) => {
                Scalar::Fraction(x * y)
            }
            _ => panic!("scalar {a:?} or {b:?} does not belong to {self}"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (*self, a) {
            (Field::Prime(p), Scalar::Residue(x)) => {
                // Fermat: x^(p-2)
                let p = p as u64;
                let (mut base, mut exp, mut acc) = (x as u64 % p, p - 2, 1u64);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Some(Scalar::Residue(acc as u32))
            }
            (Field::Rationals { .. }, Scalar::Fraction(x)) => Some(Scalar::Fraction(x.recip())),
            _ => panic!("scalar {a:?} does not belong to {self}"),
        }
    }

    pub fn div(&self, a: Scalar, b: Scalar) -> Option<Scalar> {
        self.inv(b).map(|b| self.mul(a, b))
    }

    pub fn contains(&self, a: Scalar) -> bool {
        match (*self, a) {
            (Field::Prime(p), Scalar::Residue(x)) => x < p,
            (Field::Rationals { .. }, Scalar::Fraction(_)) => true,
            _ => false,
        }
    }

    /// The nonzero scalars used by exhaustive enumeration, in canonical
    /// order. For GF(p) this is all of `1..p`; for the rationals it is every
    /// `±a/b` with `1 <= a, b <= height` in lowest terms.
    pub fn enumeration_scalars(&self) -> Vec<Scalar> {
        match *self {
            Field::Prime(p) => (1..p).map(Scalar::Residue).collect(),
            Field::Rationals { height } => {
                let h = height as i64;
                let mut out = Vec::new();
                for den in 1..=h {
                    for num in 1..=h {
                        let r = Ratio::new(num, den);
                        if *r.denom() == den {
                            out.push(Scalar::Fraction(r));
                            out.push(Scalar::Fraction(-r));
                        }
                    }
                }
                out.sort();
                out
            }
        }
    }

    /// Number of nonzero enumeration scalars (`q - 1` for finite fields).
    pub fn enumeration_width(&self) -> u64 {
        self.enumeration_scalars().len() as u64
    }

    pub fn format_scalar(&self, a: Scalar) -> String {
        a.to_string()
    }

    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::InvalidScalar(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i64>().map_err(|_| bad())?,
                d.trim().parse::<i64>().map_err(|_| bad())?,
            ),
            None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
        };
        match self {
            Field::Prime(p) => {
                // canonical literals for residues are plain decimals in [0, p)
                if den != 1 || num < 0 || num >= *p as i64 {
                    return Err(bad());
                }
                Ok(Scalar::Residue(num as u32))
            }
            Field::Rationals { .. } => self.fraction(num, den).map_err(|_| bad()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "gf{p}"),
            Field::Rationals { height } => write!(f, "q{height}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `gf<p>`, `q` (default height) and `q<h>`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim().to_ascii_lowercase();
        if let Some(p) = s.strip_prefix("gf") {
            let p: u32 = p.parse().map_err(|_| Error::InvalidField(s.clone()))?;
            Field::prime(p)
        } else if s == "q" {
            Field::rationals(DEFAULT_HEIGHT)
        } else if let Some(h) = s.strip_prefix('q') {
            let h: u32 = h.parse().map_err(|_| Error::InvalidField(s.clone()))?;
            Field::rationals(h)
        } else {
            Err(Error::InvalidField(s))
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Residue(x) => write!(f, "{x}"),
            Scalar::Fraction(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Scalar::Fraction(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl Ord for Scalar {
    /// Canonical scalar order: residues by value; fractions by denominator,
    /// then absolute numerator, positive before negative. Under this order
    /// `1` is the least nonzero scalar in every field.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Residue(a), Scalar::Residue(b)) => a.cmp(b),
            (Scalar::Fraction(a), Scalar::Fraction(b)) => a
                .denom()
                .cmp(b.denom())
                .then(a.numer().unsigned_abs().cmp(&b.numer().unsigned_abs()))
                .then((*a.numer() < 0).cmp(&(*b.numer() < 0))),
            (Scalar::Residue(_), Scalar::Fraction(_)) => Ordering::Less,
            (Scalar::Fraction(_), Scalar::Residue(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
