//! Arithmetic in GF(2^m) for 1 <= m <= 16.
//!
//! Elements are residues of polynomials over GF(2) modulo a fixed irreducible
//! polynomial, packed into a `u16` with bit `i` holding the coefficient of
//! `x^i`. The modulus for each degree comes from [`MODULI`], so an encoding is
//! stable across runs.

use std::fmt;
use std::sync::OnceLock;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 16;

/// Irreducible (in fact primitive) moduli, indexed by degree - 1. Bit `i` is
/// the coefficient of `x^i`, including the leading term.
pub const MODULI: [u32; 16] = [
    0x3,     // x + 1
    0x7,     // x^2 + x + 1
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11D,   // x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201B,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100B, // x^16 + x^12 + x^3 + x + 1
];

/// The field GF(2^m) together with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    m: u32,
    modulus: u32,
}

impl Field {
    pub fn new(m: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        Ok(Field { m, modulus: MODULI[(m - 1) as usize] })
    }

    /// The prime field GF(2).
    pub const fn gf2() -> Self {
        Field { m: 1, modulus: 0x3 }
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn order(&self) -> u32 {
        1 << self.m
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    pub fn ensure_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.m, right: other.m })
        }
    }

    // Raw element operations. Callers guarantee `a, b < 2^m`.

    #[inline]
    pub fn mul_raw(&self, a: u16, b: u16) -> u16 {
        if self.m == 1 {
            return a & b;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let t = self.tables();
        t.exp[t.log[a as usize] as usize + t.log[b as usize] as usize]
    }

    fn tables(&self) -> &'static Tables {
        TABLES[self.m as usize].get_or_init(|| Tables::build(self))
    }

    /// Shift-and-reduce product, used to build the log tables.
    fn mul_slow(&self, a: u16, b: u16) -> u16 {
        let (a, mut b) = (a as u32, b as u32);
        let mut acc = 0u32;
        let mut shifted = a;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= shifted;
            }
            b >>= 1;
            shifted <<= 1;
        }
        let mut deg = 2 * self.m - 2;
        while deg >= self.m {
            if acc & (1 << deg) != 0 {
                acc ^= self.modulus << (deg - self.m);
            }
            deg -= 1;
        }
        acc as u16
    }

    pub fn pow_raw(&self, a: u16, mut e: u64) -> u16 {
        let mut base = a;
        let mut acc = 1u16;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv_raw(&self, a: u16) -> Option<u16> {
        match (a, self.m) {
            (0, _) => None,
            (_, 1) => Some(1),
            _ => {
                let t = self.tables();
                let q1 = (self.order() - 1) as usize;
                Some(t.exp[(q1 - t.log[a as usize] as usize) % q1])
            }
        }
    }

    pub fn scalar(&self, bits: u16) -> Result<Scalar> {
        if (bits as u32) >= self.order() {
            return Err(Error::BadScalar(format!("{bits:#x} not in GF(2^{})", self.m)));
        }
        Ok(Scalar { field: *self, bits })
    }

    pub fn zero(&self) -> Scalar {
        Scalar { field: *self, bits: 0 }
    }

    pub fn one(&self) -> Scalar {
        Scalar { field: *self, bits: 1 }
    }

    /// The class of `x`, a primitive element for the shipped moduli (m >= 2).
    pub fn generator(&self) -> Scalar {
        Scalar { field: *self, bits: if self.m == 1 { 1 } else { 2 } }
    }

    /// All elements, zero first, in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> + '_ {
        let field = *self;
        (0..self.order()).map(move |b| Scalar { field, bits: b as u16 })
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Scalar> + '_ {
        self.elements().skip(1)
    }

    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bits = u32::from_str_radix(text.trim(), 16)
            .map_err(|_| Error::BadScalar(text.to_string()))?;
        if bits >= self.order() {
            return Err(Error::BadScalar(text.to_string()));
        }
        Ok(Scalar { field: *self, bits: bits as u16 })
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::gf2()
    }
}

/// Discrete log and antilog tables with respect to a primitive element.
struct Tables {
    log: Vec<u32>,
    /// Doubled so that `exp[log a + log b]` needs no reduction.
    exp: Vec<u16>,
}

static TABLES: [OnceLock<Tables>; MAX_DEGREE as usize + 1] = [const { OnceLock::new() }; MAX_DEGREE as usize + 1];

impl Tables {
    fn build(field: &Field) -> Tables {
        let q = field.order() as usize;
        for g in (2..q).map(|g| g as u16) {
            let mut log = vec![u32::MAX; q];
            let mut exp = vec![0u16; 2 * (q - 1)];
            let mut p = 1u16;
            let mut full = true;
            for k in 0..q - 1 {
                if log[p as usize] != u32::MAX {
                    full = false;
                    break;
                }
                log[p as usize] = k as u32;
                exp[k] = p;
                exp[k + q - 1] = p;
                p = field.mul_slow(p, g);
            }
            if full {
                return Tables { log, exp };
            }
        }
        unreachable!("GF(2^m)^* is cyclic")
    }
}

/// An element of a [`Field`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: Field,
    bits: u16,
}

impl Scalar {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn bits(&self) -> u16 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn checked_add(self, rhs: Scalar) -> Result<Scalar> {
        self.field.ensure_same(&rhs.field)?;
        Ok(Scalar { field: self.field, bits: self.bits ^ rhs.bits })
    }

    pub fn checked_mul(self, rhs: Scalar) -> Result<Scalar> {
        self.field.ensure_same(&rhs.field)?;
        Ok(Scalar { field: self.field, bits: self.field.mul_raw(self.bits, rhs.bits) })
    }

    pub fn inv(self) -> Result<Scalar> {
        let bits = self.field.inv_raw(self.bits).ok_or(Error::ZeroInverse)?;
        Ok(Scalar { field: self.field, bits })
    }

    pub fn pow(self, e: u64) -> Scalar {
        Scalar { field: self.field, bits: self.field.pow_raw(self.bits, e) }
    }

    pub fn to_hex(&self) -> String {
        format!("{:x}", self.bits)
    }
}

/// Panics on mismatched fields; use [`Scalar::checked_add`] to get an error.
impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar addition across fields")
    }
}

/// Panics on mismatched fields; use [`Scalar::checked_mul`] to get an error.
impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar multiplication across fields")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.bits)
    }
}
