//! Residues, 2-vectors and 2×2 matrices over Z_M.
//!
//! Every value carries its modulus. Binary operations between values with
//! different moduli are rejected: the checked methods return
//! [`Error::ModulusMismatch`] and the operator impls panic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported modulus. Dimensions N ≤ 2^15 keep 2N ≤ 2^16, so every
/// intermediate product of two residues fits comfortably in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 16;

fn check_modulus(modulus: u64) -> Result<()> {
    if modulus < 2 {
        return Err(Error::ModulusTooSmall(modulus));
    }
    if modulus > MAX_MODULUS {
        return Err(Error::ModulusTooLarge {
            got: modulus,
            max: MAX_MODULUS,
        });
    }
    Ok(())
}

/// Canonical representative of `x` in `[0, m)`.
#[inline]
pub fn residue(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}

/// A 2×2 matrix over Z_M, stored row-major with entries in `[0, M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    modulus: u64,
    e: [u64; 4],
}

impl Mat2 {
    /// Builds `[[a11, a12], [a21, a22]]` over Z_modulus, reducing each
    /// (possibly negative) entry.
    pub fn new(modulus: u64, entries: [i64; 4]) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Self {
            modulus,
            e: entries.map(|x| residue(x, modulus)),
        })
    }

    pub fn identity(modulus: u64) -> Result<Self> {
        Self::new(modulus, [1, 0, 0, 1])
    }

    pub fn zero(modulus: u64) -> Result<Self> {
        Self::new(modulus, [0, 0, 0, 0])
    }

    #[inline]
    pub(crate) fn from_residues(modulus: u64, e: [u64; 4]) -> Self {
        debug_assert!(e.iter().all(|&x| x < modulus));
        Self { modulus, e }
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Row-major entries `[a11, a12, a21, a22]`.
    #[inline]
    pub fn entries(&self) -> [u64; 4] {
        self.e
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.e[2 * row + col]
    }

    pub fn is_identity(&self) -> bool {
        self.e == [1, 0, 0, 1]
    }

    pub fn det(&self) -> u64 {
        let m = self.modulus;
        let [a, b, c, d] = self.e;
        (a * d % m + m - b * c % m) % m
    }

    fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }

    #[inline]
    fn mul_unchecked(&self, other: &Self) -> Self {
        let m = self.modulus;
        let [a, b, c, d] = self.e;
        let [p, q, r, s] = other.e;
        Self::from_residues(
            m,
            [
                (a * p + b * r) % m,
                (a * q + b * s) % m,
                (c * p + d * r) % m,
                (c * q + d * s) % m,
            ],
        )
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        let m = self.modulus;
        let mut e = self.e;
        for (x, y) in e.iter_mut().zip(other.e) {
            *x = (*x + y) % m;
        }
        Ok(Self::from_residues(m, e))
    }

    /// Multiplies every entry by the integer `k`.
    pub fn scale(&self, k: i64) -> Self {
        let m = self.modulus;
        let k = residue(k, m);
        Self::from_residues(m, self.e.map(|x| x * k % m))
    }

    /// Inverse of a determinant-one matrix, `[[δ, −β], [−γ, α]]`.
    pub fn sl2_inverse(&self) -> Result<Self> {
        let det = self.det();
        if det != 1 % self.modulus {
            return Err(Error::NotUnimodular {
                det,
                modulus: self.modulus,
            });
        }
        Ok(self.adjugate())
    }

    #[inline]
    pub(crate) fn adjugate(&self) -> Self {
        let m = self.modulus;
        let [a, b, c, d] = self.e;
        Self::from_residues(m, [d, (m - b) % m, (m - c) % m, a])
    }

    /// Entrywise reduction to Z_n; `n` must divide the current modulus.
    pub fn reduce_mod(&self, n: u64) -> Result<Self> {
        check_modulus(n)?;
        if !self.modulus.is_multiple_of(n) {
            return Err(Error::NotADivisor {
                divisor: n,
                modulus: self.modulus,
            });
        }
        Ok(Self::from_residues(n, self.e.map(|x| x % n)))
    }

    /// `self^k` by repeated squaring; `self^0 = I`.
    pub fn pow(&self, mut k: u64) -> Self {
        let m = self.modulus;
        let mut acc = Self::from_residues(m, [1 % m, 0, 0, 1 % m]);
        let mut base = *self;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            k >>= 1;
        }
        acc
    }

    pub fn mat_vec(&self, v: &Vec2) -> Result<Vec2> {
        if self.modulus != v.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: v.modulus,
            });
        }
        Ok(self.mat_vec_unchecked(v))
    }

    #[inline]
    pub(crate) fn mat_vec_unchecked(&self, v: &Vec2) -> Vec2 {
        let m = self.modulus;
        let [a, b, c, d] = self.e;
        let [x, y] = v.e;
        Vec2::from_residues(m, [(a * x + b * y) % m, (c * x + d * y) % m])
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        self.checked_mul(&rhs).expect("Mat2 multiplication")
    }
}

impl Add for Mat2 {
    type Output = Mat2;

    fn add(self, rhs: Mat2) -> Mat2 {
        self.checked_add(&rhs).expect("Mat2 addition")
    }
}

impl Mul<Vec2> for Mat2 {
    type Output = Vec2;

    fn mul(self, rhs: Vec2) -> Vec2 {
        self.mat_vec(&rhs).expect("Mat2 · Vec2")
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.e;
        write!(f, "[[{a}, {b}], [{c}, {d}]] over Z_{}", self.modulus)
    }
}

/// A column vector in Z_M².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec2 {
    modulus: u64,
    e: [u64; 2],
}

impl Vec2 {
    pub fn new(modulus: u64, entries: [i64; 2]) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Self {
            modulus,
            e: entries.map(|x| residue(x, modulus)),
        })
    }

    pub fn zero(modulus: u64) -> Result<Self> {
        Self::new(modulus, [0, 0])
    }

    #[inline]
    pub(crate) fn from_residues(modulus: u64, e: [u64; 2]) -> Self {
        debug_assert!(e.iter().all(|&x| x < modulus));
        Self { modulus, e }
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn entries(&self) -> [u64; 2] {
        self.e
    }

    pub fn is_zero(&self) -> bool {
        self.e == [0, 0]
    }

    fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        Ok(self.add_unchecked(&other.negate()))
    }

    #[inline]
    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let m = self.modulus;
        Self::from_residues(
            m,
            [(self.e[0] + other.e[0]) % m, (self.e[1] + other.e[1]) % m],
        )
    }

    #[inline]
    pub fn negate(&self) -> Self {
        let m = self.modulus;
        Self::from_residues(m, self.e.map(|x| (m - x) % m))
    }

    pub fn scale(&self, k: i64) -> Self {
        let m = self.modulus;
        let k = residue(k, m);
        Self::from_residues(m, self.e.map(|x| x * k % m))
    }
}

impl Add for Vec2 {
    type Output = Vec2;

    fn add(self, rhs: Vec2) -> Vec2 {
        self.checked_add(&rhs).expect("Vec2 addition")
    }
}

impl Sub for Vec2 {
    type Output = Vec2;

    fn sub(self, rhs: Vec2) -> Vec2 {
        self.checked_sub(&rhs).expect("Vec2 subtraction")
    }
}

impl Neg for Vec2 {
    type Output = Vec2;

    fn neg(self) -> Vec2 {
        self.negate()
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) over Z_{}", self.e[0], self.e[1], self.modulus)
    }
}
