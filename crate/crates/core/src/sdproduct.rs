//! The group SL(2, Z_2N) ⋉ Z_N² for even N, with the action
//! `A · u = [A]_N u`, and its eight-element normal subgroup K whose quotient
//! is the projective Clifford group.
//!
//! Multiplication is `(C, w)(D, x) = (CD, w + [C]_N x)`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::modmat::{residue, Mat2, Vec2};
use crate::slgroup::GroupLaw;

pub(crate) fn check_even_dim(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    Ok(())
}

/// An element `(C, w)` with `C ∈ SL(2, Z_2N)` and `w ∈ Z_N²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SdElement {
    dim: u64,
    matrix: Mat2,
    vector: Vec2,
}

impl SdElement {
    pub fn new(dim: u64, matrix: Mat2, vector: Vec2) -> Result<Self> {
        check_even_dim(dim)?;
        if matrix.modulus() != 2 * dim {
            return Err(Error::ModulusMismatch {
                left: matrix.modulus(),
                right: 2 * dim,
            });
        }
        if vector.modulus() != dim {
            return Err(Error::ModulusMismatch {
                left: vector.modulus(),
                right: dim,
            });
        }
        let det = matrix.det();
        if det != 1 {
            return Err(Error::NotUnimodular {
                det,
                modulus: matrix.modulus(),
            });
        }
        Ok(Self {
            dim,
            matrix,
            vector,
        })
    }

    pub fn identity(dim: u64) -> Result<Self> {
        check_even_dim(dim)?;
        Ok(Self {
            dim,
            matrix: Mat2::identity(2 * dim)?,
            vector: Vec2::zero(dim)?,
        })
    }

    #[inline]
    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// The SL(2, Z_2N) component.
    #[inline]
    pub fn matrix(&self) -> Mat2 {
        self.matrix
    }

    /// The Z_N² component.
    #[inline]
    pub fn vector(&self) -> Vec2 {
        self.vector
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity() && self.vector.is_zero()
    }

    #[inline]
    fn reduced(&self) -> Mat2 {
        let n = self.dim;
        Mat2::from_residues(n, self.matrix.entries().map(|x| x % n))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    fn mul_unchecked(&self, other: &Self) -> Self {
        let shifted = self.reduced().mat_vec_unchecked(&other.vector);
        Self {
            dim: self.dim,
            matrix: self.matrix * other.matrix,
            vector: self.vector.add_unchecked(&shifted),
        }
    }

    /// `(C, w)⁻¹ = (C⁻¹, −[C⁻¹]_N w)`.
    pub fn inverse(&self) -> Self {
        let inv = self.matrix.adjugate();
        let n = self.dim;
        let inv_n = Mat2::from_residues(n, inv.entries().map(|x| x % n));
        Self {
            dim: n,
            matrix: inv,
            vector: inv_n.mat_vec_unchecked(&self.vector).negate(),
        }
    }

    /// `(C, w)^k = (C^k, [Σ_{i<k} C^i]_N w)`, with the geometric sum taken
    /// over the reduction of C by doubling.
    pub fn pow(&self, k: u64) -> Self {
        let sum = geometric_sum(&self.reduced(), k);
        Self {
            dim: self.dim,
            matrix: self.matrix.pow(k),
            vector: sum.mat_vec_unchecked(&self.vector),
        }
    }

    /// `k`-fold product, used as the reference for [`SdElement::pow`].
    pub fn pow_iterated(&self, k: u64) -> Self {
        let mut acc = Self::identity(self.dim).expect("valid dimension");
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// `σ(P) = [ω(P)]_N`, the image in SL(2, Z_N).
    pub fn sigma(&self) -> Mat2 {
        self.reduced()
    }
}

/// `Σ_{i<k} c^i`.
fn geometric_sum(c: &Mat2, k: u64) -> Mat2 {
    let m = c.modulus();
    let mut sum = Mat2::from_residues(m, [0; 4]);
    let mut power = Mat2::from_residues(m, [1, 0, 0, 1]);
    if k == 0 {
        return sum;
    }
    for bit in (0..=k.ilog2()).rev() {
        sum = sum + power * sum;
        power = power * power;
        if (k >> bit) & 1 == 1 {
            sum = sum + power;
            power = power * *c;
        }
    }
    sum
}

impl Mul for SdElement {
    type Output = SdElement;

    fn mul(self, rhs: SdElement) -> SdElement {
        self.checked_mul(&rhs).expect("SdElement multiplication")
    }
}

impl fmt::Display for SdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.matrix, self.vector)
    }
}

/// The semidirect group law for a fixed even N; powers use the closed form.
#[derive(Clone, Copy, Debug)]
pub struct SdGroup {
    pub dim: u64,
}

impl GroupLaw for SdGroup {
    type Element = SdElement;

    fn identity(&self) -> SdElement {
        SdElement::identity(self.dim).expect("even dimension")
    }

    fn op(&self, a: &SdElement, b: &SdElement) -> SdElement {
        *a * *b
    }

    fn power(&self, a: &SdElement, k: u64) -> SdElement {
        a.pow(k)
    }
}

/// The subgroup `K = {([[1+Nr, Ns], [Nt, 1+Nr]], ((N/2)s, (N/2)t)) : r, s, t ∈ {0, 1}}`.
#[derive(Clone, Debug)]
pub struct Kernel {
    dim: u64,
    elements: [SdElement; 8],
}

impl Kernel {
    pub fn new(dim: u64) -> Result<Self> {
        check_even_dim(dim)?;
        let mut elements = [SdElement::identity(dim)?; 8];
        for (idx, slot) in elements.iter_mut().enumerate() {
            let (r, s, t) = ((idx >> 2) as u64 & 1, (idx >> 1) as u64 & 1, idx as u64 & 1);
            *slot = Self::build(dim, r, s, t)?;
        }
        Ok(Self { dim, elements })
    }

    fn build(n: u64, r: u64, s: u64, t: u64) -> Result<SdElement> {
        let ni = n as i64;
        let (r, s, t) = (r as i64, s as i64, t as i64);
        let matrix = Mat2::new(2 * n, [1 + ni * r, ni * s, ni * t, 1 + ni * r])?;
        let vector = Vec2::new(n, [ni / 2 * s, ni / 2 * t])?;
        SdElement::new(n, matrix, vector)
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// Elements indexed by `4r + 2s + t`.
    pub fn elements(&self) -> &[SdElement; 8] {
        &self.elements
    }

    pub fn element(&self, r: u8, s: u8, t: u8) -> SdElement {
        self.elements[((r & 1) as usize) << 2 | ((s & 1) as usize) << 1 | (t & 1) as usize]
    }

    #[inline]
    pub fn contains(&self, p: &SdElement) -> bool {
        p.dim == self.dim && self.elements.iter().any(|k| k == p)
    }

    /// Whether `P K = Q K`, i.e. `P Q⁻¹ ∈ K`.
    pub fn coset_equal(&self, p: &SdElement, q: &SdElement) -> Result<bool> {
        if p.dim != q.dim {
            return Err(Error::DimensionMismatch {
                left: p.dim,
                right: q.dim,
            });
        }
        Ok(self.contains(&p.checked_mul(&q.inverse())?))
    }
}

pub fn kernel_elements(n: u64) -> Result<Vec<SdElement>> {
    Ok(Kernel::new(n)?.elements.to_vec())
}

pub fn in_kernel(p: &SdElement) -> bool {
    Kernel::new(p.dim).map(|k| k.contains(p)).unwrap_or(false)
}

pub fn sigma(p: &SdElement) -> Mat2 {
    p.sigma()
}

pub fn coset_equal(p: &SdElement, q: &SdElement) -> Result<bool> {
    Kernel::new(p.dim)?.coset_equal(p, q)
}

/// Which generator lift a parameter triple describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `A = [[1, 1], [0, 1]] + N[[a+c, a+b], [c, a]]`
    T,
    /// `B = [[1, 0], [-1, 1]] + N[[a', b'], [c'-a', a'-b']]`
    R,
}

/// The three kernel bits `(a, b, c)` (or `(a', b', c')`) selecting a lift
/// of `t` (or `r`) to SL(2, Z_2N).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LiftBits {
    pub a: u8,
    pub b: u8,
    pub c: u8,
}

impl LiftBits {
    pub fn new(a: u8, b: u8, c: u8) -> Result<Self> {
        if a > 1 || b > 1 || c > 1 {
            return Err(Error::InvalidParameter(format!(
                "lift bits must be 0 or 1, got ({a}, {b}, {c})"
            )));
        }
        Ok(Self { a, b, c })
    }

    /// All eight triples in lexicographic order.
    pub fn all() -> impl Iterator<Item = LiftBits> {
        (0u8..8).map(|i| LiftBits {
            a: i >> 2 & 1,
            b: i >> 1 & 1,
            c: i & 1,
        })
    }
}

pub fn lifted_generator(side: Side, n: u64, bits: LiftBits) -> Result<Mat2> {
    check_even_dim(n)?;
    let ni = n as i64;
    let (a, b, c) = (bits.a as i64, bits.b as i64, bits.c as i64);
    let e = match side {
        Side::T => [1 + ni * (a + c), 1 + ni * (a + b), ni * c, 1 + ni * a],
        Side::R => [1 + ni * a, ni * b, -1 + ni * (c - a), 1 + ni * (a - b)],
    };
    Mat2::new(2 * n, e)
}

fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

fn binom3(k: i64) -> i64 {
    k * (k - 1) * (k - 2) / 6
}

/// Builds `base + N·x` over Z_2N; only the parity of each `x` entry matters.
fn plus_n_times(n: u64, base: [i64; 4], x: [i64; 4]) -> Mat2 {
    let ni = n as i64;
    let mut e = [0i64; 4];
    for i in 0..4 {
        e[i] = base[i] + ni * x[i].rem_euclid(2);
    }
    Mat2::new(2 * n, e).expect("valid modulus")
}

/// `A^k` (or `B^k`) by the parity-split closed form.
pub fn closed_form_power_matrix(side: Side, n: u64, bits: LiftBits, k: u64) -> Result<Mat2> {
    check_even_dim(n)?;
    let (a, b, c) = (bits.a as i64, bits.b as i64, bits.c as i64);
    let ki = residue(k as i64, 4 * n) as i64;
    let half = ki / 2;
    let even = k.is_multiple_of(2);
    Ok(match (side, even) {
        (Side::T, true) => plus_n_times(n, [1, ki, 0, 1], [half * c, half * c, 0, half * c]),
        (Side::T, false) => plus_n_times(
            n,
            [1, ki, 0, 1],
            [a + (ki + 1) / 2 * c, a + b, c, a + (ki - 1) / 2 * c],
        ),
        (Side::R, true) => plus_n_times(n, [1, 0, -ki, 1], [half * b, 0, half * b, half * b]),
        (Side::R, false) => plus_n_times(
            n,
            [1, 0, -ki, 1],
            [a + (ki - 1) / 2 * b, b, a + c, a + (ki + 1) / 2 * b],
        ),
    })
}

/// `A^k` (or `B^k`) by the general binomial-coefficient closed form.
pub fn binomial_power_matrix(side: Side, n: u64, bits: LiftBits, k: u64) -> Result<Mat2> {
    check_even_dim(n)?;
    let (a, b, c) = (bits.a as i64, bits.b as i64, bits.c as i64);
    // Reducing k mod 4N keeps k·k and the binomials small and leaves every
    // entry unchanged mod 2N (for the N-multiples, their parity is preserved).
    let k = residue(k as i64, 4 * n) as i64;
    Ok(match side {
        Side::T => plus_n_times(
            n,
            [1, k, 0, 1],
            [
                k * a + binom2(k + 1) * c,
                k * k * a + k * b + binom3(k + 1) * c,
                k * c,
                k * a + binom2(k) * c,
            ],
        ),
        Side::R => plus_n_times(
            n,
            [1, 0, -k, 1],
            [
                k * a - binom2(k) * b,
                k * b,
                -k * k * a + binom3(k + 1) * b + k * c,
                k * a - binom2(k + 1) * b,
            ],
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: u64, m: [i64; 4], v: [i64; 2]) -> SdElement {
        SdElement::new(n, Mat2::new(2 * n, m).unwrap(), Vec2::new(n, v).unwrap()).unwrap()
    }

    #[test]
    fn construction_checks_invariants() {
        assert_eq!(SdElement::identity(3), Err(Error::OddDimension(3)));
        let bad_det = SdElement::new(
            6,
            Mat2::new(12, [2, 0, 0, 1]).unwrap(),
            Vec2::zero(6).unwrap(),
        );
        assert!(matches!(bad_det, Err(Error::NotUnimodular { .. })));
        let bad_mod = SdElement::new(6, Mat2::identity(6).unwrap(), Vec2::zero(6).unwrap());
        assert!(matches!(bad_mod, Err(Error::ModulusMismatch { .. })));
    }

    #[test]
    fn identity_is_neutral() {
        let p = el(6, [7, 1, 6, 1], [2, 5]);
        let e = SdElement::identity(6).unwrap();
        assert_eq!(e * p, p);
        assert_eq!(p * e, p);
    }

    #[test]
    fn dimension_mismatch() {
        let p = SdElement::identity(6).unwrap();
        let q = SdElement::identity(4).unwrap();
        assert_eq!(
            p.checked_mul(&q),
            Err(Error::DimensionMismatch { left: 6, right: 4 })
        );
        assert!(coset_equal(&p, &q).is_err());
    }

    #[test]
    fn inverse_of_identity_and_involution() {
        let e = SdElement::identity(6).unwrap();
        assert_eq!(e.inverse(), e);
        let p = el(6, [7, 1, 6, 1], [2, 5]);
        assert_eq!(p.inverse().inverse(), p);
        assert!((p * p.inverse()).is_identity());
    }

    #[test]
    fn pow_zero_is_identity() {
        assert!(el(6, [7, 1, 6, 1], [2, 5]).pow(0).is_identity());
    }

    #[test]
    fn kernel_matches_formula() {
        let k = Kernel::new(2).unwrap();
        assert!(k.element(0, 0, 0).is_identity());
        assert_eq!(k.element(1, 0, 0), el(2, [3, 0, 0, 3], [0, 0]));
        assert_eq!(k.element(0, 1, 1), el(2, [1, 2, 2, 1], [1, 1]));
        assert_eq!(kernel_elements(6).unwrap().len(), 8);
        assert_eq!(Kernel::new(5).unwrap_err(), Error::OddDimension(5));
    }

    #[test]
    fn sigma_of_kernel_is_trivial() {
        for n in (2..=24).step_by(2) {
            for k in Kernel::new(n).unwrap().elements() {
                assert!(k.sigma().is_identity());
            }
        }
    }

    #[test]
    fn lifted_generators() {
        let zero = LiftBits::new(0, 0, 0).unwrap();
        assert_eq!(
            lifted_generator(Side::T, 6, zero).unwrap(),
            Mat2::new(12, [1, 1, 0, 1]).unwrap()
        );
        let t = lifted_generator(Side::T, 6, LiftBits::new(0, 0, 1).unwrap()).unwrap();
        let r = lifted_generator(Side::R, 6, LiftBits::new(0, 1, 0).unwrap()).unwrap();
        assert_eq!(t, Mat2::new(12, [7, 1, 6, 1]).unwrap());
        assert_eq!(r, Mat2::new(12, [1, 6, 11, 7]).unwrap());
        assert!(LiftBits::new(2, 0, 0).is_err());
    }

    #[test]
    fn closed_forms_at_k_one_are_the_lift() {
        for n in [2u64, 4, 6, 8] {
            for bits in LiftBits::all() {
                for side in [Side::T, Side::R] {
                    let g = lifted_generator(side, n, bits).unwrap();
                    assert_eq!(closed_form_power_matrix(side, n, bits, 1).unwrap(), g);
                    assert_eq!(binomial_power_matrix(side, n, bits, 1).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn even_powers_of_t_lift() {
        // k even: A^k = [[1, k], [0, 1]] + N (k/2) c [[1, 1], [0, 1]].
        for n in [2u64, 4, 6, 8] {
            let bits = LiftBits::new(1, 1, 1).unwrap();
            for k in (2..=2 * n).step_by(2) {
                let ni = n as i64;
                let x = ni * ((k as i64 / 2) % 2);
                let expected = Mat2::new(2 * n, [1 + x, k as i64 + x, 0, 1 + x]).unwrap();
                assert_eq!(
                    closed_form_power_matrix(Side::T, n, bits, k).unwrap(),
                    expected
                );
            }
        }
    }

    #[test]
    fn geometric_sum_small() {
        let c = Mat2::new(6, [1, 1, 0, 1]).unwrap();
        for k in 0..20u64 {
            let mut acc = Mat2::zero(6).unwrap();
            let mut p = Mat2::identity(6).unwrap();
            for _ in 0..k {
                acc = acc + p;
                p = p * c;
            }
            assert_eq!(geometric_sum(&c, k), acc, "k={k}");
        }
    }
}
