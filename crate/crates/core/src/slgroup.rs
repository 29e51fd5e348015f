//! SL(2, Z_N) through its two-generator presentation.
//!
//! The generators are `t = [[1, 1], [0, 1]]` and `r = [[1, 0], [-1, 1]]`,
//! subject to
//!
//! * `t^N = 1`, `r^N = 1`;
//! * `t^k r^l = r^l t^k` for every ordered coprime factorization `N = k·l`;
//! * `(t^k r^l t^k)^2 = (t r t)^2` for `1 ≤ k, l ≤ N−1` with `k·l ≡ 1 (mod N)`;
//! * `t^k r^l t^k = r^l t^k r^l` for the same unit pairs.
//!
//! Words only use nonnegative exponents, so they can be evaluated in any
//! group through [`GroupLaw`] without needing inverses.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modmat::Mat2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RelationFamily {
    OrderT,
    OrderR,
    Commute,
    Square,
    Braid,
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::OrderT => "ORDER_T",
            Self::OrderR => "ORDER_R",
            Self::Commute => "COMMUTE",
            Self::Square => "SQUARE",
            Self::Braid => "BRAID",
        };
        f.write_str(s)
    }
}

/// One concrete defining relation. The order relations carry `k = l = N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RelationInstance {
    pub family: RelationFamily,
    pub k: u64,
    pub l: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    T,
    R,
}

/// A positive word: a sequence of generator powers, read left to right.
pub type Word = Vec<(Generator, u64)>;

impl RelationInstance {
    /// The two sides `(lhs, rhs)` of the relation `lhs = rhs`.
    pub fn sides(&self) -> (Word, Word) {
        use Generator::{R, T};
        let (k, l) = (self.k, self.l);
        match self.family {
            RelationFamily::OrderT => (vec![(T, k)], vec![]),
            RelationFamily::OrderR => (vec![(R, l)], vec![]),
            RelationFamily::Commute => (vec![(T, k), (R, l)], vec![(R, l), (T, k)]),
            RelationFamily::Square => (
                vec![(T, k), (R, l), (T, k), (T, k), (R, l), (T, k)],
                vec![(T, 1), (R, 1), (T, 1), (T, 1), (R, 1), (T, 1)],
            ),
            RelationFamily::Braid => (vec![(T, k), (R, l), (T, k)], vec![(R, l), (T, k), (R, l)]),
        }
    }
}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, l) = (self.k, self.l);
        match self.family {
            RelationFamily::OrderT => write!(f, "t^{k} = 1"),
            RelationFamily::OrderR => write!(f, "r^{l} = 1"),
            RelationFamily::Commute => write!(f, "t^{k} r^{l} = r^{l} t^{k}"),
            RelationFamily::Square => write!(f, "(t^{k} r^{l} t^{k})^2 = (t r t)^2"),
            RelationFamily::Braid => write!(f, "t^{k} r^{l} t^{k} = r^{l} t^{k} r^{l}"),
        }
    }
}

/// A group structure on `Element`, supplied to [`evaluate_word`].
pub trait GroupLaw {
    type Element: Clone;

    fn identity(&self) -> Self::Element;

    fn op(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn power(&self, a: &Self::Element, mut k: u64) -> Self::Element {
        let mut acc = self.identity();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.op(&acc, &base);
            }
            base = self.op(&base, &base);
            k >>= 1;
        }
        acc
    }
}

/// Matrix multiplication in SL(2, Z_modulus).
#[derive(Clone, Copy, Debug)]
pub struct MatrixGroup {
    pub modulus: u64,
}

impl GroupLaw for MatrixGroup {
    type Element = Mat2;

    fn identity(&self) -> Mat2 {
        Mat2::identity(self.modulus).expect("valid modulus")
    }

    fn op(&self, a: &Mat2, b: &Mat2) -> Mat2 {
        *a * *b
    }

    fn power(&self, a: &Mat2, k: u64) -> Mat2 {
        a.pow(k)
    }
}

/// Product of the images of the word's letters, in word order.
pub fn evaluate_word<L: GroupLaw>(
    law: &L,
    word: &[(Generator, u64)],
    t: &L::Element,
    r: &L::Element,
) -> L::Element {
    word.iter().fold(law.identity(), |acc, &(g, k)| {
        let image = match g {
            Generator::T => t,
            Generator::R => r,
        };
        law.op(&acc, &law.power(image, k))
    })
}

fn check_dim(n: u64) -> Result<()> {
    if n < 2 {
        Err(Error::DimensionTooSmall(n))
    } else {
        Ok(())
    }
}

/// `(t, r)` as matrices over Z_N.
pub fn generators(n: u64) -> Result<(Mat2, Mat2)> {
    check_dim(n)?;
    Ok((Mat2::new(n, [1, 1, 0, 1])?, Mat2::new(n, [1, 0, -1, 1])?))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Ordered pairs `(k, l)` with `k·l = N` and `gcd(k, l) = 1`, `k` ascending.
pub fn coprime_factorizations(n: u64) -> Vec<(u64, u64)> {
    (1..=n)
        .filter(|k| n.is_multiple_of(*k) && gcd(*k, n / k) == 1)
        .map(|k| (k, n / k))
        .collect()
}

/// Pairs `(k, k⁻¹ mod N)` for every unit `1 ≤ k ≤ N−1`, `k` ascending.
pub fn unit_pairs(n: u64) -> Vec<(u64, u64)> {
    (1..n)
        .filter_map(|k| mod_inverse(k, n).map(|l| (k, l)))
        .collect()
}

/// Inverse of `k` modulo `n` in `[1, n)`, if `gcd(k, n) = 1` and `n > 1`.
pub fn mod_inverse(k: u64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (k as i64, n as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1 && n > 1).then(|| old_s.rem_euclid(n as i64) as u64)
}

/// Every defining relation instance, ordered by family then `k`.
pub fn enumerate_relations(n: u64) -> Result<Vec<RelationInstance>> {
    check_dim(n)?;
    let mut out = vec![
        RelationInstance {
            family: RelationFamily::OrderT,
            k: n,
            l: n,
        },
        RelationInstance {
            family: RelationFamily::OrderR,
            k: n,
            l: n,
        },
    ];
    out.extend(
        coprime_factorizations(n)
            .into_iter()
            .map(|(k, l)| RelationInstance {
                family: RelationFamily::Commute,
                k,
                l,
            }),
    );
    let units = unit_pairs(n);
    for family in [RelationFamily::Square, RelationFamily::Braid] {
        out.extend(
            units
                .iter()
                .map(|&(k, l)| RelationInstance { family, k, l }),
        );
    }
    Ok(out)
}

/// Checks that the matrices `t`, `r` satisfy every relation instance.
pub fn verify_presentation(n: u64) -> Result<bool> {
    let (t, r) = generators(n)?;
    let law = MatrixGroup { modulus: n };
    Ok(enumerate_relations(n)?.iter().all(|rel| {
        let (lhs, rhs) = rel.sides();
        evaluate_word(&law, &lhs, &t, &r) == evaluate_word(&law, &rhs, &t, &r)
    }))
}
