//! Dense numerical checks on the qudit Weyl operators.
//!
//! Conventions: `X|j⟩ = |j−1⟩`, `Z|j⟩ = ω^j|j⟩`, `ω = e^{2πi/N}`,
//! `τ = −e^{iπ/N}` and `W(k, l) = τ^{kl} X^k Z^l`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::modmat::{residue, Mat2};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Largest dimension accepted by this module.
pub const MAX_WEYL_DIM: u64 = 16;

pub type CMatrix = DMatrix<Complex64>;

fn check_dim(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    if n > MAX_WEYL_DIM {
        return Err(Error::DimensionOverBound {
            got: n,
            bound: MAX_WEYL_DIM,
        });
    }
    Ok(())
}

/// Largest entry modulus of `a − b`.
pub fn max_norm_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// `λ` with `u ≈ λ v`, if one exists within `tol`. The phase is read off the
/// largest-modulus entry of `v`.
pub fn proportionality(u: &CMatrix, v: &CMatrix, tol: f64) -> Option<Complex64> {
    if u.shape() != v.shape() {
        return None;
    }
    let (idx, pivot) = v
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))?;
    if pivot.norm() < tol {
        return None;
    }
    let lambda = u[idx] / pivot;
    let fits = u
        .iter()
        .zip(v.iter())
        .all(|(x, y)| (x - lambda * y).norm() < tol);
    fits.then_some(lambda)
}

/// An N×N matrix known to be unitary within `tolerance`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryMatrix {
    dim: u64,
    data: CMatrix,
    tolerance: f64,
}

impl UnitaryMatrix {
    pub fn new(data: CMatrix, tolerance: f64) -> Result<Self> {
        if !data.is_square() {
            return Err(Error::InvalidParameter(format!(
                "matrix is {}x{}, expected square",
                data.nrows(),
                data.ncols()
            )));
        }
        let dim = data.nrows() as u64;
        check_dim(dim)?;
        let deviation = max_norm_diff(
            &(&data * data.adjoint()),
            &CMatrix::identity(data.nrows(), data.nrows()),
        );
        if deviation > tolerance {
            return Err(Error::NotUnitary {
                deviation,
                tolerance,
            });
        }
        Ok(Self {
            dim,
            data,
            tolerance,
        })
    }

    fn trusted(data: CMatrix) -> Self {
        Self {
            dim: data.nrows() as u64,
            data,
            tolerance: DEFAULT_TOLERANCE,
        }
    }

    pub fn identity(n: u64) -> Result<Self> {
        check_dim(n)?;
        Ok(Self::trusted(CMatrix::identity(n as usize, n as usize)))
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn data(&self) -> &CMatrix {
        &self.data
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn adjoint(&self) -> Self {
        Self {
            data: self.data.adjoint(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(Self {
            dim: self.dim,
            data: &self.data * &other.data,
            tolerance: self.tolerance.max(other.tolerance),
        })
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let n = self.dim as usize;
        let mut acc = CMatrix::identity(n, n);
        let mut base = self.data.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Self {
            data: acc,
            ..self.clone()
        }
    }

    pub fn scale(&self, lambda: Complex64) -> Self {
        Self {
            data: self.data.map(|x| x * lambda),
            ..self.clone()
        }
    }

    /// `U V U†`.
    pub fn conjugate(&self, v: &Self) -> Result<Self> {
        self.mul(v)?.mul(&self.adjoint())
    }

    pub fn distance(&self, other: &Self) -> f64 {
        max_norm_diff(&self.data, &other.data)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.distance(other) < self.tolerance
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim as usize;
        max_norm_diff(&self.data, &CMatrix::identity(n, n)) < self.tolerance
    }

    pub fn det(&self) -> Complex64 {
        self.data.determinant()
    }

    /// `U ∼ V`: equal up to a unit-modulus scalar.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        self.phase_relative_to(other).is_some()
    }

    /// `λ` with `U = λV`, if any.
    pub fn phase_relative_to(&self, other: &Self) -> Option<Complex64> {
        proportionality(&self.data, &other.data, self.tolerance)
    }
}

/// A unitary up to phase.
#[derive(Clone, Debug)]
pub struct ProjectiveClass {
    pub representative: UnitaryMatrix,
}

impl ProjectiveClass {
    pub fn new(representative: UnitaryMatrix) -> Self {
        Self { representative }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(self.representative.mul(&other.representative)?))
    }
}

impl PartialEq for ProjectiveClass {
    fn eq(&self, other: &Self) -> bool {
        self.representative
            .projectively_equal(&other.representative)
    }
}

pub fn omega(n: u64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / n as f64)
}

pub fn tau(n: u64) -> Complex64 {
    tau_pow(n, 1)
}

/// Multiplicative order of τ: 2N for even N, N for odd N.
pub fn tau_order(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        2 * n
    } else {
        n
    }
}

/// `τ^m`, with the exponent reduced before taking the angle.
pub fn tau_pow(n: u64, m: i64) -> Complex64 {
    // τ = e^{iπ(N+1)/N}
    let e = residue(m.rem_euclid(2 * n as i64) * (n as i64 + 1), 2 * n);
    Complex64::from_polar(1.0, std::f64::consts::PI * e as f64 / n as f64)
}

pub fn omega_pow(n: u64, m: i64) -> Complex64 {
    let e = residue(m, n);
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / n as f64)
}

/// `(X, Z)`.
pub fn pauli_matrices(n: u64) -> Result<(UnitaryMatrix, UnitaryMatrix)> {
    check_dim(n)?;
    let d = n as usize;
    let x = CMatrix::from_fn(d, d, |i, j| {
        if i == (j + d - 1) % d {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let z = CMatrix::from_fn(d, d, |i, j| {
        if i == j {
            omega_pow(n, i as i64)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok((UnitaryMatrix::trusted(x), UnitaryMatrix::trusted(z)))
}

/// `W(k, l) = τ^{kl} X^k Z^l`, built directly:
/// the nonzero entries are `W[(j−k) mod N, j] = τ^{kl} ω^{jl}`.
pub fn weyl(n: u64, k: i64, l: i64) -> Result<UnitaryMatrix> {
    check_dim(n)?;
    let d = n as usize;
    let shift = residue(k, n) as usize;
    let phase = tau_pow(n, (k % (2 * n as i64)) * (l % (2 * n as i64)));
    let data = CMatrix::from_fn(d, d, |i, j| {
        if i == (j + d - shift) % d {
            phase * omega_pow(n, j as i64 * (l % n as i64))
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok(UnitaryMatrix::trusted(data))
}

/// `W(u)W(w) = value · W(u+w)`; `tau_exponent` is the `m ∈ [0, ord τ)` with
/// `value = τ^m`, when the phase is a power of τ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComposePhase {
    pub value: Complex64,
    pub tau_exponent: Option<u64>,
}

pub fn weyl_compose_phase(n: u64, u: (i64, i64), w: (i64, i64)) -> Result<ComposePhase> {
    let lhs = weyl(n, u.0, u.1)?.mul(&weyl(n, w.0, w.1)?)?;
    let rhs = weyl(n, u.0 + w.0, u.1 + w.1)?;
    let value = lhs
        .phase_relative_to(&rhs)
        .ok_or(Error::NotProportional { u, w })?;
    let tau_exponent =
        (0..tau_order(n)).find(|&m| (tau_pow(n, m as i64) - value).norm() < DEFAULT_TOLERANCE);
    Ok(ComposePhase {
        value,
        tau_exponent,
    })
}

/// The measured composition exponent: `W(u)W(w) = τ^{−(k₁l₂ + 3k₂l₁)} W(u+w)`.
pub fn compose_phase_exponent(n: u64, u: (i64, i64), w: (i64, i64)) -> u64 {
    residue(-(u.0 * w.1 + 3 * w.0 * u.1), tau_order(n))
}

/// The unique `A ∈ SL(2, Z_N)` with `U W(u) U† ∼ W(Au)` for all `u`.
pub fn projective_action(u: &UnitaryMatrix) -> Result<Mat2> {
    let n = u.dim();
    let ni = n as i64;
    let image = |k: i64, l: i64| -> Result<Option<(i64, i64)>> {
        let conj = u.conjugate(&weyl(n, k, l)?)?;
        for a in 0..ni {
            for b in 0..ni {
                if conj.projectively_equal(&weyl(n, a, b)?) {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    };
    let not_clifford = |what: String| Error::NotClifford(what);
    let col0 = image(1, 0)?
        .ok_or_else(|| not_clifford("image of W(1,0) is not a Weyl operator".into()))?;
    let col1 = image(0, 1)?
        .ok_or_else(|| not_clifford("image of W(0,1) is not a Weyl operator".into()))?;
    let a = Mat2::new(n, [col0.0, col1.0, col0.1, col1.1])?;
    if a.det() != 1 {
        return Err(not_clifford(format!("induced map {a} is not symplectic")));
    }
    for k in 0..ni {
        for l in 0..ni {
            let [p, q, r, s] = a.entries().map(|x| x as i64);
            let target = weyl(n, p * k + q * l, r * k + s * l)?;
            if !u.conjugate(&weyl(n, k, l)?)?.projectively_equal(&target) {
                return Err(not_clifford(format!("action is not linear at ({k}, {l})")));
            }
        }
    }
    Ok(a)
}

/// Discrete Fourier matrix, `F[j, k] = ω^{jk}/√N`.
pub fn fourier(n: u64) -> Result<UnitaryMatrix> {
    check_dim(n)?;
    let d = n as usize;
    let s = 1.0 / (n as f64).sqrt();
    Ok(UnitaryMatrix::trusted(CMatrix::from_fn(d, d, |j, k| {
        omega_pow(n, (j * k) as i64) * s
    })))
}

/// `diag(τ^{j²})`.
pub fn quadratic_phase(n: u64) -> Result<UnitaryMatrix> {
    check_dim(n)?;
    let d = n as usize;
    Ok(UnitaryMatrix::trusted(CMatrix::from_fn(d, d, |i, j| {
        if i == j {
            tau_pow(n, (i * i) as i64)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })))
}

/// Outcome of one numeric check.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylCheck {
    pub name: &'static str,
    pub max_error: f64,
    pub passed: bool,
}

/// Commutation, orders, periodicity and projective-action checks at `n`.
pub fn self_check(n: u64) -> Result<Vec<WeylCheck>> {
    check_dim(n)?;
    let tol = DEFAULT_TOLERANCE;
    let ni = n as i64;
    let (x, z) = pauli_matrices(n)?;
    let id = UnitaryMatrix::identity(n)?;
    let mut out = Vec::new();
    let mut record = |name: &'static str, max_error: f64| {
        out.push(WeylCheck {
            name,
            max_error,
            passed: max_error < tol,
        });
    };

    let xz = x.mul(&z)?;
    let zx = z.mul(&x)?.scale(omega(n));
    record("X Z = ω Z X", xz.distance(&zx));
    record("X^N = I", x.pow(n).distance(&id));
    record("Z^N = I", z.pow(n).distance(&id));

    let mut unitary = 0.0f64;
    let mut order = 0.0f64;
    let mut factored = 0.0f64;
    for k in 0..ni {
        for l in 0..ni {
            let w = weyl(n, k, l)?;
            unitary = unitary.max(w.mul(&w.adjoint())?.distance(&id));
            order = order.max(w.pow(n).distance(&id));
            let direct = x
                .pow(k as u64)
                .mul(&z.pow(l as u64))?
                .scale(tau_pow(n, k * l));
            factored = factored.max(w.distance(&direct));
        }
    }
    record("W(k,l) unitary", unitary);
    record("W(k,l)^N = I", order);
    record("W(k,l) = τ^{kl} X^k Z^l", factored);

    if n.is_multiple_of(2) {
        let mut shift_k = 0.0f64;
        let mut shift_l = 0.0f64;
        for k in -ni..ni {
            for l in -ni..ni {
                let w = weyl(n, k, l)?;
                let sign = |e: i64| if e.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                shift_k = shift_k.max(weyl(n, k + ni, l)?.distance(&w.scale(sign(l).into())));
                shift_l = shift_l.max(weyl(n, k, l + ni)?.distance(&w.scale(sign(k).into())));
            }
        }
        record("W(k+N,l) = (-1)^l W(k,l)", shift_k);
        record("W(k,l+N) = (-1)^k W(k,l)", shift_l);
    }

    let mut phase = 0.0f64;
    for (k1, l1, k2, l2) in quads(ni) {
        let got = weyl_compose_phase(n, (k1, l1), (k2, l2))?;
        let m = compose_phase_exponent(n, (k1, l1), (k2, l2));
        phase = phase.max((got.value - tau_pow(n, m as i64)).norm());
    }
    record("W(u)W(w) = τ^{-(k1 l2 + 3 k2 l1)} W(u+w)", phase);

    let mut weyl_action = 0.0f64;
    for k in 0..ni {
        for l in 0..ni {
            if !projective_action(&weyl(n, k, l)?)?.is_identity() {
                weyl_action = 1.0;
            }
        }
    }
    record("Weyl operators act trivially", weyl_action);
    let f = projective_action(&fourier(n)?)?;
    record(
        "Fourier action has det 1",
        if f.det() == 1 { 0.0 } else { 1.0 },
    );
    Ok(out)
}

fn quads(n: i64) -> impl Iterator<Item = (i64, i64, i64, i64)> {
    (0..n * n * n * n).map(move |i| (i / (n * n * n), i / (n * n) % n, i / n % n, i % n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_unitary(n: usize, seed: u64) -> UnitaryMatrix {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = CMatrix::from_fn(n, n, |_, _| {
            Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
        });
        UnitaryMatrix::new(g.qr().q(), 1e-9).unwrap()
    }

    #[test]
    fn qubit_paulis() {
        let (x, z) = pauli_matrices(2).unwrap();
        let c = |r: f64| Complex64::new(r, 0.0);
        assert!(
            max_norm_diff(
                x.data(),
                &CMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)])
            ) < 1e-15
        );
        assert!(
            max_norm_diff(
                z.data(),
                &CMatrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)])
            ) < 1e-15
        );
        assert_eq!(pauli_matrices(1).unwrap_err(), Error::DimensionTooSmall(1));
    }

    #[test]
    fn tau_squares_to_omega() {
        for n in 2..=16 {
            assert!((tau(n) * tau(n) - omega(n)).norm() < 1e-12);
            assert!(
                (tau(n) - (-Complex64::from_polar(1.0, std::f64::consts::PI / n as f64))).norm()
                    < 1e-12
            );
            assert!((tau_pow(n, 2 * n as i64) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn self_check_passes_small() {
        for n in 2..=8 {
            for c in self_check(n).unwrap() {
                assert!(c.passed, "N={n}: {} error {}", c.name, c.max_error);
            }
        }
    }

    #[test]
    fn weyl_zero_is_identity() {
        assert!(weyl(5, 0, 0).unwrap().is_identity());
    }

    #[test]
    fn compose_with_zero_is_trivial() {
        let p = weyl_compose_phase(6, (0, 0), (2, 5)).unwrap();
        assert!((p.value - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert_eq!(p.tau_exponent, Some(0));
    }

    #[test]
    fn compose_phase_is_tau_power() {
        for n in [2u64, 3, 4, 6] {
            let ni = n as i64;
            for (k1, l1, k2, l2) in quads(ni) {
                let p = weyl_compose_phase(n, (k1, l1), (k2, l2)).unwrap();
                assert_eq!(
                    p.tau_exponent,
                    Some(compose_phase_exponent(n, (k1, l1), (k2, l2)))
                );
                // Swapping the factors multiplies the phase by the symplectic commutator.
                let q = weyl_compose_phase(n, (k2, l2), (k1, l1)).unwrap();
                assert!((p.value - q.value * omega_pow(n, k1 * l2 - k2 * l1)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn swap_conjugates_phase_only_for_qubits() {
        for (k1, l1, k2, l2) in quads(2) {
            let p = weyl_compose_phase(2, (k1, l1), (k2, l2)).unwrap();
            let q = weyl_compose_phase(2, (k2, l2), (k1, l1)).unwrap();
            assert!((p.value - q.value.conj()).norm() < 1e-12);
        }
        let p = weyl_compose_phase(3, (1, 0), (0, 1)).unwrap();
        let q = weyl_compose_phase(3, (0, 1), (1, 0)).unwrap();
        assert!((p.value - q.value.conj()).norm() > 0.5);
    }

    #[test]
    fn fourier_action_regression() {
        assert_eq!(
            projective_action(&fourier(3).unwrap()).unwrap(),
            Mat2::new(3, [0, 1, 2, 0]).unwrap()
        );
        assert_eq!(
            projective_action(&fourier(4).unwrap()).unwrap(),
            Mat2::new(4, [0, 1, 3, 0]).unwrap()
        );
    }

    #[test]
    fn quadratic_phase_is_clifford() {
        for n in 2..=8 {
            let a = projective_action(&quadratic_phase(n).unwrap()).unwrap();
            assert_eq!(a.det(), 1);
            assert_eq!(a.get(0, 0), 1);
            assert_eq!(a.get(0, 1), 0);
        }
    }

    #[test]
    fn action_is_multiplicative() {
        for n in [3u64, 4] {
            let mut gens = vec![fourier(n).unwrap(), quadratic_phase(n).unwrap()];
            gens.push(weyl(n, 1, 2).unwrap());
            for u in &gens {
                for v in &gens {
                    let uv = u.mul(v).unwrap();
                    let lhs = projective_action(&uv).unwrap();
                    let rhs = projective_action(u).unwrap() * projective_action(v).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn random_unitary_is_rejected() {
        let u = random_unitary(4, 7);
        assert!(matches!(projective_action(&u), Err(Error::NotClifford(_))));
    }

    #[test]
    fn non_unitary_rejected() {
        let m = CMatrix::from_element(3, 3, Complex64::new(1.0, 0.0));
        assert!(matches!(
            UnitaryMatrix::new(m, 1e-10),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn projective_classes_compose_additively() {
        for n in 2..=6i64 {
            let nu = n as u64;
            for (k1, l1, k2, l2) in quads(n) {
                let a = ProjectiveClass::new(weyl(nu, k1, l1).unwrap());
                let b = ProjectiveClass::new(weyl(nu, k2, l2).unwrap());
                assert!(
                    a.compose(&b).unwrap()
                        == ProjectiveClass::new(weyl(nu, k1 + k2, l1 + l2).unwrap())
                );
            }
        }
    }

    #[test]
    fn dimension_cap() {
        assert_eq!(
            fourier(17).unwrap_err(),
            Error::DimensionOverBound { got: 17, bound: 16 }
        );
    }
}
