//! Closed-form identities for powers and relation words of the generator
//! lifts, each compared against direct evaluation in the semidirect product.
//!
//! Throughout, `h = (u, v)` and `h' = (u', v')` are the vector parts of
//! `T` and `R`, `A` and `B` their matrix parts, and for a unit pair
//! `k·l = 1 + εN`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::check::CheckOutcome;
use crate::error::Result;
use crate::modmat::{Mat2, Vec2};
use crate::sdproduct::{
    binomial_power_matrix, check_even_dim, closed_form_power_matrix, SdElement, Side,
};
use crate::slgroup::{coprime_factorizations, unit_pairs};
use crate::splitcheck::{build_generators, GenParams};

fn c2(k: i64) -> i64 {
    k * (k - 1) / 2
}

fn c3(k: i64) -> i64 {
    k * (k - 1) * (k - 2) / 6
}

/// `m · x` over Z_N.
fn lin(n: u64, m: [i64; 4], x: &Vec2) -> Vec2 {
    Mat2::new(n, m)
        .expect("valid modulus")
        .mat_vec(x)
        .expect("same modulus")
}

fn vec2(n: u64, e: [i64; 2]) -> Vec2 {
    Vec2::new(n, e).expect("valid modulus")
}

/// `base + N·x` over Z_2N, keeping only the parity of each `x` entry.
fn plus_n(n: u64, base: [i64; 4], x: [i64; 4]) -> Mat2 {
    let ni = n as i64;
    let mut e = base;
    for i in 0..4 {
        e[i] += ni * x[i].rem_euclid(2);
    }
    Mat2::new(2 * n, e).expect("valid modulus")
}

/// `I + N·x` over Z_2N.
fn i_plus_n(n: u64, x: [i64; 4]) -> Mat2 {
    plus_n(n, [1, 0, 0, 1], x)
}

fn bits_of(idx: u8) -> [u8; 6] {
    [
        idx >> 5 & 1,
        idx >> 4 & 1,
        idx >> 3 & 1,
        idx >> 2 & 1,
        idx >> 1 & 1,
        idx & 1,
    ]
}

struct Suite {
    outcomes: Vec<CheckOutcome>,
}

impl Suite {
    fn check<T: PartialEq + std::fmt::Display>(
        &mut self,
        slot: usize,
        got: T,
        expected: T,
        context: impl FnOnce() -> String,
    ) {
        let ok = got == expected;
        self.outcomes[slot].record(ok, || {
            format!("{}: got {got}, expected {expected}", context())
        });
    }
}

macro_rules! slots {
    ($($id:ident = $name:expr),* $(,)?) => {
        #[allow(clippy::enum_variant_names)]
        #[derive(Clone, Copy)]
        enum Slot { $($id),* }
        const SLOT_NAMES: &[&str] = &[$($name),*];
    };
}

slots! {
    PowAParity = "A^k by the parity-split closed form",
    PowBParity = "B^l by the parity-split closed form",
    PowABinom = "A^k by the binomial closed form",
    PowBBinom = "B^l by the binomial closed form",
    SdPow = "(C, w)^k by the geometric-sum formula",
    ProductVector = "vector part of a product: v(S) + [C]_N v(P)",
    QuotientVector = "v(S P⁻¹) = v(S) − v(P) when [ω(S)]_N = [ω(P)]_N",
    VecTk = "v(T^k) = [[k, C(k,2)], [0, k]] h",
    VecRl = "v(R^l) = [[l, 0], [−C(l,2), l]] h'",
    VecTkRl = "v(T^k R^l)",
    VecRlTk = "v(R^l T^k)",
    OrderT = "T^N = (I + N[[hc, 1+hc], [0, hc]], (hv, 0)) with h = N/2",
    OrderR = "R^N = (I + N[[hb', 0], [1+hb', hb']], (0, hu')) with h = N/2",
    CommVector = "v(T^k R^l (R^l T^k)⁻¹) = ((N/2)(l−1)u', (N/2)(k−1)v)",
    CommMatrixEven = "A^k B^l (B^l A^k)⁻¹ = I + N(1 + (k/2)c)[[1, 0], [1, 1]] for k even",
    CommMatrixOdd = "A^k B^l (B^l A^k)⁻¹ = I + N(1 + (l/2)b')[[1, 1], [0, 1]] for k odd",
    CommMatrixStrict = "the form with an a'+c' term fails exactly when a' ≠ c' (k even)",
    SquareVec1 = "v(T^k R^l T^k)",
    SquareVec2 = "v((T^k R^l T^k)²)",
    SquareVec3 = "v((T R T)²)",
    SquareVec4 = "v((T^k R^l T^k)² (T R T)⁻²) = (3(k²−1)v, −(l²−1)u')",
    SquareMat1 = "A^k B^l closed form",
    SquareMat2 = "A^k B^l A^k closed form",
    SquareMat3 = "(A^k B^l A^k)² = (ABA)² = −I + N[[0, c+b'], [c+b', 0]]",
    SquareMat4 = "(A^k B^l A^k)² (ABA)⁻² = I",
    BraidVec1 = "v(R^l T^k R^l)",
    BraidVec2 = "v(T^k R^l T^k (R^l T^k R^l)⁻¹) = (k²v − l u', k v + l² u')",
    BraidMat = "A^k B^l A^k (B^l A^k B^l)⁻¹ = I + N[[r, c+b'], [c+b', r]]",
    BinomParity = "parities of C(n,2) and C(n,3)",
    HalfZeroTest = "e ≡ 0 (mod N) iff e ≡ (N/2)s (mod N) with Ns ≡ 0 (mod 2N)",
}

/// Runs every identity at dimension `n` (even). Power identities use
/// exponents up to `max_exp`; each of the 64 bit tuples is paired with
/// `samples` random vector choices drawn from `seed`.
pub fn run_identity_suite(
    n: u64,
    max_exp: u64,
    samples: usize,
    seed: u64,
) -> Result<Vec<CheckOutcome>> {
    check_even_dim(n)?;
    let mut suite = Suite {
        outcomes: SLOT_NAMES.iter().map(|s| CheckOutcome::new(*s)).collect(),
    };
    let mut rng = StdRng::seed_from_u64(seed ^ n);
    let ni = n as i64;
    let h = ni / 2;
    let units = unit_pairs(n);
    let factorizations = coprime_factorizations(n);

    for idx in 0..64u8 {
        let bits = bits_of(idx);
        let [a, b, c, a1, b1, c1] = bits.map(i64::from);
        for sample in 0..samples.max(1) {
            let vector = [0; 4].map(|_| rng.random_range(0..n));
            let p = GenParams::new(n, bits, vector)?;
            let (t, r) = build_generators(&p)?;
            let (hv, hv1) = (t.vector(), r.vector());
            let (v, u1) = (p.v as i64, p.u1 as i64);
            let ctx = |what: &str| format!("{what} at {p}");
            let first = sample == 0;
            let (am, bm) = (t.matrix(), r.matrix());

            if first {
                for k in 1..=max_exp {
                    let at = || ctx(&format!("k={k}"));
                    suite.check(
                        Slot::PowAParity as usize,
                        closed_form_power_matrix(Side::T, n, p.t_bits(), k)?,
                        am.pow(k),
                        at,
                    );
                    suite.check(
                        Slot::PowBParity as usize,
                        closed_form_power_matrix(Side::R, n, p.r_bits(), k)?,
                        bm.pow(k),
                        at,
                    );
                    suite.check(
                        Slot::PowABinom as usize,
                        binomial_power_matrix(Side::T, n, p.t_bits(), k)?,
                        am.pow(k),
                        at,
                    );
                    suite.check(
                        Slot::PowBBinom as usize,
                        binomial_power_matrix(Side::R, n, p.r_bits(), k)?,
                        bm.pow(k),
                        at,
                    );
                }
            }
            for k in 0..=max_exp {
                let at = || ctx(&format!("k={k}"));
                suite.check(Slot::SdPow as usize, t.pow(k), t.pow_iterated(k), at);
                suite.check(Slot::SdPow as usize, r.pow(k), r.pow_iterated(k), at);
            }

            for k in 1..=ni {
                let tk = t.pow(k as u64);
                let vtk = lin(n, [k, c2(k), 0, k], &hv);
                suite.check(Slot::VecTk as usize, tk.vector(), vtk, || {
                    ctx(&format!("k={k}"))
                });
                for l in 1..=ni {
                    let rl = r.pow(l as u64);
                    let vrl = lin(n, [l, 0, -c2(l), l], &hv1);
                    let at = || ctx(&format!("k={k}, l={l}"));
                    if k == 1 {
                        suite.check(Slot::VecRl as usize, rl.vector(), vrl, at);
                    }
                    let tr = tk * rl;
                    suite.check(
                        Slot::VecTkRl as usize,
                        tr.vector(),
                        vtk + lin(n, [l - k * c2(l), k * l, -c2(l), l], &hv1),
                        at,
                    );
                    suite.check(
                        Slot::VecRlTk as usize,
                        (rl * tk).vector(),
                        lin(n, [k, c2(k), -k * l, k - l * c2(k)], &hv) + vrl,
                        at,
                    );
                    let shifted = tk.sigma().mat_vec(&rl.vector())?;
                    suite.check(
                        Slot::ProductVector as usize,
                        tr.vector(),
                        tk.vector() + shifted,
                        at,
                    );
                }
            }

            // S and P with the same image under σ: P = S·κ for κ ∈ K.
            let kernel = crate::sdproduct::Kernel::new(n)?;
            for kappa in kernel.elements() {
                let s = t * r;
                let q = s * *kappa;
                suite.check(
                    Slot::QuotientVector as usize,
                    (s * q.inverse()).vector(),
                    s.vector() - q.vector(),
                    || ctx(&format!("κ={kappa}")),
                );
            }

            let tn = t.pow(n);
            let expected = SdElement::new(
                n,
                i_plus_n(n, [h * c, 1 + h * c, 0, h * c]),
                vec2(n, [h * v, 0]),
            )?;
            suite.check(Slot::OrderT as usize, tn, expected, || ctx("T^N"));
            let rn = r.pow(n);
            let expected = SdElement::new(
                n,
                i_plus_n(n, [h * b1, 0, 1 + h * b1, h * b1]),
                vec2(n, [0, h * u1]),
            )?;
            suite.check(Slot::OrderR as usize, rn, expected, || ctx("R^N"));

            for &(k, l) in &factorizations {
                let (ki, li) = (k as i64, l as i64);
                let tk = t.pow(k);
                let rl = r.pow(l);
                let comm = tk * rl * (rl * tk).inverse();
                let at = || ctx(&format!("k={k}, l={l}"));
                suite.check(
                    Slot::CommVector as usize,
                    comm.vector(),
                    vec2(n, [h * (li - 1) * u1, h * (ki - 1) * v]),
                    at,
                );
                if !first {
                    continue;
                }
                if k % 2 == 0 {
                    let y = 1 + ki / 2 * c;
                    suite.check(
                        Slot::CommMatrixEven as usize,
                        comm.matrix(),
                        i_plus_n(n, [y, 0, y, y]),
                        at,
                    );
                    let x = y + a1 + c1;
                    let strict = i_plus_n(n, [x, 0, x, y]);
                    let disagrees = comm.matrix() != strict;
                    suite.check(Slot::CommMatrixStrict as usize, disagrees, a1 != c1, at);
                } else {
                    let y = 1 + li / 2 * b1;
                    suite.check(
                        Slot::CommMatrixOdd as usize,
                        comm.matrix(),
                        i_plus_n(n, [y, y, 0, y]),
                        at,
                    );
                }
            }

            let trt = t * r * t;
            let trt2 = trt * trt;
            suite.check(
                Slot::SquareVec3 as usize,
                trt2.vector(),
                lin(n, [0, 3, -2, 1], &hv) + lin(n, [1, 2, -1, 0], &hv1),
                || ctx("(TRT)²"),
            );
            let aba = am * bm * am;
            let aba2 = aba * aba;
            for &(k, l) in &units {
                let (ki, li) = (k as i64, l as i64);
                let eps = ((ki * li - 1) / ni) % 2;
                let at = || ctx(&format!("k={k}, l={l}"));
                let tk = t.pow(k);
                let rl = r.pow(l);
                let x = tk * rl * tk;
                let x2 = x * x;
                suite.check(
                    Slot::SquareVec1 as usize,
                    x.vector(),
                    lin(n, [ki, ki * (3 * ki - 1) / 2, -1, (3 * ki + 1) / 2], &hv)
                        + lin(n, [(li + 1) / 2, 1, -c2(li), li], &hv1),
                    at,
                );
                suite.check(
                    Slot::SquareVec2 as usize,
                    x2.vector(),
                    lin(n, [0, 3 * ki * ki, -2, 1], &hv) + lin(n, [1, 2, -li * li, 0], &hv1),
                    at,
                );
                suite.check(
                    Slot::SquareVec4 as usize,
                    (x2 * trt2.inverse()).vector(),
                    vec2(n, [3 * (ki * ki - 1) * v, -(li * li - 1) * u1]),
                    at,
                );
                let y = rl * tk * rl;
                suite.check(
                    Slot::BraidVec1 as usize,
                    y.vector(),
                    lin(n, [ki, c2(ki), -1, (ki + 1) / 2], &hv)
                        + lin(n, [(3 * li + 1) / 2, 1, -(3 * li - 1) * li / 2, li], &hv1),
                    at,
                );
                suite.check(
                    Slot::BraidVec2 as usize,
                    (x * y.inverse()).vector(),
                    vec2(n, [ki * ki * v - li * u1, ki * v + li * li * u1]),
                    at,
                );
                if !first {
                    continue;
                }
                let ak = tk.matrix();
                let bl = rl.matrix();
                suite.check(
                    Slot::SquareMat1 as usize,
                    ak * bl,
                    plus_n(
                        n,
                        [0, ki, -li, 1],
                        [
                            b + (ki + 1) / 2 * c + (li - 1) / 2 * b1 + c1 + eps,
                            a + b + a1 + (li - 1) / 2 * b1,
                            a + (ki + 1) / 2 * c + a1 + c1,
                            a + (ki - 1) / 2 * c + a1 + (li + 1) / 2 * b1,
                        ],
                    ),
                    at,
                );
                suite.check(
                    Slot::SquareMat2 as usize,
                    x.matrix(),
                    plus_n(
                        n,
                        [0, ki, -li, 0],
                        [
                            b + (ki - 1) / 2 * c + (li - 1) / 2 * b1 + c1 + eps,
                            c + a1 + c1 + eps,
                            c + a1 + c1,
                            b + (ki + 1) / 2 * c + (li + 1) / 2 * b1 + c1 + eps,
                        ],
                    ),
                    at,
                );
                let expected = plus_n(n, [-1, 0, 0, -1], [0, c + b1, c + b1, 0]);
                suite.check(Slot::SquareMat3 as usize, x2.matrix(), expected, at);
                suite.check(Slot::SquareMat3 as usize, aba2, expected, at);
                suite.check(
                    Slot::SquareMat4 as usize,
                    x2.matrix() * aba2.sl2_inverse()?,
                    Mat2::identity(2 * n)?,
                    at,
                );
                let rr = a + b + c + a1 + b1 + c1 + eps;
                suite.check(
                    Slot::BraidMat as usize,
                    x.matrix() * y.matrix().sl2_inverse()?,
                    i_plus_n(n, [rr, c + b1, c + b1, rr]),
                    at,
                );
            }
        }
    }

    for m in 0..=4 * ni {
        let c2p = if m % 2 == 0 {
            (m / 2) % 2
        } else {
            ((m - 1) / 2) % 2
        };
        let c3p = if m % 2 == 0 { 0 } else { ((m - 1) / 2) % 2 };
        suite.check(Slot::BinomParity as usize, c2(m).rem_euclid(2), c2p, || {
            format!("C({m},2)")
        });
        if m >= 1 {
            suite.check(Slot::BinomParity as usize, c3(m).rem_euclid(2), c3p, || {
                format!("C({m},3)")
            });
        }
    }
    for e in 0..2 * ni {
        let lhs = (0..2).any(|s| (e - h * s).rem_euclid(ni) == 0 && (ni * s) % (2 * ni) == 0);
        suite.check(Slot::HalfZeroTest as usize, lhs, e % ni == 0, || {
            format!("e={e}")
        });
    }

    Ok(suite.outcomes)
}
