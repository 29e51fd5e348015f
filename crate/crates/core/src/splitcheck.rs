//! Deciding whether SL(2, Z_N) lifts homomorphically into
//! (SL(2, Z_2N) ⋉ Z_N²)/K, i.e. whether the projective Clifford group splits.
//!
//! Candidate lifts of the generators are parameterized by [`GenParams`]:
//!
//! ```text
//! T = ([[1, 1], [0, 1]] + N[[a+c, a+b], [c, a]],        (u, v))
//! R = ([[1, 0], [-1, 1]] + N[[a', b'], [c'-a', a'-b']], (u', v'))
//! ```
//!
//! Every such pair already maps onto `(t, r)` under σ. A pair induces a
//! homomorphism iff every defining relation of SL(2, Z_N) holds for it
//! modulo K. [`DirectEvaluator`] checks that literally; the `criterion_*`
//! functions are the equivalent parity/congruence tests on the parameters.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modmat::Vec2;
use crate::sdproduct::{
    check_even_dim, lifted_generator, Kernel, LiftBits, SdElement, SdGroup, Side,
};
use crate::slgroup::{
    enumerate_relations, evaluate_word, unit_pairs, RelationFamily, RelationInstance,
};

/// Largest N accepted by [`search_witness`] unless overridden.
pub const DEFAULT_SEARCH_BOUND: u64 = 12;

/// Generator-lift parameters. Field order is the lexicographic order used
/// for tie-breaking: `a, b, c, a', b', c'` then `u, v, u', v'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenParams {
    pub n: u64,
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub a1: u8,
    pub b1: u8,
    pub c1: u8,
    pub u: u64,
    pub v: u64,
    pub u1: u64,
    pub v1: u64,
}

impl GenParams {
    /// `bits = [a, b, c, a', b', c']`, `vector = [u, v, u', v']`.
    pub fn new(n: u64, bits: [u8; 6], vector: [u64; 4]) -> Result<Self> {
        check_even_dim(n)?;
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidParameter(format!(
                "bits must be 0 or 1, got {bits:?}"
            )));
        }
        if vector.iter().any(|&x| x >= n) {
            return Err(Error::InvalidParameter(format!(
                "vector entries must lie in [0, {n}), got {vector:?}"
            )));
        }
        let [a, b, c, a1, b1, c1] = bits;
        let [u, v, u1, v1] = vector;
        Ok(Self {
            n,
            a,
            b,
            c,
            a1,
            b1,
            c1,
            u,
            v,
            u1,
            v1,
        })
    }

    /// `a = b = a' = c' = 0`, `c = b' = 1`, zero vectors: the explicit
    /// splitting lift for N ≡ 2 (mod 4).
    pub fn standard_witness(n: u64) -> Result<Self> {
        Self::new(n, [0, 0, 1, 0, 1, 0], [0, 0, 0, 0])
    }

    pub fn candidate_count(n: u64) -> u64 {
        64 * n.pow(4)
    }

    /// Inverse of [`GenParams::index`].
    pub fn from_index(n: u64, mut idx: u64) -> Self {
        let mut take = |m: u64| {
            let x = idx % m;
            idx /= m;
            x
        };
        let v1 = take(n);
        let u1 = take(n);
        let v = take(n);
        let u = take(n);
        let bits = take(64) as u8;
        Self {
            n,
            a: bits >> 5 & 1,
            b: bits >> 4 & 1,
            c: bits >> 3 & 1,
            a1: bits >> 2 & 1,
            b1: bits >> 1 & 1,
            c1: bits & 1,
            u,
            v,
            u1,
            v1,
        }
    }

    /// Position in the lexicographic enumeration of all `64·N⁴` candidates.
    pub fn index(&self) -> u64 {
        let n = self.n;
        let bits = (self.a << 5 | self.b << 4 | self.c << 3 | self.a1 << 2 | self.b1 << 1 | self.c1)
            as u64;
        (((bits * n + self.u) * n + self.v) * n + self.u1) * n + self.v1
    }

    pub fn t_bits(&self) -> LiftBits {
        LiftBits {
            a: self.a,
            b: self.b,
            c: self.c,
        }
    }

    pub fn r_bits(&self) -> LiftBits {
        LiftBits {
            a: self.a1,
            b: self.b1,
            c: self.c1,
        }
    }

    pub fn half(&self) -> u64 {
        self.n / 2
    }
}

impl fmt::Display for GenParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={} b={} c={} a'={} b'={} c'={} u={} v={} u'={} v'={}",
            self.a, self.b, self.c, self.a1, self.b1, self.c1, self.u, self.v, self.u1, self.v1
        )
    }
}

/// The lifts `(T, R)` described by `p`.
pub fn build_generators(p: &GenParams) -> Result<(SdElement, SdElement)> {
    let n = p.n;
    let t = SdElement::new(
        n,
        lifted_generator(Side::T, n, p.t_bits())?,
        Vec2::new(n, [p.u as i64, p.v as i64])?,
    )?;
    let r = SdElement::new(
        n,
        lifted_generator(Side::R, n, p.r_bits())?,
        Vec2::new(n, [p.u1 as i64, p.v1 as i64])?,
    )?;
    Ok((t, r))
}

/// The four groups of splitting conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `T^N, R^N ∈ K`
    Orders,
    /// `T^k R^l (R^l T^k)⁻¹ ∈ K` for coprime `N = k·l`
    Commute,
    /// `(T^k R^l T^k)² (T R T)⁻² ∈ K` for unit pairs
    Square,
    /// `T^k R^l T^k (R^l T^k R^l)⁻¹ ∈ K` for unit pairs
    Braid,
}

impl Condition {
    pub const ALL: [Condition; 4] = [Self::Orders, Self::Commute, Self::Square, Self::Braid];

    pub fn covers(&self, family: RelationFamily) -> bool {
        matches!(
            (self, family),
            (
                Self::Orders,
                RelationFamily::OrderT | RelationFamily::OrderR
            ) | (Self::Commute, RelationFamily::Commute)
                | (Self::Square, RelationFamily::Square)
                | (Self::Braid, RelationFamily::Braid)
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceOutcome {
    pub relation: RelationInstance,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormCriteria {
    pub orders: bool,
    pub commute: bool,
    pub square: bool,
    pub braid: bool,
    /// Only defined for N ≡ 2 (mod 4).
    pub combined: Option<bool>,
}

impl ClosedFormCriteria {
    pub fn evaluate(p: &GenParams) -> Self {
        Self {
            orders: criterion_orders(p),
            commute: criterion_commute(p),
            square: criterion_square(p),
            braid: criterion_braid(p),
            combined: criterion_combined_mod4_2(p).ok(),
        }
    }

    pub fn all(&self) -> bool {
        self.orders && self.commute && self.square && self.braid
    }
}

/// Per-relation outcome of the literal check, with the closed-form values
/// alongside for comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub outcomes: Vec<InstanceOutcome>,
    pub closed_form: ClosedFormCriteria,
}

impl ConditionReport {
    pub fn passes(&self) -> bool {
        self.outcomes.iter().all(|o| o.holds)
    }

    pub fn failing(&self) -> Vec<RelationInstance> {
        self.outcomes
            .iter()
            .filter(|o| !o.holds)
            .map(|o| o.relation)
            .collect()
    }

    pub fn condition_holds(&self, condition: Condition) -> bool {
        self.outcomes
            .iter()
            .filter(|o| condition.covers(o.relation.family))
            .all(|o| o.holds)
    }
}

/// Literal evaluation of the relations modulo K for a fixed N.
#[derive(Clone, Debug)]
pub struct DirectEvaluator {
    n: u64,
    kernel: Kernel,
    relations: Vec<RelationInstance>,
}

impl DirectEvaluator {
    pub fn new(n: u64) -> Result<Self> {
        check_even_dim(n)?;
        Ok(Self {
            n,
            kernel: Kernel::new(n)?,
            relations: enumerate_relations(n)?,
        })
    }

    pub fn dim(&self) -> u64 {
        self.n
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn relations(&self) -> &[RelationInstance] {
        &self.relations
    }

    /// Whether `lhs · rhs⁻¹ ∈ K` for the relation evaluated at `(T, R)`.
    pub fn instance_holds(&self, t: &SdElement, r: &SdElement, rel: &RelationInstance) -> bool {
        let law = SdGroup { dim: self.n };
        let (lhs, rhs) = rel.sides();
        let lhs = evaluate_word(&law, &lhs, t, r);
        let rhs = evaluate_word(&law, &rhs, t, r);
        self.kernel.contains(&(lhs * rhs.inverse()))
    }

    /// Checks every relation accepted by `filter`, stopping at the first failure.
    pub fn holds_where(&self, p: &GenParams, filter: impl Fn(&RelationInstance) -> bool) -> bool {
        let (t, r) = self.generators(p);
        self.relations
            .iter()
            .filter(|rel| filter(rel))
            .all(|rel| self.instance_holds(&t, &r, rel))
    }

    pub fn condition_holds(&self, p: &GenParams, condition: Condition) -> bool {
        self.holds_where(p, |rel| condition.covers(rel.family))
    }

    pub fn passes(&self, p: &GenParams) -> bool {
        self.holds_where(p, |_| true)
    }

    pub fn report(&self, p: &GenParams) -> ConditionReport {
        let (t, r) = self.generators(p);
        ConditionReport {
            outcomes: self
                .relations
                .iter()
                .map(|rel| InstanceOutcome {
                    relation: *rel,
                    holds: self.instance_holds(&t, &r, rel),
                })
                .collect(),
            closed_form: ClosedFormCriteria::evaluate(p),
        }
    }

    fn generators(&self, p: &GenParams) -> (SdElement, SdElement) {
        assert_eq!(p.n, self.n, "parameters built for a different dimension");
        build_generators(p).expect("GenParams are valid by construction")
    }
}

pub fn check_conditions_direct(p: &GenParams) -> Result<ConditionReport> {
    Ok(DirectEvaluator::new(p.n)?.report(p))
}

/// `T^N, R^N ∈ K` ⟺ `v ≡ (N/2)c + 1` and `u' ≡ (N/2)b' + 1` (mod 2).
pub fn criterion_orders(p: &GenParams) -> bool {
    let h = p.half();
    p.v % 2 == (h * p.c as u64 + 1) % 2 && p.u1 % 2 == (h * p.b1 as u64 + 1) % 2
}

/// Commutation for factorizations with `k` even: `v ≡ 1 + (k/2)c (mod 2)`,
/// where `k/2` is odd exactly when N ≡ 2 (mod 4).
pub fn criterion_commute_k_even(p: &GenParams) -> bool {
    let expected = if p.n % 4 == 2 { 1 + p.c } else { 1 };
    p.v % 2 == (expected % 2) as u64
}

/// Commutation for factorizations with `k` odd (`l` even): `u' ≡ 1 + (l/2)b' (mod 2)`.
pub fn criterion_commute_k_odd(p: &GenParams) -> bool {
    let expected = if p.n % 4 == 2 { 1 + p.b1 } else { 1 };
    p.u1 % 2 == (expected % 2) as u64
}

/// All commutation relations.
pub fn criterion_commute(p: &GenParams) -> bool {
    criterion_commute_k_even(p) && criterion_commute_k_odd(p)
}

/// [`criterion_commute_k_even`] with an extra `a' ≡ c' (mod 2)` clause.
///
/// The extra clause is not implied by the group law: the commutator matrix
/// for even `k` is `I + N(1 + (k/2)c)[[1, 0], [1, 1]]` regardless of `a'`, `c'`.
/// Kept so the tests can pin down exactly which tuples it wrongly rejects.
pub fn strict_criterion_commute_k_even(p: &GenParams) -> bool {
    p.a1 == p.c1 && criterion_commute_k_even(p)
}

/// Square relations: `3(k²−1)v ≡ 0` and `(l²−1)u' ≡ 0 (mod N)` for every unit pair.
pub fn criterion_square(p: &GenParams) -> bool {
    let n = p.n as u128;
    unit_pairs(p.n).iter().all(|&(k, l)| {
        let (k, l) = (k as u128, l as u128);
        (3 * (k * k - 1) * p.v as u128).is_multiple_of(n)
            && ((l * l - 1) * p.u1 as u128).is_multiple_of(n)
    })
}

/// Braid relations: `v, u' ∈ {0, N/2}` and `2v/N + 2u'/N ≡ c + b' (mod 2)`.
pub fn criterion_braid(p: &GenParams) -> bool {
    let h = p.half();
    let on_half = |x: u64| x == 0 || x == h;
    on_half(p.v) && on_half(p.u1) && ((p.v / h + p.u1 / h) % 2) == ((p.c + p.b1) % 2) as u64
}

/// Conjunction of all conditions when N ≡ 2 (mod 4):
/// `v ≡ (N/2)(c+1)` and `u' ≡ (N/2)(b'+1) (mod N)`.
pub fn criterion_combined_mod4_2(p: &GenParams) -> Result<bool> {
    if p.n % 4 != 2 {
        return Err(Error::RequiresNTwoModFour(p.n));
    }
    let h = p.half();
    Ok(p.v == h * (p.c as u64 + 1) % p.n && p.u1 == h * (p.b1 as u64 + 1) % p.n)
}

/// [`criterion_combined_mod4_2`] with the extra `a' ≡ c'` clause; see
/// [`strict_criterion_commute_k_even`].
pub fn strict_criterion_combined_mod4_2(p: &GenParams) -> Result<bool> {
    Ok(p.a1 == p.c1 && criterion_combined_mod4_2(p)?)
}

/// Closed-form test of all conditions, cheapest first.
pub fn criteria_all(p: &GenParams) -> bool {
    if p.n % 4 == 2 {
        criterion_combined_mod4_2(p).unwrap_or(false)
    } else {
        criterion_orders(p) && criterion_commute(p) && criterion_braid(p) && criterion_square(p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictMode {
    /// Answer read off from N mod 4.
    ClosedForm,
    /// Search with closed-form pruning, survivors confirmed literally.
    Direct,
    /// Search evaluating every candidate literally.
    Exhaustive,
}

impl fmt::Display for VerdictMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ClosedForm => "closed-form",
            Self::Direct => "direct",
            Self::Exhaustive => "exhaustive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitVerdict {
    pub n: u64,
    pub splits: bool,
    pub witness: Option<GenParams>,
    pub witness_count: Option<u64>,
    pub mode: VerdictMode,
    pub candidates_checked: u64,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Evaluate every candidate literally instead of pruning with the closed forms.
    pub exhaustive: bool,
    /// Scan the whole space and report the exact number of witnesses.
    pub count: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    pub bound: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            exhaustive: false,
            count: false,
            jobs: None,
            bound: DEFAULT_SEARCH_BOUND,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Tally {
    count: u64,
    min: Option<u64>,
}

impl Tally {
    fn merge(self, other: Tally) -> Tally {
        let min = match (self.min, other.min) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
        Tally {
            count: self.count + other.count,
            min,
        }
    }
}

/// Searches all `64·N⁴` candidates for a pair satisfying every relation.
///
/// The reported witness is the lexicographically smallest passing tuple, so
/// the result does not depend on `jobs` or scheduling.
pub fn search_witness(n: u64, options: &SearchOptions) -> Result<SplitVerdict> {
    check_even_dim(n)?;
    if n > options.bound {
        return Err(Error::DimensionOverBound {
            got: n,
            bound: options.bound,
        });
    }
    let evaluator = DirectEvaluator::new(n)?;
    let exhaustive = options.exhaustive;
    let accept = |idx: u64| {
        let p = GenParams::from_index(n, idx);
        (exhaustive || criteria_all(&p)) && evaluator.passes(&p)
    };
    let total = GenParams::candidate_count(n);
    let run = || {
        if options.count {
            (0..total)
                .into_par_iter()
                .fold(Tally::default, |acc, idx| {
                    if accept(idx) {
                        acc.merge(Tally {
                            count: 1,
                            min: Some(idx),
                        })
                    } else {
                        acc
                    }
                })
                .reduce(Tally::default, Tally::merge)
        } else {
            let min = (0..total).into_par_iter().find_first(|&idx| accept(idx));
            Tally {
                count: min.map_or(0, |_| 1),
                min,
            }
        }
    };
    let tally = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(format!("cannot start {jobs} workers: {e}")))?
            .install(run),
        None => run(),
    };
    let candidates_checked = match (options.count, tally.min) {
        (false, Some(idx)) => idx + 1,
        _ => total,
    };
    Ok(SplitVerdict {
        n,
        splits: tally.min.is_some(),
        witness: tally.min.map(|idx| GenParams::from_index(n, idx)),
        witness_count: options.count.then_some(tally.count),
        mode: if exhaustive {
            VerdictMode::Exhaustive
        } else {
            VerdictMode::Direct
        },
        candidates_checked,
        notes: Vec::new(),
    })
}

/// The answer for even N: splits iff N ≡ 2 (mod 4), with the standard
/// witness attached when it does.
pub fn verdict(n: u64) -> Result<SplitVerdict> {
    check_even_dim(n)?;
    let splits = n % 4 == 2;
    let notes = if splits {
        vec![
            "the projective Clifford group is SL(2,Z_N) ⋉ Z_N² with the natural action".to_string(),
            "whether the full Clifford group C(N) splits is not decided here".to_string(),
        ]
    } else {
        vec![
            "the relations force v odd and v ∈ {0, N/2} with N/2 even, a contradiction".to_string(),
            "non-splitting transfers to the full Clifford group C(N)".to_string(),
        ]
    };
    Ok(SplitVerdict {
        n,
        splits,
        witness: if splits {
            Some(GenParams::standard_witness(n)?)
        } else {
            None
        },
        witness_count: None,
        mode: VerdictMode::ClosedForm,
        candidates_checked: 0,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modmat::Mat2;

    fn params(n: u64, bits: [u8; 6], vector: [u64; 4]) -> GenParams {
        GenParams::new(n, bits, vector).unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(GenParams::new(6, [2, 0, 0, 0, 0, 0], [0; 4]).is_err());
        assert!(GenParams::new(6, [0; 6], [6, 0, 0, 0]).is_err());
        assert_eq!(
            GenParams::new(5, [0; 6], [0; 4]),
            Err(Error::OddDimension(5))
        );
    }

    #[test]
    fn index_roundtrip_and_order() {
        let n = 4;
        let mut prev: Option<GenParams> = None;
        for idx in 0..GenParams::candidate_count(n) {
            let p = GenParams::from_index(n, idx);
            assert_eq!(p.index(), idx);
            if let Some(q) = prev {
                assert!(q < p);
            }
            prev = Some(p);
        }
    }

    #[test]
    fn generators_for_trivial_and_standard_lifts() {
        let (t, _) = build_generators(&params(6, [0; 6], [0; 4])).unwrap();
        assert_eq!(t.matrix(), Mat2::new(12, [1, 1, 0, 1]).unwrap());
        assert!(t.vector().is_zero());

        let (t, r) = build_generators(&GenParams::standard_witness(6).unwrap()).unwrap();
        assert_eq!(t.matrix(), Mat2::new(12, [7, 1, 6, 1]).unwrap());
        assert_eq!(r.matrix(), Mat2::new(12, [1, 6, 11, 7]).unwrap());
        assert!(t.vector().is_zero() && r.vector().is_zero());
    }

    #[test]
    fn every_lift_has_det_one_and_correct_sigma() {
        for n in (2..=16).step_by(2) {
            for bits in 0..64u8 {
                let p = params(
                    n,
                    [
                        bits >> 5 & 1,
                        bits >> 4 & 1,
                        bits >> 3 & 1,
                        bits >> 2 & 1,
                        bits >> 1 & 1,
                        bits & 1,
                    ],
                    [0; 4],
                );
                let (t, r) = build_generators(&p).unwrap();
                assert_eq!(t.matrix().det(), 1);
                assert_eq!(t.sigma(), Mat2::new(n, [1, 1, 0, 1]).unwrap());
                assert_eq!(r.sigma(), Mat2::new(n, [1, 0, -1, 1]).unwrap());
            }
        }
    }

    #[test]
    fn standard_witness_passes_at_six() {
        let report = check_conditions_direct(&GenParams::standard_witness(6).unwrap()).unwrap();
        assert!(report.passes(), "failing: {:?}", report.failing());
        assert!(report.closed_form.all());
        assert_eq!(report.closed_form.combined, Some(true));
    }

    #[test]
    fn trivial_lift_fails_orders_at_six() {
        let report = check_conditions_direct(&params(6, [0; 6], [0; 4])).unwrap();
        assert!(!report.condition_holds(Condition::Orders));
        assert!(report
            .failing()
            .iter()
            .any(|r| r.family == RelationFamily::OrderT));
        assert!(!report.closed_form.orders);
    }

    #[test]
    fn orders_criterion_examples() {
        assert!(criterion_orders(&params(
            6,
            [0, 0, 1, 0, 1, 0],
            [0, 0, 0, 0]
        )));
        // N = 4, c = 0: v must be odd.
        assert!(!criterion_orders(&params(4, [0; 6], [0, 0, 1, 0])));
        assert!(criterion_orders(&params(4, [0; 6], [0, 1, 1, 0])));
    }

    #[test]
    fn commute_criterion_examples() {
        assert!(criterion_commute(&GenParams::standard_witness(6).unwrap()));
        // N ≡ 0 mod 4 forces v and u' odd whatever the bits.
        for bits in [[0u8; 6], [1; 6]] {
            assert!(!criterion_commute(&params(4, bits, [0, 0, 1, 0])));
            assert!(!criterion_commute(&params(4, bits, [0, 1, 0, 0])));
            assert!(criterion_commute(&params(4, bits, [0, 1, 1, 0])));
        }
    }

    #[test]
    fn square_and_braid_examples() {
        assert!(criterion_square(&params(6, [0; 6], [0, 0, 0, 0])));
        assert!(criterion_braid(&GenParams::standard_witness(6).unwrap()));
        assert!(!criterion_braid(&params(6, [0; 6], [0, 1, 0, 0])));
    }

    #[test]
    fn combined_criterion_examples() {
        assert_eq!(
            criterion_combined_mod4_2(&GenParams::standard_witness(6).unwrap()),
            Ok(true)
        );
        assert_eq!(
            criterion_combined_mod4_2(&params(6, [0; 6], [0, 3, 3, 0])),
            Ok(true)
        );
        assert_eq!(
            criterion_combined_mod4_2(&params(6, [0; 6], [0, 0, 3, 0])),
            Ok(false)
        );
        assert_eq!(
            criterion_combined_mod4_2(&params(4, [0; 6], [0; 4])),
            Err(Error::RequiresNTwoModFour(4))
        );
    }

    #[test]
    fn verdicts() {
        let v = verdict(8).unwrap();
        assert!(!v.splits && v.witness.is_none());
        let v = verdict(2).unwrap();
        assert!(v.splits);
        let (t, r) = build_generators(&v.witness.unwrap()).unwrap();
        assert_eq!(t.matrix(), Mat2::new(4, [3, 1, 2, 1]).unwrap());
        assert_eq!(r.matrix(), Mat2::new(4, [1, 2, 3, 3]).unwrap());
        assert_eq!(verdict(7).unwrap_err(), Error::OddDimension(7));
    }

    #[test]
    fn search_bounds() {
        assert_eq!(
            search_witness(14, &SearchOptions::default()).unwrap_err(),
            Error::DimensionOverBound { got: 14, bound: 12 }
        );
        assert_eq!(
            search_witness(3, &SearchOptions::default()).unwrap_err(),
            Error::OddDimension(3)
        );
    }

    #[test]
    fn search_small() {
        let v = search_witness(
            4,
            &SearchOptions {
                exhaustive: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!v.splits);
        assert_eq!(v.candidates_checked, 16384);

        let v = search_witness(
            2,
            &SearchOptions {
                count: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(v.witness_count, Some(256));
        assert_eq!(v.witness, Some(params(2, [0; 6], [0, 1, 1, 0])));
    }

    #[test]
    fn tally_merge_is_commutative() {
        let a = Tally {
            count: 3,
            min: Some(10),
        };
        let b = Tally {
            count: 2,
            min: Some(4),
        };
        let c = Tally {
            count: 0,
            min: None,
        };
        assert_eq!(a.merge(b), b.merge(a));
        assert_eq!(a.merge(c), a);
        assert_eq!(c.merge(b), b);
    }
}
