//! Exact verification of the Frobenius-Euler identities over parameter grids.
//!
//! Every identity is checked in `Q(λ)[x]` (or `Q(λ)` for the number
//! identities) by comparing canonical text. A cell is `equal` iff its `lhs`
//! and `rhs` strings agree byte for byte. Where an identity has several
//! right-hand forms (the split sum with its two ranges and the single
//! unified sum, or a third closed form), all of them are computed and the
//! first one that disagrees with the left side becomes the reported `rhs`.
//!
//! Reports serialize as JSON lines: one object per cell followed by one
//! summary object.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, factorial};
use crate::error::Error;
use crate::feuler::{
    delta_lambda_at_zero, from_fe_basis, j_lambda, lowering_partial_sum, stirling_lambda,
    to_fe_basis, BasisExpansion, FeulerCache,
};
use crate::scalar::{LambdaPoly, LambdaRat, Rational};
use crate::umbral::{appell_expand, TruncSeries};
use crate::xpoly::XPoly;

/// Seed used when neither `--seed` nor `FEULER_SEED` is given.
pub const DEFAULT_SEED: u64 = 20_120_613;

/// Number of random polynomials in the basis round-trip family.
pub const DEFAULT_ROUNDTRIP_CASES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    /// `p = Σ C_k H_k^{(r)}` with the explicit coefficient formula.
    #[serde(rename = "thm1_roundtrip")]
    BasisRoundTrip,
    /// `H_n^{(r-s)} = Σ_l C(n,l) A(s,l) H_{n-l}^{(r)}`.
    #[serde(rename = "thm2")]
    Lowering,
    /// Lowering with `s = r - 1`, landing on order 1.
    #[serde(rename = "cor3")]
    LoweringToOrderOne,
    /// Lowering with `s = r`, landing on `x^n`.
    #[serde(rename = "cor4")]
    LoweringToPower,
    /// `r! S_λ(n,r) / (1-λ)^r` from order-`r` numbers with `s = 2r`.
    #[serde(rename = "thm5")]
    StirlingEven,
    /// `(r-1)! S_λ(n,r-1) / (1-λ)^{r-1}` from order-`r` numbers with `s = 2r-1`.
    #[serde(rename = "thm6")]
    StirlingOdd,
    /// `(r-1)! S_λ(n,r-1) / (1-λ)^{r-1}` from order-1 numbers with `s = r`.
    #[serde(rename = "remark")]
    StirlingOrderOne,
    /// `<g^r t^k | H_n^{(r)}> = n! δ_{n,k}`.
    #[serde(rename = "eq15_duality")]
    Duality,
    /// `J_λ H_n^{(r)} = H_n^{(r-1)}`.
    #[serde(rename = "eq22_ladder")]
    JLadder,
    /// `D H_n^{(r)} = n H_{n-1}^{(r)}`.
    #[serde(rename = "eq12_ladder")]
    DerivativeLadder,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::BasisRoundTrip,
        IdentityId::Lowering,
        IdentityId::LoweringToOrderOne,
        IdentityId::LoweringToPower,
        IdentityId::StirlingEven,
        IdentityId::StirlingOdd,
        IdentityId::StirlingOrderOne,
        IdentityId::Duality,
        IdentityId::JLadder,
        IdentityId::DerivativeLadder,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::BasisRoundTrip => "thm1_roundtrip",
            IdentityId::Lowering => "thm2",
            IdentityId::LoweringToOrderOne => "cor3",
            IdentityId::LoweringToPower => "cor4",
            IdentityId::StirlingEven => "thm5",
            IdentityId::StirlingOdd => "thm6",
            IdentityId::StirlingOrderOne => "remark",
            IdentityId::Duality => "eq15_duality",
            IdentityId::JLadder => "eq22_ladder",
            IdentityId::DerivativeLadder => "eq12_ladder",
        }
    }

    pub fn parse(s: &str) -> Option<IdentityId> {
        Self::ALL.into_iter().find(|id| id.as_str() == s)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equal,
    Mismatch,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Equal => "equal",
            Status::Mismatch => "mismatch",
            Status::Skipped => "skipped",
        })
    }
}

/// Outcome of checking one identity at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub identity: IdentityId,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub elapsed_us: u64,
}

impl Cell {
    /// Compares `lhs` against every right-hand form. The reported `rhs` is
    /// the first form that differs, or the first form if all agree.
    fn compare(identity: IdentityId, params: Params, lhs: String, forms: Vec<String>) -> Cell {
        let rhs = forms
            .iter()
            .find(|f| **f != lhs)
            .or(forms.first())
            .cloned()
            .unwrap_or_default();
        let status = if rhs == lhs {
            Status::Equal
        } else {
            Status::Mismatch
        };
        Cell {
            identity,
            params: params.0,
            status,
            lhs,
            rhs,
            elapsed_us: 0,
        }
    }

    fn skipped(identity: IdentityId, params: Params) -> Cell {
        Cell {
            identity,
            params: params.0,
            status: Status::Skipped,
            lhs: String::new(),
            rhs: String::new(),
            elapsed_us: 0,
        }
    }

    pub fn param(&self, key: &str) -> Option<i64> {
        self.params.get(key).copied()
    }

    /// Report order: identity, then `n`, `r`, `s`, then any other parameters.
    fn sort_key(&self) -> SortKey<'_> {
        let rest = self
            .params
            .iter()
            .filter(|(k, _)| !matches!(k.as_str(), "n" | "r" | "s"))
            .collect();
        (
            self.identity,
            [self.param("n"), self.param("r"), self.param("s")],
            rest,
        )
    }
}

type SortKey<'a> = (IdentityId, [Option<i64>; 3], Vec<(&'a String, &'a i64)>);

struct Params(BTreeMap<String, i64>);

impl Params {
    fn new(pairs: &[(&str, i64)]) -> Self {
        Params(pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect())
    }
}

/// Grid bounds of a suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub n_max: usize,
    pub r_max: usize,
    pub s_max: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub total: usize,
    pub equal: usize,
    pub mismatch: usize,
    pub skipped: usize,
}

impl Totals {
    pub fn of(cells: &[Cell]) -> Totals {
        let count = |s: Status| cells.iter().filter(|c| c.status == s).count();
        Totals {
            total: cells.len(),
            equal: count(Status::Equal),
            mismatch: count(Status::Mismatch),
            skipped: count(Status::Skipped),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Summary {
    total: usize,
    equal: usize,
    mismatch: usize,
    skipped: usize,
    grid: Grid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub cells: Vec<Cell>,
    pub totals: Totals,
    pub grid: Grid,
}

impl VerificationReport {
    pub fn new(mut cells: Vec<Cell>, grid: Grid) -> Self {
        cells.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let totals = Totals::of(&cells);
        VerificationReport {
            cells,
            totals,
            grid,
        }
    }

    pub fn has_mismatch(&self) -> bool {
        self.totals.mismatch > 0
    }

    /// JSON lines: every cell, then the summary.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for cell in &self.cells {
            out.push_str(&serde_json::to_string(cell).expect("cell serializes"));
            out.push('\n');
        }
        let t = self.totals;
        let summary = Summary {
            total: t.total,
            equal: t.equal,
            mismatch: t.mismatch,
            skipped: t.skipped,
            grid: self.grid,
        };
        out.push_str(&serde_json::to_string(&summary).expect("summary serializes"));
        out.push('\n');
        out
    }

    pub fn from_json_lines(text: &str) -> Result<Self, Error> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        let (last, body) = lines
            .split_last()
            .ok_or_else(|| Error::MalformedReport("empty report".into()))?;
        let summary: Summary = serde_json::from_str(last)
            .map_err(|e| Error::MalformedReport(format!("summary: {e}")))?;
        let cells = body
            .iter()
            .enumerate()
            .map(|(i, l)| {
                serde_json::from_str::<Cell>(l)
                    .map_err(|e| Error::MalformedReport(format!("line {}: {e}", i + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let totals = Totals::of(&cells);
        let claimed = Totals {
            total: summary.total,
            equal: summary.equal,
            mismatch: summary.mismatch,
            skipped: summary.skipped,
        };
        if totals != claimed {
            return Err(Error::MalformedReport(
                "summary totals disagree with cells".into(),
            ));
        }
        Ok(VerificationReport {
            cells,
            totals,
            grid: summary.grid,
        })
    }
}

/// A deliberate defect injected into the lowering coefficients, used to show
/// the harness can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Every term with `m ≥ 1` loses one factor of `(1-λ)^{-1}`.
    DropOneMinusLambda,
}

impl Fault {
    pub fn parse(s: &str) -> Option<Fault> {
        match s {
            "drop-one-minus-lambda" => Some(Fault::DropOneMinusLambda),
            _ => None,
        }
    }

    fn exponent(self, m: usize) -> usize {
        match self {
            Fault::DropOneMinusLambda => m.saturating_sub(1),
        }
    }
}

/// One random polynomial of the basis round-trip family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTripCase {
    pub index: usize,
    pub poly: XPoly,
    pub order: usize,
}

/// Deterministic family of random polynomials in `Q(λ)[x]`.
pub fn roundtrip_cases(
    seed: u64,
    count: usize,
    max_degree: usize,
    max_order: usize,
) -> Vec<RoundTripCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|index| {
            let degree = rng.gen_range(0..=max_degree);
            let order = rng.gen_range(0..=max_order);
            let mut coeffs: Vec<LambdaRat> = (0..=degree)
                .map(|_| {
                    if rng.gen_bool(0.2) {
                        LambdaRat::zero()
                    } else {
                        random_scalar(&mut rng)
                    }
                })
                .collect();
            while coeffs[degree].is_zero() {
                coeffs[degree] = random_scalar(&mut rng);
            }
            RoundTripCase {
                index,
                poly: XPoly::new(coeffs),
                order,
            }
        })
        .collect()
}

/// Random nonzero-probability element of `Q(λ)` with small numerator degree
/// and a denominator drawn from a handful of shapes.
pub fn random_scalar<R: Rng>(rng: &mut R) -> LambdaRat {
    let deg = rng.gen_range(0..=2);
    let num = LambdaPoly::new(
        (0..=deg)
            .map(|_| {
                Rational::new(
                    rng.gen_range(-6i64..=6).into(),
                    rng.gen_range(1i64..=4).into(),
                )
            })
            .collect(),
    );
    let den = match rng.gen_range(0..5) {
        0 => LambdaPoly::one(),
        1 => LambdaPoly::from_ints(&[1, -1]),
        2 => LambdaPoly::from_ints(&[1, -2, 1]),
        3 => LambdaPoly::from_ints(&[1, 1]),
        _ => LambdaPoly::from_ints(&[2, 0, 1]),
    };
    LambdaRat::new(num, den).expect("nonzero denominator")
}

#[derive(Clone, Debug)]
enum CellTask {
    RoundTrip(RoundTripCase),
    Lowering { n: usize, r: usize, s: usize },
    ToOrderOne { n: usize, r: usize },
    ToPower { n: usize, r: usize },
    StirlingEven { n: usize, r: usize },
    StirlingOdd { n: usize, r: usize },
    StirlingOrderOne { n: usize, r: usize },
    Duality { n: usize, k: usize, r: usize },
    JLadder { n: usize, r: i64 },
    DerivativeLadder { n: usize, r: i64 },
}

/// Suite configuration.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub grid: Grid,
    pub seed: u64,
    pub jobs: usize,
    /// Record wall-clock time per cell. Off by default so reports are
    /// reproducible byte for byte.
    pub timings: bool,
    pub roundtrip_cases: usize,
    pub fault: Option<Fault>,
}

impl SuiteConfig {
    pub fn new(n_max: usize, r_max: usize, s_max: usize) -> Self {
        SuiteConfig {
            grid: Grid {
                n_max,
                r_max,
                s_max,
            },
            seed: DEFAULT_SEED,
            jobs: 1,
            timings: false,
            roundtrip_cases: DEFAULT_ROUNDTRIP_CASES,
            fault: None,
        }
    }
}

/// Evaluates identity cells. Holds the polynomial cache and the lowering
/// coefficient memo, both safe to share across worker threads.
#[derive(Default)]
pub struct Verifier {
    cache: FeulerCache,
    fault: Option<Fault>,
    brackets: RwLock<HashMap<(usize, usize, usize), LambdaRat>>,
}

fn fact_rat(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn binom_rat(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n as u64, k as u64))
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_fault(fault: Option<Fault>) -> Self {
        Verifier {
            fault,
            ..Self::default()
        }
    }

    pub fn cache(&self) -> &FeulerCache {
        &self.cache
    }

    /// `Σ_{m=0}^{m_top} C(s,m) (1-λ)^{-m} Surj(l,m)`, fault applied.
    fn bracket(&self, s: usize, l: usize, m_top: usize) -> LambdaRat {
        let key = (s, l, m_top);
        if let Some(v) = self.brackets.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = match self.fault {
            None => lowering_partial_sum(s, l, m_top, |m| m),
            Some(f) => lowering_partial_sum(s, l, m_top, |m| f.exponent(m)),
        };
        self.brackets.write().unwrap().insert(key, v.clone());
        v
    }

    /// Coefficients of `H_{n-l}^{(r)}`, `l = 0..=n`, with the inner-sum
    /// limits exactly as in the two-range statement: for `l ≤ min(s,n)` the
    /// inner sum runs to `l`, beyond it to `min(s,n)`.
    fn split_coeffs(&self, n: usize, s: usize) -> Vec<LambdaRat> {
        let cut = s.min(n);
        (0..=n)
            .map(|l| {
                let m_top = if l <= cut { l } else { cut };
                self.bracket(s, l, m_top).scale(&binom_rat(n, l))
            })
            .collect()
    }

    /// `C(n,l) A(s,l)` with the single range `m ≤ min(s,l)`.
    fn unified_coeffs(&self, n: usize, s: usize) -> Vec<LambdaRat> {
        (0..=n)
            .map(|l| self.bracket(s, l, s.min(l)).scale(&binom_rat(n, l)))
            .collect()
    }

    /// `Σ_l coeffs[l] H_{n-l}^{(r)}(x|λ)`.
    fn combine_polys(&self, coeffs: &[LambdaRat], r: usize) -> XPoly {
        let n = coeffs.len() - 1;
        let basis: Vec<_> = (0..=n).map(|l| self.cache.poly(n - l, r as i64)).collect();
        XPoly::linear_combination(coeffs.iter().zip(basis.iter().map(|p| &**p)))
    }

    /// `Σ_l coeffs[l] H_{n-l}^{(r)}(λ)`.
    fn combine_numbers(&self, coeffs: &[LambdaRat], r: usize) -> LambdaRat {
        let n = coeffs.len() - 1;
        let numbers = self.cache.numbers(n, r);
        coeffs
            .iter()
            .enumerate()
            .fold(LambdaRat::zero(), |acc, (l, c)| {
                &acc + &(c * &numbers[n - l])
            })
    }

    fn lowering_forms(&self, n: usize, r: usize, s: usize) -> Vec<String> {
        vec![
            self.combine_polys(&self.split_coeffs(n, s), r).to_string(),
            self.combine_polys(&self.unified_coeffs(n, s), r)
                .to_string(),
        ]
    }

    fn lowering_number_forms(&self, n: usize, r: usize, s: usize) -> Vec<String> {
        vec![
            self.combine_numbers(&self.split_coeffs(n, s), r)
                .to_string(),
            self.combine_numbers(&self.unified_coeffs(n, s), r)
                .to_string(),
        ]
    }

    /// `k! S_λ(n,k) / (1-λ)^k` together with the `Δ̃_λ^k 0^n / (1-λ)^k` form.
    fn scaled_stirling(&self, n: usize, k: usize) -> (String, String) {
        let outer = LambdaRat::one_minus_lambda()
            .pow(-(k as i64))
            .expect("1 - L is nonzero");
        let via_s = &stirling_lambda(n, k).scale(&fact_rat(k)) * &outer;
        let via_delta = &delta_lambda_at_zero(n, k) * &outer;
        (via_s.to_string(), via_delta.to_string())
    }

    pub fn verify_lowering(&self, n: usize, r: usize, s: usize) -> Cell {
        let params = Params::new(&[("n", n as i64), ("r", r as i64), ("s", s as i64)]);
        let lhs = self.cache.poly(n, r as i64 - s as i64).to_string();
        Cell::compare(
            IdentityId::Lowering,
            params,
            lhs,
            self.lowering_forms(n, r, s),
        )
    }

    pub fn verify_lowering_to_order_one(&self, n: usize, r: usize) -> Cell {
        let params = Params::new(&[("n", n as i64), ("r", r as i64)]);
        if r < 1 {
            return Cell::skipped(IdentityId::LoweringToOrderOne, params);
        }
        let lhs = self.cache.poly(n, 1).to_string();
        Cell::compare(
            IdentityId::LoweringToOrderOne,
            params,
            lhs,
            self.lowering_forms(n, r, r - 1),
        )
    }

    pub fn verify_lowering_to_power(&self, n: usize, r: usize) -> Cell {
        let params = Params::new(&[("n", n as i64), ("r", r as i64)]);
        if r < 1 {
            return Cell::skipped(IdentityId::LoweringToPower, params);
        }
        let lhs = XPoly::monomial(n).to_string();
        Cell::compare(
            IdentityId::LoweringToPower,
            params,
            lhs,
            self.lowering_forms(n, r, r),
        )
    }

    pub fn verify_stirling_even(&self, n: usize, r: usize) -> Cell {
        let params = Params::new(&[("n", n as i64), ("r", r as i64)]);
        let (lhs, via_delta) = self.scaled_stirling(n, r);
        let mut forms = vec![via_delta];
        forms.extend(self.lowering_number_forms(n, r, 2 * r));
        forms.push(self.bracket(r, n, r.min(n)).to_string());
        Cell::compare(IdentityId::StirlingEven, params, lhs, forms)
    }

    pub fn verify_stirling_odd(&self, n: usize, r: usize) -> Cell {
        let params = Params::new(&[("n", n as i64), ("r", r as i64)]);
        if r < 1 {
            return Cell::skipped(IdentityId::StirlingOdd, params);
        }
        let (lhs, via_delta) = self.scaled_stirling(n, r - 1);
        let mut forms = vec![via_delta];
        forms.extend(self.lowering_number_forms(n, r, 2 * r - 1));
        Cell::compare(IdentityId::StirlingOdd, params, lhs, forms)
    }

    pub fn verify_stirling_order_one(&self, n: usize, r: usize) -> Cell {
        let params = Params::new(&[("n", n as i64), ("r", r as i64)]);
        if r < 1 {
            return Cell::skipped(IdentityId::StirlingOrderOne, params);
        }
        let (lhs, via_delta) = self.scaled_stirling(n, r - 1);
        let mut forms = vec![via_delta];
        forms.extend(self.lowering_number_forms(n, 1, r));
        Cell::compare(IdentityId::StirlingOrderOne, params, lhs, forms)
    }

    pub fn verify_duality(&self, n: usize, k: usize, r: usize) -> Cell {
        let params = Params::new(&[("n", n as i64), ("k", k as i64), ("r", r as i64)]);
        let order = n.max(k);
        let g = TruncSeries::frobenius_euler_generator(order)
            .pow(r as i64)
            .expect("nonnegative power");
        let functional = g.mul(&TruncSeries::t_power(k, order));
        let lhs = functional
            .functional(&self.cache.poly(n, r as i64))
            .expect("order covers degree");
        let rhs = if n == k {
            LambdaRat::from_rational(fact_rat(n))
        } else {
            LambdaRat::zero()
        };
        Cell::compare(
            IdentityId::Duality,
            params,
            lhs.to_string(),
            vec![rhs.to_string()],
        )
    }

    pub fn verify_j_ladder(&self, n: usize, r: i64) -> Cell {
        let params = Params::new(&[("n", n as i64), ("r", r)]);
        let lhs = j_lambda(&self.cache.poly(n, r), 1).to_string();
        let rhs = self.cache.poly(n, r - 1).to_string();
        Cell::compare(IdentityId::JLadder, params, lhs, vec![rhs])
    }

    pub fn verify_derivative_ladder(&self, n: usize, r: i64) -> Cell {
        let params = Params::new(&[("n", n as i64), ("r", r)]);
        let lhs = self.cache.poly(n, r).derivative(1).to_string();
        let rhs = if n == 0 {
            XPoly::zero()
        } else {
            self.cache
                .poly(n - 1, r)
                .scale(&LambdaRat::from_int(n as i64))
        };
        Cell::compare(
            IdentityId::DerivativeLadder,
            params,
            lhs,
            vec![rhs.to_string()],
        )
    }

    /// `p` against its recombination from the explicit coefficients, and
    /// against the recombination from the series-side expansion.
    pub fn verify_roundtrip(&self, case: &RoundTripCase) -> Cell {
        let degree = case.poly.degree().finite().unwrap_or(0);
        let params = Params::new(&[
            ("case", case.index as i64),
            ("n", degree as i64),
            ("r", case.order as i64),
        ]);
        let explicit = to_fe_basis(&case.poly, case.order);
        let g = TruncSeries::frobenius_euler_generator(degree)
            .pow(case.order as i64)
            .expect("nonnegative power");
        let series = appell_expand(&g, &case.poly).expect("generator is invertible");
        let mut forms = vec![from_fe_basis(&explicit).to_string()];
        if series != explicit.coefficients {
            forms.push(
                from_fe_basis(&BasisExpansion {
                    order: case.order,
                    coefficients: series,
                })
                .to_string(),
            );
            forms.push("<coefficient vectors differ>".into());
        }
        Cell::compare(
            IdentityId::BasisRoundTrip,
            params,
            case.poly.to_string(),
            forms,
        )
    }

    fn run_task(&self, task: &CellTask, timings: bool) -> Cell {
        let start = Instant::now();
        let mut cell = match task {
            CellTask::RoundTrip(case) => self.verify_roundtrip(case),
            &CellTask::Lowering { n, r, s } => self.verify_lowering(n, r, s),
            &CellTask::ToOrderOne { n, r } => self.verify_lowering_to_order_one(n, r),
            &CellTask::ToPower { n, r } => self.verify_lowering_to_power(n, r),
            &CellTask::StirlingEven { n, r } => self.verify_stirling_even(n, r),
            &CellTask::StirlingOdd { n, r } => self.verify_stirling_odd(n, r),
            &CellTask::StirlingOrderOne { n, r } => self.verify_stirling_order_one(n, r),
            &CellTask::Duality { n, k, r } => self.verify_duality(n, k, r),
            &CellTask::JLadder { n, r } => self.verify_j_ladder(n, r),
            &CellTask::DerivativeLadder { n, r } => self.verify_derivative_ladder(n, r),
        };
        if timings {
            cell.elapsed_us = start.elapsed().as_micros() as u64;
        }
        cell
    }

    /// Runs a single cell addressed by identity and parameters. Parameters
    /// an identity does not use are ignored; out-of-range ones give a
    /// skipped cell.
    pub fn verify(&self, id: IdentityId, point: CellPoint) -> Cell {
        let CellPoint {
            n,
            r,
            s,
            k,
            case,
            seed,
        } = point;
        let nonneg = |v: i64| usize::try_from(v).ok();
        let skip = || {
            let params = Params::new(&[("n", n), ("r", r), ("s", s), ("k", k)]);
            Cell::skipped(id, params)
        };
        let (Some(nu), Some(su), Some(ku), Some(cu)) =
            (nonneg(n), nonneg(s), nonneg(k), nonneg(case))
        else {
            return skip();
        };
        if id == IdentityId::BasisRoundTrip {
            let cases = roundtrip_cases(seed, cu + 1, 10, 4);
            return self.verify_roundtrip(&cases[cu]);
        }
        if id == IdentityId::JLadder {
            return self.verify_j_ladder(nu, r);
        }
        if id == IdentityId::DerivativeLadder {
            return self.verify_derivative_ladder(nu, r);
        }
        let Some(ru) = nonneg(r) else {
            return skip();
        };
        match id {
            IdentityId::Lowering => self.verify_lowering(nu, ru, su),
            IdentityId::LoweringToOrderOne => self.verify_lowering_to_order_one(nu, ru),
            IdentityId::LoweringToPower => self.verify_lowering_to_power(nu, ru),
            IdentityId::StirlingEven => self.verify_stirling_even(nu, ru),
            IdentityId::StirlingOdd => self.verify_stirling_odd(nu, ru),
            IdentityId::StirlingOrderOne => self.verify_stirling_order_one(nu, ru),
            IdentityId::Duality => self.verify_duality(nu, ku, ru),
            IdentityId::BasisRoundTrip | IdentityId::JLadder | IdentityId::DerivativeLadder => {
                unreachable!()
            }
        }
    }
}

/// Parameters for [`Verifier::verify`].
#[derive(Clone, Copy, Debug)]
pub struct CellPoint {
    pub n: i64,
    pub r: i64,
    pub s: i64,
    pub k: i64,
    /// Index into the seeded round-trip family.
    pub case: i64,
    pub seed: u64,
}

fn suite_tasks(config: &SuiteConfig) -> Vec<CellTask> {
    let Grid {
        n_max,
        r_max,
        s_max,
    } = config.grid;
    let mut tasks = Vec::new();
    let rt_degree = n_max.min(10);
    let rt_order = r_max.min(4);
    tasks.extend(
        roundtrip_cases(config.seed, config.roundtrip_cases, rt_degree, rt_order)
            .into_iter()
            .map(CellTask::RoundTrip),
    );
    for n in 0..=n_max {
        for r in 0..=r_max {
            for s in 0..=s_max {
                tasks.push(CellTask::Lowering { n, r, s });
            }
            tasks.push(CellTask::StirlingEven { n, r });
            if r >= 1 {
                tasks.push(CellTask::ToOrderOne { n, r });
                tasks.push(CellTask::ToPower { n, r });
                tasks.push(CellTask::StirlingOdd { n, r });
                tasks.push(CellTask::StirlingOrderOne { n, r });
            }
        }
        let r_signed = r_max as i64;
        for r in -r_signed..=r_signed {
            tasks.push(CellTask::JLadder { n, r });
            if n >= 1 {
                tasks.push(CellTask::DerivativeLadder { n, r });
            }
        }
    }
    let dual_n = n_max.min(8);
    for n in 0..=dual_n {
        for k in 0..=dual_n {
            for r in 0..=r_max.min(3) {
                tasks.push(CellTask::Duality { n, k, r });
            }
        }
    }
    tasks
}

/// Evaluates every identity over its grid. Cell order in the report is
/// independent of `jobs`.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport, Error> {
    let tasks = suite_tasks(config);
    let verifier = Verifier::with_fault(config.fault);
    let cells: Vec<Cell> = if config.jobs <= 1 {
        tasks
            .iter()
            .map(|s| verifier.run_task(s, config.timings))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        pool.install(|| {
            tasks
                .par_iter()
                .map(|s| verifier.run_task(s, config.timings))
                .collect()
        })
    };
    Ok(VerificationReport::new(cells, config.grid))
}
