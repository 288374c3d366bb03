//! The check registry and suite runner: one executable verifier per
//! congruence or identity, plus the machinery to sweep prime ranges.
//!
//! * [`list_checks`] — the registry, in stable (alphabetical) id order.
//! * [`run_check`] — evaluate one check at one prime (and optional class
//!   modulus), yielding one [`CheckResult`] per sub-case.
//! * [`run_suite`] — sweep a prime range and modulus grid over a check
//!   selection, in parallel, with deterministic output.
//!
//! ## Row semantics
//!
//! Every result row carries the check id, the prime `p` (absent for exact
//! integer identities), the class modulus `m` (when meaningful), a `sub`
//! label for the sub-case (`"r=2"`, `"n=5,j=1"`, …), the modulus as a
//! decimal string (or `"exact"`), both sides as decimal strings, and a
//! status:
//!
//! * `pass` / `fail` — the two independently computed sides agreed or not;
//! * `skipped` — the cell lies outside the check's applicability (wrong
//!   residue class of `p`, `p = 2`, `p | m`, …); sides are omitted;
//! * `divisibility-failure` — a quotient `(X + c)/(u p^t)` hit a numerator
//!   that `p^t` does not divide. The divisibility is itself part of the
//!   claim being verified, so this counts as a refutation, not an error;
//!   the side that still evaluated is reported.
//!
//! ## Determinism
//!
//! Cells are enumerated in a fixed order — checks alphabetically; within a
//! check, fixed (prime-free) cells first, then primes ascending, then class
//! moduli ascending; sub-cases in their natural parameter order — and the
//! parallel runner maps cells to row blocks index-preservingly, so reports
//! are byte-identical at any parallelism degree, including `jobs = 1`.
//!
//! ## Report-only checks
//!
//! Checks marked `report_only` (see [`CheckDef::report_only`]) document
//! known-problematic statements: their rows appear when selected but never
//! flip a run to failure. They are excluded from the default "all" selection
//! unless [`RunOptions::report_only_exceptions`] is set or they are named
//! explicitly. Cells where `p` divides `m` behave the same way under
//! [`RunOptions::include_p_dividing_m`].

mod eval;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::padic::{modulus_value, primes_in_range, PrimeRange};

/// Default class-modulus grid used when the caller does not supply one.
pub const DEFAULT_MODULI: std::ops::RangeInclusive<u64> = 2..=12;

/// How a check's comparison modulus is determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModSpec {
    /// Exact integer identity; rows carry modulus `"exact"`.
    Exact,
    /// Congruence modulo `p^e` for the cell's prime.
    PrimePower(u32),
}

impl std::fmt::Display for ModSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModSpec::Exact => f.write_str("exact"),
            ModSpec::PrimePower(1) => f.write_str("mod p"),
            ModSpec::PrimePower(e) => write!(f, "mod p^{e}"),
        }
    }
}

/// How the suite expands a check into cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CellKind {
    /// One cell per prime.
    PerPrime,
    /// One cell per (prime, class modulus) pair.
    PerPrimeAndModulus,
    /// A single prime-free cell (exact identity grids).
    FixedOnly,
    /// A prime-free cell plus one cell per prime.
    FixedPlusPerPrime,
}

/// Registry metadata for one check.
#[derive(Debug, Clone)]
pub struct CheckDef {
    /// Stable identifier (also the CLI selector).
    pub id: &'static str,
    /// One-line description of what is verified.
    pub description: &'static str,
    /// Comparison modulus.
    pub modulus: ModSpec,
    /// Human-readable applicability condition.
    pub applicability: &'static str,
    /// Reported but never allowed to fail a run (documents a statement the
    /// direct computation contradicts or that is deliberately unasserted).
    pub report_only: bool,
    pub(crate) kind: CellKind,
    /// Class modulus intrinsic to the check (rows carry it even though the
    /// `--moduli` grid does not apply).
    pub(crate) intrinsic_m: Option<u64>,
}

/// Outcome of one sub-case comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    /// Both sides agreed.
    #[serde(rename = "pass")]
    Pass,
    /// The sides disagreed.
    #[serde(rename = "fail")]
    Fail,
    /// Outside the applicability domain; nothing was computed.
    #[serde(rename = "skipped")]
    Skipped,
    /// A claimed divisibility by a power of `p` did not hold.
    #[serde(rename = "divisibility-failure")]
    DivisibilityFailure,
}

/// One comparison row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    /// Check id.
    pub check: String,
    /// Prime, absent for exact identity rows.
    pub p: Option<u64>,
    /// Class modulus, when meaningful for this row.
    pub m: Option<u64>,
    /// Sub-case label (`"r=2"`, `"a=3,r=1"`, `"n=5,j=0"`, …).
    pub sub: Option<String>,
    /// The comparison modulus as a decimal string, or `"exact"`.
    pub modulus: String,
    /// Left side, canonical decimal; absent when skipped or not computed.
    pub lhs: Option<String>,
    /// Right side, likewise.
    pub rhs: Option<String>,
    /// Outcome.
    pub status: Status,
}

/// Run parameters echoed into the report header.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunMeta {
    /// Smallest candidate prime.
    pub pmin: u64,
    /// Largest candidate prime.
    pub pmax: u64,
    /// Class-modulus grid (sorted, deduplicated).
    pub moduli: Vec<u64>,
    /// Selected check ids, alphabetical.
    pub checks: Vec<String>,
    /// Library version that produced the report.
    pub version: String,
}

/// Aggregate row counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    /// Rows with status `pass`.
    pub pass: u64,
    /// Rows with status `fail`.
    pub fail: u64,
    /// Rows with status `skipped`.
    pub skip: u64,
    /// Rows with status `divisibility-failure`.
    pub divfail: u64,
}

/// A complete suite run: header, counts, and every row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// Run parameters.
    pub run: RunMeta,
    /// Aggregate counts over `results`.
    pub summary: Summary,
    /// All rows, in deterministic order.
    pub results: Vec<CheckResult>,
}

/// Options controlling a suite run.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Worker threads; `0` uses the default parallelism.
    pub jobs: usize,
    /// Evaluate cells with `p | m` (report-only) instead of skipping them.
    pub include_p_dividing_m: bool,
    /// Stop after the first cell containing a run-failing row (forces
    /// sequential evaluation).
    pub fail_fast: bool,
    /// Include report-only checks in the default "all" selection.
    pub report_only_exceptions: bool,
}

/// Sub-case filters for [`run_check`]; `None` fields match everything.
#[derive(Debug, Clone, Copy, Default)]
pub struct CheckParams {
    /// Class modulus for grid checks (`None`: the default grid).
    pub m: Option<u64>,
    /// Keep only sub-cases with this `r`.
    pub r: Option<i64>,
    /// Keep only sub-cases with this weight `a`.
    pub a: Option<i64>,
    /// Keep only sub-cases with this shift `s`.
    pub s: Option<i64>,
}

/// The registry, ordered by id. Entries marked report-only document the two
/// statements that are reported without being asserted.
static REGISTRY: &[CheckDef] = &[
    CheckDef {
        id: "binom2pp",
        description: "Central binomial coefficient C(2p,p) is 2 modulo p^3",
        modulus: ModSpec::PrimePower(3),
        applicability: "p >= 5",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: None,
    },
    CheckDef {
        id: "c1e1",
        description: "H_{r,m}(p-1) from the signed binomial class sum over row p plus p times the double sum, all classes",
        modulus: ModSpec::PrimePower(2),
        applicability: "odd p, p does not divide m",
        report_only: false,
        kind: CellKind::PerPrimeAndModulus,
        intrinsic_m: None,
    },
    CheckDef {
        id: "c1e2",
        description: "H_{p,m}(p-1) from the signed binomial class sum over row p, class r = p",
        modulus: ModSpec::PrimePower(2),
        applicability: "odd p, p does not divide m",
        report_only: false,
        kind: CellKind::PerPrimeAndModulus,
        intrinsic_m: None,
    },
    CheckDef {
        id: "c2e1",
        description: "H_{p,m}(p-1) from the signed binomial class sum over row 2p, class r = p",
        modulus: ModSpec::PrimePower(2),
        applicability: "p >= 5, p does not divide m",
        report_only: false,
        kind: CellKind::PerPrimeAndModulus,
        intrinsic_m: None,
    },
    CheckDef {
        id: "c2e2",
        description: "H_{p+m/2,m}(p-1) from the signed binomial class sum over row 2p, even m",
        modulus: ModSpec::PrimePower(2),
        applicability: "p >= 5, p does not divide m, m even",
        report_only: false,
        kind: CellKind::PerPrimeAndModulus,
        intrinsic_m: None,
    },
    CheckDef {
        id: "closed_m10",
        description: "Step-10 binomial class sums match their Fibonacci/Lucas closed forms (form indices 0-3)",
        modulus: ModSpec::Exact,
        applicability: "fixed grid: odd n <= 99",
        report_only: false,
        kind: CellKind::FixedOnly,
        intrinsic_m: Some(10),
    },
    CheckDef {
        id: "closed_m10_c4",
        description: "Step-10 fifth-class closed form, reported without assertion (the advertised class does not match)",
        modulus: ModSpec::Exact,
        applicability: "fixed grid: odd n <= 99 (report-only)",
        report_only: true,
        kind: CellKind::FixedOnly,
        intrinsic_m: Some(10),
    },
    CheckDef {
        id: "closed_m8",
        description: "Step-8 binomial class sums match their Pell/Pell-Lucas closed forms",
        modulus: ModSpec::Exact,
        applicability: "fixed grid: odd n <= 99",
        report_only: false,
        kind: CellKind::FixedOnly,
        intrinsic_m: Some(8),
    },
    CheckDef {
        id: "fermat_split",
        description: "Fermat quotient of 2 splits through 2^{(p-1)/2} - (2/p)",
        modulus: ModSpec::PrimePower(1),
        applicability: "p > 3",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: None,
    },
    CheckDef {
        id: "firstorder",
        description: "H_{r,m}(p-1) = -(T*_{r,m}(p) - delta)/p modulo p, all classes",
        modulus: ModSpec::PrimePower(1),
        applicability: "odd p, p does not divide m",
        report_only: false,
        kind: CellKind::PerPrimeAndModulus,
        intrinsic_m: None,
    },
    CheckDef {
        id: "hp26",
        description: "Squared step-8 class harmonic sums H_{p+2,8}^2 + H_{p+6,8}^2 via Pell numbers",
        modulus: ModSpec::PrimePower(1),
        applicability: "p > 3",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: Some(8),
    },
    CheckDef {
        id: "l1e1_general",
        description: "Weighted binomial class sum over row p vs geometric class harmonic sums, weights a = 1..6",
        modulus: ModSpec::PrimePower(2),
        applicability: "odd p; sub-cases with p | a are skipped",
        report_only: false,
        kind: CellKind::PerPrimeAndModulus,
        intrinsic_m: None,
    },
    CheckDef {
        id: "l1e2_a1",
        description: "Weighted binomial class sum over row 2p (k != p) vs class harmonic and double sums, weight 1",
        modulus: ModSpec::PrimePower(2),
        applicability: "p > 3",
        report_only: false,
        kind: CellKind::PerPrimeAndModulus,
        intrinsic_m: None,
    },
    CheckDef {
        id: "l1e2_general_a",
        description: "Row-2p weighted sums at a = 2..6 under both printed exponent readings, reported only",
        modulus: ModSpec::PrimePower(2),
        applicability: "p > 3; sub-cases with p | a are skipped (report-only)",
        report_only: true,
        kind: CellKind::PerPrimeAndModulus,
        intrinsic_m: None,
    },
    CheckDef {
        id: "lehmer2",
        description: "Half-row harmonic sum at step 2 via the Fermat quotient of 2 (modulo p, as printed)",
        modulus: ModSpec::PrimePower(1),
        applicability: "p >= 5",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: Some(2),
    },
    CheckDef {
        id: "lehmer3",
        description: "Step-3 class harmonic sum via the Fermat quotient of 3, modulo p^2",
        modulus: ModSpec::PrimePower(2),
        applicability: "p >= 5",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: Some(3),
    },
    CheckDef {
        id: "lehmer4",
        description: "Step-4 class harmonic sum via the Fermat quotient of 2, modulo p^2",
        modulus: ModSpec::PrimePower(2),
        applicability: "p >= 5",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: Some(4),
    },
    CheckDef {
        id: "lehmer6",
        description: "Step-6 class harmonic sum via the Fermat quotients of 2 and 3, modulo p^2",
        modulus: ModSpec::PrimePower(2),
        applicability: "p >= 5",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: Some(6),
    },
    CheckDef {
        id: "lehmer_half",
        description: "Harmonic sum over the first (p-1)/2 terms via the Fermat quotient of 2, modulo p^2",
        modulus: ModSpec::PrimePower(2),
        applicability: "p >= 3",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: None,
    },
    CheckDef {
        id: "lemma2_identity",
        description: "Convolution of signed binomial class sums over row n collapses to one class sum over row 2n",
        modulus: ModSpec::Exact,
        applicability: "fixed grid: 2 <= m <= 10, n <= 30, 0 <= s < m",
        report_only: false,
        kind: CellKind::FixedOnly,
        intrinsic_m: None,
    },
    CheckDef {
        id: "pell_half",
        description: "Half-index Pell values P_{(p-1)/2}, P_{(p+1)/2} modulo p, split by p mod 8",
        modulus: ModSpec::PrimePower(1),
        applicability: "p > 3",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: None,
    },
    CheckDef {
        id: "pelllucas_half",
        description: "Half-index Pell-Lucas values Q_{(p-1)/2}, Q_{(p+1)/2} modulo p, split by p mod 8",
        modulus: ModSpec::PrimePower(1),
        applicability: "p > 3",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: None,
    },
    CheckDef {
        id: "remark5_alt",
        description: "Signed step-5 class harmonic sum via Lucas numbers, modulo p^2",
        modulus: ModSpec::PrimePower(2),
        applicability: "p > 5",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: Some(5),
    },
    CheckDef {
        id: "s_hsq",
        description: "Double sum S_{p,m}(p-1) as minus a quarter of the summed squared class harmonic sums, mod p",
        modulus: ModSpec::PrimePower(1),
        applicability: "p >= 5, p does not divide m",
        report_only: false,
        kind: CellKind::PerPrimeAndModulus,
        intrinsic_m: None,
    },
    CheckDef {
        id: "seq_identities",
        description: "Exact Fibonacci/Pell identities: index doubling, decomposition, conversions, half-index product",
        modulus: ModSpec::Exact,
        applicability: "fixed grid: indices <= 500",
        report_only: false,
        kind: CellKind::FixedOnly,
        intrinsic_m: None,
    },
    CheckDef {
        id: "sun93_pell",
        description: "Odd-denominator alternating sum, the 2^k/k sum, and the Pell quotient agree mod p",
        modulus: ModSpec::PrimePower(1),
        applicability: "odd p",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: None,
    },
    CheckDef {
        id: "sunsun_F",
        description: "Step-5 class harmonic sums at classes 2p and -p against the Fibonacci quotient, mod p",
        modulus: ModSpec::PrimePower(1),
        applicability: "p != 2, 5",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: Some(5),
    },
    CheckDef {
        id: "t1",
        description: "H_{p,m}(p-1) from signed binomial class sums over rows p and 2p, modulo p^2",
        modulus: ModSpec::PrimePower(2),
        applicability: "p > 3, p does not divide m",
        report_only: false,
        kind: CellKind::PerPrimeAndModulus,
        intrinsic_m: None,
    },
    CheckDef {
        id: "t1_m2",
        description: "Step-2 specialization of the rows p/2p congruence, in Fermat-quotient form",
        modulus: ModSpec::PrimePower(2),
        applicability: "p >= 5",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: Some(2),
    },
    CheckDef {
        id: "t2",
        description: "H_{p,m}(p-1) from the row-2p class sum minus p/2 times the summed squared class harmonic sums",
        modulus: ModSpec::PrimePower(2),
        applicability: "p > 3, p does not divide m",
        report_only: false,
        kind: CellKind::PerPrimeAndModulus,
        intrinsic_m: None,
    },
    CheckDef {
        id: "t3",
        description: "H_{p,5}(p-1) via the Fibonacci numbers F_p and F_{2p-(5/p)}, modulo p^2",
        modulus: ModSpec::PrimePower(2),
        applicability: "p > 5",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: Some(5),
    },
    CheckDef {
        id: "t4",
        description: "H_{p,8}(p-1) via the Pell numbers P_p and P_{2p-(2/p)}, modulo p^2",
        modulus: ModSpec::PrimePower(2),
        applicability: "p > 3",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: Some(8),
    },
    CheckDef {
        id: "tstar_diag",
        description: "Diagonal signed binomial class sums T*(2n) match closed forms (steps 2, 3, 5, 8)",
        modulus: ModSpec::Exact,
        applicability: "fixed grids (steps 2, 5, 8) plus one row per prime p >= 5 (step 3)",
        report_only: false,
        kind: CellKind::FixedPlusPerPrime,
        intrinsic_m: None,
    },
    CheckDef {
        id: "williams",
        description: "Scaled alternating harmonic sum out to 4p/5 equals the Fibonacci quotient mod p",
        modulus: ModSpec::PrimePower(1),
        applicability: "p != 2, 5",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: Some(5),
    },
    CheckDef {
        id: "wolstenholme_binom",
        description: "Binomial coefficients C(mp,np) reduce to C(m,n) modulo p^3, for m, n <= 4",
        modulus: ModSpec::PrimePower(3),
        applicability: "p >= 5",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: None,
    },
    CheckDef {
        id: "wolstenholme_sum",
        description: "Full harmonic sum over 1..p-1 vanishes modulo p^2",
        modulus: ModSpec::PrimePower(2),
        applicability: "p >= 5",
        report_only: false,
        kind: CellKind::PerPrime,
        intrinsic_m: None,
    },
];

/// The registry in stable id order.
pub fn list_checks() -> &'static [CheckDef] {
    REGISTRY
}

/// Looks up a check by id.
///
/// # Errors
///
/// [`Error::UnknownCheck`] if the id is not in the registry.
pub fn find_check(id: &str) -> Result<&'static CheckDef> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// One unit of evaluation work.
#[derive(Debug, Clone, Copy)]
struct Cell {
    def: &'static CheckDef,
    p: Option<u64>,
    m: Option<u64>,
}

fn evaluate(cell: &Cell, include_p_dividing_m: bool) -> Vec<CheckResult> {
    if let (Some(p), Some(m)) = (cell.p, cell.m) {
        if m % p == 0 && !include_p_dividing_m {
            return vec![eval::skip_row(cell.def, cell.p, cell.m, None)];
        }
    }
    eval::evaluate_cell(cell.def, cell.p, cell.m)
}

fn modulus_string(def: &CheckDef, p: Option<u64>) -> String {
    match (def.modulus, p) {
        (ModSpec::Exact, _) => "exact".to_string(),
        (ModSpec::PrimePower(e), Some(p)) => modulus_value(p, e).to_string(),
        (ModSpec::PrimePower(_), None) => "exact".to_string(), // unreachable by construction
    }
}

/// Evaluates one check at an optional prime, with optional sub-case filters.
///
/// For grid checks (`--moduli`-sensitive), `params.m` selects a single class
/// modulus; otherwise the default grid `2..=12` is swept. For checks with a
/// prime-free part (exact identities), pass `p = None` to get the fixed
/// rows; for the step-3 diagonal, pass a prime to get its per-prime row.
///
/// # Errors
///
/// [`Error::UnknownCheck`] for an unknown id; [`Error::BadIndex`] when a
/// per-prime check is invoked without a prime.
pub fn run_check(id: &str, p: Option<u64>, params: &CheckParams) -> Result<Vec<CheckResult>> {
    let def = find_check(id)?;
    if let Some(p) = p {
        if !crate::padic::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
    }
    let cells: Vec<Cell> = match def.kind {
        CellKind::FixedOnly => vec![Cell { def, p: None, m: None }],
        CellKind::FixedPlusPerPrime => match p {
            None => vec![Cell { def, p: None, m: None }],
            Some(p) => vec![Cell { def, p: Some(p), m: None }],
        },
        CellKind::PerPrime => {
            let p = p.ok_or(Error::BadIndex(0, "this check requires a prime"))?;
            vec![Cell { def, p: Some(p), m: None }]
        }
        CellKind::PerPrimeAndModulus => {
            let p = p.ok_or(Error::BadIndex(0, "this check requires a prime"))?;
            let moduli: Vec<u64> = match params.m {
                Some(m) => vec![m],
                None => DEFAULT_MODULI.collect(),
            };
            moduli
                .into_iter()
                .map(|m| Cell { def, p: Some(p), m: Some(m) })
                .collect()
        }
    };
    let mut rows = Vec::new();
    for cell in &cells {
        rows.extend(evaluate(cell, false));
    }
    Ok(filter_rows(rows, params))
}

fn filter_rows(rows: Vec<CheckResult>, params: &CheckParams) -> Vec<CheckResult> {
    let mut tokens = Vec::new();
    if let Some(r) = params.r {
        tokens.push(format!("r={r}"));
    }
    if let Some(a) = params.a {
        tokens.push(format!("a={a}"));
    }
    if let Some(s) = params.s {
        tokens.push(format!("s={s}"));
    }
    if tokens.is_empty() {
        return rows;
    }
    rows.into_iter()
        .filter(|row| {
            let sub_tokens: Vec<&str> = row
                .sub
                .as_deref()
                .map(|s| s.split(',').collect())
                .unwrap_or_default();
            tokens.iter().all(|t| sub_tokens.contains(&t.as_str()))
        })
        .collect()
}

/// Resolves a selection of check ids: `None` means every non-report-only
/// check (or every check, with `report_only_exceptions`).
fn select_checks(
    ids: Option<&[String]>,
    report_only_exceptions: bool,
) -> Result<Vec<&'static CheckDef>> {
    match ids {
        None => Ok(REGISTRY
            .iter()
            .filter(|c| !c.report_only || report_only_exceptions)
            .collect()),
        Some(list) => {
            let mut selected = Vec::new();
            for id in list {
                selected.push(find_check(id)?);
            }
            selected.sort_by_key(|c| c.id);
            selected.dedup_by_key(|c| c.id);
            Ok(selected)
        }
    }
}

/// Sweeps `checks` over the primes in `range` and the class-modulus grid
/// `moduli`, in parallel, producing a deterministic [`Report`].
///
/// An exhausted range (no primes at all) yields an entirely empty report.
/// Check ids `None` selects the default "all" set.
///
/// # Errors
///
/// [`Error::UnknownCheck`] for unknown ids; [`Error::BadClassModulus`] if
/// the grid contains a modulus below 2; sieve errors as in
/// [`primes_in_range`].
pub fn run_suite(
    range: &PrimeRange,
    moduli: &[u64],
    ids: Option<&[String]>,
    opts: &RunOptions,
) -> Result<Report> {
    let selected = select_checks(ids, opts.report_only_exceptions)?;
    let mut grid: Vec<u64> = moduli.to_vec();
    grid.sort_unstable();
    grid.dedup();
    if let Some(&bad) = grid.iter().find(|&&m| m < 2) {
        return Err(Error::BadClassModulus(bad));
    }
    let primes = primes_in_range(range)?;

    let mut cells: Vec<Cell> = Vec::new();
    if !primes.is_empty() {
        for def in &selected {
            match def.kind {
                CellKind::FixedOnly => cells.push(Cell { def, p: None, m: None }),
                CellKind::FixedPlusPerPrime => {
                    cells.push(Cell { def, p: None, m: None });
                    cells.extend(primes.iter().map(|&p| Cell { def, p: Some(p), m: None }));
                }
                CellKind::PerPrime => {
                    cells.extend(primes.iter().map(|&p| Cell { def, p: Some(p), m: None }));
                }
                CellKind::PerPrimeAndModulus => {
                    for &p in &primes {
                        for &m in &grid {
                            cells.push(Cell { def, p: Some(p), m: Some(m) });
                        }
                    }
                }
            }
        }
    }

    let include_pm = opts.include_p_dividing_m;
    let results: Vec<CheckResult> = if opts.fail_fast {
        let mut rows = Vec::new();
        'cells: for cell in &cells {
            let block = evaluate(cell, include_pm);
            let bad = block.iter().any(row_fails_run);
            rows.extend(block);
            if bad {
                break 'cells;
            }
        }
        rows
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("constructing a local thread pool cannot fail for valid jobs counts");
        pool.install(|| {
            use rayon::prelude::*;
            cells
                .par_iter()
                .map(|cell| evaluate(cell, include_pm))
                .collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect()
    };

    let mut summary = Summary::default();
    for row in &results {
        match row.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skipped => summary.skip += 1,
            Status::DivisibilityFailure => summary.divfail += 1,
        }
    }

    Ok(Report {
        run: RunMeta {
            pmin: range.lo,
            pmax: range.hi,
            moduli: grid,
            checks: selected.iter().map(|c| c.id.to_string()).collect(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        summary,
        results,
    })
}

/// True iff this row should flip a run to failed: a fail or
/// divisibility-failure that is neither from a report-only check nor from a
/// `p | m` cell.
pub fn row_fails_run(row: &CheckResult) -> bool {
    if !matches!(row.status, Status::Fail | Status::DivisibilityFailure) {
        return false;
    }
    if let Ok(def) = find_check(&row.check) {
        if def.report_only {
            return false;
        }
    }
    if let (Some(p), Some(m)) = (row.p, row.m) {
        if m % p == 0 {
            return false;
        }
    }
    true
}

impl Report {
    /// Rows that make the run fail (see [`row_fails_run`]).
    pub fn failing_rows(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| row_fails_run(r))
    }

    /// True iff no row fails the run.
    pub fn passed(&self) -> bool {
        self.failing_rows().next().is_none()
    }
}
