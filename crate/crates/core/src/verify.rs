//! Exhaustive verification suites.
//!
//! Each check runs over a size range (`max`, whose meaning depends on the
//! check) and returns a [`VerifyReport`]. A failing report carries a witness
//! that can be re-checked on its own: a pair `(n, k)` with the two values that
//! disagree, or a serialized matrix/permutation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::bijections::{
    all_gamma_codes, gamma_decode, gamma_encode, phi, phi_inverse, recursion_join, recursion_split, starts_left,
    starts_right, RecursionSplit,
};
use crate::error::{Error, Result};
use crate::exactmath::{
    binomial, check_alternating_sum, check_symmetry, polybernoulli_formula_with, BigNat, RecursionMemo, StirlingTable,
};
use crate::families::{
    count_family, enumerate_family, family_matrices, family_permutations, is_acyclic_orientation, is_callan,
    is_gamma_free, is_lonesum, is_lonesum_oracle, is_max_ascending, is_vesztergombi, young_normal_form,
    EnumerationLimits, FamilyId, FamilyMember,
};
use crate::matrix::Matrix01;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    All,
    Symmetry,
    Recursion,
    AltSum,
    Families,
    LonesumEquiv,
    GammaRoundtrip,
    Phi,
    Split,
}

impl Check {
    /// The individual checks, in the order `all` runs them.
    pub const INDIVIDUAL: [Check; 8] = [
        Check::Symmetry,
        Check::Recursion,
        Check::AltSum,
        Check::Families,
        Check::LonesumEquiv,
        Check::GammaRoundtrip,
        Check::Phi,
        Check::Split,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::All => "all",
            Check::Symmetry => "symmetry",
            Check::Recursion => "recursion",
            Check::AltSum => "altsum",
            Check::Families => "families",
            Check::LonesumEquiv => "lonesum-equiv",
            Check::GammaRoundtrip => "gamma-roundtrip",
            Check::Phi => "phi",
            Check::Split => "split",
        }
    }

    /// Default value of `max`. Meaning per check:
    /// symmetry, recursion, families, gamma-roundtrip, split: `n, k <= max`;
    /// altsum: `1 <= n + k <= max`; phi: `n + k <= max`;
    /// lonesum-equiv: every shape with `n * k <= max`.
    pub fn default_max(self) -> usize {
        match self {
            Check::All => 0,
            Check::Symmetry | Check::Recursion => 10,
            Check::AltSum => 12,
            Check::Families | Check::GammaRoundtrip | Check::Split => 4,
            Check::LonesumEquiv => 16,
            Check::Phi => 7,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Check::All)
            .chain(Check::INDIVIDUAL)
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub check: Check,
    pub range: String,
    pub passed: bool,
    pub witness: Option<String>,
    pub elapsed: Duration,
    /// Deterministic per-size notes such as `(2,2): 14 matrices`.
    pub details: Vec<String>,
}

impl VerifyReport {
    /// One line without timing, so output stays deterministic.
    pub fn summary(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        format!("{verdict} {} [{}]", self.check, self.range)
    }
}

struct Outcome {
    range: String,
    details: Vec<String>,
    witness: Option<String>,
}

impl Outcome {
    fn new(range: String) -> Self {
        Outcome { range, details: Vec::new(), witness: None }
    }

    fn fail(mut self, witness: String) -> Self {
        self.witness.get_or_insert(witness);
        self
    }
}

/// Runs `check` (every individual check for [`Check::All`]) with the given
/// size, or each check's default when `max` is `None`. `threads` only affects
/// how family enumeration is scheduled, never the result.
pub fn run_verify(check: Check, max: Option<usize>, threads: usize) -> Vec<VerifyReport> {
    if check == Check::All {
        return Check::INDIVIDUAL.iter().map(|&c| run_single(c, max.unwrap_or(c.default_max()), threads)).collect();
    }
    vec![run_single(check, max.unwrap_or(check.default_max()), threads)]
}

fn run_single(check: Check, max: usize, threads: usize) -> VerifyReport {
    let start = Instant::now();
    let outcome = match check {
        Check::All => unreachable!("expanded by run_verify"),
        Check::Symmetry => symmetry(max),
        Check::Recursion => recursion(max),
        Check::AltSum => altsum(max),
        Check::Families => families(max, threads),
        Check::LonesumEquiv => lonesum_equiv(max),
        Check::GammaRoundtrip => gamma_roundtrip(max),
        Check::Phi => phi_check(max),
        Check::Split => split(max),
    };
    VerifyReport {
        check,
        range: outcome.range,
        passed: outcome.witness.is_none(),
        witness: outcome.witness,
        elapsed: start.elapsed(),
        details: outcome.details,
    }
}

fn symmetry(max: usize) -> Outcome {
    let out = Outcome::new(format!("0<=n,k<={max}"));
    let report = check_symmetry(max, max);
    match report.violations.first() {
        Some(&(n, k)) => out.fail(format!("B({n},{k}) != B({k},{n})")),
        None => out,
    }
}

fn recursion(max: usize) -> Outcome {
    let mut out = Outcome::new(format!("0<=n,k<={max}"));
    let table = StirlingTable::new(max + 1);
    let mut memo = RecursionMemo::new();
    for n in 0..=max {
        for k in 0..=max {
            let f = polybernoulli_formula_with(&table, n, k);
            let r = memo.get(n, k);
            if f != r {
                out = out.fail(format!("n={n} k={k} formula={f} recursion={r}"));
            }
        }
    }
    out
}

fn altsum(max: usize) -> Outcome {
    let mut out = Outcome::new(format!("1<=N<={max}"));
    for total in 1..=max {
        let report = check_alternating_sum(total);
        if !report.vanishes() {
            out = out.fail(format!("N={total} sum={}", report.sum));
        }
    }
    out
}

fn member_ok(family: FamilyId, n: usize, k: usize, m: &FamilyMember) -> bool {
    match (family, m) {
        (FamilyId::Lonesum, FamilyMember::Matrix(m)) => is_lonesum(m),
        (FamilyId::GammaFree, FamilyMember::Matrix(m)) => is_gamma_free(m),
        (FamilyId::AcyclicOrientation, FamilyMember::Matrix(m)) => is_acyclic_orientation(m),
        (FamilyId::Callan, FamilyMember::Extended(p)) => is_callan(p),
        (FamilyId::MaxAscending, FamilyMember::Extended(p)) => is_max_ascending(p),
        (FamilyId::Vesztergombi, FamilyMember::Plain(p)) => is_vesztergombi(p, n, k),
        (FamilyId::OrderedPartitionPairs, FamilyMember::Pair(p)) => p.n() == n && p.k() == k,
        _ => false,
    }
}

fn families(max: usize, threads: usize) -> Outcome {
    let mut out = Outcome::new(format!("0<=n,k<={max}, all families"));
    let limits = EnumerationLimits { max_matrix_dim: max, max_perm_size: 2 * max };
    let table = StirlingTable::new(max + 1);
    for family in FamilyId::ALL {
        for n in 0..=max {
            for k in 0..=max {
                let expected = polybernoulli_formula_with(&table, n, k);
                let mut bad: Option<String> = None;
                // membership is re-checked with the plain predicates
                let counted = if threads > 1 {
                    count_family(family, n, k, &limits, threads)
                } else {
                    enumerate_family(family, n, k, &limits, |m| {
                        if bad.is_none() && !member_ok(family, n, k, m) {
                            bad = Some(m.to_string());
                        }
                    })
                };
                match counted {
                    Ok(c) if c != expected => {
                        out = out.fail(format!("{family} n={n} k={k} count={c} expected={expected}"));
                    }
                    Err(e) => out = out.fail(format!("{family} n={n} k={k}: {e}")),
                    Ok(_) => {}
                }
                if let Some(member) = bad {
                    out = out.fail(format!("{family} n={n} k={k} non-member enumerated:\n{member}"));
                }
            }
        }
        out.details.push(format!("{family}: counts agree for 0<=n,k<={max}"));
    }
    out
}

fn lonesum_equiv(max_cells: usize) -> Outcome {
    let mut out = Outcome::new(format!("all shapes with 1<=n*k<={max_cells}"));
    for n in 1..=max_cells {
        for k in 1..=max_cells / n {
            let cells = n * k;
            let mut lonesum = 0u64;
            for word in 0..1u64 << cells {
                let m = Matrix01::from_index(n, k, word);
                let pattern = is_lonesum(&m);
                let oracle = is_lonesum_oracle(&m);
                let young = young_normal_form(&m).is_ok();
                match (oracle, young) {
                    (Ok(o), y) if o == pattern && y == pattern => lonesum += pattern as u64,
                    (o, y) => {
                        return out.fail(format!("pattern={pattern} oracle={o:?} young={y:?}\n{m}"));
                    }
                }
            }
            out.details.push(format!("({n},{k}): {lonesum} lonesum of {}", 1u64 << cells));
        }
    }
    out
}

fn gamma_roundtrip(max: usize) -> Outcome {
    let mut out = Outcome::new(format!("0<=n,k<={max}"));
    let limits = EnumerationLimits { max_matrix_dim: max, ..EnumerationLimits::default() };
    let table = StirlingTable::new(max + 1);
    for n in 0..=max {
        for k in 0..=max {
            let matrices = match family_matrices(FamilyId::GammaFree, n, k, &limits) {
                Ok(ms) => ms,
                Err(e) => return out.fail(format!("n={n} k={k}: {e}")),
            };
            for m in &matrices {
                match gamma_encode(m) {
                    Ok(code) if gamma_decode(&code) == *m => {}
                    Ok(code) => return out.fail(format!("decode(encode(M)) != M for\n{m}\ncode:\n{code}")),
                    Err(e) => return out.fail(format!("encode failed ({e}) for\n{m}")),
                }
            }
            let codes = all_gamma_codes(n, k);
            for code in &codes {
                let m = gamma_decode(code);
                match gamma_encode(&m) {
                    Ok(back) if back == *code => {}
                    _ => return out.fail(format!("encode(decode(c)) != c for\n{code}")),
                }
            }
            let expected = polybernoulli_formula_with(&table, n, k);
            if BigNat::from(matrices.len()) != expected || BigNat::from(codes.len()) != expected {
                return out.fail(format!(
                    "n={n} k={k}: {} matrices, {} codes, expected {expected}",
                    matrices.len(),
                    codes.len()
                ));
            }
            out.details.push(format!("({n},{k}): {} matrices", matrices.len()));
        }
    }
    out
}

fn phi_check(max_total: usize) -> Outcome {
    let mut out = Outcome::new(format!("1<=n, n+k<={max_total}"));
    let limits = EnumerationLimits { max_perm_size: max_total, ..EnumerationLimits::default() };
    for total in 1..=max_total {
        for n in 1..=total {
            let k = total - n;
            let domain: Vec<_> = match family_permutations(FamilyId::Callan, n, k, &limits) {
                Ok(ps) => ps.into_iter().filter(starts_left).collect(),
                Err(e) => return out.fail(format!("n={n} k={k}: {e}")),
            };
            let codomain: BTreeSet<_> = match family_permutations(FamilyId::Callan, n - 1, k + 1, &limits) {
                Ok(ps) => ps.into_iter().filter(starts_right).collect(),
                Err(e) => return out.fail(format!("n={} k={}: {e}", n - 1, k + 1)),
            };
            let mut images = BTreeSet::new();
            for p in &domain {
                let image = match phi(p) {
                    Ok(q) => q,
                    Err(e) => return out.fail(format!("phi failed ({e}) on {p} (n={n} k={k})")),
                };
                match phi_inverse(&image) {
                    Ok(back) if back == *p => {}
                    _ => return out.fail(format!("phi_inverse(phi(p)) != p for {p} (n={n} k={k})")),
                }
                images.insert(image);
            }
            if images != codomain {
                return out.fail(format!("phi is not onto the right-start class at n={n} k={k}"));
            }
            out.details.push(format!("({n},{k}): {} permutations", domain.len()));
        }
    }
    out
}

fn split(max: usize) -> Outcome {
    let mut out = Outcome::new(format!("0<=n<={max}, 1<=k<={max}"));
    let limits = EnumerationLimits { max_matrix_dim: max, ..EnumerationLimits::default() };
    let table = StirlingTable::new(max + 1);
    for n in 0..=max {
        for k in 1..=max {
            let matrices = match family_matrices(FamilyId::GammaFree, n, k, &limits) {
                Ok(ms) => ms,
                Err(e) => return out.fail(format!("n={n} k={k}: {e}")),
            };
            let mut per_j = vec![0u64; n + 1];
            for m in &matrices {
                let s = match recursion_split(m) {
                    Ok(s) => s,
                    Err(e) => return out.fail(format!("split failed ({e}) for\n{m}")),
                };
                match recursion_join(&s, n, k) {
                    Ok(back) if back == *m => {}
                    _ => return out.fail(format!("join(split(M)) != M for\n{m}")),
                }
                per_j[match s {
                    RecursionSplit::Empty { .. } => 0,
                    RecursionSplit::Chosen { j, .. } => j,
                }] += 1;
            }
            for (j, &got) in per_j.iter().enumerate() {
                let expected = if j == 0 {
                    polybernoulli_formula_with(&table, n, k - 1)
                } else {
                    binomial(n, j) * polybernoulli_formula_with(&table, n - j + 1, k - 1)
                };
                if expected != got {
                    return out.fail(format!("n={n} k={k} j={j}: {got} matrices, expected {expected}"));
                }
            }
            let terms: Vec<String> = per_j.iter().map(|c| c.to_string()).collect();
            out.details.push(format!("({n},{k}): {} = {}", matrices.len(), terms.join(" + ")));
        }
    }
    out
}
