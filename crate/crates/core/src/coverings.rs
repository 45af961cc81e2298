//! Basic sets: verification, the explicit constructions, and exact γ by
//! branch-and-bound set cover over a catalog.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{class_coverage, Catalog, DescriptorKind, SubgroupDescriptor};
use crate::cycle_types::{class_universe, ClassId, GroupId, GroupKind};
use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, factorize, is_prime, smallest_prime_divisor};

/// Subgroup classes proposed to generate a normal covering of `group`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicSet {
    pub group: GroupId,
    pub components: Vec<SubgroupDescriptor>,
    pub provenance: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasicSetFile {
    group: GroupId,
    #[serde(default)]
    provenance: String,
    subgroups: Vec<DescriptorKind>,
}

impl BasicSet {
    /// Checks distinctness and that each component is a proper subgroup
    /// class of `group`.
    pub fn new(group: GroupId, components: Vec<SubgroupDescriptor>, provenance: impl Into<String>) -> Result<Self> {
        // Catalog::new applies the same per-group admissibility rules.
        let checked = Catalog::new(group, components, false)?;
        Ok(BasicSet { group, components: checked.descriptors, provenance: provenance.into() })
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn to_json(&self) -> Result<String> {
        let file = BasicSetFile {
            group: self.group,
            provenance: self.provenance.clone(),
            subgroups: self.components.iter().map(|d| d.kind().clone()).collect(),
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: BasicSetFile = serde_json::from_str(text)?;
        let components = file
            .subgroups
            .into_iter()
            .map(|k| SubgroupDescriptor::new(file.group.degree, k))
            .collect::<Result<Vec<_>>>()?;
        BasicSet::new(file.group, components, file.provenance)
    }
}

impl fmt::Display for BasicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "{} {{{}}}", self.group, parts.join(", "))
    }
}

/// Outcome of checking a basic set against every conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub group: GroupId,
    pub covered: bool,
    pub uncovered: Vec<ClassId>,
    /// Classes met by each component, keyed by descriptor mini-syntax.
    pub coverage_matrix: IndexMap<String, BTreeSet<ClassId>>,
}

pub fn verify_basic_set(b: &BasicSet) -> Result<CoverReport> {
    let rows: Vec<BTreeSet<ClassId>> =
        b.components.par_iter().map(|d| class_coverage(d, b.group)).collect::<Result<_>>()?;
    let uncovered: Vec<ClassId> = class_universe(b.group)?
        .into_iter()
        .filter(|c| !rows.iter().any(|r| r.contains(c)))
        .collect();
    Ok(CoverReport {
        group: b.group,
        covered: uncovered.is_empty(),
        uncovered,
        coverage_matrix: b.components.iter().map(ToString::to_string).zip(rows).collect(),
    })
}

/// The explicit basic-set constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `{A, S_k×S_{n−k} : 1 ≤ k < n/2, p ∤ k}` for composite n, where A is
    /// `S_p≀S_{n/p}` (block = p) or `S_{n/p}≀S_p` (block = n/p).
    UpperSym { n: usize, block: Option<usize> },
    /// The intersection of the previous set with A_n, n even.
    UpperAltEven { n: usize, block: Option<usize> },
    /// `{K∩A_n, [S_k×S_{n−k}]∩A_n : 1 ≤ k ≤ ⌊n/3⌋}` for odd n, with K =
    /// AGL_1(n) when n is prime and a wreath product with the given block
    /// size otherwise.
    UpperAltOdd { n: usize, block: Option<usize> },
    /// `{AGL_1(p), S_k×S_{p−k} : 2 ≤ k ≤ (p−1)/2}`.
    SymPrime { p: usize },
    /// `{S_p≀S_{p^{α−1}}, S_k×S_{n−k} : 1 ≤ k < n/2, p ∤ k}`, n = p^α, α ≥ 2.
    PrimePower { p: usize, alpha: u32, kind: GroupKind },
    /// `{A, S_k×S_{n−k} : 1 ≤ k < n/2, p, q ∤ k}`, n = pq, A = S_p≀S_q or S_q≀S_p.
    TwoPrimes { p: usize, q: usize, kind: GroupKind, block: Option<usize> },
    /// `{S_p≀S_{n/p}, S_q≀S_{n/q}, S_k×S_{n−k} : 1 ≤ k < n/2, p, q ∤ k}`,
    /// n = p^α q^β with (α, β) ≠ (1, 1).
    TwoPrimePowers { p: usize, q: usize, alpha: u32, beta: u32, kind: GroupKind },
    /// `{[S_4×S_5]∩A_9}` plus both classes of PΓL_2(8).
    SpecialA9,
    /// `{S_2≀S_5, S_3×S_7, S_9}`.
    SpecialS10,
    /// `{A_10, [S_2×S_9]∩A_11, [S_3×S_8]∩A_11, M_11}`.
    SpecialA11,
}

/// Names accepted by [`Family::from_params`].
pub const FAMILY_NAMES: [&str; 10] = [
    "upper_sym",
    "upper_alt_even",
    "upper_alt_odd",
    "sym_prime",
    "prime_power",
    "two_primes",
    "two_prime_powers",
    "special_a9",
    "special_s10",
    "special_a11",
];

/// Loosely typed parameters, as they arrive from a command line.
#[derive(Debug, Clone, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub alpha: Option<u32>,
    pub beta: Option<u32>,
    pub kind: Option<GroupKind>,
    pub block: Option<usize>,
}

/// A constructed basic set with the size its construction predicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub basic_set: BasicSet,
    pub predicted_size: usize,
}

fn hyp(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Hypothesis(msg()))
    }
}

fn checked_pow(p: usize, e: u32) -> Result<usize> {
    p.checked_pow(e).filter(|&n| n <= crate::permgroup::MAX_DEGREE).ok_or_else(|| {
        Error::Domain(format!("{p}^{e} exceeds the supported degree {}", crate::permgroup::MAX_DEGREE))
    })
}

fn phi(n: usize) -> usize {
    euler_phi(n as u64).expect("n >= 1") as usize
}

impl Family {
    pub fn from_params(name: &str, params: &FamilyParams) -> Result<Family> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| Error::Hypothesis(format!("{name} needs --{what}")))
        };
        let need_u32 = |v: Option<u32>, what: &str| {
            v.ok_or_else(|| Error::Hypothesis(format!("{name} needs --{what}")))
        };
        let kind = params.kind.unwrap_or(GroupKind::Sym);
        Ok(match name {
            "upper_sym" => Family::UpperSym { n: need(params.n, "n")?, block: params.block },
            "upper_alt_even" => Family::UpperAltEven { n: need(params.n, "n")?, block: params.block },
            "upper_alt_odd" => Family::UpperAltOdd { n: need(params.n, "n")?, block: params.block },
            "sym_prime" => Family::SymPrime { p: need(params.p.or(params.n), "p")? },
            "prime_power" => Family::PrimePower { p: need(params.p, "p")?, alpha: need_u32(params.alpha, "alpha")?, kind },
            "two_primes" => Family::TwoPrimes { p: need(params.p, "p")?, q: need(params.q, "q")?, kind, block: params.block },
            "two_prime_powers" => Family::TwoPrimePowers {
                p: need(params.p, "p")?,
                q: need(params.q, "q")?,
                alpha: need_u32(params.alpha, "alpha")?,
                beta: need_u32(params.beta, "beta")?,
                kind,
            },
            "special_a9" => Family::SpecialA9,
            "special_s10" => Family::SpecialS10,
            "special_a11" => Family::SpecialA11,
            _ => return Err(Error::Parse(format!("unknown family {name:?}; expected one of {}", FAMILY_NAMES.join(", ")))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::UpperSym { .. } => "upper_sym",
            Family::UpperAltEven { .. } => "upper_alt_even",
            Family::UpperAltOdd { .. } => "upper_alt_odd",
            Family::SymPrime { .. } => "sym_prime",
            Family::PrimePower { .. } => "prime_power",
            Family::TwoPrimes { .. } => "two_primes",
            Family::TwoPrimePowers { .. } => "two_prime_powers",
            Family::SpecialA9 => "special_a9",
            Family::SpecialS10 => "special_s10",
            Family::SpecialA11 => "special_a11",
        }
    }

    /// Builds the basic set after checking the construction's hypotheses.
    pub fn construct(&self) -> Result<Construction> {
        match *self {
            Family::UpperSym { n, block } => upper_composite(n, block, GroupKind::Sym),
            Family::UpperAltEven { n, block } => {
                hyp(n % 2 == 0 && n >= 4, || format!("upper_alt_even needs even n >= 4, got {n}"))?;
                upper_composite(n, block, GroupKind::Alt)
            }
            Family::UpperAltOdd { n, block } => upper_alt_odd(n, block),
            Family::SymPrime { p } => {
                hyp(p >= 5 && is_prime(p as u64), || format!("sym_prime needs a prime p >= 5, got {p}"))?;
                let mut comps = vec![SubgroupDescriptor::named(p, &format!("AGL1({p})"), 1)?];
                for k in 2..=(p - 1) / 2 {
                    comps.push(SubgroupDescriptor::intransitive(p, k)?);
                }
                build(GroupId::sym(p)?, comps, format!("sym_prime: AGL1({p}) and S_k x S_(p-k), 2 <= k <= (p-1)/2"), (p - 1) / 2)
            }
            Family::PrimePower { p, alpha, kind } => {
                hyp(is_prime(p as u64), || format!("prime_power needs p prime, got {p}"))?;
                hyp(alpha >= 2, || format!("prime_power needs alpha >= 2, got {alpha}"))?;
                let n = checked_pow(p, alpha)?;
                let mut comps = vec![SubgroupDescriptor::imprimitive(n, p, n / p)?];
                comps.extend(intransitive_avoiding(n, &[p])?);
                let g = GroupId::new(kind, n)?;
                build(g, lift(g, comps)?, format!("prime_power: S_{p} wr S_{} and S_k x S_(n-k), p does not divide k", n / p), phi(n) / 2 + 1)
            }
            Family::TwoPrimes { p, q, kind, block } => {
                hyp(is_prime(p as u64) && is_prime(q as u64) && p < q, || {
                    format!("two_primes needs primes p < q, got p={p}, q={q}")
                })?;
                let n = p * q;
                let b = block.unwrap_or(p);
                hyp(b == p || b == q, || format!("two_primes block size must be p or q, got {b}"))?;
                let mut comps = vec![SubgroupDescriptor::imprimitive(n, b, n / b)?];
                comps.extend(intransitive_avoiding(n, &[p, q])?);
                let g = GroupId::new(kind, n)?;
                build(g, lift(g, comps)?, format!("two_primes: S_{b} wr S_{} and S_k x S_(n-k), p, q do not divide k", n / b), phi(n) / 2 + 1)
            }
            Family::TwoPrimePowers { p, q, alpha, beta, kind } => {
                hyp(is_prime(p as u64) && is_prime(q as u64) && p < q, || {
                    format!("two_prime_powers needs primes p < q, got p={p}, q={q}")
                })?;
                hyp(alpha >= 1 && beta >= 1 && alpha + beta >= 3, || {
                    format!("two_prime_powers needs alpha, beta >= 1 and alpha + beta >= 3, got alpha={alpha}, beta={beta}")
                })?;
                let n = checked_pow(p, alpha)?
                    .checked_mul(checked_pow(q, beta)?)
                    .filter(|&n| n <= crate::permgroup::MAX_DEGREE)
                    .ok_or_else(|| Error::Domain("degree too large".into()))?;
                let mut comps = vec![SubgroupDescriptor::imprimitive(n, p, n / p)?, SubgroupDescriptor::imprimitive(n, q, n / q)?];
                comps.extend(intransitive_avoiding(n, &[p, q])?);
                let g = GroupId::new(kind, n)?;
                build(
                    g,
                    lift(g, comps)?,
                    format!("two_prime_powers: S_{p} wr S_{}, S_{q} wr S_{} and S_k x S_(n-k), p, q do not divide k", n / p, n / q),
                    phi(n) / 2 + 2,
                )
            }
            Family::SpecialA9 => build(
                GroupId::alt(9)?,
                vec![
                    SubgroupDescriptor::intersect_alt(SubgroupDescriptor::intransitive(9, 4)?)?,
                    SubgroupDescriptor::named(9, "PGammaL2(8)", 1)?,
                    SubgroupDescriptor::named(9, "PGammaL2(8)", 2)?,
                ],
                "special_a9: (S_4 x S_5) n A_9 and both classes of PGammaL2(8)".into(),
                3,
            ),
            Family::SpecialS10 => build(
                GroupId::sym(10)?,
                vec![
                    SubgroupDescriptor::imprimitive(10, 2, 5)?,
                    SubgroupDescriptor::intransitive(10, 3)?,
                    SubgroupDescriptor::intransitive(10, 1)?,
                ],
                "special_s10: S_2 wr S_5, S_3 x S_7, S_9".into(),
                3,
            ),
            Family::SpecialA11 => {
                let alt = |k| SubgroupDescriptor::intersect_alt(SubgroupDescriptor::intransitive(11, k)?);
                build(
                    GroupId::alt(11)?,
                    vec![alt(1)?, alt(2)?, alt(3)?, SubgroupDescriptor::named(11, "M11", 1)?],
                    "special_a11: A_10, (S_2 x S_9) n A_11, (S_3 x S_8) n A_11, M11".into(),
                    4,
                )
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parameter-free families only; the others need [`Family::from_params`].
    fn from_str(s: &str) -> Result<Self> {
        Family::from_params(s, &FamilyParams::default())
    }
}

fn build(g: GroupId, comps: Vec<SubgroupDescriptor>, provenance: String, predicted: usize) -> Result<Construction> {
    Ok(Construction { basic_set: BasicSet::new(g, comps, provenance)?, predicted_size: predicted })
}

/// `S_k×S_{n−k}` for `1 ≤ k < n/2` with no listed prime dividing k.
fn intransitive_avoiding(n: usize, primes: &[usize]) -> Result<Vec<SubgroupDescriptor>> {
    (1..n)
        .take_while(|k| 2 * k < n)
        .filter(|k| primes.iter().all(|p| k % p != 0))
        .map(|k| SubgroupDescriptor::intransitive(n, k))
        .collect()
}

/// Intersects every component with A_n when `g` is alternating.
fn lift(g: GroupId, comps: Vec<SubgroupDescriptor>) -> Result<Vec<SubgroupDescriptor>> {
    match g.kind {
        GroupKind::Sym => Ok(comps),
        GroupKind::Alt => comps.into_iter().map(SubgroupDescriptor::intersect_alt).collect(),
    }
}

fn upper_composite(n: usize, block: Option<usize>, kind: GroupKind) -> Result<Construction> {
    hyp(n >= 4 && !is_prime(n as u64), || format!("the wreath construction needs composite n >= 4, got {n}"))?;
    let p = smallest_prime_divisor(n as u64).expect("n >= 4") as usize;
    let b = block.unwrap_or(p);
    hyp(b == p || b == n / p, || format!("block size must be {p} or {}, got {b}", n / p))?;
    let mut comps = vec![SubgroupDescriptor::imprimitive(n, b, n / b)?];
    comps.extend(intransitive_avoiding(n, &[p])?);
    let predicted = if n % 2 == 1 { 1 + (n / p) * (p - 1) / 2 } else { (n + 4) / 4 };
    let g = GroupId::new(kind, n)?;
    let label = if kind == GroupKind::Sym { "upper_sym" } else { "upper_alt_even" };
    build(
        g,
        lift(g, comps)?,
        format!("{label}: S_{b} wr S_{} and S_k x S_(n-k), 1 <= k < n/2, {p} does not divide k", n / b),
        predicted,
    )
}

fn upper_alt_odd(n: usize, block: Option<usize>) -> Result<Construction> {
    hyp(n >= 5 && n % 2 == 1, || format!("upper_alt_odd needs odd n >= 5, got {n}"))?;
    let k_group = if is_prime(n as u64) {
        hyp(block.is_none(), || format!("n = {n} is prime; K is AGL1({n}) and takes no block size"))?;
        SubgroupDescriptor::named(n, &format!("AGL1({n})"), 1)?
    } else {
        let b = match block {
            Some(b) => b,
            None => smallest_prime_divisor(n as u64).expect("n >= 5") as usize,
        };
        hyp(b >= 2 && b < n && n.is_multiple_of(b), || format!("block size {b} must be a proper divisor of {n}"))?;
        SubgroupDescriptor::imprimitive(n, b, n / b)?
    };
    let mut comps = vec![SubgroupDescriptor::intersect_alt(k_group.clone())?];
    for k in 1..=n / 3 {
        comps.push(SubgroupDescriptor::intersect_alt(SubgroupDescriptor::intransitive(n, k)?)?);
    }
    build(
        GroupId::alt(n)?,
        comps,
        format!("upper_alt_odd: K n A_n with K = {k_group} and (S_k x S_(n-k)) n A_n, 1 <= k <= n/3"),
        (n + 3) / 3,
    )
}

/// Every construction that applies at degree `n`, with default choices and
/// each admissible wreath block size.
pub fn applicable_families(n: usize) -> Vec<Family> {
    let mut out = Vec::new();
    if n >= 4 && !is_prime(n as u64) {
        let p = smallest_prime_divisor(n as u64).expect("n >= 2") as usize;
        let mut blocks = vec![p];
        if n / p != p {
            blocks.push(n / p);
        }
        for &b in &blocks {
            out.push(Family::UpperSym { n, block: Some(b) });
            if n.is_multiple_of(2) {
                out.push(Family::UpperAltEven { n, block: Some(b) });
            }
        }
    }
    if n >= 5 && n % 2 == 1 {
        if is_prime(n as u64) {
            if crate::data::library().map(|l| l.record(&format!("AGL1({n})")).is_ok()).unwrap_or(false) {
                out.push(Family::UpperAltOdd { n, block: None });
            }
        } else {
            for (q, _) in factorize(n as u64) {
                out.push(Family::UpperAltOdd { n, block: Some(q as usize) });
            }
        }
    }
    if n >= 5 && is_prime(n as u64) && crate::data::library().map(|l| l.record(&format!("AGL1({n})")).is_ok()).unwrap_or(false) {
        out.push(Family::SymPrime { p: n });
    }
    let f = factorize(n as u64);
    let kinds = [GroupKind::Sym, GroupKind::Alt];
    match f.as_slice() {
        [(p, a)] if *a >= 2 => {
            for kind in kinds {
                out.push(Family::PrimePower { p: *p as usize, alpha: *a, kind });
            }
        }
        [(p, 1), (q, 1)] => {
            for kind in kinds {
                for b in [*p as usize, *q as usize] {
                    out.push(Family::TwoPrimes { p: *p as usize, q: *q as usize, kind, block: Some(b) });
                }
            }
        }
        [(p, a), (q, b)] => {
            for kind in kinds {
                out.push(Family::TwoPrimePowers { p: *p as usize, q: *q as usize, alpha: *a, beta: *b, kind });
            }
        }
        _ => {}
    }
    out
}

/// Fixed-width bitset over class indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    /// `|other \ self|`.
    fn count_new(&self, other: &Bits) -> u32 {
        self.0.iter().zip(&other.0).map(|(a, b)| (b & !a).count_ones()).sum()
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

struct CoverProblem {
    universe: Vec<ClassId>,
    rows: Vec<Bits>,
}

impl CoverProblem {
    fn new(catalog: &Catalog) -> Result<Self> {
        let universe = class_universe(catalog.group)?;
        let index: IndexMap<&ClassId, usize> = universe.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let rows = catalog
            .coverage_rows()?
            .into_iter()
            .map(|row| {
                let mut bits = Bits::zeros(universe.len());
                for c in &row {
                    bits.set(index[c]);
                }
                bits
            })
            .collect();
        Ok(CoverProblem { universe, rows })
    }

    fn full(&self) -> u32 {
        self.universe.len() as u32
    }

    fn coverers(&self, class: usize) -> Vec<usize> {
        (0..self.rows.len()).filter(|&r| self.rows[r].get(class)).collect()
    }

    fn unique_coverers(&self) -> Result<Vec<usize>> {
        let mut forced = BTreeSet::new();
        for (i, c) in self.universe.iter().enumerate() {
            match self.coverers(i).as_slice() {
                [] => return Err(Error::Catalog(format!("no catalog entry meets class {c}"))),
                [r] => {
                    forced.insert(*r);
                }
                _ => {}
            }
        }
        Ok(forced.into_iter().collect())
    }

    fn greedy(&self, seed: &[usize]) -> Vec<usize> {
        let mut chosen = seed.to_vec();
        let mut covered = Bits::zeros(self.universe.len());
        for &r in seed {
            covered.or_assign(&self.rows[r]);
        }
        while covered.count() < self.full() {
            let best = (0..self.rows.len())
                .max_by_key(|&r| (covered.count_new(&self.rows[r]), std::cmp::Reverse(r)))
                .expect("non-empty catalog");
            chosen.push(best);
            covered.or_assign(&self.rows[best]);
        }
        chosen
    }

    /// All minimum covers, as sorted row-index lists.
    fn all_optimal(&self) -> Result<Vec<Vec<usize>>> {
        let forced = self.unique_coverers()?;
        let mut search = Search {
            problem: self,
            best: self.greedy(&forced).len(),
            solutions: Vec::new(),
        };
        let mut covered = Bits::zeros(self.universe.len());
        for &r in &forced {
            covered.or_assign(&self.rows[r]);
        }
        let mut allowed = vec![true; self.rows.len()];
        let mut chosen = forced.clone();
        search.dfs(&mut chosen, &covered, &mut allowed);
        let mut sols: Vec<Vec<usize>> = search
            .solutions
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        sols.sort();
        sols.dedup();
        Ok(sols)
    }
}

struct Search<'a> {
    problem: &'a CoverProblem,
    best: usize,
    solutions: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn dfs(&mut self, chosen: &mut Vec<usize>, covered: &Bits, allowed: &mut [bool]) {
        let p = self.problem;
        let remaining = p.full() - covered.count();
        if remaining == 0 {
            if chosen.len() < self.best {
                self.best = chosen.len();
                self.solutions.clear();
            }
            if chosen.len() == self.best {
                self.solutions.push(chosen.clone());
            }
            return;
        }
        let max_gain = (0..p.rows.len())
            .filter(|&r| allowed[r] && !chosen.contains(&r))
            .map(|r| covered.count_new(&p.rows[r]))
            .max()
            .unwrap_or(0);
        if max_gain == 0 {
            return;
        }
        let lower = chosen.len() + remaining.div_ceil(max_gain) as usize;
        if lower > self.best {
            return;
        }
        // branch on the uncovered class with the fewest admissible coverers
        let mut pivot: Option<Vec<usize>> = None;
        for i in 0..p.universe.len() {
            if covered.get(i) {
                continue;
            }
            let cands: Vec<usize> = (0..p.rows.len())
                .filter(|&r| allowed[r] && !chosen.contains(&r) && p.rows[r].get(i))
                .collect();
            if cands.is_empty() {
                return;
            }
            if pivot.as_ref().is_none_or(|c| cands.len() < c.len()) {
                pivot = Some(cands);
            }
        }
        let cands = pivot.expect("some class is uncovered");
        let mut excluded = Vec::new();
        for r in cands {
            chosen.push(r);
            let mut next = covered.clone();
            next.or_assign(&p.rows[r]);
            self.dfs(chosen, &next, allowed);
            chosen.pop();
            // later branches must avoid r, so each cover is produced once
            allowed[r] = false;
            excluded.push(r);
        }
        for r in excluded {
            allowed[r] = true;
        }
    }
}

/// Catalog entries that are the only coverer of some class; every basic set
/// drawn from a complete catalog contains them.
pub fn mandatory_components(g: GroupId, catalog: &Catalog) -> Result<Vec<SubgroupDescriptor>> {
    check_catalog(g, catalog)?;
    if !catalog.complete {
        return Err(Error::Catalog(format!("the {g} catalog is not marked complete")));
    }
    let problem = CoverProblem::new(catalog)?;
    Ok(problem.unique_coverers()?.into_iter().map(|r| catalog.descriptors[r].clone()).collect())
}

fn check_catalog(g: GroupId, catalog: &Catalog) -> Result<()> {
    if catalog.group != g {
        return Err(Error::Catalog(format!("catalog is for {}, not {g}", catalog.group)));
    }
    Ok(())
}

/// Result of an exact set-cover computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaResult {
    pub gamma: usize,
    pub witness: BasicSet,
    /// False when the catalog is not known to be complete, in which case
    /// `gamma` is only an upper bound.
    pub exact: bool,
}

/// Every minimum-size basic set drawn from `catalog`, each with components
/// in catalog order, listed in lexicographic order of their sorted
/// descriptors.
pub fn all_optimal_covers(g: GroupId, catalog: &Catalog) -> Result<Vec<BasicSet>> {
    check_catalog(g, catalog)?;
    let problem = CoverProblem::new(catalog)?;
    let mut sets: Vec<Vec<SubgroupDescriptor>> = problem
        .all_optimal()?
        .into_iter()
        .map(|rows| rows.into_iter().map(|r| catalog.descriptors[r].clone()).collect())
        .collect();
    sets.sort_by(|a, b| {
        let mut a = a.clone();
        let mut b = b.clone();
        a.sort();
        b.sort();
        a.cmp(&b)
    });
    sets.into_iter().map(|comps| BasicSet::new(g, comps, format!("minimum cover over the {g} catalog"))).collect()
}

/// Minimum number of catalog classes whose conjugates cover `g`.
pub fn exact_gamma(g: GroupId, catalog: &Catalog) -> Result<GammaResult> {
    let optimal = all_optimal_covers(g, catalog)?;
    let witness = optimal.into_iter().next().ok_or_else(|| Error::Catalog(format!("the {g} catalog admits no cover")))?;
    Ok(GammaResult { gamma: witness.len(), witness, exact: catalog.complete })
}
