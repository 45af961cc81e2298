//! Cycle types (partitions of n) as conjugacy-class labels, parity, split
//! detection, and the distinguished families `U_n`, `T`, `T'(I)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numtheory::{a_of_n, Interval};

/// Largest degree for which partitions are enumerated.
pub const MAX_ENUM_DEGREE: usize = 60;

/// A partition of `n`, stored with parts in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl CycleType {
    /// Builds a cycle type from parts in any order.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Domain("a cycle type needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Domain("cycle lengths must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    /// Same as [`CycleType::new`], additionally checking the degree.
    pub fn with_degree(parts: Vec<u32>, n: usize) -> Result<Self> {
        let t = Self::new(parts)?;
        if t.degree() != n {
            return Err(Error::DegreeMismatch { expected: n, got: t.degree() });
        }
        Ok(t)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn num_cycles(&self) -> usize {
        self.parts.len()
    }

    pub fn parity(&self) -> Parity {
        if (self.degree() - self.parts.len()).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// True iff all parts are odd and pairwise distinct, i.e. the S_n class
    /// splits into two A_n classes.
    pub fn is_split(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1) && self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// Order of any permutation of this type.
    pub fn element_order(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
    }
}

pub fn parity(t: &CycleType) -> Parity {
    t.parity()
}

pub fn is_split(t: &CycleType) -> bool {
    t.is_split()
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Parses the bracket syntax `[4,4,3]`; order of parts is irrelevant.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("cycle type must look like [a,b,...], got {s:?}")))?;
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad cycle length {p:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        CycleType::new(parts)
    }
}

impl Serialize for CycleType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CycleType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SplitTag {
    NotSplit,
    Plus,
    Minus,
}

/// A conjugacy class of S_n or A_n: a cycle type plus, for split A_n types,
/// which of the two A_n classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassId {
    pub ctype: CycleType,
    pub tag: SplitTag,
}

impl ClassId {
    pub fn new(ctype: CycleType, tag: SplitTag) -> Result<Self> {
        if tag != SplitTag::NotSplit && !ctype.is_split() {
            return Err(Error::NotSplit(ctype.to_string()));
        }
        Ok(ClassId { ctype, tag })
    }

    pub fn unsplit(ctype: CycleType) -> Self {
        ClassId { ctype, tag: SplitTag::NotSplit }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ctype)?;
        match self.tag {
            SplitTag::NotSplit => Ok(()),
            SplitTag::Plus => f.write_str("+"),
            SplitTag::Minus => f.write_str("-"),
        }
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(t) = s.strip_suffix('+') {
            ClassId::new(t.parse()?, SplitTag::Plus)
        } else if let Some(t) = s.strip_suffix('-') {
            ClassId::new(t.parse()?, SplitTag::Minus)
        } else {
            Ok(ClassId::unsplit(s.parse()?))
        }
    }
}

impl Serialize for ClassId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ClassId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Sym,
    Alt,
}

/// S_n or A_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId {
    pub kind: GroupKind,
    pub degree: usize,
}

impl GroupId {
    pub fn new(kind: GroupKind, degree: usize) -> Result<Self> {
        let min = match kind {
            GroupKind::Sym => 3,
            GroupKind::Alt => 4,
        };
        if degree < min {
            return Err(Error::Domain(format!("{kind:?} needs degree at least {min}, got {degree}")));
        }
        Ok(GroupId { kind, degree })
    }

    pub fn sym(degree: usize) -> Result<Self> {
        Self::new(GroupKind::Sym, degree)
    }

    pub fn alt(degree: usize) -> Result<Self> {
        Self::new(GroupKind::Alt, degree)
    }

    pub fn is_sym(&self) -> bool {
        self.kind == GroupKind::Sym
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            GroupKind::Sym => 'S',
            GroupKind::Alt => 'A',
        };
        write!(f, "{c}{}", self.degree)
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "s" | "sym" | "symmetric" => Ok(GroupKind::Sym),
            "a" | "alt" | "alternating" => Ok(GroupKind::Alt),
            other => Err(Error::Parse(format!("unknown group kind {other:?} (expected sym or alt)"))),
        }
    }
}

impl FromStr for GroupId {
    type Err = Error;

    /// Parses `S12` or `A9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad group name {s:?} (expected e.g. S12 or A9)"));
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('S') | Some('s') => GroupKind::Sym,
            Some('A') | Some('a') => GroupKind::Alt,
            _ => return Err(bad()),
        };
        let degree = chars.as_str().parse().map_err(|_| bad())?;
        GroupId::new(kind, degree)
    }
}

impl Serialize for GroupId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting at `[n]`.
pub fn partitions(n: usize) -> Result<Vec<CycleType>> {
    if n == 0 || n > MAX_ENUM_DEGREE {
        return Err(Error::Domain(format!("partitions are enumerated for 1 <= n <= {MAX_ENUM_DEGREE}, got {n}")));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n as u32, n as u32, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<CycleType>) {
    if remaining == 0 {
        out.push(CycleType::from_sorted_unchecked(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

fn check_family_degree(n: usize) -> Result<()> {
    if n < 5 {
        return Err(Error::Domain(format!("type families need n >= 5, got {n}")));
    }
    Ok(())
}

/// `U_n = {[k, n−k] : 2 ≤ k < n/2, gcd(k, n) = 1}`.
pub fn u_set(n: usize) -> Result<Vec<CycleType>> {
    check_family_degree(n)?;
    Ok((2..n)
        .filter(|&k| 2 * k < n && k.gcd(&n) == 1)
        .map(|k| CycleType::from_sorted_unchecked(vec![(n - k) as u32, k as u32]))
        .collect())
}

/// `T = {[i, (a−1)i, n − a·i] : 1 ≤ i < (n−1)/a, gcd(i, n) = 1}` with `a = a(n)`.
pub fn t_set(n: usize) -> Result<Vec<CycleType>> {
    check_family_degree(n)?;
    let a = a_of_n(n as u64)? as usize;
    // i < (n-1)/a  <=>  a*i < n-1
    Ok((1..n)
        .take_while(|&i| a * i < n - 1)
        .filter(|&i| i.gcd(&n) == 1)
        .map(|i| CycleType::new(vec![i as u32, ((a - 1) * i) as u32, (n - a * i) as u32]).expect("positive parts"))
        .collect())
}

/// `T'(I) = {[m−i, m−2i, m+3i] : i ∈ I, gcd(i, n) = 1}` for `n = 3m`, `6 | n`.
pub fn t_prime_set(n: usize, interval: &Interval) -> Result<Vec<CycleType>> {
    if !n.is_multiple_of(6) || n < 12 {
        return Err(Error::Domain(format!("T' needs 6 | n and n >= 12, got {n}")));
    }
    let m = (n / 3) as i64;
    let allowed = Interval::closed_open(Rational64::from_integer(1), Rational64::new(m, 2))?;
    if !interval.is_subset_of(&allowed) {
        return Err(Error::Domain(format!("interval {interval} is not inside {allowed}")));
    }
    Ok(interval
        .positive_integers()
        .filter(|&i| (i as usize).gcd(&n) == 1)
        .map(|i| CycleType::new(vec![(m - i) as u32, (m - 2 * i) as u32, (m + 3 * i) as u32]).expect("positive parts"))
        .collect())
}

/// Conjugacy classes of `g`, ordered by partition then tag.
pub fn class_universe(g: GroupId) -> Result<Vec<ClassId>> {
    let parts = partitions(g.degree)?;
    Ok(match g.kind {
        GroupKind::Sym => parts.into_iter().map(ClassId::unsplit).collect(),
        GroupKind::Alt => {
            let mut out = Vec::new();
            for t in parts.into_iter().filter(CycleType::is_even) {
                if t.is_split() {
                    out.push(ClassId { ctype: t.clone(), tag: SplitTag::Plus });
                    out.push(ClassId { ctype: t, tag: SplitTag::Minus });
                } else {
                    out.push(ClassId::unsplit(t));
                }
            }
            out
        }
    })
}
