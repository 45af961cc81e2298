//! Subgroup-class descriptors with exact cycle-type membership, and the
//! curated catalogs of maximal subgroups used for exact γ.
//!
//! Membership is decided combinatorially for the intransitive and
//! imprimitive families and by spectrum lookup for named groups. Every rule
//! has an exhaustive counterpart ([`exhaustive_class_coverage`]) built from
//! explicit generators, which the test suite uses as an oracle.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cycle_types::{partitions, ClassId, CycleType, GroupId, GroupKind, SplitTag};
use crate::data;
use crate::error::{Error, Result};
use crate::permgroup::{self, Perm};

fn default_class() -> u8 {
    1
}

/// The shape of a subgroup class, without its degree. Serializes to the
/// catalog JSON form, e.g. `{"kind":"imprimitive","b":3,"c":4}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DescriptorKind {
    /// `S_k × S_{n−k}`, the stabilizer of a k-subset.
    Intransitive { k: usize },
    /// `S_b ≀ S_c`: c blocks of size b.
    Imprimitive { b: usize, c: usize },
    #[serde(rename = "alternating")]
    FullAlternating,
    Named {
        name: String,
        #[serde(default = "default_class")]
        class: u8,
    },
    /// The intersection of `inner` with A_n.
    IntersectAlt { inner: Box<DescriptorKind> },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupDescriptor {
    degree: usize,
    kind: DescriptorKind,
}

impl SubgroupDescriptor {
    pub fn new(degree: usize, kind: DescriptorKind) -> Result<Self> {
        validate(degree, &kind)?;
        Ok(SubgroupDescriptor { degree, kind })
    }

    pub fn intransitive(degree: usize, k: usize) -> Result<Self> {
        Self::new(degree, DescriptorKind::Intransitive { k })
    }

    pub fn imprimitive(degree: usize, b: usize, c: usize) -> Result<Self> {
        Self::new(degree, DescriptorKind::Imprimitive { b, c })
    }

    pub fn alternating(degree: usize) -> Result<Self> {
        Self::new(degree, DescriptorKind::FullAlternating)
    }

    pub fn named(degree: usize, name: &str, class: u8) -> Result<Self> {
        Self::new(degree, DescriptorKind::Named { name: name.to_string(), class })
    }

    /// `inner ∩ A_n`.
    pub fn intersect_alt(inner: SubgroupDescriptor) -> Result<Self> {
        Self::new(inner.degree, DescriptorKind::IntersectAlt { inner: Box::new(inner.kind) })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> &DescriptorKind {
        &self.kind
    }

    /// The wrapped descriptor of an `IntersectAlt`.
    pub fn inner(&self) -> Option<SubgroupDescriptor> {
        match &self.kind {
            DescriptorKind::IntersectAlt { inner } => {
                Some(SubgroupDescriptor { degree: self.degree, kind: (**inner).clone() })
            }
            _ => None,
        }
    }

    /// Whether the subgroup is transitive on the n points.
    pub fn is_transitive(&self) -> bool {
        match &self.kind {
            DescriptorKind::Intransitive { .. } => false,
            DescriptorKind::IntersectAlt { inner } => {
                SubgroupDescriptor { degree: self.degree, kind: (**inner).clone() }.is_transitive()
            }
            _ => true,
        }
    }

    /// Parses the mini-syntax: `intransitive:k`, `imprimitive:b,c`,
    /// `alternating`, `named:NAME[:class]`, and `alt:<descriptor>`.
    pub fn parse(degree: usize, s: &str) -> Result<Self> {
        Self::new(degree, parse_kind(s.trim())?)
    }
}

fn parse_kind(s: &str) -> Result<DescriptorKind> {
    let bad = || Error::Parse(format!("cannot parse descriptor {s:?}"));
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
    let (head, rest) = match s.split_once(':') {
        Some((h, r)) => (h.trim(), Some(r)),
        None => (s.trim(), None),
    };
    match (head, rest) {
        ("alternating", None) => Ok(DescriptorKind::FullAlternating),
        ("intransitive", Some(k)) => Ok(DescriptorKind::Intransitive { k: num(k)? }),
        ("imprimitive", Some(bc)) => {
            let (b, c) = bc.split_once(',').ok_or_else(bad)?;
            Ok(DescriptorKind::Imprimitive { b: num(b)?, c: num(c)? })
        }
        ("named", Some(rest)) => {
            let (name, class) = match rest.rsplit_once(':') {
                Some((name, class)) => (name, class.trim().parse::<u8>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            if name.trim().is_empty() {
                return Err(bad());
            }
            Ok(DescriptorKind::Named { name: name.trim().to_string(), class })
        }
        ("alt", Some(inner)) => Ok(DescriptorKind::IntersectAlt { inner: Box::new(parse_kind(inner.trim())?) }),
        _ => Err(bad()),
    }
}

fn validate(n: usize, kind: &DescriptorKind) -> Result<()> {
    if !(3..=permgroup::MAX_DEGREE).contains(&n) {
        return Err(Error::Descriptor(format!("degree {n} out of range")));
    }
    match kind {
        DescriptorKind::Intransitive { k } => {
            if *k < 1 || 2 * k > n {
                return Err(Error::Descriptor(format!("intransitive needs 1 <= k <= n/2, got k={k}, n={n}")));
            }
        }
        DescriptorKind::Imprimitive { b, c } => {
            if *b < 2 || *c < 2 || b * c != n {
                return Err(Error::Descriptor(format!("imprimitive needs b, c >= 2 and b*c = n, got b={b}, c={c}, n={n}")));
            }
        }
        DescriptorKind::FullAlternating => {}
        DescriptorKind::Named { name, class } => {
            if *class != 1 && *class != 2 {
                return Err(Error::Descriptor(format!("class must be 1 or 2, got {class}")));
            }
            let d = data::library()?.degree_of(name)?;
            if d != n {
                return Err(Error::Descriptor(format!("{name} has degree {d}, not {n}")));
            }
        }
        DescriptorKind::IntersectAlt { inner } => match **inner {
            DescriptorKind::FullAlternating | DescriptorKind::IntersectAlt { .. } => {
                return Err(Error::Descriptor("alt: only wraps intransitive, imprimitive or named".into()));
            }
            _ => validate(n, inner)?,
        },
    }
    Ok(())
}

impl fmt::Display for DescriptorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DescriptorKind::Intransitive { k } => write!(f, "intransitive:{k}"),
            DescriptorKind::Imprimitive { b, c } => write!(f, "imprimitive:{b},{c}"),
            DescriptorKind::FullAlternating => f.write_str("alternating"),
            DescriptorKind::Named { name, class: 1 } => write!(f, "named:{name}"),
            DescriptorKind::Named { name, class } => write!(f, "named:{name}:{class}"),
            DescriptorKind::IntersectAlt { inner } => write!(f, "alt:{inner}"),
        }
    }
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

/// Whether some sub-multiset of `parts` sums to `target`.
fn has_subset_sum(parts: &[u32], target: usize) -> bool {
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for &p in parts {
        let p = p as usize;
        for s in (p..=target).rev() {
            if reach[s - p] {
                reach[s] = true;
            }
        }
    }
    reach[target]
}

/// Wreath membership: the parts split into groups, each with a block-cycle
/// length `d` dividing all of its parts and `Σ part/d = b`, with the `d`
/// summing to `c`.
fn in_wreath(parts: &[u32], b: u32, c: u32) -> bool {
    let mut memo = HashMap::new();
    wreath_rec(parts.to_vec(), b, c, &mut memo)
}

fn wreath_rec(parts: Vec<u32>, b: u32, c: u32, memo: &mut HashMap<(Vec<u32>, u32), bool>) -> bool {
    if parts.is_empty() {
        return c == 0;
    }
    if c == 0 {
        return false;
    }
    if let Some(&r) = memo.get(&(parts.clone(), c)) {
        return r;
    }
    // The largest part starts a new group; try each admissible d.
    let x = parts[0];
    let rest = &parts[1..];
    let mut found = false;
    for d in (1..=x.min(c)).filter(|d| x.is_multiple_of(*d) && x / d <= b) {
        let need = b - x / d;
        let mut chosen = vec![false; rest.len()];
        if pick_group(rest, d, need, 0, &mut chosen, &mut |remaining| {
            wreath_rec(remaining, b, c - d, memo)
        }) {
            found = true;
            break;
        }
    }
    memo.insert((parts, c), found);
    found
}

/// Enumerates sub-multisets of `rest` (multiples of `d`) with `Σ part/d = need`,
/// skipping duplicate choices among equal parts, and calls `k` on the rest.
fn pick_group(
    rest: &[u32],
    d: u32,
    need: u32,
    start: usize,
    chosen: &mut Vec<bool>,
    k: &mut dyn FnMut(Vec<u32>) -> bool,
) -> bool {
    if need == 0 {
        let remaining: Vec<u32> = rest.iter().zip(chosen.iter()).filter(|(_, &c)| !c).map(|(&p, _)| p).collect();
        return k(remaining);
    }
    let mut i = start;
    while i < rest.len() {
        let p = rest[i];
        if p.is_multiple_of(d) && p / d <= need {
            chosen[i] = true;
            if pick_group(rest, d, need - p / d, i + 1, chosen, k) {
                chosen[i] = false;
                return true;
            }
            chosen[i] = false;
        }
        // equal parts are interchangeable: skip to the next distinct value
        let mut j = i + 1;
        while j < rest.len() && rest[j] == p {
            j += 1;
        }
        i = j;
    }
    false
}

fn check_degree(d: &SubgroupDescriptor, n: usize) -> Result<()> {
    if d.degree != n {
        return Err(Error::DegreeMismatch { expected: d.degree, got: n });
    }
    Ok(())
}

/// Whether some element of the S_n-level subgroup `d` has cycle type `t`.
pub fn contains_type(d: &SubgroupDescriptor, t: &CycleType) -> Result<bool> {
    check_degree(d, t.degree())?;
    let n = d.degree;
    Ok(match &d.kind {
        DescriptorKind::Intransitive { k } => has_subset_sum(t.parts(), (*k).min(n - k)),
        DescriptorKind::Imprimitive { b, c } => in_wreath(t.parts(), *b as u32, *c as u32),
        DescriptorKind::FullAlternating => t.is_even(),
        DescriptorKind::Named { name, class } => data::library()?.get(name, *class)?.spectrum.contains(t),
        DescriptorKind::IntersectAlt { .. } => {
            return Err(Error::Descriptor(format!("{d} is an A_n-level descriptor; use class_coverage")));
        }
    })
}

/// The rule that decides membership, for reporting.
pub fn membership_rule(d: &SubgroupDescriptor) -> &'static str {
    match d.kind {
        DescriptorKind::Intransitive { .. } => "sub-multiset of parts summing to k",
        DescriptorKind::Imprimitive { .. } => "parts grouped by block cycles of length d with sum(part/d) = b and sum(d) = c",
        DescriptorKind::FullAlternating => "even parity",
        DescriptorKind::Named { .. } => "cycle-type spectrum of the enumerated group",
        DescriptorKind::IntersectAlt { .. } => "even types of the inner group, split classes resolved per class",
    }
}

/// Whether the S_n-level group `d` contains an odd permutation.
fn has_odd_element(d: &SubgroupDescriptor) -> Result<bool> {
    Ok(match &d.kind {
        DescriptorKind::Intransitive { .. } | DescriptorKind::Imprimitive { .. } => true,
        DescriptorKind::FullAlternating => false,
        DescriptorKind::Named { name, class } => !data::library()?.get(name, *class)?.is_even(),
        DescriptorKind::IntersectAlt { .. } => false,
    })
}

/// Conjugacy classes of `g` met by the subgroup `d`.
pub fn class_coverage(d: &SubgroupDescriptor, g: GroupId) -> Result<BTreeSet<ClassId>> {
    check_degree(d, g.degree)?;
    let types = partitions(g.degree)?;
    match g.kind {
        GroupKind::Sym => {
            let mut out = BTreeSet::new();
            for t in types {
                if contains_type(d, &t)? {
                    out.insert(ClassId::unsplit(t));
                }
            }
            Ok(out)
        }
        GroupKind::Alt => match &d.kind {
            DescriptorKind::Named { name, class } => {
                let named = data::library()?.get(name, *class)?;
                if !named.is_even() {
                    return Err(Error::OddElement(format!("{name} is not inside A_n; wrap it as alt:{d}")));
                }
                Ok(named.alt_coverage()?.clone())
            }
            DescriptorKind::IntersectAlt { .. } => {
                let inner = d.inner().expect("intersect_alt");
                if !has_odd_element(&inner)? {
                    // inner already lies in A_n
                    return class_coverage(&inner, g);
                }
                // an odd element of inner swaps the two halves of every split class it meets
                let mut out = BTreeSet::new();
                for t in types.into_iter().filter(CycleType::is_even) {
                    if contains_type(&inner, &t)? {
                        if t.is_split() {
                            out.insert(ClassId { ctype: t.clone(), tag: SplitTag::Plus });
                            out.insert(ClassId { ctype: t, tag: SplitTag::Minus });
                        } else {
                            out.insert(ClassId::unsplit(t));
                        }
                    }
                }
                Ok(out)
            }
            _ => Err(Error::Descriptor(format!("{d} is not a proper subgroup of A_n; use alt:{d}"))),
        },
    }
}

/// Generators of the S_n-level subgroup `d` on points 1..n.
pub fn descriptor_generators(d: &SubgroupDescriptor) -> Result<Vec<Perm>> {
    let n = d.degree;
    let sym_on = |lo: usize, len: usize| -> Result<Vec<Perm>> {
        if len < 2 {
            return Ok(Vec::new());
        }
        Ok(vec![
            Perm::from_cycles(n, &[vec![lo, lo + 1]])?,
            Perm::from_cycles(n, &[(lo..lo + len).collect()])?,
        ])
    };
    match &d.kind {
        DescriptorKind::Intransitive { k } => {
            let mut gens = sym_on(1, *k)?;
            gens.extend(sym_on(k + 1, n - k)?);
            Ok(gens)
        }
        DescriptorKind::Imprimitive { b, .. } => {
            let mut gens = sym_on(1, *b)?;
            let swap: Vec<Vec<usize>> = (1..=*b).map(|i| vec![i, i + b]).collect();
            gens.push(Perm::from_cycles(n, &swap)?);
            gens.push(Perm::from_images((0..n).map(|i| (i + b) % n).collect())?);
            Ok(gens)
        }
        DescriptorKind::FullAlternating => {
            let long: Vec<usize> = if n % 2 == 1 { (1..=n).collect() } else { (2..=n).collect() };
            Ok(vec![Perm::from_cycles(n, &[vec![1, 2, 3]])?, Perm::from_cycles(n, &[long])?])
        }
        DescriptorKind::Named { name, class } => {
            Ok(data::library()?.get(name, *class)?.group.generators().to_vec())
        }
        DescriptorKind::IntersectAlt { .. } => {
            Err(Error::Descriptor(format!("{d} has no generator set; enumerate its inner group")))
        }
    }
}

/// Coverage computed by enumerating the subgroup element by element.
pub fn exhaustive_class_coverage(d: &SubgroupDescriptor, g: GroupId, cap: usize) -> Result<BTreeSet<ClassId>> {
    check_degree(d, g.degree)?;
    let (gens, even_only) = match d.inner() {
        Some(inner) => (descriptor_generators(&inner)?, true),
        None => (descriptor_generators(d)?, false),
    };
    let group = permgroup::closure(g.degree, &gens, cap)?;
    match g.kind {
        GroupKind::Sym => {
            if even_only {
                return Err(Error::Descriptor(format!("{d} is an A_n-level descriptor")));
            }
            Ok(permgroup::type_spectrum(&group).into_iter().map(ClassId::unsplit).collect())
        }
        GroupKind::Alt => {
            let evens: Vec<&Perm> = group.elements().iter().filter(|x| x.is_even()).collect();
            if !even_only && evens.len() != group.order() {
                return Err(Error::OddElement(format!("{d} is not inside A_n")));
            }
            permgroup::classes_met(evens)
        }
    }
}

/// A list of subgroup classes of one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub group: GroupId,
    pub descriptors: Vec<SubgroupDescriptor>,
    /// Whether the list is known to contain every maximal-subgroup class.
    pub complete: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    group: GroupId,
    #[serde(default)]
    complete: bool,
    subgroups: Vec<DescriptorKind>,
}

/// Largest degree for which shipped catalogs may be marked complete.
pub const COMPLETE_MAX_DEGREE: usize = 12;

impl Catalog {
    pub fn new(group: GroupId, descriptors: Vec<SubgroupDescriptor>, complete: bool) -> Result<Self> {
        let mut seen = HashSet::new();
        for d in &descriptors {
            check_degree(d, group.degree)?;
            if !seen.insert(d) {
                return Err(Error::Catalog(format!("duplicate entry {d} in the {group} catalog")));
            }
            let ok = match (group.kind, &d.kind) {
                (GroupKind::Sym, DescriptorKind::IntersectAlt { .. }) => false,
                (GroupKind::Alt, DescriptorKind::Named { .. } | DescriptorKind::IntersectAlt { .. }) => true,
                (GroupKind::Alt, _) => false,
                (GroupKind::Sym, _) => true,
            };
            if !ok {
                return Err(Error::Catalog(format!("{d} is not a subgroup class of {group}")));
            }
        }
        Ok(Catalog { group, descriptors, complete })
    }

    fn from_file(file: CatalogFile, builtin: bool) -> Result<Self> {
        let descriptors = file
            .subgroups
            .into_iter()
            .map(|k| SubgroupDescriptor::new(file.group.degree, k))
            .collect::<Result<Vec<_>>>()?;
        let complete = builtin && file.complete && file.group.degree <= COMPLETE_MAX_DEGREE;
        Catalog::new(file.group, descriptors, complete)
    }

    /// Coverage row for each descriptor, in catalog order.
    pub fn coverage_rows(&self) -> Result<Vec<BTreeSet<ClassId>>> {
        self.descriptors.par_iter().map(|d| class_coverage(d, self.group)).collect()
    }

    pub fn to_json(&self) -> Result<String> {
        let file = CatalogFile {
            group: self.group,
            complete: self.complete,
            subgroups: self.descriptors.iter().map(|d| d.kind.clone()).collect(),
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }
}

/// The shipped catalog of maximal-subgroup classes for `g`.
pub fn load_catalog(g: GroupId) -> Result<Catalog> {
    let files: Vec<CatalogFile> = serde_json::from_str(&data::catalogs_text()?)?;
    let file = files
        .into_iter()
        .find(|f| f.group == g)
        .ok_or_else(|| Error::Catalog(format!("no built-in catalog for {g}")))?;
    Catalog::from_file(file, true)
}

/// Groups with a shipped catalog.
pub fn builtin_catalog_groups() -> Result<Vec<GroupId>> {
    let files: Vec<CatalogFile> = serde_json::from_str(&data::catalogs_text()?)?;
    Ok(files.into_iter().map(|f| f.group).collect())
}

/// Parses a user catalog. User catalogs are never treated as complete.
pub fn parse_catalog(text: &str) -> Result<Catalog> {
    let file: CatalogFile = serde_json::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
    Catalog::from_file(file, false)
}

pub fn load_catalog_file(path: &Path) -> Result<Catalog> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_catalog(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    fn d(n: usize, s: &str) -> SubgroupDescriptor {
        SubgroupDescriptor::parse(n, s).unwrap()
    }

    #[test]
    fn descriptor_validation() {
        assert!(SubgroupDescriptor::intransitive(7, 4).is_err());
        assert!(SubgroupDescriptor::intransitive(7, 0).is_err());
        assert!(SubgroupDescriptor::intransitive(8, 4).is_ok());
        assert!(SubgroupDescriptor::imprimitive(12, 3, 4).is_ok());
        assert!(SubgroupDescriptor::imprimitive(12, 5, 2).is_err());
        assert!(SubgroupDescriptor::imprimitive(12, 1, 12).is_err());
        assert!(SubgroupDescriptor::named(11, "M12", 1).is_err());
        assert!(SubgroupDescriptor::named(11, "M13", 1).is_err());
        assert!(SubgroupDescriptor::named(11, "M11", 3).is_err());
        assert!(SubgroupDescriptor::parse(9, "alt:alternating").is_err());
        assert!(SubgroupDescriptor::parse(9, "alt:alt:intransitive:2").is_err());
    }

    #[test]
    fn mini_syntax_round_trip() {
        for s in ["intransitive:3", "imprimitive:3,4", "alternating", "named:M12", "named:M12:2", "alt:imprimitive:2,6"] {
            assert_eq!(d(12, s).to_string(), s);
        }
        assert_eq!(d(12, "named:M12:1").to_string(), "named:M12");
        assert!(SubgroupDescriptor::parse(12, "imprimitive:3").is_err());
        assert!(SubgroupDescriptor::parse(12, "wreath:3,4").is_err());
    }

    #[test]
    fn json_form() {
        let k = DescriptorKind::IntersectAlt { inner: Box::new(DescriptorKind::Intransitive { k: 5 }) };
        let s = serde_json::to_string(&k).unwrap();
        assert_eq!(s, r#"{"kind":"intersect_alt","inner":{"kind":"intransitive","k":5}}"#);
        assert_eq!(serde_json::from_str::<DescriptorKind>(&s).unwrap(), k);
        let named: DescriptorKind = serde_json::from_str(r#"{"kind":"named","name":"M12"}"#).unwrap();
        assert_eq!(named, DescriptorKind::Named { name: "M12".into(), class: 1 });
    }

    #[test]
    fn wreath_membership_examples() {
        let w = d(12, "imprimitive:3,4");
        assert!(contains_type(&w, &ct("[1,2,9]")).unwrap());
        assert!(!contains_type(&w, &ct("[1,1,1,1,8]")).unwrap());
        assert!(!contains_type(&w, &ct("[1,3,8]")).unwrap());
        assert!(contains_type(&w, &ct("[12]")).unwrap());
        assert!(contains_type(&w, &ct("[1,1,1,1,1,1,1,1,1,1,1,1]")).unwrap());
        assert!(contains_type(&d(9, "imprimitive:3,3"), &ct("[9]")).unwrap());
    }

    #[test]
    fn intransitive_membership() {
        let h = d(12, "intransitive:5");
        assert!(!contains_type(&h, &ct("[1,3,8]")).unwrap());
        assert!(contains_type(&h, &ct("[2,3,7]")).unwrap());
        assert!(!contains_type(&d(7, "intransitive:2"), &ct("[7]")).unwrap());
        assert!(contains_type(&h, &ct("[7]")).is_err());
    }

    #[test]
    fn alternating_membership() {
        let a = d(12, "alternating");
        assert!(!contains_type(&a, &ct("[1,3,8]")).unwrap());
        assert!(contains_type(&a, &ct("[3,9]")).unwrap());
    }

    #[test]
    fn intersect_alt_rejected_by_contains_type() {
        assert!(contains_type(&d(9, "alt:intransitive:1"), &ct("[9]")).is_err());
    }

    #[test]
    fn alt5_point_stabilizer_coverage() {
        let g = GroupId::alt(5).unwrap();
        let cov = class_coverage(&d(5, "alt:intransitive:1"), g).unwrap();
        let expected: BTreeSet<_> = crate::cycle_types::class_universe(g)
            .unwrap()
            .into_iter()
            .filter(|c| c.ctype.parts().contains(&1))
            .collect();
        assert_eq!(cov, expected);
        assert_eq!(cov, exhaustive_class_coverage(&d(5, "alt:intransitive:1"), g, permgroup::DEFAULT_CAP).unwrap());
    }

    #[test]
    fn alt_level_rules() {
        let a9 = GroupId::alt(9).unwrap();
        assert!(class_coverage(&d(9, "intransitive:2"), a9).is_err());
        assert!(class_coverage(&d(9, "alternating"), a9).is_err());
        let cov = class_coverage(&d(9, "alt:imprimitive:3,3"), a9).unwrap();
        assert_eq!(cov.iter().filter(|c| c.ctype == ct("[9]")).count(), 2);
        assert!(class_coverage(&d(9, "alt:intransitive:2"), GroupId::sym(9).unwrap()).is_err());
    }

    #[test]
    fn builtin_catalogs_load() {
        for g in builtin_catalog_groups().unwrap() {
            let c = load_catalog(g).unwrap();
            assert!(c.complete, "{g}");
            assert!(!c.descriptors.is_empty());
        }
        let s7 = load_catalog(GroupId::sym(7).unwrap()).unwrap();
        let names: Vec<String> = s7.descriptors.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["alternating", "intransitive:1", "intransitive:2", "intransitive:3", "named:AGL1(7)"]);
        assert!(load_catalog(GroupId::sym(13).unwrap()).is_err());
    }

    #[test]
    fn user_catalogs_are_incomplete() {
        let c = parse_catalog(r#"{"group":"S5","complete":true,"subgroups":[{"kind":"alternating"},{"kind":"intransitive","k":2}]}"#)
            .unwrap();
        assert!(!c.complete);
        assert!(parse_catalog(r#"{"group":"S5","subgroups":[{"kind":"alternating"},{"kind":"alternating"}]}"#).is_err());
        assert!(parse_catalog(r#"{"group":"A5","subgroups":[{"kind":"intransitive","k":2}]}"#).is_err());
        assert!(parse_catalog(r#"{"group":"S5","subgroups":[],"extra":1}"#).is_err());
        let round = parse_catalog(&c.to_json().unwrap()).unwrap();
        assert_eq!(round.descriptors, c.descriptors);
    }
}
