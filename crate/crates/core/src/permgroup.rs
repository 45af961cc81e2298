//! Explicit permutations and breadth-first group closure.
//!
//! Points are 0-indexed internally and 1-indexed whenever a permutation is
//! displayed or parsed. Products act on the right: `a.compose(&b)` first
//! applies `a`, then `b`, and conjugation is `x^g = g⁻¹ x g`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use indexmap::IndexSet;
use rayon::prelude::*;

use crate::cycle_types::{ClassId, CycleType, Parity, SplitTag};
use crate::error::{Error, Result};

/// Largest supported degree (points are stored as bytes).
pub const MAX_DEGREE: usize = 255;

/// Default element cap for [`closure`].
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u8]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE);
        Perm { images: (0..degree).map(|i| i as u8).collect() }
    }

    /// `images[i]` is the image of point `i` (0-indexed).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::Domain(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Domain(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm { images: images.into_iter().map(|x| x as u8).collect() })
    }

    /// Builds a permutation from 1-indexed cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::Domain(format!("degree {degree} exceeds {MAX_DEGREE}")));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::Domain(format!("point {p} outside 1..={degree}")));
                }
                if used[p - 1] {
                    return Err(Error::Domain(format!("point {p} appears twice in {cycles:?}")));
                }
                used[p - 1] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-indexed point.
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Cycles including fixed points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    fn cycle_lengths(&self) -> Vec<u32> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.image(x);
            }
            lens.push(len);
        }
        lens
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut lens = self.cycle_lengths();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        CycleType::from_sorted_unchecked(lens)
    }

    pub fn parity(&self) -> Parity {
        let lens = self.cycle_lengths();
        if (self.degree() - lens.len()).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Apply `self`, then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), got: other.degree() });
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { images: inv.into_boxed_slice() }
    }

    /// `g⁻¹ · self · g`: maps the cycle `(a b …)` to `(a^g b^g …)`.
    pub fn conjugate_by(&self, g: &Perm) -> Result<Perm> {
        g.inverse().compose(self)?.compose(g)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

pub fn compose(a: &Perm, b: &Perm) -> Result<Perm> {
    a.compose(b)
}

pub fn inverse(a: &Perm) -> Perm {
    a.inverse()
}

pub fn cycle_type_of(a: &Perm) -> CycleType {
    a.cycle_type()
}

pub fn perm_parity(a: &Perm) -> Parity {
    a.parity()
}

/// A fully enumerated permutation group.
#[derive(Debug, Clone)]
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: IndexSet<Perm>,
}

impl GeneratedGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Elements in breadth-first discovery order, identity first.
    pub fn elements(&self) -> &IndexSet<Perm> {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: &Perm) -> bool {
        self.elements.contains(x)
    }

    pub fn is_even(&self) -> bool {
        self.generators.iter().all(Perm::is_even)
    }

    /// The same group conjugated by `g` (generators and elements).
    pub fn conjugate_by(&self, g: &Perm) -> Result<GeneratedGroup> {
        let generators = self.generators.iter().map(|x| x.conjugate_by(g)).collect::<Result<Vec<_>>>()?;
        let elements = self.elements.iter().map(|x| x.conjugate_by(g)).collect::<Result<IndexSet<_>>>()?;
        Ok(GeneratedGroup { degree: self.degree, generators, elements })
    }
}

/// Breadth-first closure of `gens`; fails if more than `cap` elements appear.
pub fn closure(degree: usize, gens: &[Perm], cap: usize) -> Result<GeneratedGroup> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch { expected: degree, got: g.degree() });
        }
    }
    let mut elements = IndexSet::new();
    elements.insert(Perm::identity(degree));
    let mut head = 0;
    while head < elements.len() {
        let x = elements.get_index(head).expect("in range").clone();
        head += 1;
        for g in gens {
            let y = x.compose_unchecked(g);
            if !elements.contains(&y) {
                if elements.len() == cap {
                    return Err(Error::Overflow { cap });
                }
                elements.insert(y);
            }
        }
    }
    Ok(GeneratedGroup { degree, generators: gens.to_vec(), elements })
}

pub fn type_spectrum(g: &GeneratedGroup) -> BTreeSet<CycleType> {
    let types: HashSet<CycleType> = g.elements.par_iter().map(Perm::cycle_type).collect();
    types.into_iter().collect()
}

/// The fixed representative of the `Plus` class of a split type: cycles
/// filled with 1..n in order, longest first.
pub fn canonical_representative(t: &CycleType) -> Perm {
    let n = t.degree();
    let mut images: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in t.parts() {
        let len = len as usize;
        for i in 0..len {
            images[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    Perm::from_images(images).expect("valid by construction")
}

/// Cycles of `x` (fixed points included) sorted by decreasing length, each
/// starting at its smallest point; ties keep smallest-point order.
fn cycles_by_length(x: &Perm) -> Vec<Vec<usize>> {
    let mut cycles = x.cycles();
    cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    cycles
}

/// Which A_n class of a split type `x` belongs to: `Plus` iff the conjugator
/// taking the canonical representative to `x` is even.
pub fn split_class_of(x: &Perm) -> Result<ClassId> {
    let t = x.cycle_type();
    if !t.is_split() {
        return Err(Error::NotSplit(t.to_string()));
    }
    if !x.is_even() {
        return Err(Error::OddElement(x.to_string()));
    }
    let rep = canonical_representative(&t);
    let n = x.degree();
    let mut g = vec![0usize; n];
    for (rc, xc) in cycles_by_length(&rep).iter().zip(cycles_by_length(x).iter()) {
        debug_assert_eq!(rc.len(), xc.len());
        for (&a, &b) in rc.iter().zip(xc.iter()) {
            g[a] = b;
        }
    }
    let g = Perm::from_images(g)?;
    debug_assert_eq!(rep.conjugate_by(&g)?, *x);
    let tag = if g.is_even() { SplitTag::Plus } else { SplitTag::Minus };
    Ok(ClassId { ctype: t, tag })
}

/// A_n classes met by a set of even permutations.
pub fn classes_met<'a, I>(elements: I) -> Result<BTreeSet<ClassId>>
where
    I: IntoParallelIterator<Item = &'a Perm>,
{
    let classes: HashSet<ClassId> = elements
        .into_par_iter()
        .map(|x| {
            if !x.is_even() {
                return Err(Error::OddElement(x.to_string()));
            }
            let t = x.cycle_type();
            if t.is_split() {
                split_class_of(x)
            } else {
                Ok(ClassId::unsplit(t))
            }
        })
        .collect::<Result<HashSet<_>>>()?;
    Ok(classes.into_iter().collect())
}

/// A_n classes met by a group of even permutations.
pub fn alt_class_coverage(g: &GeneratedGroup) -> Result<BTreeSet<ClassId>> {
    classes_met(&g.elements)
}

/// The transposition `(a b)` on 1-indexed points.
pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Perm> {
    Perm::from_cycles(degree, &[vec![a, b]])
}

/// Generators of the full symmetric group: `(1 2)` and `(1 2 … n)`.
pub fn symmetric_generators(degree: usize) -> Vec<Perm> {
    if degree < 2 {
        return Vec::new();
    }
    vec![
        transposition(degree, 1, 2).expect("valid"),
        Perm::from_cycles(degree, &[(1..=degree).collect()]).expect("valid"),
    ]
}
