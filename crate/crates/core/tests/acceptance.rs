//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the report is always printed. The
//! process fails only on an *unexpected* outcome: a criterion that prints
//! FAIL because the computed value differs from a published one is pinned to
//! the computed value and independently re-verified here.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nck_core::bounds::{gap_meets_bound, gap_table, theorem_a_upper, theorem_b_lower, theorem_d};
use nck_core::catalog::{contains_type, descriptor_generators, exhaustive_class_coverage, load_catalog, SubgroupDescriptor};
use nck_core::coverings::{
    all_optimal_covers, applicable_families, exact_gamma, verify_basic_set, BasicSet, Family, GammaResult,
};
use nck_core::cycle_types::{partitions, ClassId, CycleType, GroupId, GroupKind, SplitTag};
use nck_core::numtheory::{
    a_of_n, divisors, euler_phi, factorize, is_prime, moebius, nu, p0_of_n, phi_interval, phi_interval_mobius,
    phi_interval_scan, smallest_prime_divisor, Interval,
};
use nck_core::permgroup::{self, canonical_representative, closure, Perm, DEFAULT_CAP};
use nck_core::data::library;
use num_rational::Rational64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

const SEED: u64 = 0x6e63_6b5f_7365_6564;

const PUBLISHED_SYM: [u64; 10] = [2, 2, 2, 2, 3, 3, 4, 3, 5, 4];
const PUBLISHED_ALT: [u64; 9] = [2, 2, 2, 2, 2, 3, 3, 4, 4];

struct Outcome {
    pass: bool,
    detail: String,
    /// Problems that are not pinned, documented deviations.
    unexpected: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, detail: String::new(), unexpected: Vec::new() }
    }

    fn fail_unexpected(&mut self, msg: String) {
        self.pass = false;
        self.unexpected.push(msg);
    }

    fn check(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        if !cond {
            self.fail_unexpected(msg());
        }
    }

    fn within(&mut self, start: Instant, limit: Duration) {
        let took = start.elapsed();
        self.check(took < limit, || format!("took {took:?}, limit {limit:?}"));
    }
}

fn sym(n: usize) -> GroupId {
    GroupId::sym(n).unwrap()
}

fn alt(n: usize) -> GroupId {
    GroupId::alt(n).unwrap()
}

fn ty(s: &str) -> CycleType {
    s.parse().unwrap()
}

fn gamma(g: GroupId) -> GammaResult {
    exact_gamma(g, &load_catalog(g).unwrap()).unwrap()
}

fn criterion_1(gammas: &mut Vec<(GroupId, GammaResult)>) -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut grid = Vec::new();
    for (i, n) in (3..=12).enumerate() {
        grid.push((sym(n), PUBLISHED_SYM[i]));
    }
    for (i, n) in (4..=12).enumerate() {
        grid.push((alt(n), PUBLISHED_ALT[i]));
    }
    let mut mismatches = Vec::new();
    for (g, published) in grid {
        let r = gamma(g);
        o.check(r.exact, || format!("{g}: catalog not complete"));
        o.check(verify_basic_set(&r.witness).unwrap().covered, || format!("{g}: witness does not cover"));
        if r.gamma as u64 != published {
            mismatches.push(format!("{g} computed {} vs published {published}", r.gamma));
            if g == alt(12) && r.gamma == 3 {
                // Pinned deviation: re-verify the witness by enumerating every
                // component outright.
                o.pass = false;
                let expected = ["alt:intransitive:5", "alt:imprimitive:3,4", "named:M12"];
                let got: BTreeSet<String> = r.witness.components.iter().map(ToString::to_string).collect();
                o.check(got == expected.iter().map(|s| s.to_string()).collect(), || {
                    format!("A12 witness changed: {got:?}")
                });
                let mut covered = BTreeSet::new();
                for d in &r.witness.components {
                    covered.extend(exhaustive_class_coverage(d, g, DEFAULT_CAP).unwrap());
                }
                let universe: BTreeSet<ClassId> =
                    nck_core::cycle_types::class_universe(g).unwrap().into_iter().collect();
                o.check(covered == universe, || "A12 witness fails the exhaustive oracle".into());
                o.check(theorem_b_lower(g).unwrap() == Rational64::from_integer(3), || "A12 lower bound changed".into());
            } else {
                o.fail_unexpected(format!("{g}: computed {} vs published {published}", r.gamma));
            }
        }
        gammas.push((g, r));
    }
    o.within(start, Duration::from_secs(60));
    o.detail = if mismatches.is_empty() {
        format!("all 19 cells match in {:.2?}", start.elapsed())
    } else {
        format!(
            "18 of 19 cells match; {}; witness {{(S5xS7)∩A12, (S3 wr S4)∩A12, M12}} covers A12, confirmed by exhaustive enumeration; {:.2?}",
            mismatches.join(", "),
            start.elapsed()
        )
    };
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    for p in [5usize, 7, 11, 13] {
        let c = Family::SymPrime { p }.construct().unwrap();
        let r = verify_basic_set(&c.basic_set).unwrap();
        o.check(r.covered, || format!("sym_prime({p}) does not cover"));
        o.check(c.basic_set.len() == (p - 1) / 2, || format!("sym_prime({p}) has size {}", c.basic_set.len()));
    }
    for p in [5usize, 7, 11] {
        let g = sym(p);
        let optima = all_optimal_covers(g, &load_catalog(g).unwrap()).unwrap();
        let expected = Family::SymPrime { p }.construct().unwrap().basic_set;
        let as_set = |b: &BasicSet| b.components.iter().cloned().collect::<BTreeSet<_>>();
        o.check(optima.len() == 1, || format!("S{p} has {} optimal covers", optima.len()));
        o.check(optima.first().map(as_set) == Some(as_set(&expected)), || format!("S{p} optimum differs from sym_prime"));
    }
    o.within(start, Duration::from_secs(30));
    o.detail = format!("p = 5, 7, 11, 13 cover with (p-1)/2 classes; unique optimum for 5, 7, 11; {:.2?}", start.elapsed());
    o
}

fn formula_size(f: &Family) -> Option<usize> {
    let phi = |n: usize| euler_phi(n as u64).unwrap() as usize;
    match *f {
        Family::SymPrime { p } => Some((p - 1) / 2),
        Family::PrimePower { p, alpha, .. } => Some(phi(p.pow(alpha)) / 2 + 1),
        Family::TwoPrimes { p, q, .. } => Some(phi(p * q) / 2 + 1),
        Family::TwoPrimePowers { p, q, alpha, beta, .. } => Some(phi(p.pow(alpha) * q.pow(beta)) / 2 + 2),
        Family::UpperSym { n, .. } | Family::UpperAltEven { n, .. } => {
            // {wreath} plus one intransitive class per k < n/2 prime to p
            let p = smallest_prime_divisor(n as u64).unwrap() as usize;
            Some(1 + (1..n.div_ceil(2)).filter(|k| k % p != 0).count())
        }
        Family::UpperAltOdd { n, .. } => Some(1 + n / 3),
        _ => None,
    }
}

/// (covered, size, predicted size) or the construction error.
type Checked = Result<(bool, usize, usize), String>;

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let families: Vec<Family> = (4..=30).flat_map(applicable_families).collect();
    let results: Vec<(Family, Checked)> = families
        .par_iter()
        .map(|f| {
            let r = f.construct().map_err(|e| e.to_string()).and_then(|c| {
                let rep = verify_basic_set(&c.basic_set).map_err(|e| e.to_string())?;
                Ok((rep.covered, c.basic_set.len(), c.predicted_size))
            });
            (f.clone(), r)
        })
        .collect();
    for (f, r) in &results {
        match r {
            Ok((covered, len, predicted)) => {
                o.check(*covered, || format!("{f:?} does not cover"));
                o.check(len == predicted, || format!("{f:?}: size {len}, predicted {predicted}"));
                if let Some(expected) = formula_size(f) {
                    o.check(*len == expected, || format!("{f:?}: size {len}, formula {expected}"));
                }
            }
            Err(e) => o.fail_unexpected(format!("{f:?}: {e}")),
        }
    }
    for (n, p, q, alpha, beta) in [(18, 2, 3, 1, 2), (20, 2, 5, 2, 1)] {
        let phi = euler_phi(n).unwrap() as usize;
        for kind in [GroupKind::Sym, GroupKind::Alt] {
            let c = Family::TwoPrimePowers { p, q, alpha, beta, kind }.construct().unwrap();
            o.check(c.basic_set.len() == phi / 2 + 2, || format!("n={n}: size {}", c.basic_set.len()));
        }
    }
    o.within(start, Duration::from_secs(60));
    o.detail = format!("{} constructions over 4 <= n <= 30 cover with the predicted size; {:.2?}", results.len(), start.elapsed());
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    for (g, v) in [(alt(18), 5), (alt(20), 6), (alt(36), 8), (alt(44), 12), (sym(75), 22)] {
        match theorem_d(g) {
            Ok(d) => {
                o.check(d.upper == v && d.exact, || format!("{g}: theorem D gives {} (exact {})", d.upper, d.exact));
            }
            Err(e) => o.fail_unexpected(format!("{g}: {e}")),
        }
    }
    for (p, q, alpha, beta) in [(2, 3, 1, 2), (2, 5, 2, 1)] {
        let c = Family::TwoPrimePowers { p, q, alpha, beta, kind: GroupKind::Alt }.construct().unwrap();
        let r = verify_basic_set(&c.basic_set).unwrap();
        o.check(r.covered, || format!("{} witness does not cover", c.basic_set.group));
        o.check(c.basic_set.len() as u64 == theorem_d(c.basic_set.group).unwrap().upper, || {
            format!("{} witness size differs from the bound", c.basic_set.group)
        });
    }
    o.within(start, Duration::from_secs(60));
    o.detail = format!("A18=5, A20=6, A36=8, A44=12, S75=22; A18 and A20 witnesses cover; {:.2?}", start.elapsed());
    o
}

/// Whether `x` maps some k-subset of points onto itself.
fn fixes_some_subset(x: &Perm, k: usize) -> bool {
    let n = x.degree();
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
        (0..n).filter(|i| m >> i & 1 == 1).all(|i| m >> x.image(i) & 1 == 1)
    })
}

/// Whether `x` permutes the blocks of some partition into c blocks of size b.
fn preserves_some_block_system(x: &Perm, b: usize) -> bool {
    fn rec(x: &Perm, b: usize, block_of: &mut Vec<usize>, next: usize) -> bool {
        let n = block_of.len();
        let Some(first) = block_of.iter().position(|&v| v == usize::MAX) else {
            // every block must map onto a block
            return (0..next).all(|blk| {
                let imgs: BTreeSet<usize> =
                    (0..n).filter(|&i| block_of[i] == blk).map(|i| block_of[x.image(i)]).collect();
                imgs.len() == 1
            });
        };
        block_of[first] = next;
        let free: Vec<usize> = (first + 1..n).filter(|&i| block_of[i] == usize::MAX).collect();
        let found = choose(x, b, block_of, next, &free, 0, b - 1);
        block_of[first] = usize::MAX;
        found
    }
    fn choose(x: &Perm, b: usize, block_of: &mut Vec<usize>, blk: usize, free: &[usize], from: usize, left: usize) -> bool {
        if left == 0 {
            return rec(x, b, block_of, blk + 1);
        }
        for j in from..free.len() {
            block_of[free[j]] = blk;
            if choose(x, b, block_of, blk, free, j + 1, left - 1) {
                block_of[free[j]] = usize::MAX;
                return true;
            }
            block_of[free[j]] = usize::MAX;
        }
        false
    }
    rec(x, b, &mut vec![usize::MAX; x.degree()], 0)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut cases = Vec::new();
    for n in 3..=12 {
        for k in 1..=n / 2 {
            cases.push(SubgroupDescriptor::intransitive(n, k).unwrap());
        }
        for b in 2..n {
            if n % b == 0 && n / b >= 2 {
                cases.push(SubgroupDescriptor::imprimitive(n, b, n / b).unwrap());
            }
        }
    }
    let results: Vec<(String, &'static str, usize, usize)> = cases
        .par_iter()
        .map(|d| {
            let n = d.degree();
            let order = match *d.kind() {
                nck_core::catalog::DescriptorKind::Intransitive { k } => factorial(k) * factorial(n - k),
                nck_core::catalog::DescriptorKind::Imprimitive { b, c } => factorial(b).pow(c as u32) * factorial(c),
                _ => unreachable!(),
            };
            let parts = partitions(n).unwrap();
            let (oracle, agree): (&'static str, usize) = if order <= 1_000_000 {
                let g = closure(n, &descriptor_generators(d).unwrap(), DEFAULT_CAP).unwrap();
                assert_eq!(g.order() as u128, order, "{d} on {n}");
                let spectrum = permgroup::type_spectrum(&g);
                ("closure", parts.iter().filter(|t| contains_type(d, t).unwrap() == spectrum.contains(t)).count())
            } else {
                let rule = |t: &CycleType| {
                    let x = canonical_representative(t);
                    match *d.kind() {
                        nck_core::catalog::DescriptorKind::Intransitive { k } => fixes_some_subset(&x, k),
                        nck_core::catalog::DescriptorKind::Imprimitive { b, .. } => preserves_some_block_system(&x, b),
                        _ => unreachable!(),
                    }
                };
                ("invariant-structure scan", parts.iter().filter(|t| contains_type(d, t).unwrap() == rule(t)).count())
            };
            (format!("{d} (n={n})"), oracle, agree, parts.len())
        })
        .collect();
    let mut by_closure = 0;
    for (name, oracle, agree, total) in &results {
        o.check(agree == total, || format!("{name}: {agree}/{total} agree with the {oracle}"));
        if *oracle == "closure" {
            by_closure += 1;
        }
    }
    o.within(start, Duration::from_secs(120));
    o.detail = format!(
        "{} subgroups, 100% agreement; {} by closure spectra, {} too large to enumerate checked by invariant-subset/block-system scan; {:.2?}",
        results.len(),
        by_closure,
        results.len() - by_closure,
        start.elapsed()
    );
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let g = alt(9);
    let nine = ty("[9]");
    let plus = ClassId::new(nine.clone(), SplitTag::Plus).unwrap();
    let minus = ClassId::new(nine, SplitTag::Minus).unwrap();
    let mut met = Vec::new();
    for class in [1u8, 2] {
        let d = SubgroupDescriptor::named(9, "PGammaL2(8)", class).unwrap();
        let cov = nck_core::catalog::class_coverage(&d, g).unwrap();
        let hit: BTreeSet<ClassId> = [&plus, &minus].into_iter().filter(|c| cov.contains(c)).cloned().collect();
        let oracle = exhaustive_class_coverage(&d, g, DEFAULT_CAP).unwrap();
        o.check(cov == oracle, || format!("class {class}: coverage disagrees with enumeration"));
        o.check(hit.len() == 1, || format!("class {class} meets {} of the [9] classes", hit.len()));
        met.push(hit);
    }
    o.check(met[0].is_disjoint(&met[1]), || "both PGammaL2(8) classes meet the same [9] class".into());
    let c = Family::SpecialA9.construct().unwrap();
    o.check(verify_basic_set(&c.basic_set).unwrap().covered, || "special_a9 does not cover".into());
    o.detail = format!(
        "class 1 meets {}, class 2 meets {}; special_a9 covers; {:.2?}",
        met[0].iter().next().map(ToString::to_string).unwrap_or_default(),
        met[1].iter().next().map(ToString::to_string).unwrap_or_default(),
        start.elapsed()
    );
    o
}

fn random_interval(rng: &mut StdRng, n: i64) -> Interval {
    loop {
        let lo_den = rng.gen_range(1..=6);
        let lo = Rational64::new(rng.gen_range(0..=n * lo_den), lo_den);
        let hi_den = rng.gen_range(1..=6);
        let min_num = (lo * hi_den).ceil().to_integer();
        let hi = Rational64::new(rng.gen_range(min_num..=n * hi_den), hi_den);
        if let Ok(i) = Interval::new(lo, hi, rng.gen(), rng.gen()) {
            return i;
        }
    }
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let errors: Vec<String> = (1u64..=2000)
        .into_par_iter()
        .flat_map_iter(|n| {
            let mut errs = Vec::new();
            let phi = euler_phi(n).unwrap();
            let ds = divisors(n);
            let mu_sum: i64 = ds.iter().map(|&d| moebius(d).unwrap() as i64).sum();
            if mu_sum != i64::from(n == 1) {
                errs.push(format!("n={n}: sum of mu(d) = {mu_sum}"));
            }
            let ratio: Rational64 = ds.iter().map(|&d| Rational64::new(moebius(d).unwrap() as i64, d as i64)).sum();
            if ratio != Rational64::new(phi as i64, n as i64) {
                errs.push(format!("n={n}: sum of mu(d)/d = {ratio}"));
            }
            let squarefree = ds.iter().filter(|&&d| moebius(d).unwrap() != 0).count();
            if squarefree != 1 << nu(n).unwrap() {
                errs.push(format!("n={n}: {squarefree} squarefree divisors"));
            }
            let mut rng = StdRng::seed_from_u64(SEED ^ n);
            let bound = Rational64::from_integer(1 << (nu(n).unwrap() + 1));
            for _ in 0..200 {
                let i = random_interval(&mut rng, n as i64);
                let count = phi_interval(&i, n).unwrap();
                if count != phi_interval_scan(&i, n) || count != phi_interval_mobius(&i, n) {
                    errs.push(format!("n={n}, I={i}: counting paths disagree"));
                }
                let dev = Rational64::from_integer(count as i64) - Rational64::new(phi as i64, n as i64) * i.length();
                if dev > bound || -dev > bound {
                    errs.push(format!("n={n}, I={i}: deviation {dev} exceeds {bound}"));
                }
            }
            let (a, p0) = (a_of_n(n).unwrap(), p0_of_n(n).unwrap());
            if a > p0 || (a == p0) != is_prime(a) {
                errs.push(format!("n={n}: a={a}, p0={p0}"));
            }
            match factorize(a).as_slice() {
                [(p, alpha)] if num_integer::gcd(n, a) == p.pow(alpha - 1) => {}
                _ => errs.push(format!("n={n}: a(n)={a} is not p^a with gcd(n,a)=p^(a-1)")),
            }
            errs
        })
        .collect();
    errors.iter().take(5).for_each(|e| o.fail_unexpected(e.clone()));
    let mut deviations = Vec::new();
    let exceptions: Vec<u64> = (1..=100).filter(|&n| !is_prime(a_of_n(n).unwrap())).collect();
    if exceptions != [6, 18, 30, 54, 66, 78, 90] {
        // Pinned deviation: a(42) = 4 as well, since 4 does not divide 42.
        o.pass = false;
        o.check(exceptions == [6, 18, 30, 42, 54, 66, 78, 90], || format!("a(n) non-prime at {exceptions:?}"));
        o.check(a_of_n(42).unwrap() == 4, || "a(42) changed".into());
        deviations.push(format!("a(n) is non-prime at {exceptions:?}, which includes 42"));
    }
    o.check((1..=100).filter(|&n| !is_prime(a_of_n(n).unwrap())).all(|n| a_of_n(n).unwrap() == 4), || {
        "a(n) exception is not 4".into()
    });
    let twin_product = |n: u64| {
        let p = smallest_prime_divisor(n).unwrap();
        n == p * (p + 2) && is_prime(p + 2)
    };
    for n in (3..=10_000u64).step_by(2) {
        let p = smallest_prime_divisor(n).unwrap();
        if is_prime(n) || n == p * p || twin_product(n) {
            continue;
        }
        // p < √n − 1  ⇔  (p + 1)² < n
        o.check((p + 1) * (p + 1) < n, || format!("min-prime-odd fails at n={n}"));
    }
    let mut equality = Vec::new();
    let mut even_failures = Vec::new();
    for n in (16..=10_000u64).step_by(4).filter(|&n| n != 24) {
        // p0 ≤ √n − 1  ⇔  (p0 + 1)² ≤ n
        let p0 = p0_of_n(n).unwrap();
        if (p0 + 1) * (p0 + 1) > n {
            even_failures.push(n);
        }
        if (p0 + 1) * (p0 + 1) == n {
            equality.push(n);
        }
    }
    if !even_failures.is_empty() {
        // Pinned deviation: p0(60) = 7 > √60 − 1.
        o.pass = false;
        o.check(even_failures == [60] && p0_of_n(60).unwrap() == 7, || {
            format!("min-prime-even fails at {even_failures:?}")
        });
        deviations.push(format!("min-prime-even fails at n = {even_failures:?} (p0(60) = 7 > 6.75)"));
    }
    o.check(equality.contains(&36), || format!("min-prime-even equality at {equality:?}"));
    let gaps = gap_table(10_000).unwrap();
    o.check(gaps.iter().all(gap_meets_bound), || "gap table below (p-9)/6".into());
    o.within(start, Duration::from_secs(60));
    deviations.push(format!(
        "identities and a(n) properties hold for n <= 2000, 400000 random intervals (seed {SEED:#x}) within the error bound, min-prime-odd holds to 10^4, {} gap rows meet (p-9)/6; {:.2?}",
        gaps.len(),
        start.elapsed()
    ));
    o.detail = deviations.join("; ");
    o
}

fn criterion_8(gammas: &[(GroupId, GammaResult)]) -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    for (g, r) in gammas.iter().filter(|(g, _)| g.degree >= 5) {
        let lo = theorem_b_lower(*g).unwrap().ceil().to_integer() as usize;
        let hi = theorem_a_upper(*g).unwrap() as usize;
        o.check(lo <= r.gamma && r.gamma <= hi, || format!("{g}: {lo} <= {} <= {hi} fails", r.gamma));
    }
    let g = sym(12);
    let comps = ["alternating", "intransitive:5", "imprimitive:3,4"]
        .iter()
        .map(|s| SubgroupDescriptor::parse(12, s).unwrap())
        .collect::<Vec<_>>();
    let b = BasicSet::new(g, comps.clone(), "").unwrap();
    let rep = verify_basic_set(&b).unwrap();
    let uncovered: Vec<String> = rep.uncovered.iter().map(ToString::to_string).collect();
    o.check(!rep.covered, || "S12 three-component set covers".into());
    o.check(uncovered.contains(&"[8,3,1]".to_string()), || "[1,3,8] is covered".into());
    // Independent check of the uncovered list by enumerating each component.
    let mut met = BTreeSet::new();
    met.extend(partitions(12).unwrap().into_iter().filter(CycleType::is_even).map(ClassId::unsplit));
    for d in &comps[1..] {
        met.extend(exhaustive_class_coverage(d, g, DEFAULT_CAP).unwrap());
    }
    let oracle: Vec<String> = partitions(12)
        .unwrap()
        .into_iter()
        .map(ClassId::unsplit)
        .filter(|c| !met.contains(c))
        .map(|c| c.to_string())
        .collect();
    o.check(uncovered == oracle, || format!("uncovered {uncovered:?} vs enumeration {oracle:?}"));
    let exactly = uncovered == ["[8,3,1]"];
    if !exactly {
        o.pass = false;
        let pinned = ["[10,1,1]", "[8,3,1]", "[8,2,2]", "[8,1,1,1,1]"];
        o.check(uncovered == pinned, || format!("uncovered list changed: {uncovered:?}"));
    }
    let m12 = library().unwrap().get("M12", 1).unwrap();
    for t in ["[3,9]", "[2,2,2,6]", "[1,1,1,9]", "[1,1,1,1,8]"] {
        o.check(!m12.spectrum.contains(&ty(t)), || format!("M12 contains {t}"));
    }
    o.detail = format!(
        "sandwich holds for 5 <= n <= 12; S12 set fails with uncovered {} (all odd except [8,3,1]; expected exactly [8,3,1]); M12 excludes the four types; {:.2?}",
        uncovered.join(" "),
        start.elapsed()
    );
    o
}

fn main() -> ExitCode {
    println!("acceptance suite (seed {SEED:#x})");
    let mut gammas = Vec::new();
    let outcomes = vec![
        ("1 small-degree table", criterion_1(&mut gammas)),
        ("2 prime degree", criterion_2()),
        ("3 constructions n <= 30", criterion_3()),
        ("4 two-prime exact values", criterion_4()),
        ("5 membership oracle", criterion_5()),
        ("6 split classes in A9", criterion_6()),
        ("7 number theory", criterion_7()),
        ("8 sandwich and negative controls", criterion_8(&gammas)),
    ];
    let mut unexpected = 0;
    for (name, o) in &outcomes {
        println!("criterion {name}: {} - {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        for u in &o.unexpected {
            println!("    unexpected: {u}");
            unexpected += 1;
        }
    }
    let passed = outcomes.iter().filter(|(_, o)| o.pass).count();
    println!("{passed}/{} criteria pass; {unexpected} unexpected problems", outcomes.len());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
