use std::fmt::Write as _;

use nck_core::bounds::{bounds_report, small_exact, BoundKind, PUBLISHED_ALT};
use nck_core::catalog::{
    class_coverage, contains_type, load_catalog, load_catalog_file, membership_rule, Catalog, SubgroupDescriptor,
    COMPLETE_MAX_DEGREE,
};
use nck_core::coverings::{exact_gamma, verify_basic_set, BasicSet, Family, FamilyParams};
use nck_core::cycle_types::{class_universe, t_prime_set, t_set, u_set, CycleType, GroupId, GroupKind};
use nck_core::numtheory::Interval;
use nck_core::{Error, Result};
use serde_json::{json, Value};

use crate::{Cli, Command, Kind, TypeFamily, VerifyArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Uncovered,
}

/// A fully rendered command result; nothing is printed until it exists.
pub struct Outcome {
    pub status: Status,
    pub json: Value,
    pub text: String,
    pub warnings: Vec<String>,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Outcome { status: Status::Ok, json, text, warnings: Vec::new() }
    }
}

fn kind(k: Kind) -> GroupKind {
    match k {
        Kind::Sym => GroupKind::Sym,
        Kind::Alt => GroupKind::Alt,
    }
}

fn group(n: usize, k: Kind) -> Result<GroupId> {
    GroupId::new(kind(k), n)
}

fn with_status(mut v: Value, status: &str) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("status".into(), json!(status));
    }
    v
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Bounds { n, group: k } => bounds(group(*n, *k)?),
        Command::Verify(args) => verify(args),
        Command::Gamma { n, group: k } => gamma(group(*n, *k)?, cli),
        Command::Table3 => table3(),
        Command::Membership { n, descriptor, cycle_type, group } => membership(*n, descriptor, cycle_type, *group),
        Command::Types { n, family, interval } => types(*n, *family, interval.as_deref()),
        Command::Catalog { n, group: k } => catalog(group(*n, *k)?, cli),
    }
}

fn bounds(g: GroupId) -> Result<Outcome> {
    let r = bounds_report(g)?;
    let mut text = format!("{g}\n");
    match (r.lower, r.lower_ceil) {
        (Some(l), Some(c)) if l.is_integer() => writeln!(text, "  lower  {c}").unwrap(),
        (Some(l), Some(c)) => writeln!(text, "  lower  {c} (from {l})").unwrap(),
        _ => writeln!(text, "  lower  none beyond the trivial bound").unwrap(),
    }
    writeln!(text, "  upper  {}", r.upper).unwrap();
    match r.exact {
        Some(e) => writeln!(text, "  exact  {e}").unwrap(),
        None => writeln!(text, "  exact  unknown").unwrap(),
    }
    if let Some((lo, hi)) = r.band() {
        writeln!(text, "  band   [{lo}, {hi}]").unwrap();
    }
    writeln!(text, "  sources:").unwrap();
    for s in &r.sources {
        let k = match s.kind {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
            BoundKind::Exact => "exact",
        };
        writeln!(text, "    {k:<5} {:<6} {}", s.value.to_string(), s.label).unwrap();
    }
    let mut v = serde_json::to_value(&r)?;
    if let (Some((lo, hi)), Value::Object(m)) = (r.band(), &mut v) {
        m.insert("band".into(), json!([lo.to_string(), hi]));
    }
    Ok(Outcome::ok(with_status(v, "ok"), text))
}

fn verify(args: &VerifyArgs) -> Result<Outcome> {
    let (basic_set, predicted) = match (&args.file, &args.family) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            (BasicSet::from_json(&text)?, None)
        }
        (None, Some(name)) => {
            let params = FamilyParams {
                n: args.n,
                p: args.p,
                q: args.q,
                alpha: args.alpha,
                beta: args.beta,
                kind: args.group.map(kind),
                block: args.block,
            };
            let c = Family::from_params(name, &params)?.construct()?;
            (c.basic_set, Some(c.predicted_size))
        }
        (None, None) => return Err(Error::Parse("verify needs --file or --family".into())),
    };
    let report = verify_basic_set(&basic_set)?;
    let status = if report.covered { Status::Ok } else { Status::Uncovered };
    let uncovered: Vec<String> = report.uncovered.iter().map(ToString::to_string).collect();
    let mut text = format!("{basic_set}\n");
    if !basic_set.provenance.is_empty() {
        writeln!(text, "  source: {}", basic_set.provenance).unwrap();
    }
    writeln!(text, "  size: {}{}", basic_set.len(), predicted.map(|p| format!(" (predicted {p})")).unwrap_or_default())
        .unwrap();
    if report.covered {
        writeln!(text, "  covered: every conjugacy class of {} is met", basic_set.group).unwrap();
    } else {
        writeln!(text, "  uncovered ({}): {}", uncovered.len(), uncovered.join(" ")).unwrap();
    }
    let mut v = serde_json::to_value(&report)?;
    if let Value::Object(m) = &mut v {
        m.insert("size".into(), json!(basic_set.len()));
        m.insert("predicted_size".into(), json!(predicted));
        m.insert("subgroups".into(), json!(basic_set.components.iter().map(ToString::to_string).collect::<Vec<_>>()));
    }
    let s = if report.covered { "ok" } else { "uncovered" };
    Ok(Outcome { status, json: with_status(v, s), text, warnings: Vec::new() })
}

fn catalog_for(g: GroupId, cli: &Cli) -> Result<Option<Catalog>> {
    match &cli.catalog {
        Some(path) => {
            let c = load_catalog_file(path)?;
            if c.group != g {
                return Err(Error::Catalog(format!("{} holds a catalog for {}, not {g}", path.display(), c.group)));
            }
            Ok(Some(c))
        }
        None if g.degree <= COMPLETE_MAX_DEGREE => Ok(Some(load_catalog(g)?)),
        None => Ok(None),
    }
}

fn gamma(g: GroupId, cli: &Cli) -> Result<Outcome> {
    let Some(catalog) = catalog_for(g, cli)? else {
        // No catalog: fall back to the closed-form bounds.
        let r = bounds_report(g)?;
        let warning = format!("no built-in catalog for n > {COMPLETE_MAX_DEGREE}; reporting closed-form bounds only");
        let text = match r.exact {
            Some(e) => format!("{g}: gamma = {e} (closed form)\n"),
            None => format!("{g}: gamma <= {} (upper bound only)\n", r.upper),
        };
        let v = json!({
            "status": "ok", "group": g, "mode": "upper_bound", "gamma": r.exact, "upper": r.upper,
            "lower": r.lower_ceil, "exact": r.exact.is_some(), "witness": null,
        });
        return Ok(Outcome { status: Status::Ok, json: v, text, warnings: vec![warning] });
    };
    let r = exact_gamma(g, &catalog)?;
    let mut warnings = Vec::new();
    if !r.exact {
        warnings.push(format!("the catalog is not known to be complete; {} is only an upper bound", r.gamma));
    }
    let comps: Vec<String> = r.witness.components.iter().map(ToString::to_string).collect();
    let relation = if r.exact { "=" } else { "<=" };
    let mut text = format!("{g}: gamma {relation} {}\n  witness:\n", r.gamma);
    for c in &comps {
        writeln!(text, "    {c}").unwrap();
    }
    let v = json!({
        "status": "ok", "group": g, "mode": if r.exact { "exact" } else { "upper_bound" },
        "gamma": r.gamma, "exact": r.exact, "witness": comps,
    });
    Ok(Outcome { status: Status::Ok, json: v, text, warnings })
}

fn table3() -> Result<Outcome> {
    let mut rows = Vec::new();
    for k in [GroupKind::Sym, GroupKind::Alt] {
        let mut cells = Vec::new();
        for n in 3..=12 {
            let Ok(g) = GroupId::new(k, n) else { continue };
            let r = exact_gamma(g, &load_catalog(g)?)?;
            debug_assert_eq!(Some(r.gamma as u64), small_exact(g));
            cells.push((n, r.gamma));
        }
        rows.push((k, cells));
    }
    let mut text = String::from("n     ");
    for n in 3..=12 {
        write!(text, "{n:>4}").unwrap();
    }
    text.push('\n');
    for (k, cells) in &rows {
        text.push_str(if *k == GroupKind::Sym { "S_n   " } else { "A_n   " });
        for n in 3..=12 {
            match cells.iter().find(|(m, _)| *m == n) {
                Some((_, v)) => write!(text, "{v:>4}").unwrap(),
                None => write!(text, "{:>4}", "-").unwrap(),
            }
        }
        text.push('\n');
    }
    let differs: Vec<(usize, u64)> = rows[1]
        .1
        .iter()
        .filter_map(|&(n, v)| PUBLISHED_ALT.iter().find(|(m, p)| *m == n && *p != v as u64).map(|&(_, p)| (n, p)))
        .collect();
    for (n, p) in &differs {
        writeln!(text, "note: the previously published value for A_{n} is {p}; the computed cover above is verified").unwrap();
    }
    let to_map = |cells: &Vec<(usize, usize)>| cells.iter().map(|(n, v)| (n.to_string(), json!(v))).collect::<serde_json::Map<_, _>>();
    let v = json!({
        "status": "ok",
        "sym": to_map(&rows[0].1),
        "alt": to_map(&rows[1].1),
        "published_differs": differs.iter().map(|(n, p)| json!({"group": format!("A{n}"), "published": p})).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(v, text))
}

fn membership(n: usize, descriptor: &str, cycle_type: &str, group: Option<Kind>) -> Result<Outcome> {
    let d = SubgroupDescriptor::parse(n, descriptor)?;
    let t: CycleType = cycle_type.parse()?;
    if t.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, got: t.degree() });
    }
    let in_alt = d.inner().is_some() || group == Some(Kind::Alt);
    let (member, rule, classes) = if in_alt {
        let g = GroupId::alt(n)?;
        if !t.is_even() {
            (false, "odd types do not occur in A_n", Vec::new())
        } else {
            let cov = class_coverage(&d, g)?;
            let met: Vec<String> =
                class_universe(g)?.into_iter().filter(|c| c.ctype == t && cov.contains(c)).map(|c| c.to_string()).collect();
            (!met.is_empty(), membership_rule(&d), met)
        }
    } else {
        (contains_type(&d, &t)?, membership_rule(&d), Vec::new())
    };
    let mut text = format!("{d} {} {t} in degree {n}\n  rule: {rule}\n", if member { "contains" } else { "does not contain" });
    if in_alt && member {
        writeln!(text, "  A_{n} classes met: {}", classes.join(" ")).unwrap();
    }
    let v = json!({
        "status": "ok", "n": n, "descriptor": d.to_string(), "type": t, "group": if in_alt { "alt" } else { "sym" },
        "member": member, "rule": rule, "classes": classes,
    });
    Ok(Outcome::ok(v, text))
}

fn types(n: usize, family: TypeFamily, interval: Option<&str>) -> Result<Outcome> {
    let (name, list, used) = match family {
        TypeFamily::U => ("U", u_set(n)?, None),
        TypeFamily::T => ("T", t_set(n)?, None),
        TypeFamily::TPrime => {
            let i: Interval = match interval {
                Some(s) => s.parse()?,
                None => format!("[1,{}/2)", n / 3).parse()?,
            };
            ("T'", t_prime_set(n, &i)?, Some(i.to_string()))
        }
    };
    let shown: Vec<String> = list.iter().map(bracket_ascending).collect();
    let label = match &used {
        Some(i) => format!("{name}({i})"),
        None => name.to_string(),
    };
    let text = format!("{label} for n = {n} ({} types): {}\n", shown.len(), shown.join(" "));
    let v = json!({ "status": "ok", "n": n, "family": name, "interval": used, "types": shown });
    Ok(Outcome::ok(v, text))
}

/// `[1,1,9]` style, smallest part first.
fn bracket_ascending(t: &CycleType) -> String {
    let parts: Vec<String> = t.parts().iter().rev().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn catalog(g: GroupId, cli: &Cli) -> Result<Outcome> {
    let c = catalog_for(g, cli)?
        .ok_or_else(|| Error::Catalog(format!("no built-in catalog for {g}; pass --catalog FILE")))?;
    let rows = c.coverage_rows()?;
    let total = class_universe(g)?.len();
    let mut text = format!("{g} catalog ({} classes of subgroups, complete: {})\n", c.descriptors.len(), c.complete);
    for (d, r) in c.descriptors.iter().zip(&rows) {
        writeln!(text, "  {:<28} meets {:>3} of {total} classes", d.to_string(), r.len()).unwrap();
    }
    let v: Value = serde_json::from_str(&c.to_json()?)?;
    Ok(Outcome::ok(with_status(v, "ok"), text))
}
