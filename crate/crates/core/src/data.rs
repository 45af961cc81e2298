//! Named permutation groups and built-in catalogs shipped as data files.
//!
//! Each named group record carries its expected order; a group only becomes
//! usable after closure reproduces that order. The second conjugacy class of
//! a named group inside A_n is its conjugate by the transposition `(1 2)`.
//!
//! Setting `NCK_DATA_DIR` replaces the embedded `groups.json` and
//! `catalogs.json` with files of the same name from that directory.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Deserialize;

use crate::cycle_types::{ClassId, CycleType};
use crate::error::{Error, Result};
use crate::permgroup::{self, GeneratedGroup, Perm};

pub const DATA_DIR_ENV: &str = "NCK_DATA_DIR";

const GROUPS_JSON: &str = include_str!("../data/groups.json");
const CATALOGS_JSON: &str = include_str!("../data/catalogs.json");

#[derive(Debug, Clone, Deserialize)]
pub struct GroupRecord {
    pub name: String,
    pub degree: usize,
    pub expected_order: usize,
    pub generators: Vec<Vec<Vec<usize>>>,
}

/// A materialized named group with cached invariants.
#[derive(Debug)]
pub struct NamedGroup {
    pub name: String,
    pub class: u8,
    pub group: GeneratedGroup,
    pub spectrum: BTreeSet<CycleType>,
    alt_coverage: OnceLock<Result<BTreeSet<ClassId>>>,
}

impl NamedGroup {
    pub fn is_even(&self) -> bool {
        self.group.is_even()
    }

    /// A_n classes met; fails if the group has odd elements.
    pub fn alt_coverage(&self) -> Result<&BTreeSet<ClassId>> {
        self.alt_coverage
            .get_or_init(|| permgroup::alt_class_coverage(&self.group))
            .as_ref()
            .map_err(Clone::clone)
    }
}

pub struct GroupLibrary {
    records: BTreeMap<String, GroupRecord>,
    cache: Mutex<HashMap<(String, u8), Arc<NamedGroup>>>,
}

fn data_file(name: &str) -> Option<PathBuf> {
    std::env::var_os(DATA_DIR_ENV).map(|dir| PathBuf::from(dir).join(name))
}

fn read_data(name: &str, embedded: &'static str) -> Result<String> {
    match data_file(name) {
        Some(path) => std::fs::read_to_string(&path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => Ok(embedded.to_string()),
    }
}

impl GroupLibrary {
    pub fn from_json(text: &str) -> Result<Self> {
        let list: Vec<GroupRecord> = serde_json::from_str(text)?;
        let mut records = BTreeMap::new();
        for r in list {
            if records.contains_key(&r.name) {
                return Err(Error::Parse(format!("duplicate group record {}", r.name)));
            }
            records.insert(r.name.clone(), r);
        }
        Ok(GroupLibrary { records, cache: Mutex::new(HashMap::new()) })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.records.keys().map(String::as_str)
    }

    pub fn record(&self, name: &str) -> Result<&GroupRecord> {
        self.records.get(name).ok_or_else(|| Error::UnknownGroup(name.to_string()))
    }

    pub fn degree_of(&self, name: &str) -> Result<usize> {
        Ok(self.record(name)?.degree)
    }

    /// Materializes class 1 or 2 of a named group, verifying its order.
    pub fn get(&self, name: &str, class: u8) -> Result<Arc<NamedGroup>> {
        if class != 1 && class != 2 {
            return Err(Error::Descriptor(format!("class must be 1 or 2, got {class}")));
        }
        let key = (name.to_string(), class);
        if let Some(g) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(g.clone());
        }
        let group = if class == 1 {
            self.materialize(self.record(name)?)?
        } else {
            let base = self.get(name, 1)?;
            let t = permgroup::transposition(base.group.degree(), 1, 2)?;
            base.group.conjugate_by(&t)?
        };
        let spectrum = permgroup::type_spectrum(&group);
        let named = Arc::new(NamedGroup {
            name: name.to_string(),
            class,
            group,
            spectrum,
            alt_coverage: OnceLock::new(),
        });
        let mut cache = self.cache.lock().expect("cache lock");
        Ok(cache.entry(key).or_insert(named).clone())
    }

    fn materialize(&self, r: &GroupRecord) -> Result<GeneratedGroup> {
        let gens = r
            .generators
            .iter()
            .map(|cycles| Perm::from_cycles(r.degree, cycles))
            .collect::<Result<Vec<_>>>()?;
        let g = permgroup::closure(r.degree, &gens, permgroup::DEFAULT_CAP)?;
        if g.order() != r.expected_order {
            return Err(Error::OrderMismatch {
                name: r.name.clone(),
                expected: r.expected_order,
                got: g.order(),
            });
        }
        Ok(g)
    }
}

static LIBRARY: OnceLock<std::result::Result<GroupLibrary, Error>> = OnceLock::new();

/// The process-wide group library.
pub fn library() -> Result<&'static GroupLibrary> {
    LIBRARY
        .get_or_init(|| GroupLibrary::from_json(&read_data("groups.json", GROUPS_JSON)?))
        .as_ref()
        .map_err(Clone::clone)
}

/// Text of the built-in catalog file (or its `NCK_DATA_DIR` override).
pub(crate) fn catalogs_text() -> Result<String> {
    read_data("catalogs.json", CATALOGS_JSON)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_shipped_group_reaches_its_order() {
        let lib = library().unwrap();
        for name in lib.names() {
            if name == "M12" {
                continue; // covered by integration tests
            }
            let g = lib.get(name, 1).unwrap();
            assert_eq!(g.group.order(), lib.record(name).unwrap().expected_order, "{name}");
        }
    }

    #[test]
    fn bad_order_is_rejected() {
        let lib = GroupLibrary::from_json(
            r#"[{"name":"X","degree":3,"expected_order":5,"generators":[[[1,2,3]]]}]"#,
        )
        .unwrap();
        assert_eq!(
            lib.get("X", 1).unwrap_err(),
            Error::OrderMismatch { name: "X".into(), expected: 5, got: 3 }
        );
        assert!(matches!(lib.get("Y", 1), Err(Error::UnknownGroup(_))));
    }

    #[test]
    fn second_class_is_conjugate_by_transposition() {
        let lib = library().unwrap();
        let a = lib.get("PGammaL2(8)", 1).unwrap();
        let b = lib.get("PGammaL2(8)", 2).unwrap();
        assert_eq!(a.group.order(), b.group.order());
        assert_eq!(a.spectrum, b.spectrum);
        assert_ne!(a.alt_coverage().unwrap(), b.alt_coverage().unwrap());
    }

    #[test]
    fn odd_group_has_no_alt_coverage() {
        let g = library().unwrap().get("AGL1(7)", 1).unwrap();
        assert!(!g.is_even());
        assert!(g.alt_coverage().is_err());
    }
}
