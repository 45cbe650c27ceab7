//! Bundled datasets and their lookup order: an explicit path, then the
//! directory named by `CHARKIT_DATA`, then the copy compiled into the crate.

use std::path::{Path, PathBuf};

use crate::fourier::{load_family_dataset, FamilyDataset, FourierError};
use crate::hecke::{load_coxeter_traces, CoxeterTraceDataset, HeckeError};

pub const DATA_ENV: &str = "CHARKIT_DATA";
pub const TRACES_FILE: &str = "e7_coxeter_traces.json";
pub const FAMILIES_FILE: &str = "e7_families.json";

pub const BUNDLED_TRACES: &str = include_str!("../data/e7_coxeter_traces.json");
pub const BUNDLED_FAMILIES: &str = include_str!("../data/e7_families.json");

/// Where a dataset is read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DataSource {
    File(PathBuf),
    Bundled,
}

/// Resolve `file` against an explicit path and `CHARKIT_DATA`.
pub fn resolve(explicit: Option<&Path>, file: &str) -> DataSource {
    if let Some(p) = explicit {
        return DataSource::File(p.to_path_buf());
    }
    match std::env::var_os(DATA_ENV) {
        Some(dir) if !dir.is_empty() => DataSource::File(Path::new(&dir).join(file)),
        _ => DataSource::Bundled,
    }
}

pub fn load_traces(explicit: Option<&Path>) -> Result<CoxeterTraceDataset, HeckeError> {
    match resolve(explicit, TRACES_FILE) {
        DataSource::File(p) => load_coxeter_traces(p),
        DataSource::Bundled => CoxeterTraceDataset::from_json_str(BUNDLED_TRACES),
    }
}

pub fn load_families(explicit: Option<&Path>) -> Result<FamilyDataset, FourierError> {
    match resolve(explicit, FAMILIES_FILE) {
        DataSource::File(p) => load_family_dataset(p),
        DataSource::Bundled => FamilyDataset::from_json_str(BUNDLED_FAMILIES),
    }
}

pub fn bundled_traces() -> CoxeterTraceDataset {
    CoxeterTraceDataset::from_json_str(BUNDLED_TRACES).expect("bundled trace dataset is valid")
}

pub fn bundled_families() -> FamilyDataset {
    FamilyDataset::from_json_str(BUNDLED_FAMILIES).expect("bundled family dataset is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_datasets_load_and_agree() {
        let t = bundled_traces();
        let f = bundled_families();
        f.check_against_traces(&t).unwrap();
        assert_eq!(f.num_unipotent(), 76);
        assert_eq!(f.families.len(), 35);
    }

    #[test]
    fn explicit_path_wins() {
        let p = Path::new("/nonexistent/traces.json");
        assert_eq!(
            resolve(Some(p), TRACES_FILE),
            DataSource::File(p.to_path_buf())
        );
        assert!(load_traces(Some(p)).is_err());
    }
}
