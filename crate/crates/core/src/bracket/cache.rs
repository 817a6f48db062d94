use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::LaurentPoly;
use crate::link::PdCode;

pub(crate) fn key(diagram: &PdCode) -> String {
    hex::encode(Sha256::digest(diagram.canonical_text().as_bytes()))
}

fn path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.bracket"))
}

pub(crate) fn load(dir: &Path, key: &str) -> Option<LaurentPoly> {
    LaurentPoly::from_record(&fs::read_to_string(path(dir, key)).ok()?)
}

/// Writes through a temporary file and an atomic rename, so concurrent
/// writers leave one complete record.
pub(crate) fn store(dir: &Path, key: &str, poly: &LaurentPoly) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(poly.to_record().as_bytes())?;
    tmp.persist(path(dir, key)).map_err(|e| e.error)?;
    Ok(())
}
