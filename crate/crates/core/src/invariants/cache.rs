use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::Result;

use super::{InvariantResult, Kind};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "CHARVAR_CACHE_DIR";
const DEFAULT_DIR: &str = ".charvar-cache";

/// Flag value, then `CHARVAR_CACHE_DIR`, then `./.charvar-cache`.
pub fn cache_dir_from(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    match std::env::var_os(CACHE_ENV) {
        Some(v) if !v.is_empty() => PathBuf::from(v),
        _ => PathBuf::from(DEFAULT_DIR),
    }
}

/// One cached document, identified by `kind/n/g`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CacheEntry {
    pub kind: Kind,
    pub n: usize,
    pub g: u32,
}

impl std::fmt::Display for CacheEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}/{}", self.kind, self.n, self.g)
    }
}

/// A directory of result documents named `<kind>_n<n>_g<g>.json`.
#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    /// Opens the directory, creating it if needed.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn file_name(kind: Kind, n: usize, g: u32) -> String {
        format!("{}_n{}_g{}.json", kind.tag(), n, g)
    }

    fn parse_name(name: &str) -> Option<CacheEntry> {
        let stem = name.strip_suffix(".json")?;
        let mut it = stem.split('_');
        let kind = it.next()?.parse().ok()?;
        let n = it.next()?.strip_prefix('n')?.parse().ok()?;
        let g = it.next()?.strip_prefix('g')?.parse().ok()?;
        if it.next().is_some() || Self::file_name(kind, n, g) != name {
            return None;
        }
        Some(CacheEntry { kind, n, g })
    }

    /// A stored result, or `None` when absent or unreadable.
    pub fn load(&self, kind: Kind, n: usize, g: u32) -> Option<InvariantResult> {
        let text = fs::read_to_string(self.dir.join(Self::file_name(kind, n, g))).ok()?;
        let r = InvariantResult::from_document(&text).ok()?;
        (r.kind == kind && r.n == n && r.g == g).then_some(r)
    }

    /// Writes through a temporary file and renames it into place.
    pub fn store(&self, r: &InvariantResult) -> Result<()> {
        let name = Self::file_name(r.kind, r.n, r.g);
        let tmp = self.dir.join(format!(".{name}.{}.tmp", std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(r.to_document().as_bytes())?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, self.dir.join(name))?;
        Ok(())
    }

    /// Cached entries in sorted order.
    pub fn list(&self) -> Result<Vec<CacheEntry>> {
        let mut out = Vec::new();
        for e in fs::read_dir(&self.dir)? {
            let name = e?.file_name();
            if let Some(entry) = name.to_str().and_then(Self::parse_name) {
                out.push(entry);
            }
        }
        out.sort();
        Ok(out)
    }

    /// Removes every cached document; returns how many were removed.
    pub fn clear(&self) -> Result<usize> {
        let entries = self.list()?;
        for e in &entries {
            fs::remove_file(self.dir.join(Self::file_name(e.kind, e.n, e.g)))?;
        }
        Ok(entries.len())
    }
}

#[cfg(test)]
mod tests {
    use super::super::Engine;
    use super::*;

    #[test]
    fn names_round_trip() {
        let e = DiskCache::parse_name("hqt_n3_g2.json").unwrap();
        assert_eq!(e.to_string(), "hqt/3/2");
        assert!(DiskCache::parse_name("hqt_n03_g2.json").is_none());
        assert!(DiskCache::parse_name("notes.txt").is_none());
    }

    #[test]
    fn hit_equals_recompute() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::open(dir.path()).unwrap();
        assert!(cache.list().unwrap().is_empty());
        let cold = Engine::with_cache(cache.clone()).compute(Kind::E, 2, 3).unwrap();
        assert_eq!(cache.list().unwrap(), vec![CacheEntry { kind: Kind::E, n: 2, g: 3 }]);
        let warm = Engine::with_cache(cache.clone()).compute(Kind::E, 2, 3).unwrap();
        assert_eq!(cold.to_document(), warm.to_document());
        assert_eq!(cache.clear().unwrap(), 1);
        assert!(cache.list().unwrap().is_empty());
    }
}
