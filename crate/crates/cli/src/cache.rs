//! On-disk cache for exact PMF counts and the Dickman coefficient table.
//!
//! Enabled by pointing `COMPONENT_RANKS_CACHE` at a directory. Every file is
//! `b"CRNK"`, a little-endian `u16` format version and a `u8` payload tag,
//! followed by the payload:
//!
//! * tag 1, Dickman table: `u32` orders, `u32` x range, `u32` degree, `u64`
//!   coefficient count, then little-endian `f64` coefficients;
//! * tag 2, exact counts: `u8` kind, `u8` side, `u32` rank, `u32` n, `u32`
//!   entry count, then per entry a `u32` byte length and the little-endian
//!   magnitude bytes.
//!
//! Files that fail validation are ignored and rewritten.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use component_ranks::asymptotics::{DickmanTable, DEFAULT_DEGREE, DEFAULT_X_MAX, MAX_DICKMAN_ORDER};
use component_ranks::{ObjectKind, Side};
use num_bigint::BigUint;

pub const ENV_VAR: &str = "COMPONENT_RANKS_CACHE";
pub const MAGIC: &[u8; 4] = b"CRNK";
pub const VERSION: u16 = 1;
const TAG_DICKMAN: u8 = 1;
const TAG_COUNTS: u8 = 2;

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

/// Sequential little-endian reader over a byte slice.
struct Reader<'a>(&'a [u8]);

impl<'a> Reader<'a> {
    fn take(&mut self, len: usize) -> Option<&'a [u8]> {
        if self.0.len() < len {
            return None;
        }
        let (head, tail) = self.0.split_at(len);
        self.0 = tail;
        Some(head)
    }

    fn u8(&mut self) -> Option<u8> {
        self.take(1).map(|b| b[0])
    }

    fn u16(&mut self) -> Option<u16> {
        self.take(2).map(|b| u16::from_le_bytes(b.try_into().expect("2 bytes")))
    }

    fn u32(&mut self) -> Option<u32> {
        self.take(4).map(|b| u32::from_le_bytes(b.try_into().expect("4 bytes")))
    }

    fn u64(&mut self) -> Option<u64> {
        self.take(8).map(|b| u64::from_le_bytes(b.try_into().expect("8 bytes")))
    }

    fn f64(&mut self) -> Option<f64> {
        self.u64().map(f64::from_bits)
    }
}

fn header(tag: u8) -> Vec<u8> {
    let mut v = MAGIC.to_vec();
    v.extend_from_slice(&VERSION.to_le_bytes());
    v.push(tag);
    v
}

fn check_header(r: &mut Reader<'_>, tag: u8) -> Option<()> {
    (r.take(4)? == MAGIC && r.u16()? == VERSION && r.u8()? == tag).then_some(())
}

fn kind_code(kind: ObjectKind) -> u8 {
    match kind {
        ObjectKind::Permutation => 0,
        ObjectKind::Mapping => 1,
    }
}

fn side_code(side: Side) -> u8 {
    match side {
        Side::Largest => 0,
        Side::Smallest => 1,
    }
}

pub fn encode_counts(kind: ObjectKind, side: Side, rank: usize, n: usize, counts: &[BigUint]) -> Vec<u8> {
    let mut v = header(TAG_COUNTS);
    v.push(kind_code(kind));
    v.push(side_code(side));
    v.extend_from_slice(&(rank as u32).to_le_bytes());
    v.extend_from_slice(&(n as u32).to_le_bytes());
    v.extend_from_slice(&(counts.len() as u32).to_le_bytes());
    for c in counts {
        let bytes = c.to_bytes_le();
        v.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
        v.extend_from_slice(&bytes);
    }
    v
}

pub fn decode_counts(bytes: &[u8], kind: ObjectKind, side: Side, rank: usize, n: usize) -> Option<Vec<BigUint>> {
    let mut r = Reader(bytes);
    check_header(&mut r, TAG_COUNTS)?;
    let key_ok = r.u8()? == kind_code(kind)
        && r.u8()? == side_code(side)
        && r.u32()? as usize == rank
        && r.u32()? as usize == n;
    if !key_ok {
        return None;
    }
    let len = r.u32()? as usize;
    let mut out = Vec::with_capacity(len.min(1 << 16));
    for _ in 0..len {
        let width = r.u32()? as usize;
        out.push(BigUint::from_bytes_le(r.take(width)?));
    }
    r.0.is_empty().then_some(out)
}

pub fn encode_dickman(t: &DickmanTable) -> Vec<u8> {
    let coeffs = t.coefficients();
    let mut v = header(TAG_DICKMAN);
    v.extend_from_slice(&(t.r_max() as u32).to_le_bytes());
    v.extend_from_slice(&(t.x_max() as u32).to_le_bytes());
    v.extend_from_slice(&(t.degree() as u32).to_le_bytes());
    v.extend_from_slice(&(coeffs.len() as u64).to_le_bytes());
    for c in coeffs {
        v.extend_from_slice(&c.to_le_bytes());
    }
    v
}

pub fn decode_dickman(bytes: &[u8]) -> Option<DickmanTable> {
    let mut r = Reader(bytes);
    check_header(&mut r, TAG_DICKMAN)?;
    let (r_max, x_max, degree) = (r.u32()? as usize, r.u32()? as usize, r.u32()? as usize);
    let len = r.u64()? as usize;
    if len != r.0.len() / 8 || r.0.len() % 8 != 0 {
        return None;
    }
    let flat: Option<Vec<f64>> = (0..len).map(|_| r.f64()).collect();
    DickmanTable::from_coefficients(r_max, x_max, degree, &flat?)
}

fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(tmp, path)
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    /// The cache named by the environment, if set and usable.
    pub fn from_env() -> Option<Self> {
        let dir = std::env::var_os(ENV_VAR)?;
        match Cache::new(PathBuf::from(dir)) {
            Ok(c) => Some(c),
            Err(e) => {
                eprintln!("warning: cache directory unusable, continuing without it: {e}");
                None
            }
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn counts_path(&self, engine: &str, kind: ObjectKind, side: Side, rank: usize, n: usize) -> PathBuf {
        self.dir
            .join(format!("pmf-{engine}-{}-{}-r{rank}-n{n}.crnk", kind.name(), side.name()))
    }

    pub fn load_counts(&self, engine: &str, kind: ObjectKind, side: Side, rank: usize, n: usize) -> Option<Vec<BigUint>> {
        let bytes = fs::read(self.counts_path(engine, kind, side, rank, n)).ok()?;
        decode_counts(&bytes, kind, side, rank, n)
    }

    pub fn store_counts(
        &self,
        engine: &str,
        kind: ObjectKind,
        side: Side,
        rank: usize,
        n: usize,
        counts: &[BigUint],
    ) -> io::Result<()> {
        write_atomic(
            &self.counts_path(engine, kind, side, rank, n),
            &encode_counts(kind, side, rank, n, counts),
        )
    }

    fn dickman_path(&self) -> PathBuf {
        self.dir
            .join(format!("dickman-r{MAX_DICKMAN_ORDER}-x{DEFAULT_X_MAX}-d{DEFAULT_DEGREE}.crnk"))
    }

    /// Loads the shared Dickman table from disk, or builds and stores it,
    /// then installs it for the library's limit-law routines.
    pub fn prime_dickman(&self) -> io::Result<bool> {
        let path = self.dickman_path();
        let loaded = fs::read(&path).ok().and_then(|b| decode_dickman(&b));
        let hit = loaded.is_some();
        let table = match loaded {
            Some(t) => t,
            None => {
                let t = DickmanTable::new(MAX_DICKMAN_ORDER, DEFAULT_X_MAX).map_err(io::Error::other)?;
                write_atomic(&path, &encode_dickman(&t))?;
                t
            }
        };
        // a table already in use stays; the values are identical either way
        let _ = component_ranks::asymptotics::install_default_table(table);
        Ok(hit)
    }
}
