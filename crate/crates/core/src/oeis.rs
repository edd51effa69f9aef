//! OEIS b-files: parsing, a disk-cached fetcher, and offset-aligned
//! comparison against locally generated sequences.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::sequences::{lucas_triangle_rows, NamedSequence};

/// A sequence as `offset, offset+1, ...` indexed terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRecord {
    pub id: String,
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

impl SequenceRecord {
    pub fn new(id: impl Into<String>, offset: i64, terms: Vec<BigInt>) -> Self {
        SequenceRecord { id: id.into(), offset, terms }
    }

    pub fn from_unsigned(id: impl Into<String>, offset: i64, terms: Vec<BigUint>) -> Self {
        Self::new(id, offset, terms.into_iter().map(BigInt::from).collect())
    }

    pub fn term(&self, index: i64) -> Option<&BigInt> {
        let i = index.checked_sub(self.offset)?;
        usize::try_from(i).ok().and_then(|i| self.terms.get(i))
    }

    /// Last index held, or `offset - 1` when empty.
    pub fn last_index(&self) -> i64 {
        self.offset + self.terms.len() as i64 - 1
    }
}

/// Parses b-file text. Blank lines and `#` comments are skipped; every data
/// line is `index value`, indices consecutive.
pub fn parse_bfile(id: &str, text: &str) -> Result<SequenceRecord> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let line_no = lineno + 1;
        let syntax = |reason: &str| Error::BFileSyntax { line: line_no, reason: reason.to_string() };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(syntax("expected two fields: index value"));
        };
        let index: i64 = index.parse().map_err(|_| syntax("index is not an integer"))?;
        let value: BigInt = value.parse().map_err(|_| syntax("value is not an integer"))?;
        let start = *offset.get_or_insert(index);
        let expected = start + terms.len() as i64;
        if index != expected {
            return Err(Error::BFileGap { line: line_no, expected, found: index });
        }
        terms.push(value);
    }
    let offset = offset.ok_or(Error::BFileEmpty)?;
    Ok(SequenceRecord::new(id, offset, terms))
}

/// b-file text for `record`, one `index value` line per term.
pub fn render(record: &SequenceRecord) -> String {
    let mut out = String::new();
    for (i, t) in record.terms.iter().enumerate() {
        out.push_str(&format!("{} {}\n", record.offset + i as i64, t));
    }
    out
}

/// The six digits of an id like `A000931`.
pub fn id_digits(id: &str) -> Result<&str> {
    match id.strip_prefix('A') {
        Some(d) if d.len() == 6 && d.bytes().all(|b| b.is_ascii_digit()) => Ok(d),
        _ => Err(Error::BadSequenceId(id.to_string())),
    }
}

pub fn bfile_url(id: &str) -> Result<String> {
    Ok(format!("https://oeis.org/{id}/b{}.txt", id_digits(id)?))
}

#[derive(Clone, Debug)]
pub struct FetchOptions {
    pub cache_dir: PathBuf,
    pub offline: bool,
    pub timeout: Duration,
}

impl FetchOptions {
    pub const ENV_CACHE: &'static str = "CUBEFACTOR_CACHE";

    /// Cache directory from `explicit`, else `CUBEFACTOR_CACHE`, else
    /// `$HOME/.cache/cubefactor`, else the system temp directory.
    pub fn new(explicit: Option<PathBuf>, offline: bool) -> Self {
        let cache_dir = explicit
            .or_else(|| std::env::var_os(Self::ENV_CACHE).map(PathBuf::from))
            .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache").join("cubefactor")))
            .unwrap_or_else(|| std::env::temp_dir().join("cubefactor"));
        FetchOptions { cache_dir, offline, timeout: Duration::from_secs(30) }
    }

    pub fn cache_path(&self, id: &str) -> Result<PathBuf> {
        Ok(self.cache_dir.join(format!("b{}.txt", id_digits(id)?)))
    }
}

/// Reads `id` from the cache, or downloads, parses and caches it. Nothing
/// is written unless the download parses.
pub fn fetch_bfile(id: &str, opts: &FetchOptions) -> Result<SequenceRecord> {
    let path = opts.cache_path(id)?;
    if path.is_file() {
        return parse_bfile(id, &fs::read_to_string(&path)?);
    }
    if opts.offline {
        return Err(Error::Offline(id.to_string()));
    }
    let url = bfile_url(id)?;
    let text = download(&url, opts.timeout)?;
    let record = parse_bfile(id, &text)?;
    store(&opts.cache_dir, &path, &text)?;
    Ok(record)
}

fn download(url: &str, timeout: Duration) -> Result<String> {
    let network = |reason: String| Error::Network { url: url.to_string(), reason };
    let agent: ureq::Agent = ureq::Agent::config_builder().timeout_global(Some(timeout)).build().into();
    let mut response = agent.get(url).call().map_err(|e| network(e.to_string()))?;
    response.body_mut().read_to_string().map_err(|e| network(e.to_string()))
}

/// Write-temp-then-rename so readers never see a partial file.
fn store(dir: &Path, path: &Path, text: &str) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Outcome of comparing `local[i]` with `remote[i + shift]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchReport {
    pub shift: i64,
    pub overlap: usize,
    /// `(local index, local term, remote term)` at the first disagreement.
    pub first_mismatch: Option<(i64, BigInt, BigInt)>,
}

impl MatchReport {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

pub fn compare(local: &SequenceRecord, remote: &SequenceRecord, shift: i64) -> Result<MatchReport> {
    let lo = local.offset.max(remote.offset - shift);
    let hi = local.last_index().min(remote.last_index() - shift);
    if lo > hi {
        return Err(Error::EmptyOverlap(shift));
    }
    let first_mismatch = (lo..=hi).find_map(|i| {
        let (a, b) = (local.term(i)?, remote.term(i + shift)?);
        (a != b).then(|| (i, a.clone(), b.clone()))
    });
    Ok(MatchReport { shift, overlap: (hi - lo + 1) as usize, first_mismatch })
}

#[derive(Clone, Debug)]
pub struct ShiftScan {
    pub local_id: String,
    pub remote_id: String,
    /// One entry per shift; `None` where the overlap is empty.
    pub results: Vec<(i64, Option<MatchReport>)>,
}

impl ShiftScan {
    /// The matching shift with the longest overlap, the smallest shift on
    /// ties.
    pub fn best(&self) -> Option<&MatchReport> {
        self.results.iter().filter_map(|(_, r)| r.as_ref()).filter(|r| r.matches()).fold(
            None,
            |best: Option<&MatchReport>, r| match best {
                Some(b) if b.overlap >= r.overlap => Some(b),
                _ => Some(r),
            },
        )
    }

    pub fn render(&self) -> String {
        let mut out = format!("# {} against {}\n", self.local_id, self.remote_id);
        for (shift, r) in &self.results {
            let line = match r {
                None => format!("shift {shift:+}: no overlap\n"),
                Some(r) => match &r.first_mismatch {
                    None => format!("shift {shift:+}: match over {} terms\n", r.overlap),
                    Some((i, a, b)) => {
                        format!("shift {shift:+}: mismatch at local index {i} ({a} vs {b}), overlap {}\n", r.overlap)
                    }
                },
            };
            out.push_str(&line);
        }
        match self.best() {
            Some(b) => out.push_str(&format!(
                "best shift {:+}: local a(i) = remote a(i{:+}) over {} terms\n",
                b.shift, b.shift, b.overlap
            )),
            None => out.push_str("no shift matches\n"),
        }
        out
    }
}

pub fn shift_scan(local: &SequenceRecord, remote: &SequenceRecord, shifts: std::ops::RangeInclusive<i64>) -> ShiftScan {
    ShiftScan {
        local_id: local.id.clone(),
        remote_id: remote.id.clone(),
        results: shifts.map(|s| (s, compare(local, remote, s).ok())).collect(),
    }
}

/// Local sequences that can be lined up against OEIS.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalSequence {
    Named(NamedSequence),
    /// The Lucas triangle read by rows.
    LucasTriangle,
}

impl LocalSequence {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "lucas-triangle" | "triangle" => Some(LocalSequence::LucasTriangle),
            _ => NamedSequence::parse(s).map(LocalSequence::Named),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LocalSequence::Named(s) => s.name(),
            LocalSequence::LucasTriangle => "lucas-triangle",
        }
    }

    /// The first `count` terms, indexed from 0.
    pub fn record(self, count: usize) -> SequenceRecord {
        let terms = match self {
            LocalSequence::Named(s) => s.terms(count),
            LocalSequence::LucasTriangle => {
                let mut rows = 1;
                while rows * (rows + 1) / 2 < count {
                    rows += 1;
                }
                let mut flat: Vec<BigUint> = lucas_triangle_rows(rows).into_iter().flat_map(|r| r.entries).collect();
                flat.truncate(count);
                flat
            }
        };
        SequenceRecord::from_unsigned(self.name(), 0, terms)
    }
}
