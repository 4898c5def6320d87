//! Catalog files and generated catalogs.
//!
//! A catalog line is `<n> <r> <bits>` with one character per `r`-subset of
//! `{0, .., n-1}`. In `lex01` the subsets are in lexicographic order of sorted
//! index tuples and `'1'` marks a basis; in `revlex_star` they are in
//! reverse-lexicographic order and `'*'` marks a basis. Lines starting with
//! `#` and blank lines are skipped.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::canonical::{canonical_form, CanonicalForm};
use crate::constructions::{fano, l8, projective_points, theta, theta_minus, uniform, wheel, whirl};
use crate::error::{Error, Result};
use crate::mask::{k_subsets_lex, k_subsets_revlex, SubsetMask};
use crate::matroid::Matroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogFormat {
    Lex01,
    RevlexStar,
}

impl CatalogFormat {
    fn subsets(self, n: usize, r: usize) -> Vec<SubsetMask> {
        match self {
            CatalogFormat::Lex01 => k_subsets_lex(n, r),
            CatalogFormat::RevlexStar => k_subsets_revlex(n, r),
        }
    }

    fn basis_char(self) -> char {
        match self {
            CatalogFormat::Lex01 => '1',
            CatalogFormat::RevlexStar => '*',
        }
    }
}

impl FromStr for CatalogFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex01" => Ok(CatalogFormat::Lex01),
            "revlex_star" => Ok(CatalogFormat::RevlexStar),
            _ => Err(Error::InvalidParameter(format!("unknown catalog format `{s}`"))),
        }
    }
}

impl fmt::Display for CatalogFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CatalogFormat::Lex01 => "lex01",
            CatalogFormat::RevlexStar => "revlex_star",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Line(usize),
    Generator(String),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub matroid: Matroid,
    pub source: Source,
    pub id: String,
}

/// One catalog line for `m`.
pub fn encode(m: &Matroid, format: CatalogFormat) -> String {
    let (n, r) = (m.size(), m.full_rank());
    let yes = format.basis_char();
    let bits: String = format
        .subsets(n, r)
        .into_iter()
        .map(|s| if m.is_basis(s) { yes } else { '0' })
        .collect();
    format!("{n} {r} {bits}")
}

/// Parses one non-comment line; errors carry `line`.
pub fn decode_line(text: &str, format: CatalogFormat, line: usize) -> Result<Matroid> {
    let err = |message: String| Error::Parse { line, message };
    let fields: Vec<&str> = text.split_whitespace().collect();
    let [n, r, bits] = fields[..] else {
        return Err(err(format!("expected `<n> <r> <bits>`, found {} fields", fields.len())));
    };
    let n: usize = n.parse().map_err(|_| err(format!("bad element count `{n}`")))?;
    let r: usize = r.parse().map_err(|_| err(format!("bad rank `{r}`")))?;
    if n > crate::mask::MAX_ELEMENTS || r > n {
        return Err(err(format!("unsupported size n={n}, r={r}")));
    }
    let subsets = format.subsets(n, r);
    let chars: Vec<char> = bits.chars().collect();
    if chars.len() != subsets.len() {
        return Err(err(format!("bitstring has length {}, expected {}", chars.len(), subsets.len())));
    }
    let yes = format.basis_char();
    let mut bases = Vec::new();
    for (&c, &s) in chars.iter().zip(&subsets) {
        match c {
            '0' => {}
            c if c == yes => bases.push(s),
            c => return Err(err(format!("illegal character `{c}` for format {format}"))),
        }
    }
    if bases.is_empty() {
        return Err(err("no bases".into()));
    }
    Matroid::from_bases(n, &bases).map_err(|e| err(e.to_string()))
}

/// `revlex_star` if any data line contains `'*'`, otherwise `lex01`.
pub fn detect_format(text: &str) -> CatalogFormat {
    let star = data_lines(text).any(|(_, l)| l.contains('*'));
    if star {
        CatalogFormat::RevlexStar
    } else {
        CatalogFormat::Lex01
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses catalog text; entries are deduplicated by canonical form, keeping
/// the first occurrence. Ids are `<label>:<line>`.
pub fn parse_catalog(text: &str, format: Option<CatalogFormat>, label: &str) -> Result<Vec<CatalogEntry>> {
    let format = format.unwrap_or_else(|| detect_format(text));
    let mut entries = Vec::new();
    for (line, content) in data_lines(text) {
        let id = format!("{label}:{line}");
        let matroid = decode_line(content, format, line)?.with_provenance(id.clone());
        entries.push(CatalogEntry { matroid, source: Source::Line(line), id });
    }
    Ok(dedup(entries))
}

pub fn load_catalog(path: &Path, format: Option<CatalogFormat>) -> Result<Vec<CatalogEntry>> {
    let text = std::fs::read_to_string(path)?;
    let label = path.file_stem().and_then(|s| s.to_str()).unwrap_or("catalog");
    parse_catalog(&text, format, label)
}

pub fn write_catalog(entries: &[CatalogEntry], format: CatalogFormat) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&format!("# {}\n{}\n", e.id, encode(&e.matroid, format)));
    }
    out
}

pub fn dedup(entries: Vec<CatalogEntry>) -> Vec<CatalogEntry> {
    let mut seen = HashSet::new();
    entries.into_iter().filter(|e| seen.insert(canonical_form(&e.matroid))).collect()
}

/// Named constructions with at most `max_n` elements, in a fixed order.
pub fn named_constructions(max_n: usize) -> Vec<CatalogEntry> {
    let mut out: Vec<(String, Matroid)> = Vec::new();
    for n in 0..=max_n {
        for r in 0..=n {
            out.push((format!("U({r},{n})"), uniform(r, n).expect("r <= n")));
        }
    }
    for r in 2..=max_n / 2 {
        out.push((format!("W({r})"), wheel(r).expect("r >= 2")));
        out.push((format!("WHIRL({r})"), whirl(r).expect("r >= 2")));
    }
    for n in 2..=max_n / 2 {
        out.push((format!("THETA({n})"), theta(n).expect("n >= 2").0));
    }
    for n in 2..=max_n.div_ceil(2) {
        out.push((format!("THETA-({n})"), theta_minus(n).expect("n >= 2").0));
    }
    if max_n >= 8 {
        out.push(("L8".into(), l8()));
    }
    if max_n >= 7 {
        out.push(("F7".into(), fano()));
    }
    out.into_iter()
        .map(|(id, m)| CatalogEntry {
            matroid: m.with_provenance(id.clone()),
            source: Source::Generator("construction".into()),
            id,
        })
        .collect()
}

/// All simple GF(p)-representable matroids on at most `max_n` elements.
///
/// For each rank `r`, representations `[I_r | A]` grow one projective point
/// at a time and are pruned to one per isomorphism class at every size.
/// Binary and ternary matroids are uniquely representable, so isomorphic
/// matroids have projectively equivalent representations and pruning loses
/// no class.
pub fn simple_representable(p: u32, max_n: usize) -> Result<Vec<(CanonicalForm, Matroid)>> {
    if p != 2 && p != 3 {
        return Err(Error::InvalidParameter(format!("field GF({p}) is not uniquely representable")));
    }
    let mut found: Vec<(CanonicalForm, Matroid)> = Vec::new();
    found.push((canonical_form(&uniform(0, 0)?), uniform(0, 0)?));
    for r in 1..=max_n {
        let points = projective_points(r, p);
        let identity: Vec<usize> = (0..r).map(|i| point_index(&points, &unit(r, i))).collect();
        let mut level: Vec<Vec<usize>> = vec![identity];
        for size in r..=max_n {
            let mut next: HashMap<CanonicalForm, Vec<usize>> = HashMap::new();
            for cols in &level {
                let m = column_matroid(p, &points, cols)?;
                found.push((canonical_form(&m), m));
                if size == max_n {
                    continue;
                }
                for q in 0..points.len() {
                    if cols.contains(&q) {
                        continue;
                    }
                    let mut grown = cols.clone();
                    grown.push(q);
                    let form = canonical_form(&column_matroid(p, &points, &grown)?);
                    next.entry(form).or_insert(grown);
                }
            }
            let mut keyed: Vec<(CanonicalForm, Vec<usize>)> = next.into_iter().collect();
            keyed.sort();
            level = keyed.into_iter().map(|(_, c)| c).collect();
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found)
}

fn unit(r: usize, i: usize) -> Vec<u32> {
    (0..r).map(|j| u32::from(i == j)).collect()
}

fn point_index(points: &[Vec<u32>], v: &[u32]) -> usize {
    points.iter().position(|p| p == v).expect("unit vectors are normalized points")
}

fn column_matroid(p: u32, points: &[Vec<u32>], cols: &[usize]) -> Result<Matroid> {
    let r = points[0].len();
    let rows: Vec<Vec<u32>> = (0..r).map(|i| cols.iter().map(|&c| points[c][i]).collect()).collect();
    Matroid::from_linear_rep(p, &rows)
}

/// The `gen:gf<p>:<max_n>` catalog: named constructions first, then every
/// simple GF(p)-representable matroid, deduplicated by canonical form.
pub fn gen_catalog(p: u32, max_n: usize) -> Result<Vec<CatalogEntry>> {
    let mut entries = named_constructions(max_n);
    let mut counters: HashMap<(usize, usize), usize> = HashMap::new();
    for (_, m) in simple_representable(p, max_n)? {
        let (n, r) = (m.size(), m.full_rank());
        let k = counters.entry((n, r)).or_default();
        let id = format!("gf{p}:n{n}:r{r}:{k}");
        *k += 1;
        entries.push(CatalogEntry {
            matroid: m.with_provenance(id.clone()),
            source: Source::Generator(format!("gf{p}")),
            id,
        });
    }
    Ok(dedup(entries))
}

/// Resolves a comma-separated catalog specification: `gen:gf2:<n>`,
/// `gen:gf3:<n>` or file paths (format detected from content). The union is
/// deduplicated; entries with more than `max_n` elements are dropped.
pub fn resolve_catalog(spec: &str, max_n: Option<usize>) -> Result<Vec<CatalogEntry>> {
    let mut all = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some(rest) = part.strip_prefix("gen:") {
            let bad = || Error::InvalidParameter(format!("bad generator `{part}`"));
            let (field, n) = rest.split_once(':').ok_or_else(bad)?;
            let p: u32 = field.strip_prefix("gf").and_then(|f| f.parse().ok()).ok_or_else(bad)?;
            let n: usize = n.parse().map_err(|_| bad())?;
            if n > 10 {
                return Err(Error::InvalidParameter(format!("generated catalogs are limited to 10 elements, got {n}")));
            }
            all.extend(gen_catalog(p, max_n.map_or(n, |k| k.min(n)))?);
        } else {
            all.extend(load_catalog(Path::new(part), None)?);
        }
    }
    let mut entries = dedup(all);
    if let Some(k) = max_n {
        entries.retain(|e| e.matroid.size() <= k);
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;
    use crate::constructions::mk4;

    #[test]
    fn decode_examples() {
        let u = decode_line("4 2 111111", CatalogFormat::Lex01, 1).unwrap();
        assert!(is_isomorphic(&u, &uniform(2, 4).unwrap()));
        let m = decode_line("3 1 110", CatalogFormat::Lex01, 1).unwrap();
        assert_eq!(m.full_rank(), 1);
        assert_eq!(m.loops(), SubsetMask::singleton(2));
        let err = decode_line("4 2 11111*", CatalogFormat::Lex01, 7).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 7, .. }));
        assert!(decode_line("4 2 1111", CatalogFormat::Lex01, 1).is_err());
        assert!(decode_line("2 1 00", CatalogFormat::Lex01, 1).is_err());
        // {0,1} and {2,3} only: exchange fails
        assert!(decode_line("4 2 100001", CatalogFormat::Lex01, 1).is_err());
    }

    #[test]
    fn orders_differ_between_formats() {
        // in lex order {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}; revlex {0,1},{0,2},{1,2},{0,3},{1,3},{2,3}
        let m = Matroid::from_bases(4, &[SubsetMask::from_elements([0, 3]), SubsetMask::from_elements([1, 3])]).unwrap();
        assert_eq!(encode(&m, CatalogFormat::Lex01), "4 2 001010");
        assert_eq!(encode(&m, CatalogFormat::RevlexStar), "4 2 000**0");
    }

    #[test]
    fn round_trips() {
        for m in [mk4(), fano(), l8(), uniform(0, 3).unwrap(), whirl(3).unwrap()] {
            for format in [CatalogFormat::Lex01, CatalogFormat::RevlexStar] {
                let line = encode(&m, format);
                let back = decode_line(&line, format, 1).unwrap();
                assert_eq!(back.rank_table(), m.rank_table());
                assert_eq!(encode(&back, format), line);
            }
        }
    }

    #[test]
    fn catalog_text_round_trip_and_dedup() {
        let text = "# small\n4 2 111111\n\n3 1 110\n4 2 111111\n";
        let entries = parse_catalog(text, None, "t").unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[1].id, "t:4");
        assert_eq!(entries[1].source, Source::Line(4));
        for format in [CatalogFormat::Lex01, CatalogFormat::RevlexStar] {
            let again = parse_catalog(&write_catalog(&entries, format), Some(format), "t").unwrap();
            assert_eq!(again.len(), 2);
            for (a, b) in entries.iter().zip(&again) {
                assert_eq!(a.matroid.rank_table(), b.matroid.rank_table());
            }
        }
        assert_eq!(detect_format("2 1 *0\n"), CatalogFormat::RevlexStar);
    }

    #[test]
    fn generated_catalog_contents() {
        let gf2 = gen_catalog(2, 7).unwrap();
        let has = |cat: &[CatalogEntry], m: &Matroid| cat.iter().any(|e| is_isomorphic(&e.matroid, m));
        assert!(has(&gf2, &fano()));
        let forms: HashSet<CanonicalForm> = gf2.iter().map(|e| canonical_form(&e.matroid)).collect();
        assert_eq!(forms.len(), gf2.len());

        let u24 = uniform(2, 4).unwrap();
        let binary = simple_representable(2, 4).unwrap();
        assert!(!binary.iter().any(|(_, m)| is_isomorphic(m, &u24)));
        let ternary = simple_representable(3, 4).unwrap();
        assert!(ternary.iter().any(|(_, m)| is_isomorphic(m, &u24)));
    }

    #[test]
    fn growth_agrees_with_subset_enumeration() {
        // every full-rank point set of PG(r-1, p), deduplicated, versus pruned growth
        for (p, max_r, max_n) in [(2u32, 4usize, 6usize), (3, 3, 5)] {
            let grown = simple_representable(p, max_n).unwrap();
            for r in 1..=max_r {
                let points = projective_points(r, p);
                let mut direct = HashSet::new();
                for set in SubsetMask::full(points.len()).subsets().filter(|s| s.len() >= r && s.len() <= max_n) {
                    let m = column_matroid(p, &points, &set.to_vec()).unwrap();
                    if m.full_rank() == r {
                        direct.insert(canonical_form(&m));
                    }
                }
                let ours: HashSet<CanonicalForm> =
                    grown.iter().filter(|(f, _)| f.rank() == r).map(|(f, _)| f.clone()).collect();
                assert_eq!(ours, direct, "GF({p}) rank {r}");
            }
        }
    }
}
