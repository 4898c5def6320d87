//! Matroids on at most 20 elements stored as full rank tables.

use std::fmt;

use crate::error::{Error, Result};
use crate::mask::{SubsetMask, MAX_ELEMENTS};

/// Above this many bases the exchange axiom is validated through the
/// equivalent local submodularity test on the derived rank table.
const PAIRWISE_EXCHANGE_LIMIT: usize = 4096;

/// A matroid on `{0, .., n-1}` with an exact rank oracle.
///
/// `rank_table[X]` is the rank of the subset with bit pattern `X`. The table
/// always satisfies normalization, unit increase and submodularity; every
/// constructor either proves this or is derived from a matroid that does.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    ranks: Vec<u8>,
    provenance: Option<String>,
    names: Option<Vec<String>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.ranks == other.ranks
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.full_rank())
            .field("provenance", &self.provenance)
            .finish()
    }
}

/// Tracks element identities through deletions, contractions and relabelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundMap {
    /// `forward[old] = Some(new)` for surviving elements.
    pub forward: Vec<Option<usize>>,
    /// Surviving elements of the original ground set.
    pub kept: SubsetMask,
}

impl GroundMap {
    pub fn identity(n: usize) -> Self {
        GroundMap {
            forward: (0..n).map(Some).collect(),
            kept: SubsetMask::full(n),
        }
    }

    /// Order-preserving relabelling of `kept` onto an initial segment.
    pub fn compress(n: usize, kept: SubsetMask) -> Self {
        let mut forward = vec![None; n];
        for (new, old) in kept.iter().enumerate() {
            forward[old] = Some(new);
        }
        GroundMap { forward, kept }
    }

    pub fn image(&self, old: usize) -> Option<usize> {
        self.forward.get(old).copied().flatten()
    }

    /// Image of the surviving part of `set`.
    pub fn image_set(&self, set: SubsetMask) -> SubsetMask {
        (set & self.kept).iter().filter_map(|e| self.image(e)).collect()
    }

    /// The original element that was relabelled to `new`.
    pub fn preimage(&self, new: usize) -> Option<usize> {
        self.forward.iter().position(|&f| f == Some(new))
    }

    pub fn preimage_set(&self, set: SubsetMask) -> SubsetMask {
        set.iter().filter_map(|e| self.preimage(e)).collect()
    }

    /// Composition: first `self`, then `next`.
    pub fn then(&self, next: &GroundMap) -> GroundMap {
        let forward: Vec<Option<usize>> = self
            .forward
            .iter()
            .map(|f| f.and_then(|mid| next.image(mid)))
            .collect();
        let kept = forward
            .iter()
            .enumerate()
            .filter(|(_, f)| f.is_some())
            .map(|(i, _)| i)
            .collect();
        GroundMap { forward, kept }
    }
}

/// Spreads the bits of `compact` onto the positions listed in `positions`.
#[inline]
fn scatter(compact: usize, positions: &[u32]) -> u32 {
    let mut out = 0;
    let mut c = compact;
    while c != 0 {
        out |= positions[c.trailing_zeros() as usize];
        c &= c - 1;
    }
    out
}

impl Matroid {
    fn check_size(n: usize) -> Result<()> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements(n));
        }
        Ok(())
    }

    fn check_members(n: usize, sets: &[SubsetMask]) -> Result<()> {
        let full = SubsetMask::full(n);
        for s in sets {
            if !s.is_subset_of(full) {
                let element = (*s - full).first().unwrap_or(0);
                return Err(Error::ElementOutOfRange { element, n });
            }
        }
        Ok(())
    }

    /// Wraps a table already known to be a matroid rank function.
    pub(crate) fn from_table_unchecked(n: usize, ranks: Vec<u8>) -> Self {
        debug_assert_eq!(ranks.len(), 1 << n);
        Matroid {
            n,
            ranks,
            provenance: None,
            names: None,
        }
    }

    /// Builds the matroid whose bases are exactly `bases`.
    pub fn from_bases(n: usize, bases: &[SubsetMask]) -> Result<Self> {
        Self::check_size(n)?;
        Self::check_members(n, bases)?;
        let first = bases.first().ok_or(Error::EmptyBasisFamily)?;
        let r = first.len();
        for b in bases {
            if b.len() != r {
                return Err(Error::BasisSizeMismatch {
                    expected: r,
                    found: b.len(),
                });
            }
        }
        let size = 1usize << n;
        let mut is_basis = vec![false; size];
        for b in bases {
            is_basis[b.index()] = true;
        }
        let mut distinct: Vec<SubsetMask> = bases.to_vec();
        distinct.sort();
        distinct.dedup();

        if distinct.len() <= PAIRWISE_EXCHANGE_LIMIT {
            check_exchange(&distinct, &is_basis)?;
        }

        let ranks = ranks_from_independent_tops(n, &is_basis);
        if distinct.len() > PAIRWISE_EXCHANGE_LIMIT {
            if let Some(bad) = first_submodularity_violation(n, &ranks) {
                // locate an offending pair for the error message
                let witness = find_exchange_violation(&distinct, &is_basis);
                return Err(match witness {
                    Some((first, second)) => Error::ExchangeViolation { first, second },
                    None => Error::InvalidRankTable(bad),
                });
            }
        }
        Ok(Self::from_table_unchecked(n, ranks))
    }

    /// Builds the matroid whose independent sets are the sets containing none of `circuits`.
    pub fn from_circuits(n: usize, circuits: &[SubsetMask]) -> Result<Self> {
        Self::check_size(n)?;
        Self::check_members(n, circuits)?;
        let mut listed: Vec<SubsetMask> = circuits.to_vec();
        listed.sort();
        listed.dedup();
        if listed.iter().any(|c| c.is_empty()) {
            return Err(Error::EmptyCircuit);
        }
        for a in &listed {
            for b in &listed {
                if a.is_proper_subset_of(*b) {
                    return Err(Error::CircuitContainment {
                        inner: *a,
                        outer: *b,
                    });
                }
            }
        }
        let size = 1usize << n;
        let mut dependent = vec![false; size];
        for c in &listed {
            dependent[c.index()] = true;
        }
        for mask in 1..size {
            if !dependent[mask] {
                let mut m = mask;
                while m != 0 {
                    let low = m & m.wrapping_neg();
                    if dependent[mask ^ low] {
                        dependent[mask] = true;
                        break;
                    }
                    m ^= low;
                }
            }
        }
        let mut ranks = vec![0u8; size];
        for mask in 1..size {
            ranks[mask] = if !dependent[mask] {
                mask.count_ones() as u8
            } else {
                max_rank_below(&ranks, mask)
            };
        }
        let r = ranks[size - 1] as usize;
        let bases: Vec<SubsetMask> = (0..size)
            .filter(|&m| !dependent[m] && m.count_ones() as usize == r)
            .map(|m| SubsetMask(m as u32))
            .collect();
        let m = Self::from_bases(n, &bases)?;
        let derived = m.circuits();
        if let Some(extra) = derived.iter().find(|c| listed.binary_search(c).is_err()) {
            return Err(Error::CircuitMismatch(*extra));
        }
        if let Some(missing) = listed.iter().find(|c| derived.binary_search(c).is_err()) {
            return Err(Error::CircuitMismatch(*missing));
        }
        Ok(m)
    }

    /// Column matroid of a matrix over GF(p), given as rows of residues.
    pub fn from_linear_rep(p: u32, rows: &[Vec<u32>]) -> Result<Self> {
        if ![2, 3, 5, 7].contains(&p) {
            return Err(Error::UnsupportedField(p));
        }
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::RaggedMatrix);
        }
        Self::check_size(n)?;
        if rows.len() > n {
            return Err(Error::InvalidParameter(format!(
                "{} rows exceed {} columns",
                rows.len(),
                n
            )));
        }
        let columns: Vec<Vec<u32>> = (0..n)
            .map(|j| rows.iter().map(|row| row[j] % p).collect())
            .collect();
        let size = 1usize << n;
        let mut ranks = vec![0u8; size];
        for (mask, slot) in ranks.iter_mut().enumerate().skip(1) {
            let cols: Vec<&[u32]> = SubsetMask(mask as u32)
                .iter()
                .map(|j| columns[j].as_slice())
                .collect();
            *slot = gf_rank(p, &cols) as u8;
        }
        Ok(Self::from_table_unchecked(n, ranks))
    }

    /// Validates an explicit rank table.
    pub fn from_rank_table(n: usize, ranks: Vec<u8>) -> Result<Self> {
        Self::check_size(n)?;
        if ranks.len() != 1 << n {
            return Err(Error::InvalidParameter(format!(
                "rank table has {} entries, expected {}",
                ranks.len(),
                1usize << n
            )));
        }
        if ranks[0] != 0 {
            return Err(Error::InvalidRankTable(SubsetMask::EMPTY));
        }
        for mask in 0..ranks.len() {
            for e in SubsetMask(mask as u32).complement(n).iter() {
                let up = ranks[mask | 1 << e];
                if up < ranks[mask] || up > ranks[mask] + 1 {
                    return Err(Error::InvalidRankTable(SubsetMask(mask as u32)));
                }
            }
        }
        if let Some(bad) = first_submodularity_violation(n, &ranks) {
            return Err(Error::InvalidRankTable(bad));
        }
        Ok(Self::from_table_unchecked(n, ranks))
    }

    pub fn with_provenance(mut self, label: impl Into<String>) -> Self {
        self.provenance = Some(label.into());
        self
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n, "one name per element");
        self.names = Some(names);
        self
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of element `e`: its construction label if any, else its index.
    pub fn element_name(&self, e: usize) -> String {
        match &self.names {
            Some(names) => names[e].clone(),
            None => e.to_string(),
        }
    }

    /// Looks up an element by construction label.
    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|s| s == name)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn ground(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    #[inline]
    pub fn rank_table(&self) -> &[u8] {
        &self.ranks
    }

    #[inline]
    pub fn rank(&self, x: SubsetMask) -> usize {
        self.ranks[x.index()] as usize
    }

    #[inline]
    pub(crate) fn rank_raw(&self, x: u32) -> u8 {
        self.ranks[x as usize]
    }

    #[inline]
    pub fn full_rank(&self) -> usize {
        self.ranks[self.ranks.len() - 1] as usize
    }

    /// `r*(X) = |X| + r(E - X) - r(M)`.
    #[inline]
    pub fn corank(&self, x: SubsetMask) -> usize {
        x.len() + self.rank(x.complement(self.n)) - self.full_rank()
    }

    /// Rank of the dual matroid.
    #[inline]
    pub fn full_corank(&self) -> usize {
        self.n - self.full_rank()
    }

    #[inline]
    pub fn is_independent(&self, x: SubsetMask) -> bool {
        self.rank(x) == x.len()
    }

    #[inline]
    pub fn is_basis(&self, x: SubsetMask) -> bool {
        x.len() == self.full_rank() && self.is_independent(x)
    }

    pub fn is_circuit(&self, x: SubsetMask) -> bool {
        !x.is_empty()
            && self.rank(x) + 1 == x.len()
            && x.iter().all(|e| self.is_independent(x.without(e)))
    }

    pub fn closure(&self, x: SubsetMask) -> SubsetMask {
        let r = self.rank_raw(x.0);
        let mut out = x;
        for e in x.complement(self.n).iter() {
            if self.rank_raw(x.0 | 1 << e) == r {
                out = out.with(e);
            }
        }
        out
    }

    /// Closure in the dual matroid.
    pub fn coclosure(&self, x: SubsetMask) -> SubsetMask {
        let r = self.corank(x);
        let mut out = x;
        for e in x.complement(self.n).iter() {
            if self.corank(x.with(e)) == r {
                out = out.with(e);
            }
        }
        out
    }

    pub fn is_flat(&self, x: SubsetMask) -> bool {
        self.closure(x) == x
    }

    pub fn loops(&self) -> SubsetMask {
        (0..self.n).filter(|&e| self.ranks[1 << e] == 0).collect()
    }

    pub fn coloops(&self) -> SubsetMask {
        let full = self.full_rank() as u8;
        let all = self.ground().0;
        (0..self.n)
            .filter(|&e| self.ranks[(all & !(1 << e)) as usize] < full)
            .collect()
    }

    pub fn dual(&self) -> Matroid {
        let size = self.ranks.len();
        let all = size - 1;
        let r = self.full_rank() as i32;
        let ranks = (0..size)
            .map(|x| (x.count_ones() as i32 + self.ranks[all ^ x] as i32 - r) as u8)
            .collect();
        Matroid {
            n: self.n,
            ranks,
            provenance: self.provenance.as_ref().map(|p| format!("dual({p})")),
            names: self.names.clone(),
        }
    }

    /// `M / contract \ delete`, relabelled onto an initial segment in index order.
    pub fn minor(&self, contract: SubsetMask, delete: SubsetMask) -> (Matroid, GroundMap) {
        assert!(contract.is_disjoint(delete), "contract and delete sets must be disjoint");
        let kept = self.ground() - contract - delete;
        let map = GroundMap::compress(self.n, kept);
        let positions: Vec<u32> = kept.iter().map(|e| 1u32 << e).collect();
        let m = positions.len();
        let c = contract.0;
        let base = self.ranks[c as usize];
        let mut expanded = vec![0u32; 1 << m];
        let mut ranks = vec![0u8; 1 << m];
        for y in 1..(1usize << m) {
            let low = y.trailing_zeros() as usize;
            expanded[y] = expanded[y & (y - 1)] | positions[low];
            ranks[y] = self.ranks[(expanded[y] | c) as usize] - base;
        }
        let names = self
            .names
            .as_ref()
            .map(|names| kept.iter().map(|e| names[e].clone()).collect());
        (
            Matroid {
                n: m,
                ranks,
                provenance: None,
                names,
            },
            map,
        )
    }

    pub fn delete(&self, e: usize) -> Matroid {
        self.minor(SubsetMask::EMPTY, SubsetMask::singleton(e)).0
    }

    pub fn contract(&self, e: usize) -> Matroid {
        self.minor(SubsetMask::singleton(e), SubsetMask::EMPTY).0
    }

    /// `M | X`.
    pub fn restrict(&self, x: SubsetMask) -> Matroid {
        self.minor(SubsetMask::EMPTY, x.complement(self.n)).0
    }

    /// Relabels so that new element `i` is old element `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Matroid {
        assert_eq!(perm.len(), self.n);
        let positions: Vec<u32> = perm.iter().map(|&e| 1u32 << e).collect();
        let ranks = (0..self.ranks.len())
            .map(|y| self.ranks[scatter(y, &positions) as usize])
            .collect();
        Matroid {
            n: self.n,
            ranks,
            provenance: self.provenance.clone(),
            names: self
                .names
                .as_ref()
                .map(|names| perm.iter().map(|&e| names[e].clone()).collect()),
        }
    }

    /// Minimal dependent sets in increasing mask order.
    pub fn circuits(&self) -> Vec<SubsetMask> {
        let mut out = Vec::new();
        for mask in 1..self.ranks.len() as u32 {
            let size = mask.count_ones() as u8;
            if self.ranks[mask as usize] + 1 != size {
                continue;
            }
            let mut m = mask;
            let mut minimal = true;
            while m != 0 {
                let low = m & m.wrapping_neg();
                if self.ranks[(mask ^ low) as usize] != size - 1 {
                    minimal = false;
                    break;
                }
                m ^= low;
            }
            if minimal {
                out.push(SubsetMask(mask));
            }
        }
        out
    }

    pub fn cocircuits(&self) -> Vec<SubsetMask> {
        self.dual().circuits()
    }

    pub fn triangles(&self) -> Vec<SubsetMask> {
        self.k_subsets_where(3, |m, x| m.rank(x) == 2 && x.iter().all(|e| m.is_independent(x.without(e))))
    }

    pub fn triads(&self) -> Vec<SubsetMask> {
        self.k_subsets_where(3, |m, x| m.is_triad(x))
    }

    pub fn is_triangle(&self, x: SubsetMask) -> bool {
        x.len() == 3 && self.is_circuit(x)
    }

    pub fn is_triad(&self, x: SubsetMask) -> bool {
        x.len() == 3
            && self.corank(x) == 2
            && x.iter().all(|e| self.corank(x.without(e)) == 2)
    }

    fn k_subsets_where(&self, k: usize, pred: impl Fn(&Matroid, SubsetMask) -> bool) -> Vec<SubsetMask> {
        (0..self.ranks.len() as u32)
            .map(SubsetMask)
            .filter(|x| x.len() == k && pred(self, *x))
            .collect()
    }

    /// All bases in increasing mask order.
    pub fn bases(&self) -> Vec<SubsetMask> {
        let r = self.full_rank();
        (0..self.ranks.len() as u32)
            .map(SubsetMask)
            .filter(|x| x.len() == r && self.ranks[x.index()] as usize == r)
            .collect()
    }

    /// Deletes loops and all but the smallest element of each parallel class.
    pub fn simplify(&self) -> (Matroid, GroundMap) {
        let mut removed = self.loops();
        for e in 0..self.n {
            if removed.contains(e) {
                continue;
            }
            for f in e + 1..self.n {
                if !removed.contains(f) && self.ranks[(1 << e | 1 << f) as usize] == 1 {
                    removed = removed.with(f);
                }
            }
        }
        self.minor(SubsetMask::EMPTY, removed)
    }

    /// Removes coloops and contracts all but the smallest element of each series class.
    pub fn cosimplify(&self) -> (Matroid, GroundMap) {
        let coloops = self.coloops();
        let mut contracted = SubsetMask::EMPTY;
        for e in 0..self.n {
            if coloops.contains(e) || contracted.contains(e) {
                continue;
            }
            for f in e + 1..self.n {
                let pair = SubsetMask::singleton(e).with(f);
                if !coloops.contains(f) && !contracted.contains(f) && self.corank(pair) == 1 {
                    contracted = contracted.with(f);
                }
            }
        }
        // a coloop is deleted; deletion and contraction of a coloop coincide
        self.minor(contracted, coloops)
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        Self::check_size(n)?;
        let low = (1usize << self.n) - 1;
        let ranks = (0..1usize << n)
            .map(|x| self.ranks[x & low] + other.ranks[x >> self.n])
            .collect();
        Ok(Self::from_table_unchecked(n, ranks))
    }
}

/// Ranks from the downward closure of a family of maximal independent sets.
fn ranks_from_independent_tops(n: usize, tops: &[bool]) -> Vec<u8> {
    let size = 1usize << n;
    let mut independent = tops.to_vec();
    for mask in (1..size).rev() {
        if independent[mask] {
            let mut m = mask;
            while m != 0 {
                let low = m & m.wrapping_neg();
                independent[mask ^ low] = true;
                m ^= low;
            }
        }
    }
    let mut ranks = vec![0u8; size];
    for mask in 1..size {
        ranks[mask] = if independent[mask] {
            mask.count_ones() as u8
        } else {
            max_rank_below(&ranks, mask)
        };
    }
    ranks
}

#[inline]
fn max_rank_below(ranks: &[u8], mask: usize) -> u8 {
    let mut best = 0;
    let mut m = mask;
    while m != 0 {
        let low = m & m.wrapping_neg();
        best = best.max(ranks[mask ^ low]);
        m ^= low;
    }
    best
}

fn check_exchange(bases: &[SubsetMask], is_basis: &[bool]) -> Result<()> {
    match find_exchange_violation(bases, is_basis) {
        Some((first, second)) => Err(Error::ExchangeViolation { first, second }),
        None => Ok(()),
    }
}

fn find_exchange_violation(bases: &[SubsetMask], is_basis: &[bool]) -> Option<(SubsetMask, SubsetMask)> {
    for &b1 in bases {
        for &b2 in bases {
            for x in (b1 - b2).iter() {
                let without = b1.without(x);
                if !(b2 - b1).iter().any(|y| is_basis[without.with(y).index()]) {
                    return Some((b1, b2));
                }
            }
        }
    }
    None
}

/// Local form of submodularity: `r(X+e) + r(X+f) >= r(X+e+f) + r(X)`.
fn first_submodularity_violation(n: usize, ranks: &[u8]) -> Option<SubsetMask> {
    for x in 0..ranks.len() {
        let rx = ranks[x];
        for e in 0..n {
            if x >> e & 1 == 1 {
                continue;
            }
            let xe = x | 1 << e;
            for f in e + 1..n {
                if x >> f & 1 == 1 {
                    continue;
                }
                if ranks[xe] + ranks[x | 1 << f] < ranks[xe | 1 << f] + rx {
                    return Some(SubsetMask(x as u32));
                }
            }
        }
    }
    None
}

/// Rank over GF(p) of the given column vectors.
fn gf_rank(p: u32, columns: &[&[u32]]) -> usize {
    let mut rows: Vec<Vec<u32>> = columns.iter().map(|c| c.to_vec()).collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][col], p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let factor = row[col];
                for (v, &q) in row.iter_mut().zip(&pivot_row) {
                    *v = (*v + p * p - factor * q) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    (1..p).find(|&b| a * b % p == 1).expect("nonzero residue modulo a prime")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(elements: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elements.iter().copied())
    }

    fn uniform(r: usize, n: usize) -> Matroid {
        Matroid::from_bases(n, &crate::mask::k_subsets_lex(n, r)).unwrap()
    }

    #[test]
    fn uniform_from_bases() {
        let u24 = uniform(2, 4);
        assert_eq!(u24.full_rank(), 2);
        assert_eq!(u24.rank(m(&[0, 1, 2])), 2);
        assert_eq!(u24.rank(SubsetMask::EMPTY), 0);
        assert_eq!(u24.corank(m(&[0, 1, 2])), 2);
    }

    #[test]
    fn single_loop() {
        let l = Matroid::from_bases(1, &[SubsetMask::EMPTY]).unwrap();
        assert_eq!(l.full_rank(), 0);
        assert_eq!(l.loops(), m(&[0]));
    }

    #[test]
    fn two_bases_make_a_parallel_pair() {
        let mt = Matroid::from_bases(3, &[m(&[0, 1]), m(&[0, 2])]).unwrap();
        // brute force: rank of {1,2} is max over bases of the intersection size
        let brute = [m(&[0, 1]), m(&[0, 2])]
            .iter()
            .map(|b| (*b & m(&[1, 2])).len())
            .max()
            .unwrap();
        assert_eq!(brute, 1);
        assert_eq!(mt.rank(m(&[1, 2])), 1);
        assert!(mt.is_circuit(m(&[1, 2])));
    }

    #[test]
    fn rejects_bad_basis_families() {
        assert!(matches!(Matroid::from_bases(3, &[]), Err(Error::EmptyBasisFamily)));
        assert!(matches!(
            Matroid::from_bases(3, &[m(&[0]), m(&[1, 2])]),
            Err(Error::BasisSizeMismatch { .. })
        ));
        // {0,1} and {2,3} alone violate exchange
        let err = Matroid::from_bases(4, &[m(&[0, 1]), m(&[2, 3])]).unwrap_err();
        assert!(matches!(err, Error::ExchangeViolation { .. }), "{err}");
    }

    #[test]
    fn circuits_round_trip() {
        let t2 = Matroid::from_circuits(4, &[m(&[0, 2]), m(&[1, 3])]).unwrap();
        assert_eq!(t2.circuits(), vec![m(&[0, 2]), m(&[1, 3])]);
        let u23 = Matroid::from_circuits(3, &[m(&[0, 1, 2])]).unwrap();
        assert_eq!(u23, uniform(2, 3));
    }

    #[test]
    fn circuit_errors() {
        assert!(matches!(
            Matroid::from_circuits(3, &[m(&[0, 1]), m(&[0, 1, 2])]),
            Err(Error::CircuitContainment { .. })
        ));
        assert!(matches!(
            Matroid::from_circuits(2, &[SubsetMask::EMPTY]),
            Err(Error::EmptyCircuit)
        ));
        // {0,1} and {1,2} as the only circuits would force {0,2} dependent by elimination
        assert!(Matroid::from_circuits(3, &[m(&[0, 1]), m(&[1, 2])]).is_err());
    }

    #[test]
    fn linear_representations() {
        let id = Matroid::from_linear_rep(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(id, uniform(2, 2));
        let m3 = Matroid::from_linear_rep(3, &[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap();
        assert_eq!(m3, uniform(2, 4));
        assert!(matches!(
            Matroid::from_linear_rep(4, &[vec![1]]),
            Err(Error::UnsupportedField(4))
        ));
    }

    #[test]
    fn closure_and_coclosure() {
        let u24 = uniform(2, 4);
        assert_eq!(u24.closure(m(&[0, 1])), u24.ground());
        assert_eq!(u24.coclosure(m(&[0, 1])), u24.ground());
        let with_loop = Matroid::from_bases(3, &[m(&[0, 1])]).unwrap();
        assert_eq!(with_loop.closure(SubsetMask::EMPTY), m(&[2]));
    }

    #[test]
    fn dual_basics() {
        let u24 = uniform(2, 4);
        assert_eq!(u24.dual(), u24);
        let lp = Matroid::from_bases(1, &[SubsetMask::EMPTY]).unwrap();
        assert_eq!(lp.dual(), uniform(1, 1));
        assert_eq!(u24.dual().dual(), u24);
    }

    #[test]
    fn minors() {
        let u24 = uniform(2, 4);
        let (c, map) = u24.minor(m(&[0]), SubsetMask::EMPTY);
        assert_eq!(c, uniform(1, 3));
        assert_eq!(map.image(0), None);
        assert_eq!(map.image(1), Some(0));
        let (same, id) = u24.minor(SubsetMask::EMPTY, SubsetMask::EMPTY);
        assert_eq!(same, u24);
        assert_eq!(id, GroundMap::identity(4));
    }

    #[test]
    fn triads_of_u24_are_all_triples() {
        let u24 = uniform(2, 4);
        assert_eq!(u24.triads().len(), 4);
        assert_eq!(u24.triangles().len(), 4);
        assert_eq!(u24.circuits().len(), 4);
    }

    #[test]
    fn simplification() {
        let (s, map) = uniform(1, 3).simplify();
        assert_eq!(s, uniform(1, 1));
        assert_eq!(map.image(0), Some(0));
        let u24 = uniform(2, 4);
        assert_eq!(u24.simplify().0, u24);
    }

    #[test]
    fn cosimplification_of_series_extension() {
        // U_{2,4} plus element 4 parallel to 0; its dual has {0,4} as a series pair
        let mut bases = crate::mask::k_subsets_lex(4, 2);
        bases.extend([m(&[4, 1]), m(&[4, 2]), m(&[4, 3])]);
        let parallel = Matroid::from_bases(5, &bases).unwrap();
        let series = parallel.dual();
        assert_eq!(series.corank(m(&[0, 4])), 1);
        let (co, map) = series.cosimplify();
        assert_eq!(co, uniform(2, 4));
        assert_eq!(map.image(4), None);
        // every pair of a triangle is a cocircuit, so the whole triangle is one series class
        assert_eq!(uniform(2, 3).cosimplify().0, uniform(0, 1));
        assert_eq!(uniform(3, 4).cosimplify().0, uniform(0, 1));
    }

    #[test]
    fn cosimplify_is_dual_of_simplify() {
        let par_u13 = Matroid::from_bases(4, &[m(&[0, 1]), m(&[0, 2]), m(&[3, 1]), m(&[3, 2]), m(&[1, 2])]).unwrap();
        for mt in [par_u13.clone(), par_u13.dual(), uniform(1, 3), uniform(0, 2)] {
            assert_eq!(mt.cosimplify().0, mt.dual().simplify().0.dual());
        }
    }

    #[test]
    fn direct_sums() {
        let u12 = uniform(1, 2);
        let s = u12.direct_sum(&u12).unwrap();
        assert_eq!(s.full_rank(), 2);
        assert!(s.is_circuit(m(&[0, 1])));
        assert!(s.is_circuit(m(&[2, 3])));
        let empty = uniform(0, 0);
        assert_eq!(u12.direct_sum(&empty).unwrap(), u12);
    }

    #[test]
    fn rank_table_validation() {
        assert!(Matroid::from_rank_table(2, vec![0, 1, 1, 2]).is_ok());
        assert!(Matroid::from_rank_table(2, vec![0, 1, 1, 1]).is_ok());
        assert!(Matroid::from_rank_table(2, vec![0, 1, 0, 2]).is_err());
        assert!(Matroid::from_rank_table(2, vec![1, 1, 1, 2]).is_err());
    }

    #[test]
    fn ground_map_composition() {
        let first = GroundMap::compress(4, m(&[0, 2, 3]));
        let second = GroundMap::compress(3, m(&[1, 2]));
        let both = first.then(&second);
        assert_eq!(both.kept, m(&[2, 3]));
        assert_eq!(both.image(2), Some(0));
        assert_eq!(both.preimage(1), Some(3));
        assert_eq!(both.image_set(m(&[0, 2, 3])), m(&[0, 1]));
    }
}
