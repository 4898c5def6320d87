//! Canonical forms for isomorphism testing.
//!
//! The canonical form of a rank-`r` matroid on `n` elements is the
//! lexicographically smallest basis-indicator string over relabellings,
//! where bit `j` records whether the `j`-th `r`-subset of `{0, .., n-1}`
//! (lexicographic order of sorted tuples) is a basis. Relabellings are
//! restricted to those that list elements in increasing order of an
//! isomorphism-invariant element signature; two matroids therefore receive
//! equal forms exactly when they are isomorphic.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::mask::{k_subsets_lex, SubsetMask};
use crate::matroid::Matroid;

/// Complete isomorphism invariant: `(n, r, minimal basis string)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    rank: u8,
    /// Basis string packed most-significant bit first, so that `Ord` on the
    /// words agrees with lexicographic order on the string.
    words: Vec<u64>,
}

impl CanonicalForm {
    pub fn size(&self) -> usize {
        self.n as usize
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    /// Number of characters in the basis string, `C(n, r)`.
    pub fn len(&self) -> usize {
        binomial(self.n as usize, self.rank as usize)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn bit(&self, j: usize) -> bool {
        self.words[j / 64] >> (63 - j % 64) & 1 == 1
    }

    /// The basis string as `'0'`/`'1'` characters.
    pub fn to_bitstring(&self) -> String {
        (0..self.len())
            .map(|j| if self.bit(j) { '1' } else { '0' })
            .collect()
    }

    /// Rebuilds the canonically labelled matroid.
    pub fn to_matroid(&self) -> Matroid {
        let tuples = lex_tuples(self.n as usize, self.rank as usize);
        let bases: Vec<SubsetMask> = tuples
            .iter()
            .enumerate()
            .filter(|(j, _)| self.bit(*j))
            .map(|(_, &t)| SubsetMask(t))
            .collect();
        Matroid::from_bases(self.n as usize, &bases).expect("canonical forms encode matroids")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({} {} {})", self.n, self.rank, self.to_bitstring())
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Lexicographically ordered `r`-subsets of `{0, .., n-1}`, shared across calls.
fn lex_tuples(n: usize, r: usize) -> Arc<Vec<u32>> {
    type Tables = Mutex<HashMap<(usize, usize), Arc<Vec<u32>>>>;
    static TABLES: OnceLock<Tables> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    let mut guard = tables.lock().expect("tuple table lock");
    guard
        .entry((n, r))
        .or_insert_with(|| Arc::new(k_subsets_lex(n, r).into_iter().map(|m| m.0).collect()))
        .clone()
}

/// Per-element signature: circuit and cocircuit counts by size.
fn element_signatures(m: &Matroid) -> Vec<Vec<u32>> {
    let n = m.size();
    let mut sig = vec![vec![0u32; 2 * (n + 1) + 1]; n];
    for c in m.circuits() {
        for e in c.iter() {
            sig[e][c.len()] += 1;
        }
    }
    for c in m.dual().circuits() {
        for e in c.iter() {
            sig[e][n + 1 + c.len()] += 1;
        }
    }
    for (e, s) in sig.iter_mut().enumerate() {
        s[2 * (n + 1)] = m.rank(SubsetMask::singleton(e)) as u32;
    }
    sig
}

struct Search<'a> {
    ranks: &'a [u8],
    rank: u8,
    tuples: &'a [u32],
    /// `class_of_position[i]` = index of the signature class that position `i` draws from.
    class_of_position: Vec<usize>,
    classes: Vec<Vec<usize>>,
    used: Vec<bool>,
    perm: Vec<usize>,
    images: [u32; 32],
    best: Option<Vec<bool>>,
    best_perm: Vec<usize>,
    scratch: Vec<bool>,
}

impl Search<'_> {
    fn run(&mut self, position: usize) {
        if position == self.perm.len() {
            self.evaluate();
            return;
        }
        let class = self.class_of_position[position];
        for idx in 0..self.classes[class].len() {
            let e = self.classes[class][idx];
            if self.used[e] {
                continue;
            }
            self.used[e] = true;
            self.perm[position] = e;
            self.images[position] = 1 << e;
            self.run(position + 1);
            self.used[e] = false;
        }
    }

    fn evaluate(&mut self) {
        let images = &self.images;
        let mut state = match self.best {
            None => Ordering::Less,
            Some(_) => Ordering::Equal,
        };
        for (j, &t) in self.tuples.iter().enumerate() {
            let mut img = 0u32;
            let mut tt = t;
            while tt != 0 {
                img |= images[tt.trailing_zeros() as usize];
                tt &= tt - 1;
            }
            let bit = self.ranks[img as usize] == self.rank;
            if state == Ordering::Equal {
                let cur = self.best.as_ref().expect("best present while comparing")[j];
                if bit != cur {
                    if bit {
                        return;
                    }
                    state = Ordering::Less;
                }
            }
            self.scratch[j] = bit;
        }
        if state == Ordering::Less {
            self.best = Some(self.scratch.clone());
            self.best_perm.clone_from(&self.perm);
        }
    }
}

/// Canonical form together with the relabelling that realizes it:
/// canonical element `i` is element `perm[i]` of `m`.
pub fn canonical_labelling(m: &Matroid) -> (CanonicalForm, Vec<usize>) {
    let n = m.size();
    let r = m.full_rank();
    let tuples = lex_tuples(n, r);
    let signatures = element_signatures(m);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| signatures[a].cmp(&signatures[b]).then(a.cmp(&b)));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of_position = Vec::with_capacity(n);
    for (i, &e) in order.iter().enumerate() {
        if i == 0 || signatures[e] != signatures[order[i - 1]] {
            classes.push(Vec::new());
        }
        classes.last_mut().expect("class pushed").push(e);
        class_of_position.push(classes.len() - 1);
    }

    let all_bases = tuples.iter().all(|&t| m.rank_raw(t) as usize == r);
    let (bits, perm) = if all_bases {
        // every relabelling yields the all-ones string
        (vec![true; tuples.len()], order)
    } else {
        let mut search = Search {
            ranks: m.rank_table(),
            rank: r as u8,
            tuples: &tuples,
            class_of_position,
            classes,
            used: vec![false; n],
            perm: vec![0; n],
            images: [0; 32],
            best: None,
            best_perm: Vec::new(),
            scratch: vec![false; tuples.len()],
        };
        search.run(0);
        (search.best.expect("at least one relabelling"), search.best_perm)
    };

    let mut words = vec![0u64; bits.len().div_ceil(64).max(1)];
    for (j, &b) in bits.iter().enumerate() {
        if b {
            words[j / 64] |= 1 << (63 - j % 64);
        }
    }
    (
        CanonicalForm {
            n: n as u8,
            rank: r as u8,
            words,
        },
        perm,
    )
}

pub fn canonical_form(m: &Matroid) -> CanonicalForm {
    canonical_labelling(m).0
}

pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> bool {
    a.size() == b.size() && a.full_rank() == b.full_rank() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::k_subsets_lex;

    fn uniform(r: usize, n: usize) -> Matroid {
        Matroid::from_bases(n, &k_subsets_lex(n, r)).unwrap()
    }

    #[test]
    fn uniform_form_is_all_ones() {
        let cf = canonical_form(&uniform(2, 4));
        assert_eq!(cf.to_bitstring(), "111111");
        assert_eq!(cf.to_matroid(), uniform(2, 4));
    }

    #[test]
    fn parallel_pair_sorts_first() {
        // bases {0,1},{0,2} : {1,2} parallel
        let a = Matroid::from_bases(3, &[SubsetMask(0b011), SubsetMask(0b101)]).unwrap();
        let b = Matroid::from_bases(3, &[SubsetMask(0b011), SubsetMask(0b110)]).unwrap();
        assert!(is_isomorphic(&a, &b));
        let cf = canonical_form(&a);
        assert_eq!(cf.to_bitstring().matches('1').count(), 2);
        assert!(is_isomorphic(&cf.to_matroid(), &a));
    }

    #[test]
    fn labelling_realizes_form() {
        let a = Matroid::from_bases(4, &[SubsetMask(0b0011), SubsetMask(0b0101), SubsetMask(0b0110)]).unwrap();
        let (cf, perm) = canonical_labelling(&a);
        assert_eq!(a.permute(&perm), cf.to_matroid());
    }

    #[test]
    fn distinguishes_rank() {
        assert!(!is_isomorphic(&uniform(1, 3), &uniform(2, 3)));
        assert!(!is_isomorphic(&uniform(1, 3), &uniform(1, 2)));
    }

    #[test]
    fn empty_matroid() {
        let cf = canonical_form(&uniform(0, 0));
        assert_eq!(cf.to_bitstring(), "1");
        assert_eq!(cf.to_matroid(), uniform(0, 0));
    }
}
