//! Finite lattice engine: explicit meet/join tables built from an order
//! predicate, structural classification (distributivity, pseudocomplements,
//! Stone and double Stone laws, Kleene negation, regularity), the
//! Dedekind-MacNeille completion of an arbitrary finite poset, products of
//! chains, and a backtracking isomorphism search.
//!
//! Everything here is exhaustive: no law is reported to hold unless it was
//! checked on every element (or pair, or triple) it quantifies over, and every
//! reported failure carries a concrete witness.

use crate::{Caps, Error, Result};
use serde::Serialize;
use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

/// Growable bitset used for order rows and Dedekind-MacNeille cuts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub(crate) fn new(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub(crate) fn full(len: usize) -> Self {
        let mut b = Bits {
            len,
            words: vec![!0u64; len.div_ceil(64)],
        };
        let tail = len % 64;
        if tail != 0 {
            if let Some(last) = b.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        b
    }

    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn inter(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.len, other.len);
        Bits {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub(crate) fn is_subset(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub(crate) fn members(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }
}

/// A finite lattice with dense meet and join tables.
///
/// Construct one with [`FiniteLattice::from_poset`], which validates that the
/// supplied reflexive predicate really is a partial order in which every pair
/// of elements has a greatest lower bound and a least upper bound.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    size: usize,
    /// `up[a]` holds `b` iff `a <= b`.
    up: Vec<Bits>,
    /// `down[a]` holds `b` iff `b <= a`.
    down: Vec<Bits>,
    meet_t: Vec<u32>,
    join_t: Vec<u32>,
    neg: Option<Vec<u32>>,
    labels: Vec<String>,
    bottom: usize,
    top: usize,
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("size", &self.size)
            .field("bottom", &self.labels[self.bottom])
            .field("top", &self.labels[self.top])
            .finish()
    }
}

impl FiniteLattice {
    /// Builds the lattice with order `leq` on elements `0..size`.
    ///
    /// Fails with [`Error::NotAPartialOrder`] if `leq` is not reflexive,
    /// antisymmetric, and transitive, and with [`Error::NotALattice`] naming
    /// a witness pair if some meet or join does not exist.
    pub fn from_poset<F>(size: usize, leq: F, caps: &Caps) -> Result<FiniteLattice>
    where
        F: Fn(usize, usize) -> bool,
    {
        if size == 0 {
            return Err(Error::Invalid(
                "a lattice needs at least one element".into(),
            ));
        }
        if size > caps.lattice_elements {
            return Err(Error::CapExceeded {
                what: "lattice elements",
                size,
                cap: caps.lattice_elements,
            });
        }
        let mut up = vec![Bits::new(size); size];
        let mut down = vec![Bits::new(size); size];
        for a in 0..size {
            for b in 0..size {
                if leq(a, b) {
                    up[a].set(b);
                    down[b].set(a);
                }
            }
        }
        check_partial_order(size, &up)?;

        // |down[x]| is a linear extension: comparable elements never tie.
        let down_count: Vec<usize> = down.iter().map(Bits::count).collect();
        let up_count: Vec<usize> = up.iter().map(Bits::count).collect();

        let mut meet_t = vec![0u32; size * size];
        let mut join_t = vec![0u32; size * size];
        for a in 0..size {
            for b in a..size {
                let m = bound_sweep(&down[a].inter(&down[b]), &down, &down_count)
                    .ok_or(Error::NotALattice { a, b, kind: "meet" })?;
                meet_t[a * size + b] = m as u32;
                meet_t[b * size + a] = m as u32;
                let j = bound_sweep(&up[a].inter(&up[b]), &up, &up_count)
                    .ok_or(Error::NotALattice { a, b, kind: "join" })?;
                join_t[a * size + b] = j as u32;
                join_t[b * size + a] = j as u32;
            }
        }

        let mut bottom = 0;
        let mut top = 0;
        for x in 1..size {
            bottom = meet_t[bottom * size + x] as usize;
            top = join_t[top * size + x] as usize;
        }

        Ok(FiniteLattice {
            size,
            up,
            down,
            meet_t,
            join_t,
            neg: None,
            labels: (0..size).map(|i| i.to_string()).collect(),
            bottom,
            top,
        })
    }

    /// Replaces the element labels (used in witnesses and reports).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<FiniteLattice> {
        if labels.len() != self.size {
            return Err(Error::Invalid(format!(
                "{} labels supplied for {} elements",
                labels.len(),
                self.size
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Attaches a candidate negation table. The map is only required to be a
    /// function into the lattice; whether it is a De Morgan or Kleene
    /// negation is decided by [`FiniteLattice::classify`].
    pub fn with_negation(mut self, neg: Vec<u32>) -> Result<FiniteLattice> {
        if neg.len() != self.size {
            return Err(Error::Invalid(format!(
                "negation table has {} entries for {} elements",
                neg.len(),
                self.size
            )));
        }
        if let Some(&bad) = neg.iter().find(|&&v| v as usize >= self.size) {
            return Err(Error::Invalid(format!(
                "negation table entry {bad} is out of range"
            )));
        }
        self.neg = Some(neg);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].get(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet_t[a * self.size + b] as usize
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join_t[a * self.size + b] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn negation(&self) -> Option<&[u32]> {
        self.neg.as_deref()
    }

    /// The negation of `a`, if a negation table is attached.
    pub fn neg_of(&self, a: usize) -> Option<usize> {
        self.neg.as_ref().map(|t| t[a] as usize)
    }

    /// Elements covered by `a` (maximal elements strictly below `a`).
    pub fn lower_covers(&self, a: usize) -> Vec<usize> {
        self.down[a]
            .iter_ones()
            .filter(|&b| b != a && self.down[a].inter(&self.up[b]).count() == 2)
            .collect()
    }

    /// Elements covering `a` (minimal elements strictly above `a`).
    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        self.up[a]
            .iter_ones()
            .filter(|&b| b != a && self.up[a].inter(&self.down[b]).count() == 2)
            .collect()
    }

    /// All cover pairs `(a, b)` with `a` covered by `b`.
    pub fn covers_list(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|a| self.upper_covers(a).into_iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.upper_covers(self.bottom)
    }

    pub fn coatoms(&self) -> Vec<usize> {
        self.lower_covers(self.top)
    }

    /// Elements with exactly one lower cover. In a finite lattice these are
    /// exactly the completely join-irreducible elements, and the bottom
    /// element is excluded automatically (it has no lower cover).
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| self.lower_covers(a).len() == 1)
            .collect()
    }

    /// Elements with exactly one upper cover.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| self.upper_covers(a).len() == 1)
            .collect()
    }

    /// Length (number of covers) of a longest chain from bottom to top.
    pub fn height(&self) -> usize {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&x| self.down[x].count());
        let mut h = vec![0usize; self.size];
        for &x in &order {
            for b in self.lower_covers(x) {
                h[x] = h[x].max(h[b] + 1);
            }
        }
        h[self.top]
    }

    /// Some complement of `a`, if one exists.
    pub fn complement_of(&self, a: usize) -> Option<usize> {
        (0..self.size)
            .find(|&b| self.meet(a, b) == self.bottom && self.join(a, b) == self.top)
    }

    /// Whether `a` satisfies the median identity against every pair.
    pub fn is_neutral(&self, a: usize) -> bool {
        for x in 0..self.size {
            for y in x..self.size {
                let lhs = self.join(
                    self.join(self.meet(a, x), self.meet(x, y)),
                    self.meet(y, a),
                );
                let rhs = self.meet(
                    self.meet(self.join(a, x), self.join(x, y)),
                    self.join(y, a),
                );
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The center: elements that are both complemented and neutral.
    /// Exhaustive (cubic in the worst case), so callers should gate it by
    /// size; `classify` does.
    pub fn center(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| self.complement_of(a).is_some() && self.is_neutral(a))
            .collect()
    }

    /// A triple `(x, y, z)` with `x /\ (y \/ z) != (x /\ y) \/ (x /\ z)`, or
    /// `None` if the lattice is distributive.
    ///
    /// Small lattices are scanned exhaustively. Larger ones use the exact
    /// criterion that a finite lattice is distributive iff every
    /// join-irreducible element is join-prime; a violation is converted into
    /// a genuine failing triple.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        if self.size <= 256 {
            self.distributivity_witness_scan()
        } else {
            self.distributivity_witness_primes()
        }
    }

    pub(crate) fn distributivity_witness_scan(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.size {
            for y in 0..self.size {
                for z in 0..self.size {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub(crate) fn distributivity_witness_primes(&self) -> Option<(usize, usize, usize)> {
        for j in self.join_irreducibles() {
            // Fold the join of everything not above j; j is join-prime iff
            // the accumulated join stays off j's up-set.
            let mut acc = self.bottom;
            for x in 0..self.size {
                if self.leq(j, x) {
                    continue;
                }
                let next = self.join(acc, x);
                if self.leq(j, next) {
                    // j <= acc \/ x but j is below neither, so
                    // j /\ (acc \/ x) = j while (j /\ acc) \/ (j /\ x) < j.
                    return Some((j, acc, x));
                }
                acc = next;
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// A pentagon pattern: `a < b`, both incomparable with `c`, with
    /// `a \/ c = b \/ c` and `a /\ c = b /\ c`.
    pub fn find_n5(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.size {
            for b in 0..self.size {
                if !self.lt(a, b) {
                    continue;
                }
                for c in 0..self.size {
                    if self.leq(c, a) || self.leq(a, c) || self.leq(c, b) || self.leq(b, c) {
                        continue;
                    }
                    if self.join(a, c) == self.join(b, c) && self.meet(a, c) == self.meet(b, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// A diamond pattern: pairwise incomparable `x, y, z` with all pairwise
    /// meets equal and all pairwise joins equal.
    pub fn find_m3(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.size {
            for y in x + 1..self.size {
                if self.leq(x, y) || self.leq(y, x) {
                    continue;
                }
                for z in y + 1..self.size {
                    if self.leq(x, z) || self.leq(z, x) || self.leq(y, z) || self.leq(z, y) {
                        continue;
                    }
                    let m = self.meet(x, y);
                    let j = self.join(x, y);
                    if self.meet(y, z) == m
                        && self.meet(x, z) == m
                        && self.join(y, z) == j
                        && self.join(x, z) == j
                    {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Pseudocomplement table `a -> a*`, or a witness `(a, c1, c2)` of two
    /// incomparable maximal elements disjoint from `a`.
    pub fn pseudocomplement_table(
        &self,
    ) -> std::result::Result<Vec<u32>, (usize, usize, usize)> {
        let mut table = vec![0u32; self.size];
        for a in 0..self.size {
            let mut cand = None;
            for x in 0..self.size {
                if self.meet(a, x) != self.bottom {
                    continue;
                }
                cand = match cand {
                    None => Some(x),
                    Some(c) if self.leq(c, x) => Some(x),
                    keep => keep,
                };
            }
            let c = cand.expect("bottom is always disjoint from a");
            for x in 0..self.size {
                if self.meet(a, x) == self.bottom && !self.leq(x, c) {
                    return Err((a, c, x));
                }
            }
            table[a] = c as u32;
        }
        Ok(table)
    }

    /// Dual pseudocomplement table `a -> a+` (least `z` with `a \/ z = top`),
    /// or a witness `(a, c1, c2)` of two incomparable minimal such elements.
    pub fn dual_pseudocomplement_table(
        &self,
    ) -> std::result::Result<Vec<u32>, (usize, usize, usize)> {
        let mut table = vec![0u32; self.size];
        for a in 0..self.size {
            let mut cand = None;
            for x in 0..self.size {
                if self.join(a, x) != self.top {
                    continue;
                }
                cand = match cand {
                    None => Some(x),
                    Some(c) if self.leq(x, c) => Some(x),
                    keep => keep,
                };
            }
            let c = cand.expect("top always joins with a to the top");
            for x in 0..self.size {
                if self.join(a, x) == self.top && !self.leq(c, x) {
                    return Err((a, c, x));
                }
            }
            table[a] = c as u32;
        }
        Ok(table)
    }

    /// The order dual: same carrier, reversed order, swapped tables.
    pub fn dual(&self) -> FiniteLattice {
        FiniteLattice {
            size: self.size,
            up: self.down.clone(),
            down: self.up.clone(),
            meet_t: self.join_t.clone(),
            join_t: self.meet_t.clone(),
            neg: self.neg.clone(),
            labels: self.labels.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Recomputes both tables from the order rows and compares. Used by
    /// tests and by constructions that cross-check closed-form tables.
    pub fn validate(&self) -> Result<()> {
        let down_count: Vec<usize> = self.down.iter().map(Bits::count).collect();
        let up_count: Vec<usize> = self.up.iter().map(Bits::count).collect();
        for a in 0..self.size {
            for b in 0..self.size {
                let m = bound_sweep(&self.down[a].inter(&self.down[b]), &self.down, &down_count)
                    .ok_or(Error::NotALattice { a, b, kind: "meet" })?;
                if m != self.meet(a, b) {
                    return Err(Error::Internal(format!(
                        "meet table disagrees with the order at ({a}, {b})"
                    )));
                }
                let j = bound_sweep(&self.up[a].inter(&self.up[b]), &self.up, &up_count)
                    .ok_or(Error::NotALattice { a, b, kind: "join" })?;
                if j != self.join(a, b) {
                    return Err(Error::Internal(format!(
                        "join table disagrees with the order at ({a}, {b})"
                    )));
                }
            }
        }
        if !(0..self.size).all(|x| self.leq(self.bottom, x) && self.leq(x, self.top)) {
            return Err(Error::Internal("bottom/top are not extremal".into()));
        }
        Ok(())
    }

    fn label_list(&self, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| self.labels[x].clone()).collect()
    }

    /// Full structural classification. Every flag is decided exhaustively;
    /// failed flags carry a witness phrased with element labels.
    pub fn classify(&self) -> AlgebraReport {
        let n = self.size;
        let lab = |x: usize| self.labels[x].clone();

        let distributive = match self.distributivity_witness() {
            None => Flag::yes(),
            Some((x, y, z)) => Flag::no(format!(
                "{} /\\ ({} \\/ {}) = {} but ({} /\\ {}) \\/ ({} /\\ {}) = {}",
                lab(x),
                lab(y),
                lab(z),
                lab(self.meet(x, self.join(y, z))),
                lab(x),
                lab(y),
                lab(x),
                lab(z),
                lab(self.join(self.meet(x, y), self.meet(x, z))),
            )),
        };

        let pseudo = self.pseudocomplement_table();
        let pseudocomplemented = match &pseudo {
            Ok(_) => Flag::yes(),
            Err((a, c1, c2)) => Flag::no(format!(
                "{} has two incomparable maximal disjoint elements {} and {}",
                lab(*a),
                lab(*c1),
                lab(*c2)
            )),
        };
        let dual_pseudo = self.dual_pseudocomplement_table();
        let dual_pseudocomplemented = match &dual_pseudo {
            Ok(_) => Flag::yes(),
            Err((a, c1, c2)) => Flag::no(format!(
                "{} has two incomparable minimal co-dense partners {} and {}",
                lab(*a),
                lab(*c1),
                lab(*c2)
            )),
        };

        let stone = match (&distributive.holds, &pseudo) {
            (false, _) => Flag::no("not a distributive lattice".into()),
            (true, Err(_)) => Flag::no("not pseudocomplemented".into()),
            (true, Ok(t)) => {
                match (0..n).find(|&a| {
                    let s = t[a] as usize;
                    self.join(s, t[s] as usize) != self.top
                }) {
                    None => Flag::yes(),
                    Some(a) => Flag::no(format!(
                        "{}* \\/ {}** = {} < top",
                        lab(a),
                        lab(a),
                        lab(self.join(t[a] as usize, t[t[a] as usize] as usize))
                    )),
                }
            }
        };
        let dual_stone = match (&distributive.holds, &dual_pseudo) {
            (false, _) => Flag::no("not a distributive lattice".into()),
            (true, Err(_)) => Flag::no("not dually pseudocomplemented".into()),
            (true, Ok(t)) => {
                match (0..n).find(|&a| {
                    let s = t[a] as usize;
                    self.meet(s, t[s] as usize) != self.bottom
                }) {
                    None => Flag::yes(),
                    Some(a) => Flag::no(format!(
                        "{}+ /\\ {}++ = {} > bottom",
                        lab(a),
                        lab(a),
                        lab(self.meet(t[a] as usize, t[t[a] as usize] as usize))
                    )),
                }
            }
        };
        let double_stone = if stone.holds && dual_stone.holds {
            Flag::yes()
        } else if !stone.holds {
            Flag::no(stone
                .witness
                .clone()
                .unwrap_or_else(|| "Stone identity fails".into()))
        } else {
            Flag::no(dual_stone
                .witness
                .clone()
                .unwrap_or_else(|| "dual Stone identity fails".into()))
        };

        let regular = match (&pseudo, &dual_pseudo) {
            (Ok(s), Ok(d)) => {
                let mut flag = Flag::yes();
                'outer: for x in 0..n {
                    for y in x + 1..n {
                        if s[x] == s[y] && d[x] == d[y] {
                            flag = Flag::no(format!(
                                "{} and {} share pseudocomplement {} and dual pseudocomplement {}",
                                lab(x),
                                lab(y),
                                lab(s[x] as usize),
                                lab(d[x] as usize)
                            ));
                            break 'outer;
                        }
                    }
                }
                flag
            }
            _ => Flag::no("not a double p-algebra".into()),
        };

        let boolean = if !distributive.holds {
            Flag::no("not a distributive lattice".into())
        } else {
            match (0..n).find(|&a| self.complement_of(a).is_none()) {
                None => Flag::yes(),
                Some(a) => Flag::no(format!("{} has no complement", lab(a))),
            }
        };

        let atoms = self.atoms();
        let atomistic = {
            let mut result = Flag::yes();
            for a in 0..n {
                let mut acc = self.bottom;
                for &at in &atoms {
                    if self.leq(at, a) {
                        acc = self.join(acc, at);
                    }
                }
                if acc != a {
                    result = Flag::no(format!(
                        "{} is not the join of the atoms below it (their join is {})",
                        lab(a),
                        lab(acc)
                    ));
                    break;
                }
            }
            result
        };

        let ji = self.join_irreducibles();
        let two_levels = {
            let mut result = Flag::yes();
            'tl: for &j in &ji {
                if atoms.contains(&j) {
                    continue;
                }
                for &k in &ji {
                    if self.lt(j, k) {
                        result = Flag::no(format!(
                            "{} < {} are join-irreducible but {} is not an atom",
                            lab(j),
                            lab(k),
                            lab(j)
                        ));
                        break 'tl;
                    }
                }
            }
            result
        };

        let de_morgan = self.neg.as_ref().map(|t| {
            if !distributive.holds {
                return Flag::no("not a distributive lattice".into());
            }
            for x in 0..n {
                if t[t[x] as usize] as usize != x {
                    return Flag::no(format!("~~{} = {}", lab(x), lab(t[t[x] as usize] as usize)));
                }
            }
            for x in 0..n {
                for y in 0..n {
                    let lhs = t[self.join(x, y)] as usize;
                    let rhs = self.meet(t[x] as usize, t[y] as usize);
                    if lhs != rhs {
                        return Flag::no(format!(
                            "~({} \\/ {}) = {} but ~{} /\\ ~{} = {}",
                            lab(x),
                            lab(y),
                            lab(lhs),
                            lab(x),
                            lab(y),
                            lab(rhs)
                        ));
                    }
                }
            }
            Flag::yes()
        });

        let kleene = self.neg.as_ref().map(|t| {
            match &de_morgan {
                Some(dm) if dm.holds => {}
                _ => return Flag::no("not a De Morgan algebra".into()),
            }
            let mut low = self.bottom;
            for x in 0..n {
                low = self.join(low, self.meet(x, t[x] as usize));
            }
            match (0..n).find(|&y| !self.leq(low, self.join(y, t[y] as usize))) {
                None => Flag::yes(),
                Some(y) => {
                    let x = (0..n)
                        .find(|&x| {
                            !self.leq(self.meet(x, t[x] as usize), self.join(y, t[y] as usize))
                        })
                        .expect("failing partner exists");
                    Flag::no(format!(
                        "{} /\\ ~{} is not below {} \\/ ~{}",
                        lab(x),
                        lab(x),
                        lab(y),
                        lab(y)
                    ))
                }
            }
        });

        let skeleton = match &pseudo {
            Ok(t) => {
                let mut s: Vec<usize> = t.iter().map(|&v| v as usize).collect();
                s.sort_unstable();
                s.dedup();
                self.label_list(&s)
            }
            Err(_) => Vec::new(),
        };
        let dual_skeleton = match &dual_pseudo {
            Ok(t) => {
                let mut s: Vec<usize> = t.iter().map(|&v| v as usize).collect();
                s.sort_unstable();
                s.dedup();
                self.label_list(&s)
            }
            Err(_) => Vec::new(),
        };

        let center = if n <= 1024 {
            Some(self.label_list(&self.center()))
        } else if distributive.holds {
            // In a distributive pseudocomplemented lattice the center is
            // exactly the set of elements whose pseudocomplement is a
            // complement.
            pseudo.as_ref().ok().map(|t| {
                let xs: Vec<usize> = (0..n)
                    .filter(|&a| self.join(a, t[a] as usize) == self.top)
                    .collect();
                self.label_list(&xs)
            })
        } else {
            None
        };

        AlgebraReport {
            size: n,
            height: self.height(),
            method: "exhaustive",
            distributive,
            pseudocomplemented,
            dual_pseudocomplemented,
            stone,
            dual_stone,
            double_stone,
            regular,
            boolean,
            atomistic,
            two_levels,
            de_morgan,
            kleene,
            atoms: self.label_list(&atoms),
            join_irreducibles: self.label_list(&ji),
            skeleton,
            dual_skeleton,
            center,
        }
    }

    /// Sorted chain lengths `dims` such that this lattice is isomorphic to
    /// the product of chains with those lengths, or `None`.
    pub fn as_chain_product(&self, caps: &Caps) -> Option<Vec<usize>> {
        if self.size == 1 {
            return Some(vec![1]);
        }
        if self.size > caps.iso_elements {
            return None;
        }
        for dims in factorizations(self.size) {
            let product = match product_chain(&dims, caps) {
                Ok(p) => p,
                Err(_) => continue,
            };
            if let Ok(Some(_)) = is_isomorphic(self, &product, caps) {
                return Some(dims);
            }
        }
        None
    }
}

/// One classified law: whether it holds, and a concrete witness when it does
/// not.
#[derive(Clone, Debug, Serialize)]
pub struct Flag {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Flag {
    pub fn yes() -> Flag {
        Flag {
            holds: true,
            witness: None,
        }
    }

    pub fn no(witness: String) -> Flag {
        Flag {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Exhaustive classification of a finite lattice.
#[derive(Clone, Debug, Serialize)]
pub struct AlgebraReport {
    pub size: usize,
    pub height: usize,
    pub method: &'static str,
    pub distributive: Flag,
    pub pseudocomplemented: Flag,
    pub dual_pseudocomplemented: Flag,
    pub stone: Flag,
    pub dual_stone: Flag,
    pub double_stone: Flag,
    pub regular: Flag,
    pub boolean: Flag,
    pub atomistic: Flag,
    pub two_levels: Flag,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub de_morgan: Option<Flag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kleene: Option<Flag>,
    pub atoms: Vec<String>,
    pub join_irreducibles: Vec<String>,
    pub skeleton: Vec<String>,
    pub dual_skeleton: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<Vec<String>>,
}

/// Greatest element of `bounds` if `bounds` has one, else `None`.
///
/// `rows[x]` must be the down-rows (for meets) or up-rows (for joins), and
/// `count[x]` their cardinalities, which form a linear extension, so a
/// greatest element of `bounds` is the member with maximal count.
fn bound_sweep(bounds: &Bits, rows: &[Bits], count: &[usize]) -> Option<usize> {
    let cand = bounds.iter_ones().max_by_key(|&x| (count[x], x))?;
    bounds.is_subset(&rows[cand]).then_some(cand)
}

fn check_partial_order(size: usize, up: &[Bits]) -> Result<()> {
    for a in 0..size {
        if !up[a].get(a) {
            return Err(Error::NotAPartialOrder(format!(
                "element {a} is not below itself"
            )));
        }
    }
    for a in 0..size {
        for b in a + 1..size {
            if up[a].get(b) && up[b].get(a) {
                return Err(Error::NotAPartialOrder(format!(
                    "elements {a} and {b} are below each other"
                )));
            }
        }
    }
    for a in 0..size {
        for b in up[a].iter_ones() {
            if !up[b].is_subset(&up[a]) {
                let c = up[b]
                    .iter_ones()
                    .find(|&c| !up[a].get(c))
                    .expect("a violating element exists");
                return Err(Error::NotAPartialOrder(format!(
                    "{a} <= {b} and {b} <= {c} but not {a} <= {c}"
                )));
            }
        }
    }
    Ok(())
}

/// Dedekind-MacNeille completion of the poset `leq` on `0..size`.
///
/// Returns the completion as a lattice of cuts ordered by inclusion together
/// with, for each cut, the sorted list of original elements it contains. The
/// original poset embeds via `x -> ` the smallest cut containing `x`.
pub fn dedekind_macneille<F>(
    size: usize,
    leq: F,
    caps: &Caps,
) -> Result<(FiniteLattice, Vec<Vec<usize>>)>
where
    F: Fn(usize, usize) -> bool,
{
    if size == 0 {
        return Err(Error::Invalid("cannot complete an empty poset".into()));
    }
    let mut down = vec![Bits::new(size); size];
    let mut up = vec![Bits::new(size); size];
    for a in 0..size {
        for b in 0..size {
            if leq(a, b) {
                up[a].set(b);
                down[b].set(a);
            }
        }
    }
    check_partial_order(size, &up)?;

    // Cuts are exactly the intersections of principal down-sets, together
    // with the whole poset (the empty intersection).
    let mut cuts: Vec<Bits> = Vec::new();
    let mut seen: HashMap<Bits, usize> = HashMap::new();
    let push = |b: Bits, cuts: &mut Vec<Bits>, seen: &mut HashMap<Bits, usize>| -> Result<bool> {
        if seen.contains_key(&b) {
            return Ok(false);
        }
        if cuts.len() >= caps.cut_elements {
            return Err(Error::CapExceeded {
                what: "Dedekind-MacNeille cuts",
                size: cuts.len() + 1,
                cap: caps.cut_elements,
            });
        }
        seen.insert(b.clone(), cuts.len());
        cuts.push(b);
        Ok(true)
    };
    push(Bits::full(size), &mut cuts, &mut seen)?;
    for x in 0..size {
        push(down[x].clone(), &mut cuts, &mut seen)?;
    }
    let mut frontier: Vec<Bits> = cuts.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for i in 0..cuts.len() {
                let inter = f.inter(&cuts[i]);
                if push(inter.clone(), &mut cuts, &mut seen)? {
                    next.push(inter);
                }
            }
        }
        frontier = next;
    }

    cuts.sort_by_key(|b| (b.count(), b.words.clone()));
    let lattice = FiniteLattice::from_poset(cuts.len(), |a, b| cuts[a].is_subset(&cuts[b]), caps)?;
    let members = cuts.iter().map(Bits::members).collect();
    Ok((lattice, members))
}

/// The product of chains of the given lengths, with a componentwise
/// order-reversing negation attached and digit-string labels.
pub fn product_chain(dims: &[usize], caps: &Caps) -> Result<FiniteLattice> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::Invalid(
            "chain lengths must be a nonempty list of positive integers".into(),
        ));
    }
    let mut size = 1usize;
    for &d in dims {
        size = size
            .checked_mul(d)
            .filter(|&s| s <= caps.lattice_elements)
            .ok_or(Error::CapExceeded {
                what: "lattice elements",
                size: usize::MAX,
                cap: caps.lattice_elements,
            })?;
    }
    let digits = |mut i: usize| -> Vec<usize> {
        let mut out = vec![0; dims.len()];
        for (k, &d) in dims.iter().enumerate().rev() {
            out[k] = i % d;
            i /= d;
        }
        out
    };
    let lattice = FiniteLattice::from_poset(
        size,
        |a, b| {
            digits(a)
                .iter()
                .zip(digits(b).iter())
                .all(|(x, y)| x <= y)
        },
        caps,
    )?;
    let compact = dims.iter().all(|&d| d <= 10);
    let labels = (0..size)
        .map(|i| {
            let ds = digits(i);
            if compact {
                ds.iter().map(ToString::to_string).collect::<String>()
            } else {
                let parts: Vec<String> = ds.iter().map(ToString::to_string).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    let neg = (0..size)
        .map(|i| {
            let flipped = digits(i)
                .iter()
                .zip(dims.iter())
                .map(|(&x, &d)| d - 1 - x)
                .collect::<Vec<_>>();
            let mut idx = 0usize;
            for (x, &d) in flipped.iter().zip(dims.iter()) {
                idx = idx * d + x;
            }
            idx as u32
        })
        .collect();
    lattice.with_labels(labels)?.with_negation(neg)
}

/// All nondecreasing sequences of integers >= 2 whose product is `n`.
/// (`n = 1` yields the empty sequence's stand-in `[1]` from the caller.)
fn factorizations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 1 {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            return;
        }
        for f in min..=n {
            if n.is_multiple_of(f) {
                prefix.push(f);
                go(n / f, f, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 2, &mut Vec::new(), &mut out);
    out
}

/// Order isomorphism between two finite lattices, as a mapping from elements
/// of `a` to elements of `b`, if one exists. Any order isomorphism between
/// lattices is automatically a lattice isomorphism.
pub fn is_isomorphic(
    a: &FiniteLattice,
    b: &FiniteLattice,
    caps: &Caps,
) -> Result<Option<Vec<usize>>> {
    if a.size != b.size {
        return Ok(None);
    }
    if a.size > caps.iso_elements {
        return Err(Error::CapExceeded {
            what: "isomorphism search",
            size: a.size,
            cap: caps.iso_elements,
        });
    }
    let sig_a = refine_signatures(a);
    let sig_b = refine_signatures(b);
    let mut count_a: HashMap<u64, usize> = HashMap::new();
    let mut count_b: HashMap<u64, usize> = HashMap::new();
    for &s in &sig_a {
        *count_a.entry(s).or_default() += 1;
    }
    for &s in &sig_b {
        *count_b.entry(s).or_default() += 1;
    }
    if count_a != count_b {
        return Ok(None);
    }

    // Most-constrained-first: map elements whose signature class is smallest.
    let mut order: Vec<usize> = (0..a.size).collect();
    order.sort_by_key(|&x| (count_a[&sig_a[x]], x));
    let mut mapping = vec![usize::MAX; a.size];
    let mut used = vec![false; b.size];
    if backtrack(a, b, &sig_a, &sig_b, &order, 0, &mut mapping, &mut used) {
        Ok(Some(mapping))
    } else {
        Ok(None)
    }
}

fn refine_signatures(l: &FiniteLattice) -> Vec<u64> {
    let mut sig: Vec<u64> = (0..l.size)
        .map(|x| {
            let mut h = DefaultHasher::new();
            (
                l.down[x].count(),
                l.up[x].count(),
                l.lower_covers(x).len(),
                l.upper_covers(x).len(),
            )
                .hash(&mut h);
            h.finish()
        })
        .collect();
    for _ in 0..3 {
        let prev = sig.clone();
        for x in 0..l.size {
            let mut below: Vec<u64> = l.lower_covers(x).iter().map(|&y| prev[y]).collect();
            let mut above: Vec<u64> = l.upper_covers(x).iter().map(|&y| prev[y]).collect();
            below.sort_unstable();
            above.sort_unstable();
            let mut h = DefaultHasher::new();
            (prev[x], below, above).hash(&mut h);
            sig[x] = h.finish();
        }
    }
    sig
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    a: &FiniteLattice,
    b: &FiniteLattice,
    sig_a: &[u64],
    sig_b: &[u64],
    order: &[usize],
    depth: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for y in 0..b.size {
        if used[y] || sig_a[x] != sig_b[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let v = mapping[u];
            a.leq(u, x) == b.leq(v, y) && a.leq(x, u) == b.leq(y, v)
        });
        if !consistent {
            continue;
        }
        mapping[x] = y;
        used[y] = true;
        if backtrack(a, b, sig_a, sig_b, order, depth + 1, mapping, used) {
            return true;
        }
        mapping[x] = usize::MAX;
        used[y] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    /// Pentagon: bottom 0, chain 1 < 2, side 3, top 4.
    fn n5() -> FiniteLattice {
        let pairs = [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 4),
            (2, 4),
            (3, 4),
        ];
        FiniteLattice::from_poset(
            5,
            |a, b| a == b || pairs.contains(&(a, b)),
            &caps(),
        )
        .unwrap()
    }

    /// Diamond: bottom 0, atoms 1, 2, 3, top 4.
    fn m3() -> FiniteLattice {
        FiniteLattice::from_poset(
            5,
            |a, b| a == b || a == 0 || b == 4,
            &caps(),
        )
        .unwrap()
    }

    #[test]
    fn bowtie_is_rejected_with_a_meetless_pair() {
        // 0, 1 both below 2, 3 and nothing else.
        let result = FiniteLattice::from_poset(
            4,
            |a, b| a == b || (a < 2 && b >= 2),
            &caps(),
        );
        match result {
            Err(Error::NotALattice { kind, .. }) => assert_eq!(kind, "meet"),
            other => panic!("expected a meet failure, got {other:?}"),
        }
    }

    #[test]
    fn intransitive_input_is_rejected() {
        let result = FiniteLattice::from_poset(
            3,
            |a, b| a == b || (a, b) == (0, 1) || (a, b) == (1, 2),
            &caps(),
        );
        assert!(matches!(result, Err(Error::NotAPartialOrder(_))));
    }

    #[test]
    fn pentagon_is_pseudocomplemented_but_not_a_stone_algebra() {
        let l = n5();
        let report = l.classify();
        assert!(!report.distributive.holds);
        assert!(report.distributive.witness.is_some());
        assert!(report.pseudocomplemented.holds);
        assert!(!report.stone.holds, "Stone requires distributivity");
        let table = l.pseudocomplement_table().unwrap();
        assert_eq!(table[1], 3, "the side element kills the lower chain");
        assert_eq!(table[3], 2);
        assert!(l.find_n5().is_some());
        assert!(l.find_m3().is_none());
        // Complemented but non-neutral elements stay out of the center.
        assert_eq!(l.center(), vec![0, 4]);
    }

    #[test]
    fn diamond_has_no_pseudocomplements() {
        let l = m3();
        let report = l.classify();
        assert!(!report.distributive.holds);
        assert!(!report.pseudocomplemented.holds);
        assert!(l.pseudocomplement_table().is_err());
        assert_eq!(l.find_m3(), Some((1, 2, 3)));
        assert!(l.find_n5().is_none());
    }

    #[test]
    fn prime_criterion_agrees_with_the_triple_scan() {
        let two_three = product_chain(&[2, 3], &caps()).unwrap();
        let cube = product_chain(&[2, 2, 2], &caps()).unwrap();
        let chain = product_chain(&[5], &caps()).unwrap();
        for l in [&n5(), &m3(), &two_three, &cube, &chain] {
            assert_eq!(
                l.distributivity_witness_scan().is_none(),
                l.distributivity_witness_primes().is_none(),
            );
            assert_eq!(
                l.distributivity_witness_scan().is_none(),
                l.find_n5().is_none() && l.find_m3().is_none(),
            );
            if let Some((x, y, z)) = l.distributivity_witness_primes() {
                assert_ne!(
                    l.meet(x, l.join(y, z)),
                    l.join(l.meet(x, y), l.meet(x, z)),
                    "the prime-criterion witness must be a genuine failing triple"
                );
            }
        }
    }

    #[test]
    fn two_by_three_is_a_regular_double_stone_kleene_algebra() {
        let l = product_chain(&[2, 3], &caps()).unwrap();
        let report = l.classify();
        assert!(report.distributive.holds);
        assert!(report.stone.holds);
        assert!(report.dual_stone.holds);
        assert!(report.double_stone.holds);
        assert!(report.regular.holds);
        assert!(report.de_morgan.as_ref().unwrap().holds);
        assert!(report.kleene.as_ref().unwrap().holds);
        assert!(!report.boolean.holds);
        assert!(report.two_levels.holds);
        assert_eq!(report.atoms.len(), 2);
        assert_eq!(report.join_irreducibles.len(), 3);
        assert_eq!(report.height, 3);
        assert_eq!(l.as_chain_product(&caps()), Some(vec![2, 3]));
    }

    #[test]
    fn the_cube_is_boolean_with_full_center() {
        let l = product_chain(&[2, 2, 2], &caps()).unwrap();
        let report = l.classify();
        assert!(report.boolean.holds);
        assert!(report.atomistic.holds);
        assert!(report.regular.holds);
        assert!(report.double_stone.holds);
        assert!(report.kleene.as_ref().unwrap().holds);
        assert_eq!(report.atoms.len(), 3);
        assert_eq!(report.center.as_ref().unwrap().len(), 8);
        assert_eq!(report.skeleton.len(), 8);
        assert_eq!(l.height(), 3);
    }

    #[test]
    fn chains_are_double_stone_but_not_regular() {
        let l = product_chain(&[4], &caps()).unwrap();
        let report = l.classify();
        assert!(report.stone.holds);
        assert!(report.dual_stone.holds);
        assert!(report.double_stone.holds);
        assert!(!report.regular.holds, "interior chain elements collide");
        assert!(report.regular.witness.is_some());
        assert!(!report.two_levels.holds);
        assert!(!report.boolean.holds);
    }

    #[test]
    fn three_crown_completes_to_the_cube() {
        // Minimal 0, 1, 2 and maximal 3, 4, 5 with i below 3 + j iff i != j.
        let leq = |a: usize, b: usize| {
            a == b || (a < 3 && b >= 3 && a != b - 3)
        };
        let (completion, cuts) = dedekind_macneille(6, leq, &caps()).unwrap();
        assert_eq!(completion.size(), 8);
        assert_eq!(cuts[0], Vec::<usize>::new(), "the crown has no bottom");
        let cube = product_chain(&[2, 2, 2], &caps()).unwrap();
        let mapping = is_isomorphic(&completion, &cube, &caps()).unwrap();
        assert!(mapping.is_some());
        assert!(completion.classify().boolean.holds);
    }

    #[test]
    fn completing_a_lattice_changes_nothing() {
        let l = product_chain(&[2, 3], &caps()).unwrap();
        let (completion, cuts) = dedekind_macneille(l.size(), |a, b| l.leq(a, b), &caps()).unwrap();
        assert_eq!(completion.size(), l.size());
        let mapping = is_isomorphic(&completion, &l, &caps()).unwrap().unwrap();
        // Cut k is the principal down-set of the element it maps to.
        for (k, cut) in cuts.iter().enumerate() {
            let down: Vec<usize> = (0..l.size()).filter(|&x| l.leq(x, mapping[k])).collect();
            assert_eq!(*cut, down);
        }
    }

    #[test]
    fn isomorphism_respects_structure_not_labelling() {
        // The cube with its coordinates permuted is still the cube.
        let cube = product_chain(&[2, 2, 2], &caps()).unwrap();
        let scrambled = FiniteLattice::from_poset(
            8,
            |a, b| {
                let digits = |i: usize| [(i >> 2) & 1, i & 1, (i >> 1) & 1];
                digits(a).iter().zip(digits(b).iter()).all(|(x, y)| x <= y)
            },
            &caps(),
        )
        .unwrap();
        let mapping = is_isomorphic(&cube, &scrambled, &caps()).unwrap().unwrap();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(cube.leq(a, b), scrambled.leq(mapping[a], mapping[b]));
            }
        }
        let chain4 = product_chain(&[4], &caps()).unwrap();
        let square = product_chain(&[2, 2], &caps()).unwrap();
        assert!(is_isomorphic(&chain4, &square, &caps()).unwrap().is_none());
    }

    #[test]
    fn dual_is_an_involution_and_tables_validate() {
        let l = product_chain(&[2, 3], &caps()).unwrap();
        assert_eq!(l.dual().dual(), l);
        l.validate().unwrap();
        l.dual().validate().unwrap();
        n5().validate().unwrap();
    }

    #[test]
    fn trivial_lattice_classifies_cleanly() {
        let l = FiniteLattice::from_poset(1, |_, _| true, &caps()).unwrap();
        let report = l.classify();
        assert!(report.boolean.holds);
        assert!(report.stone.holds);
        assert!(report.regular.holds);
        assert!(report.two_levels.holds);
        assert_eq!(report.height, 0);
        assert_eq!(l.as_chain_product(&caps()), Some(vec![1]));
    }

    #[test]
    fn factorizations_cover_all_chain_products() {
        assert_eq!(
            factorizations(12),
            vec![
                vec![2, 2, 3],
                vec![2, 6],
                vec![3, 4],
                vec![12],
            ]
        );
        let l = product_chain(&[2, 2, 3], &caps()).unwrap();
        assert_eq!(l.as_chain_product(&caps()), Some(vec![2, 2, 3]));
    }
}
