//! Subsets of a finite universe and binary relations on it.
//!
//! The universe is `{0, 1, .., n-1}` with `n <= 64`, so a subset fits in one
//! machine word and a relation is a vector of successor sets (`succ[x]` is the
//! row `R(x) = {y | (x, y) in R}`). All higher layers are built from the two
//! primitives here: bit-set algebra and row access.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::{Error, Result};

/// Largest supported universe size (one subset per machine word).
pub const MAX_UNIVERSE: usize = 64;

/// A subset of a universe `{0, .., width-1}`, packed into a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    width: u8,
}

impl Subset {
    /// The empty subset of a `width`-element universe.
    pub fn empty(width: usize) -> Self {
        debug_assert!((1..=MAX_UNIVERSE).contains(&width));
        Subset {
            bits: 0,
            width: width as u8,
        }
    }

    /// The whole `width`-element universe.
    pub fn full(width: usize) -> Self {
        debug_assert!((1..=MAX_UNIVERSE).contains(&width));
        let bits = if width == 64 { !0 } else { (1u64 << width) - 1 };
        Subset {
            bits,
            width: width as u8,
        }
    }

    /// The singleton `{i}`.
    pub fn singleton(width: usize, i: usize) -> Self {
        debug_assert!(i < width);
        Subset {
            bits: 1u64 << i,
            width: width as u8,
        }
    }

    /// Build a subset from raw bits (masked to the universe).
    pub fn from_bits(width: usize, bits: u64) -> Self {
        Subset {
            bits: bits & Subset::full(width).bits,
            width: width as u8,
        }
    }

    /// Build a subset from element indices; fails on an out-of-range index.
    pub fn from_indices(width: usize, indices: &[usize]) -> Result<Self> {
        let mut s = Subset::empty(width);
        for &i in indices {
            if i >= width {
                return Err(Error::Invalid(format!(
                    "element index {i} out of range for universe of size {width}"
                )));
            }
            s.bits |= 1u64 << i;
        }
        Ok(s)
    }

    /// Raw bit pattern.
    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Universe size this subset lives in.
    pub fn width(self) -> usize {
        self.width as usize
    }

    /// Number of elements.
    pub fn card(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < self.width as usize && self.bits & (1u64 << i) != 0
    }

    pub fn insert(self, i: usize) -> Self {
        debug_assert!(i < self.width as usize);
        Subset {
            bits: self.bits | (1u64 << i),
            width: self.width,
        }
    }

    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        Subset {
            bits: self.bits | other.bits,
            width: self.width,
        }
    }

    pub fn inter(self, other: Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        Subset {
            bits: self.bits & other.bits,
            width: self.width,
        }
    }

    pub fn diff(self, other: Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        Subset {
            bits: self.bits & !other.bits,
            width: self.width,
        }
    }

    /// Complement within the universe.
    pub fn complement(self) -> Self {
        Subset {
            bits: !self.bits & Subset::full(self.width as usize).bits,
            width: self.width,
        }
    }

    pub fn is_subset(self, other: Self) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.bits & !other.bits == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.bits & other.bits != 0
    }

    /// Iterate over the element indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Element indices as a vector (used for JSON output).
    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Deterministic sort key: cardinality first, then bit pattern.
    pub fn sort_key(self) -> (usize, u64) {
        (self.card(), self.bits)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.card()))?;
        for i in self.iter() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}

/// A binary relation on `{0, .., n-1}`, stored row-wise: `succ[x] = R(x)`.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    n: usize,
    succ: Vec<Subset>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryRelation(n={}, succ=[", self.n)?;
        for (x, row) in self.succ.iter().enumerate() {
            if x > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{row:?}")?;
        }
        write!(f, "])")
    }
}

impl BinaryRelation {
    /// Build a relation from successor sets; validates sizes and widths.
    pub fn new(n: usize, succ: Vec<Subset>) -> Result<Self> {
        if !(1..=MAX_UNIVERSE).contains(&n) {
            return Err(Error::UniverseSize(n));
        }
        if succ.len() != n {
            return Err(Error::Malformed(format!(
                "expected {n} successor sets, got {}",
                succ.len()
            )));
        }
        if let Some(x) = succ.iter().position(|s| s.width() != n) {
            return Err(Error::Malformed(format!(
                "successor set of element {x} has width {}, expected {n}",
                succ[x].width()
            )));
        }
        Ok(BinaryRelation {
            n,
            succ,
            labels: None,
        })
    }

    /// Build a relation from explicit pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if !(1..=MAX_UNIVERSE).contains(&n) {
            return Err(Error::UniverseSize(n));
        }
        let mut succ = vec![Subset::empty(n); n];
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::Malformed(format!(
                    "pair ({x}, {y}) out of range for universe of size {n}"
                )));
            }
            succ[x] = succ[x].insert(y);
        }
        BinaryRelation::new(n, succ)
    }

    /// Build a relation from neighborhood index lists (one per element).
    pub fn from_neighborhood_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        if !(1..=MAX_UNIVERSE).contains(&n) {
            return Err(Error::UniverseSize(n));
        }
        if lists.len() != n {
            return Err(Error::Malformed(format!(
                "expected {n} neighborhoods, got {}",
                lists.len()
            )));
        }
        let succ = lists
            .iter()
            .map(|l| Subset::from_indices(n, l))
            .collect::<Result<Vec<_>>>()?;
        BinaryRelation::new(n, succ)
    }

    /// Attach display labels (one per element).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Malformed(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The row `R(x)`.
    pub fn succ(&self, x: usize) -> Subset {
        self.succ[x]
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.succ[x].contains(y)
    }

    /// Number of pairs in the relation.
    pub fn pair_count(&self) -> usize {
        self.succ.iter().map(|s| s.card()).sum()
    }

    /// The inverse relation: `(x, y) in inv` iff `(y, x) in self`.
    pub fn inverse(&self) -> BinaryRelation {
        let mut succ = vec![Subset::empty(self.n); self.n];
        for x in 0..self.n {
            for y in self.succ[x].iter() {
                succ[y] = succ[y].insert(x);
            }
        }
        BinaryRelation {
            n: self.n,
            succ,
            labels: self.labels.clone(),
        }
    }

    /// Relational composition: `(x, y) in self.compose(other)` iff there is a
    /// `z` with `(x, z) in self` and `(z, y) in other`.
    pub fn compose(&self, other: &BinaryRelation) -> Result<BinaryRelation> {
        if self.n != other.n {
            return Err(Error::Malformed(format!(
                "cannot compose relations on universes of size {} and {}",
                self.n, other.n
            )));
        }
        let succ = (0..self.n)
            .map(|x| {
                self.succ[x]
                    .iter()
                    .fold(Subset::empty(self.n), |acc, z| acc.union(other.succ[z]))
            })
            .collect();
        BinaryRelation::new(self.n, succ)
    }

    /// Reflexive-transitive closure.
    pub fn transitive_closure(&self) -> BinaryRelation {
        let mut succ: Vec<Subset> = (0..self.n).map(|x| self.succ[x].insert(x)).collect();
        loop {
            let mut changed = false;
            for x in 0..self.n {
                let grown = succ[x]
                    .iter()
                    .fold(succ[x], |acc, z| acc.union(succ[z]));
                if grown != succ[x] {
                    succ[x] = grown;
                    changed = true;
                }
            }
            if !changed {
                return BinaryRelation {
                    n: self.n,
                    succ,
                    labels: self.labels.clone(),
                };
            }
        }
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|x| self.succ[x].contains(x))
    }

    /// Classify the relation and collect minimal counterexamples.
    pub fn classify(&self) -> RelationClassification {
        let mut reflexive_witness = None;
        for x in 0..self.n {
            if !self.succ[x].contains(x) {
                reflexive_witness = Some(x);
                break;
            }
        }
        let mut symmetric_witness = None;
        'sym: for x in 0..self.n {
            for y in self.succ[x].iter() {
                if !self.succ[y].contains(x) {
                    symmetric_witness = Some((x, y));
                    break 'sym;
                }
            }
        }
        let mut transitive_witness = None;
        'trans: for x in 0..self.n {
            for y in self.succ[x].iter() {
                if !self.succ[y].is_subset(self.succ[x]) {
                    let z = self.succ[y].diff(self.succ[x]).iter().next().unwrap();
                    transitive_witness = Some((x, y, z));
                    break 'trans;
                }
            }
        }
        RelationClassification {
            reflexive: reflexive_witness.is_none(),
            symmetric: symmetric_witness.is_none(),
            transitive: transitive_witness.is_none(),
            reflexive_witness,
            symmetric_witness,
            transitive_witness,
        }
    }

    /// Elements whose row is a singleton: `{x | |R(x)| = 1}`.
    ///
    /// For a reflexive relation this is `{x | R(x) = {x}}`.
    pub fn singletons(&self) -> Subset {
        let mut s = Subset::empty(self.n);
        for x in 0..self.n {
            if self.succ[x].card() == 1 {
                s = s.insert(x);
            }
        }
        s
    }

    /// The core of a row: `{w in R(x) | every R(y) containing w contains all
    /// of R(x)}`.
    pub fn core(&self, x: usize) -> Subset {
        let rx = self.succ[x];
        let mut core = Subset::empty(self.n);
        'next: for w in rx.iter() {
            for y in 0..self.n {
                if self.succ[y].contains(w) && !rx.is_subset(self.succ[y]) {
                    continue 'next;
                }
            }
            core = core.insert(w);
        }
        core
    }

    // ----- generators -------------------------------------------------------

    /// The identity relation (each element related only to itself).
    pub fn identity(n: usize) -> Result<Self> {
        if !(1..=MAX_UNIVERSE).contains(&n) {
            return Err(Error::UniverseSize(n));
        }
        let succ = (0..n).map(|x| Subset::singleton(n, x)).collect();
        BinaryRelation::new(n, succ)
    }

    /// The full relation (every pair related).
    pub fn full(n: usize) -> Result<Self> {
        if !(1..=MAX_UNIVERSE).contains(&n) {
            return Err(Error::UniverseSize(n));
        }
        BinaryRelation::new(n, vec![Subset::full(n); n])
    }

    /// A random reflexive relation: every non-diagonal pair is included
    /// independently with probability `density`.
    pub fn random_reflexive<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Result<Self> {
        if !(1..=MAX_UNIVERSE).contains(&n) {
            return Err(Error::UniverseSize(n));
        }
        let mut succ = Vec::with_capacity(n);
        for x in 0..n {
            let mut row = Subset::singleton(n, x);
            for y in 0..n {
                if y != x && rng.gen_bool(density.clamp(0.0, 1.0)) {
                    row = row.insert(y);
                }
            }
            succ.push(row);
        }
        BinaryRelation::new(n, succ)
    }

    /// A random quasiorder: the reflexive-transitive closure of a sparse
    /// random relation.
    pub fn random_quasiorder<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Result<Self> {
        let seed = BinaryRelation::random_reflexive(n, density, rng)?;
        Ok(seed.transitive_closure())
    }

    /// The tolerance induced by a covering: `R = union of B x B` over blocks.
    ///
    /// Requires every block nonempty and the union of the blocks to be the
    /// whole universe; irredundance is not required here.
    pub fn tolerance_from_covering(n: usize, blocks: &[Subset]) -> Result<Self> {
        validate_covering(n, blocks)?;
        let mut succ = vec![Subset::empty(n); n];
        for &b in blocks {
            for x in b.iter() {
                succ[x] = succ[x].union(b);
            }
        }
        BinaryRelation::new(n, succ)
    }

    /// The equivalence induced by a partition (pairwise disjoint covering).
    pub fn equivalence_from_partition(n: usize, blocks: &[Subset]) -> Result<Self> {
        validate_covering(n, blocks)?;
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if blocks[i].intersects(blocks[j]) {
                    return Err(Error::InvalidCovering(format!(
                        "blocks {:?} and {:?} overlap, so this is not a partition",
                        blocks[i], blocks[j]
                    )));
                }
            }
        }
        BinaryRelation::tolerance_from_covering(n, blocks)
    }

    /// Build the relation whose inverse rows are the blocks of an irredundant
    /// covering: element `x` gets inverse row `blocks[assignment[x]]`.
    ///
    /// `assignment` must place each element in its own block and must use
    /// every block at least once. The returned relation is reflexive, and its
    /// inverse singleton images are exactly the blocks.
    pub fn from_irredundant_covering(
        n: usize,
        blocks: &[Subset],
        assignment: &[usize],
    ) -> Result<Self> {
        validate_irredundant_covering(n, blocks)?;
        if assignment.len() != n {
            return Err(Error::InvalidAssignment(format!(
                "expected {n} block assignments, got {}",
                assignment.len()
            )));
        }
        let mut used = vec![false; blocks.len()];
        for (x, &b) in assignment.iter().enumerate() {
            if b >= blocks.len() {
                return Err(Error::InvalidAssignment(format!(
                    "element {x} assigned to nonexistent block {b}"
                )));
            }
            if !blocks[b].contains(x) {
                return Err(Error::InvalidAssignment(format!(
                    "element {x} is not contained in its assigned block {:?}",
                    blocks[b]
                )));
            }
            used[b] = true;
        }
        if let Some(b) = used.iter().position(|u| !u) {
            return Err(Error::InvalidAssignment(format!(
                "block {:?} is not assigned to any element",
                blocks[b]
            )));
        }
        let inv_succ: Vec<Subset> = assignment.iter().map(|&b| blocks[b]).collect();
        let inv = BinaryRelation::new(n, inv_succ)?;
        Ok(inv.inverse())
    }

    /// The relation of an information system under precision threshold
    /// `beta`: `(x, y) in R` iff every attribute value set of `x` is
    /// `beta`-included in the one of `y`.
    pub fn from_information_system(table: &InformationSystem, beta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&beta) {
            return Err(Error::InvalidBeta(beta));
        }
        table.validate()?;
        let n = table.objects();
        let mut succ = vec![Subset::empty(n); n];
        for x in 0..n {
            'pair: for y in 0..n {
                for attr in &table.attributes {
                    if inclusion_error(&attr.values[x], &attr.values[y]) > beta {
                        continue 'pair;
                    }
                }
                succ[x] = succ[x].insert(y);
            }
        }
        BinaryRelation::new(n, succ)
    }

    // ----- JSON -------------------------------------------------------------

    /// Parse a relation from its JSON document form.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: RelationDoc = serde_json::from_str(text)?;
        doc.into_relation()
    }

    /// Serialize to the JSON document form (round-trips bit-exactly).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&RelationDoc::from_relation(self))
            .expect("relation serialization cannot fail")
    }
}

/// Reflexive/symmetric/transitive flags with minimal counterexamples.
#[derive(Clone, Debug, Serialize)]
pub struct RelationClassification {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    /// An `x` with `(x, x)` missing.
    pub reflexive_witness: Option<usize>,
    /// A pair `(x, y)` in the relation whose reverse is missing.
    pub symmetric_witness: Option<(usize, usize)>,
    /// A chain `(x, y), (y, z)` in the relation with `(x, z)` missing.
    pub transitive_witness: Option<(usize, usize, usize)>,
}

impl RelationClassification {
    pub fn is_tolerance(&self) -> bool {
        self.reflexive && self.symmetric
    }

    pub fn is_quasiorder(&self) -> bool {
        self.reflexive && self.transitive
    }

    pub fn is_equivalence(&self) -> bool {
        self.reflexive && self.symmetric && self.transitive
    }

    /// Human-readable class name for reports.
    pub fn class_name(&self) -> &'static str {
        match (self.reflexive, self.symmetric, self.transitive) {
            (true, true, true) => "equivalence",
            (true, true, false) => "tolerance",
            (true, false, true) => "quasiorder",
            (true, false, false) => "reflexive",
            _ => "not reflexive",
        }
    }
}

/// An information system: objects described by set-valued attributes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InformationSystem {
    pub attributes: Vec<Attribute>,
}

/// One attribute column: a value set per object.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Attribute {
    pub name: String,
    pub values: Vec<BTreeSet<String>>,
}

impl InformationSystem {
    /// Number of objects (rows).
    pub fn objects(&self) -> usize {
        self.attributes.first().map_or(0, |a| a.values.len())
    }

    fn validate(&self) -> Result<()> {
        if self.attributes.is_empty() {
            return Err(Error::Invalid(
                "information system needs at least one attribute".into(),
            ));
        }
        let n = self.objects();
        if !(1..=MAX_UNIVERSE).contains(&n) {
            return Err(Error::UniverseSize(n));
        }
        for attr in &self.attributes {
            if attr.values.len() != n {
                return Err(Error::Invalid(format!(
                    "attribute {} has {} value sets, expected {n}",
                    attr.name,
                    attr.values.len()
                )));
            }
        }
        Ok(())
    }

    /// Parse from JSON.
    pub fn from_json(text: &str) -> Result<Self> {
        let table: InformationSystem = serde_json::from_str(text)?;
        table.validate()?;
        Ok(table)
    }
}

/// Rough-inclusion error `c(X, Y) = 1 - |X n Y| / |X|` (zero when `X` empty).
pub fn inclusion_error(x: &BTreeSet<String>, y: &BTreeSet<String>) -> f64 {
    if x.is_empty() {
        0.0
    } else {
        1.0 - x.intersection(y).count() as f64 / x.len() as f64
    }
}

fn validate_covering(n: usize, blocks: &[Subset]) -> Result<()> {
    if !(1..=MAX_UNIVERSE).contains(&n) {
        return Err(Error::UniverseSize(n));
    }
    if blocks.is_empty() {
        return Err(Error::InvalidCovering("no blocks given".into()));
    }
    let mut union = Subset::empty(n);
    for &b in blocks {
        if b.width() != n {
            return Err(Error::InvalidCovering(format!(
                "block {b:?} has width {}, expected {n}",
                b.width()
            )));
        }
        if b.is_empty() {
            return Err(Error::InvalidCovering("empty block".into()));
        }
        union = union.union(b);
    }
    if union != Subset::full(n) {
        return Err(Error::InvalidCovering(format!(
            "blocks cover only {union:?}, not the whole universe"
        )));
    }
    Ok(())
}

/// Check that `blocks` is an irredundant covering of the universe: the blocks
/// cover it, and dropping any one block breaks the covering.
pub fn validate_irredundant_covering(n: usize, blocks: &[Subset]) -> Result<()> {
    validate_covering(n, blocks)?;
    for i in 0..blocks.len() {
        let rest = blocks
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Subset::empty(n), |acc, (_, &b)| acc.union(b));
        if rest == Subset::full(n) {
            return Err(Error::InvalidCovering(format!(
                "block {:?} is redundant: the other blocks already cover the universe",
                blocks[i]
            )));
        }
    }
    Ok(())
}

/// A random covering of the universe (not necessarily irredundant).
pub fn random_covering<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Subset> {
    let k = rng.gen_range(1..=n);
    let mut blocks = vec![Subset::empty(n); k];
    for x in 0..n {
        // Put every element in at least one block.
        let home = rng.gen_range(0..k);
        blocks[home] = blocks[home].insert(x);
        for (b, block) in blocks.iter_mut().enumerate() {
            if b != home && rng.gen_bool(0.25) {
                *block = block.insert(x);
            }
        }
    }
    blocks.retain(|b| !b.is_empty());
    blocks
}

/// A random irredundant covering plus a valid surjective block assignment.
///
/// Each block keeps one private representative, which makes the covering
/// irredundant and gives every block an assigned element.
pub fn random_irredundant_covering<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> (Vec<Subset>, Vec<usize>) {
    let k = rng.gen_range(1..=n);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    // perm[0..k] are the private representatives of the k blocks.
    let mut blocks: Vec<Subset> = (0..k).map(|b| Subset::singleton(n, perm[b])).collect();
    let mut assignment = vec![usize::MAX; n];
    for (b, &rep) in perm[..k].iter().enumerate() {
        assignment[rep] = b;
    }
    for &x in &perm[k..] {
        // Non-representatives may sit in several blocks; pick a home for the
        // assignment among them.
        let home = rng.gen_range(0..k);
        blocks[home] = blocks[home].insert(x);
        assignment[x] = home;
        for (b, block) in blocks.iter_mut().enumerate() {
            if b != home && rng.gen_bool(0.25) {
                *block = block.insert(x);
            }
        }
    }
    (blocks, assignment)
}

/// A random partition of the universe.
pub fn random_partition<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Subset> {
    let k = rng.gen_range(1..=n);
    let mut blocks = vec![Subset::empty(n); k];
    for x in 0..n {
        let b = rng.gen_range(0..k);
        blocks[b] = blocks[b].insert(x);
    }
    blocks.retain(|b| !b.is_empty());
    blocks
}

/// The JSON document form of a relation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationDoc {
    pub universe_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// `neighborhoods[x]` lists the 0-based indices of `R(x)`.
    pub neighborhoods: Vec<Vec<usize>>,
}

impl RelationDoc {
    pub fn from_relation(r: &BinaryRelation) -> Self {
        RelationDoc {
            universe_size: r.n(),
            labels: r.labels().map(|l| l.to_vec()),
            neighborhoods: (0..r.n()).map(|x| r.succ(x).indices()).collect(),
        }
    }

    pub fn into_relation(self) -> Result<BinaryRelation> {
        let r = BinaryRelation::from_neighborhood_lists(self.universe_size, &self.neighborhoods)?;
        match self.labels {
            Some(labels) => r.with_labels(labels),
            None => Ok(r),
        }
    }
}
