//! Exhaustive enumeration of K4-homeomorphs by size, grouped into
//! chromatic-equivalence classes.
//!
//! The population at size `m` is every composition of `m` into six positive
//! path lengths, reduced to one canonical tuple per isomorphism class.
//! Classes are keyed by the essential polynomial: two homeomorphs of equal
//! size are chromatically equivalent iff their essential polynomials agree,
//! so exact structural equality of the sparse polynomials is the grouping
//! relation — no coefficients are hashed, truncated, or rounded.
//!
//! Sharding is by first path length. Shards merge through ordered set
//! unions, which are associative and commutative, so reports are identical
//! — byte for byte once serialized — for every worker count.

pub mod catalog;
pub mod verify;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::essential_polynomial;
use crate::k4homeo::K4Homeomorph;
use crate::polyring::IntPolynomial;
use crate::{Error, Result};

/// Largest size the exhaustive sweeps accept. `C(63, 5)` tuples is still
/// tractable; anything beyond deserves a deliberate decision, not a default.
pub const MAX_SWEEP_SIZE: u64 = 64;

/// Exact binomial coefficient in u64 (the sweep ranges keep it small).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - k + 1 + i) as u128 / (i as u128 + 1);
    }
    acc as u64
}

/// Number of compositions of `m` into six positive parts: `C(m-1, 5)`.
pub fn compositions_count(m: u64) -> u64 {
    if m < 6 {
        0
    } else {
        binomial(m - 1, 5)
    }
}

/// Iterator over the compositions of `total` into `K` positive parts, in
/// lexicographically ascending order.
pub struct Compositions<const K: usize> {
    total: u64,
    state: Option<[u64; K]>,
}

impl<const K: usize> Compositions<K> {
    pub fn new(total: u64) -> Self {
        let state = if K > 0 && total >= K as u64 {
            let mut first = [1u64; K];
            first[K - 1] = total - (K as u64 - 1);
            Some(first)
        } else {
            None
        };
        Self { total, state }
    }
}

impl<const K: usize> Iterator for Compositions<K> {
    type Item = [u64; K];

    fn next(&mut self) -> Option<[u64; K]> {
        let current = self.state?;
        let mut next = current;
        let mut advanced = false;
        // Increment the rightmost position that leaves at least 1 for the
        // last part; positions in between reset to 1.
        for i in (0..K - 1).rev() {
            let prefix: u64 = next[..=i].iter().sum::<u64>() + 1;
            let mid_ones = (K - 2 - i) as u64;
            // Strict: the last part still needs at least 1.
            if prefix + mid_ones < self.total {
                next[i] += 1;
                for part in next.iter_mut().take(K - 1).skip(i + 1) {
                    *part = 1;
                }
                next[K - 1] = self.total - prefix - mid_ones;
                advanced = true;
                break;
            }
        }
        self.state = if advanced { Some(next) } else { None };
        Some(current)
    }
}

/// All compositions of `m` into six positive path lengths.
pub fn compositions(m: u64) -> Compositions<6> {
    Compositions::new(m)
}

// ---- Filters ----

/// Population filters for class reports.
///
/// `girth` and `max_unit_paths` restrict which isomorphism classes enter
/// the population *before* grouping. `pattern` selects classes *after*
/// grouping: a class is kept when at least one member matches the pattern
/// under some relabeling (`None` slots are wildcards).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassFilters {
    pub girth: Option<u64>,
    pub max_unit_paths: Option<usize>,
    pub pattern: Option<[Option<u64>; 6]>,
}

impl ClassFilters {
    /// No filtering: the full population.
    pub fn none() -> Self {
        Self::default()
    }

    /// The uniqueness-classification hypotheses: girth exactly 7, at most
    /// one undivided edge.
    pub fn hypothesis() -> Self {
        Self {
            girth: Some(7),
            max_unit_paths: Some(1),
            pattern: None,
        }
    }

    fn member_passes(&self, h: &K4Homeomorph) -> bool {
        if let Some(g) = self.girth {
            if h.girth() != g {
                return false;
            }
        }
        if let Some(max) = self.max_unit_paths {
            if h.unit_path_count() > max {
                return false;
            }
        }
        true
    }

    fn class_passes(&self, members: &[K4Homeomorph]) -> bool {
        match &self.pattern {
            None => true,
            Some(pattern) => members.iter().any(|h| {
                h.relabelings().any(|img| {
                    img.params()
                        .iter()
                        .zip(pattern.iter())
                        .all(|(&v, want)| want.is_none_or(|w| w == v))
                })
            }),
        }
    }
}

// ---- Reports ----

/// One homeomorph inside an equivalence class, with the invariants a reader
/// needs to audit it and the catalog families that cover it.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassMember {
    pub tuple: K4Homeomorph,
    pub girth: u64,
    pub girth_cycles: usize,
    pub unit_paths: usize,
    /// Catalog family ids whose instances at this size contain the tuple;
    /// empty when no family covers it.
    pub families: Vec<String>,
}

/// A chromatic-equivalence class: the shared essential polynomial and the
/// canonical member tuples, ascending.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub essential: IntPolynomial,
    pub members: Vec<ClassMember>,
}

/// The classification of one size: counts plus the classes that pass the
/// filters, deterministically ordered by their least member.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub size: u64,
    /// Raw compositions of the size: `C(size-1, 5)`.
    pub tuples_enumerated: u64,
    /// Distinct isomorphism classes at this size, before filtering.
    pub isomorphism_classes: u64,
    /// Isomorphism classes passing the population filters.
    pub members_matching: u64,
    pub classes: Vec<EquivalenceClass>,
}

// ---- Enumeration and grouping ----

fn check_size(size: u64) -> Result<()> {
    if size < 6 {
        return Err(Error::SizeOutOfRange {
            size,
            reason: "a K4-homeomorph has at least six edges".into(),
        });
    }
    if size > MAX_SWEEP_SIZE {
        return Err(Error::SizeOutOfRange {
            size,
            reason: format!("exhaustive sweeps are capped at size {MAX_SWEEP_SIZE}"),
        });
    }
    Ok(())
}

/// Runs `f` on a dedicated pool of `workers` threads, or inline on the
/// current (global) pool when `workers` is 0.
fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    if workers == 0 {
        f()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Inconsistent(format!("worker pool construction failed: {e}")))?;
        pool.install(f)
    }
}

/// Every isomorphism class at `size`, as canonical tuples.
fn canonical_population(size: u64) -> BTreeSet<[u64; 6]> {
    let max_first = size - 5;
    (1..=max_first)
        .into_par_iter()
        .map(|first| {
            let mut shard = BTreeSet::new();
            for rest in Compositions::<5>::new(size - first) {
                let tuple = [first, rest[0], rest[1], rest[2], rest[3], rest[4]];
                let h = K4Homeomorph::from_valid(tuple);
                shard.insert(h.canonical().params());
            }
            shard
        })
        .reduce(BTreeSet::new, |mut left, right| {
            left.extend(right);
            left
        })
}

/// Enumerates size `size` exhaustively and groups the filtered population
/// into chromatic-equivalence classes.
///
/// `workers = 0` uses the process-default thread pool; any other count gets
/// a dedicated pool. The report is identical for every worker count.
pub fn equivalence_classes(
    size: u64,
    filters: &ClassFilters,
    workers: usize,
) -> Result<EquivalenceReport> {
    check_size(size)?;
    with_pool(workers, || Ok(classify_population(size, filters)))
}

fn classify_population(size: u64, filters: &ClassFilters) -> EquivalenceReport {
    let population = canonical_population(size);
    let isomorphism_classes = population.len() as u64;

    let mut members_matching = 0u64;
    let mut groups: BTreeMap<IntPolynomial, Vec<K4Homeomorph>> = BTreeMap::new();
    for params in population {
        let h = K4Homeomorph::from_valid(params);
        if !filters.member_passes(&h) {
            continue;
        }
        members_matching += 1;
        groups.entry(essential_polynomial(&h)).or_default().push(h);
    }

    let attribution = catalog::attribution_index(size);
    let mut classes: Vec<EquivalenceClass> = groups
        .into_iter()
        .filter(|(_, members)| filters.class_passes(members))
        .map(|(essential, members)| EquivalenceClass {
            essential,
            members: members
                .into_iter()
                .map(|h| ClassMember {
                    tuple: h,
                    girth: h.girth(),
                    girth_cycles: h.girth_cycle_count(),
                    unit_paths: h.unit_path_count(),
                    families: attribution
                        .get(&h.params())
                        .map(|ids| ids.iter().map(|s| s.to_string()).collect())
                        .unwrap_or_default(),
                })
                .collect(),
        })
        .collect();
    classes.sort_by(|a, b| a.members[0].tuple.cmp(&b.members[0].tuple));

    EquivalenceReport {
        size,
        tuples_enumerated: compositions_count(size),
        isomorphism_classes,
        members_matching,
        classes,
    }
}
