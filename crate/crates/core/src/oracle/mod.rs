//! Brute-force enumeration of the combinatorial families and their
//! statistics. This is the ground truth the grammars and recurrences are
//! checked against, so it shares no code with them.
//!
//! Each family is walked down its insertion tree. The tree is expanded
//! breadth-first to a frontier of shards, and the shards are walked
//! depth-first under the chosen [`Strategy`].

mod objects;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rustc_hash::FxHashMap;
use serde::Serialize;
use thiserror::Error;

use crate::exec::Strategy;
use crate::symcore::{Monomial, Polynomial, Symbol};

use objects::{
    BinaryForest, FullBinaryForest, FullTernaryForest, Growth, Lists, Perm, Signed, Stirling, StirlingLists,
    TernaryForest, FOREST_STATS, LIST_STATS, PERM_STATS, SIGNED_STATS, STIRLING_LIST_STATS, STIRLING_STATS,
};
pub use objects::{Flavor, Forest};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Stat {
    Des,
    Exc,
    Cyc,
    Cdes,
    Udrun,
    DesB,
    Asc,
    Plat,
    Ap,
    Fap,
    /// Number of blocks (lists).
    Bk,
    Val,
    Dd,
    /// Number of trees in a forest.
    Trees,
    /// Leaves weighted `x`.
    Wx,
    Wy,
    Wz,
}

pub const STATS: &[Stat] = &[
    Stat::Des,
    Stat::Exc,
    Stat::Cyc,
    Stat::Cdes,
    Stat::Udrun,
    Stat::DesB,
    Stat::Asc,
    Stat::Plat,
    Stat::Ap,
    Stat::Fap,
    Stat::Bk,
    Stat::Val,
    Stat::Dd,
    Stat::Trees,
    Stat::Wx,
    Stat::Wy,
    Stat::Wz,
];

impl Stat {
    pub fn name(self) -> &'static str {
        match self {
            Stat::Des => "des",
            Stat::Exc => "exc",
            Stat::Cyc => "cyc",
            Stat::Cdes => "cdes",
            Stat::Udrun => "udrun",
            Stat::DesB => "desB",
            Stat::Asc => "asc",
            Stat::Plat => "plat",
            Stat::Ap => "ap",
            Stat::Fap => "fap",
            Stat::Bk => "bk",
            Stat::Val => "val",
            Stat::Dd => "dd",
            Stat::Trees => "trees",
            Stat::Wx => "wx",
            Stat::Wy => "wy",
            Stat::Wz => "wz",
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = OracleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        STATS.iter().copied().find(|t| t.name() == s).ok_or_else(|| OracleError::UnknownStat(s.to_owned()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObjectKind {
    Permutations,
    SignedPermutations,
    StirlingPermutations,
    ListPartitions,
    StirlingLists,
    Forests(Flavor),
}

pub const OBJECT_KINDS: &[ObjectKind] = &[
    ObjectKind::Permutations,
    ObjectKind::SignedPermutations,
    ObjectKind::StirlingPermutations,
    ObjectKind::ListPartitions,
    ObjectKind::StirlingLists,
    ObjectKind::Forests(Flavor::Binary),
    ObjectKind::Forests(Flavor::FullBinary),
    ObjectKind::Forests(Flavor::Ternary),
    ObjectKind::Forests(Flavor::FullTernary),
];

impl ObjectKind {
    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::Permutations => "permutations",
            ObjectKind::SignedPermutations => "signed-permutations",
            ObjectKind::StirlingPermutations => "stirling-permutations",
            ObjectKind::ListPartitions => "list-partitions",
            ObjectKind::StirlingLists => "stirling-lists",
            ObjectKind::Forests(Flavor::Binary) => "binary-forests",
            ObjectKind::Forests(Flavor::FullBinary) => "full-binary-forests",
            ObjectKind::Forests(Flavor::Ternary) => "ternary-forests",
            ObjectKind::Forests(Flavor::FullTernary) => "full-ternary-forests",
        }
    }

    /// The statistics every record of this kind carries, in record order.
    pub fn stats(self) -> &'static [Stat] {
        match self {
            ObjectKind::Permutations => PERM_STATS,
            ObjectKind::SignedPermutations => SIGNED_STATS,
            ObjectKind::StirlingPermutations => STIRLING_STATS,
            ObjectKind::ListPartitions => LIST_STATS,
            ObjectKind::StirlingLists => STIRLING_LIST_STATS,
            ObjectKind::Forests(_) => FOREST_STATS,
        }
    }

    pub fn default_cap(self) -> usize {
        match self {
            ObjectKind::Permutations => 9,
            ObjectKind::SignedPermutations => 7,
            ObjectKind::StirlingPermutations => 7,
            ObjectKind::ListPartitions => 7,
            ObjectKind::StirlingLists => 5,
            ObjectKind::Forests(Flavor::Binary | Flavor::FullBinary) => 9,
            ObjectKind::Forests(Flavor::Ternary | Flavor::FullTernary) => 7,
        }
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectKind {
    type Err = OracleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OBJECT_KINDS.iter().copied().find(|k| k.name() == s).ok_or_else(|| OracleError::UnknownKind(s.to_owned()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{kind} enumeration is capped at n = {cap}, got n = {n}")]
    CapExceeded { kind: &'static str, n: usize, cap: usize },
    #[error("record `{object}` has no statistic `{stat}`")]
    MissingStat { object: String, stat: Stat },
    #[error("{kind} carry no statistic `{stat}`")]
    StatNotAvailable { kind: &'static str, stat: Stat },
    #[error("unknown statistic `{0}`")]
    UnknownStat(String),
    #[error("unknown object kind `{0}`")]
    UnknownKind(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatRecord {
    pub object: String,
    pub stats: BTreeMap<Stat, u32>,
}

impl StatRecord {
    pub fn get(&self, s: Stat) -> Option<u32> {
        self.stats.get(&s).copied()
    }
}

/// Enumeration settings: size caps per kind and the execution strategy.
#[derive(Clone, Debug, Default)]
pub struct Oracle {
    pub strategy: Strategy,
    caps: FxHashMap<ObjectKind, usize>,
}

/// Frontier depth: shards are the objects of this size.
const SHARD_DEPTH: usize = 4;

fn walk<G: Growth>(g: &G, m: usize, n: usize, f: &mut dyn FnMut(&G)) {
    if m == n {
        f(g);
        return;
    }
    g.grow(m, &mut |child| walk(&child, m + 1, n, f));
}

/// Folds `step` over every object of size `n`, one accumulator per shard, in shard order.
fn fold<G, A, I, S>(n: usize, strategy: Strategy, init: I, step: S) -> Vec<A>
where
    G: Growth,
    A: Send,
    I: Fn() -> A + Sync + Send,
    S: Fn(&mut A, &G) + Sync + Send,
{
    let depth = n.min(SHARD_DEPTH);
    let mut frontier = vec![G::empty()];
    for m in 0..depth {
        let mut next = Vec::new();
        for g in &frontier {
            g.grow(m, &mut |c| next.push(c));
        }
        frontier = next;
    }
    strategy.map(&frontier, |g| {
        let mut acc = init();
        walk(g, depth, n, &mut |obj| step(&mut acc, obj));
        acc
    })
}

fn records_of<G: Growth>(kind: ObjectKind, n: usize, strategy: Strategy) -> Vec<StatRecord> {
    let names = kind.stats();
    let shards = fold::<G, _, _, _>(n, strategy, Vec::new, |acc: &mut Vec<StatRecord>, g| {
        let mut values = Vec::with_capacity(names.len());
        g.stats(&mut values);
        acc.push(StatRecord { object: g.encode(), stats: names.iter().copied().zip(values).collect() });
    });
    shards.into_iter().flatten().collect()
}

/// Counts of each exponent vector, projected onto `positions` of the stat vector.
fn counts_of<G: Growth>(n: usize, strategy: Strategy, positions: &[usize]) -> FxHashMap<Vec<u32>, u64> {
    let shards = fold::<G, _, _, _>(n, strategy, FxHashMap::default, |acc, g| {
        let mut values = Vec::with_capacity(8);
        g.stats(&mut values);
        let key: Vec<u32> = positions.iter().map(|&i| values[i]).collect();
        *acc.entry(key).or_insert(0u64) += 1;
    });
    let mut total: FxHashMap<Vec<u32>, u64> = FxHashMap::default();
    for shard in shards {
        for (k, c) in shard {
            *total.entry(k).or_insert(0) += c;
        }
    }
    total
}

fn dispatch_records(kind: ObjectKind, n: usize, strategy: Strategy) -> Vec<StatRecord> {
    match kind {
        ObjectKind::Permutations => records_of::<Perm>(kind, n, strategy),
        ObjectKind::SignedPermutations => records_of::<Signed>(kind, n, strategy),
        ObjectKind::StirlingPermutations => records_of::<Stirling>(kind, n, strategy),
        ObjectKind::ListPartitions => records_of::<Lists>(kind, n, strategy),
        ObjectKind::StirlingLists => records_of::<StirlingLists>(kind, n, strategy),
        ObjectKind::Forests(Flavor::Binary) => records_of::<BinaryForest>(kind, n, strategy),
        ObjectKind::Forests(Flavor::FullBinary) => records_of::<FullBinaryForest>(kind, n, strategy),
        ObjectKind::Forests(Flavor::Ternary) => records_of::<TernaryForest>(kind, n, strategy),
        ObjectKind::Forests(Flavor::FullTernary) => records_of::<FullTernaryForest>(kind, n, strategy),
    }
}

fn dispatch_counts(kind: ObjectKind, n: usize, strategy: Strategy, positions: &[usize]) -> FxHashMap<Vec<u32>, u64> {
    match kind {
        ObjectKind::Permutations => counts_of::<Perm>(n, strategy, positions),
        ObjectKind::SignedPermutations => counts_of::<Signed>(n, strategy, positions),
        ObjectKind::StirlingPermutations => counts_of::<Stirling>(n, strategy, positions),
        ObjectKind::ListPartitions => counts_of::<Lists>(n, strategy, positions),
        ObjectKind::StirlingLists => counts_of::<StirlingLists>(n, strategy, positions),
        ObjectKind::Forests(Flavor::Binary) => counts_of::<BinaryForest>(n, strategy, positions),
        ObjectKind::Forests(Flavor::FullBinary) => counts_of::<FullBinaryForest>(n, strategy, positions),
        ObjectKind::Forests(Flavor::Ternary) => counts_of::<TernaryForest>(n, strategy, positions),
        ObjectKind::Forests(Flavor::FullTernary) => counts_of::<FullTernaryForest>(n, strategy, positions),
    }
}

impl Oracle {
    pub fn new(strategy: Strategy) -> Oracle {
        Oracle { strategy, ..Oracle::default() }
    }

    pub fn with_cap(mut self, kind: ObjectKind, cap: usize) -> Oracle {
        self.caps.insert(kind, cap);
        self
    }

    pub fn cap(&self, kind: ObjectKind) -> usize {
        self.caps.get(&kind).copied().unwrap_or_else(|| kind.default_cap())
    }

    fn check_cap(&self, kind: ObjectKind, n: usize) -> Result<(), OracleError> {
        let cap = self.cap(kind);
        if n > cap {
            return Err(OracleError::CapExceeded { kind: kind.name(), n, cap });
        }
        Ok(())
    }

    /// Every object of size `n` with its statistics, in a fixed order.
    pub fn enumerate(&self, kind: ObjectKind, n: usize) -> Result<Vec<StatRecord>, OracleError> {
        self.check_cap(kind, n)?;
        Ok(dispatch_records(kind, n, self.strategy))
    }

    /// `Σ_objects Π symbol^stat` without materializing records.
    pub fn tally(&self, kind: ObjectKind, n: usize, assignment: &[(Stat, Symbol)]) -> Result<Polynomial, OracleError> {
        self.check_cap(kind, n)?;
        let stats = kind.stats();
        let positions = assignment
            .iter()
            .map(|(s, _)| {
                stats.iter().position(|t| t == s).ok_or(OracleError::StatNotAvailable { kind: kind.name(), stat: *s })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let counts = dispatch_counts(kind, n, self.strategy, &positions);
        Ok(Polynomial::from_terms(counts.into_iter().map(|(key, c)| {
            let m = Monomial::from_pairs(assignment.iter().zip(key).map(|((_, s), e)| (*s, e as i32)));
            (m, BigInt::from(c))
        })))
    }

    /// Number of objects of size `n`.
    pub fn count(&self, kind: ObjectKind, n: usize) -> Result<BigInt, OracleError> {
        Ok(self.tally(kind, n, &[])?.coefficient_sum())
    }
}

/// `Σ_records Π symbol^stat`.
pub fn stat_polynomial(records: &[StatRecord], assignment: &[(Stat, Symbol)]) -> Result<Polynomial, OracleError> {
    let mut counts: FxHashMap<Monomial, u64> = FxHashMap::default();
    for r in records {
        let mut pairs = Vec::with_capacity(assignment.len());
        for (stat, s) in assignment {
            let e = r.get(*stat).ok_or_else(|| OracleError::MissingStat { object: r.object.clone(), stat: *stat })?;
            pairs.push((*s, e as i32));
        }
        *counts.entry(Monomial::from_pairs(pairs)).or_insert(0) += 1;
    }
    Ok(Polynomial::from_terms(counts.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

pub fn enum_permutations(n: usize) -> Result<Vec<StatRecord>, OracleError> {
    Oracle::default().enumerate(ObjectKind::Permutations, n)
}

pub fn enum_signed_permutations(n: usize) -> Result<Vec<StatRecord>, OracleError> {
    Oracle::default().enumerate(ObjectKind::SignedPermutations, n)
}

pub fn enum_stirling_permutations(n: usize) -> Result<Vec<StatRecord>, OracleError> {
    Oracle::default().enumerate(ObjectKind::StirlingPermutations, n)
}

pub fn enum_list_partitions(n: usize) -> Result<Vec<StatRecord>, OracleError> {
    Oracle::default().enumerate(ObjectKind::ListPartitions, n)
}

pub fn enum_stirling_lists(n: usize) -> Result<Vec<StatRecord>, OracleError> {
    Oracle::default().enumerate(ObjectKind::StirlingLists, n)
}

/// Every forest of the flavor on `[n]`, materialized.
pub fn grow_forests(flavor: Flavor, n: usize) -> Result<Vec<Forest>, OracleError> {
    let kind = ObjectKind::Forests(flavor);
    Oracle::default().check_cap(kind, n)?;
    let mut level = vec![Forest::empty(flavor)];
    for m in 0..n {
        level = level.iter().flat_map(|f| f.children(m)).collect();
    }
    Ok(level)
}

/// Standard-cycle-form descents of the permutation with the given cycles.
pub fn cdes_of_cycles(n: usize, cycles: &[&[u8]]) -> u32 {
    Perm::from_cycles(n, cycles).cdes()
}
