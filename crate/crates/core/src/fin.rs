//! FIN combinatorics: finite nonempty subsets of ω, their block sequences,
//! finite unions, support projection, and brute-force Hindman and
//! Milliken–Taylor searches.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::blockseq::BlockSeq;
use crate::error::{Budget, Error, Result};

/// A nonempty finite subset of ω, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinSet {
    elems: Vec<usize>,
}

impl FinSet {
    pub fn new(elems: impl IntoIterator<Item = usize>) -> Result<FinSet> {
        let mut elems: Vec<usize> = elems.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        if elems.is_empty() {
            return Err(Error::Precondition("FIN elements are nonempty".into()));
        }
        Ok(FinSet { elems })
    }

    pub fn singleton(n: usize) -> FinSet {
        FinSet { elems: vec![n] }
    }

    pub(crate) fn from_sorted_unchecked(elems: Vec<usize>) -> FinSet {
        debug_assert!(!elems.is_empty() && elems.windows(2).all(|w| w[0] < w[1]));
        FinSet { elems }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn min_elem(&self) -> usize {
        self.elems[0]
    }

    pub fn max_elem(&self) -> usize {
        self.elems[self.elems.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, n: usize) -> bool {
        self.elems.binary_search(&n).is_ok()
    }

    pub fn is_subset(&self, other: &FinSet) -> bool {
        self.elems.iter().all(|&n| other.contains(n))
    }

    pub fn union(&self, other: &FinSet) -> FinSet {
        let mut elems = self.elems.clone();
        elems.extend_from_slice(&other.elems);
        elems.sort_unstable();
        elems.dedup();
        FinSet { elems }
    }

    /// `self < other` in FIN: `max(self) < min(other)`.
    pub fn precedes(&self, other: &FinSet) -> bool {
        self.max_elem() < other.min_elem()
    }

    /// Comma-separated key used in coloring files, e.g. `0,2,5`.
    pub fn key(&self) -> String {
        self.elems
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

impl FromStr for FinSet {
    type Err = Error;

    /// Accepts `0,2,5` or `{0,2,5}`.
    fn from_str(s: &str) -> Result<FinSet> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let elems = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad FIN element {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FinSet::new(elems)
    }
}

/// A finite block sequence in FIN: `max(a_n) < min(a_{n+1})`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinBlockSeq {
    entries: Vec<FinSet>,
}

impl FinBlockSeq {
    pub fn new(entries: Vec<FinSet>) -> Result<FinBlockSeq> {
        if let Some(k) = entries.windows(2).position(|w| !w[0].precedes(&w[1])) {
            return Err(Error::NotBlock { index: k + 1 });
        }
        Ok(FinBlockSeq { entries })
    }

    pub fn from_slices(sets: &[&[usize]]) -> Result<FinBlockSeq> {
        FinBlockSeq::new(
            sets.iter()
                .map(|s| FinSet::new(s.iter().copied()))
                .collect::<Result<_>>()?,
        )
    }

    pub fn empty() -> FinBlockSeq {
        FinBlockSeq::default()
    }

    pub fn entries(&self) -> &[FinSet] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `∪_{i ∈ mask} a_i` for a nonempty index mask.
    pub fn union_of(&self, mask: u64) -> Option<FinSet> {
        let elems: Vec<usize> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, a)| a.elems.iter().copied())
            .collect();
        (!elems.is_empty()).then(|| FinSet::from_sorted_unchecked(elems))
    }

    /// `|`-separated key for sequence colorings, e.g. `0,1|3`.
    pub fn key(&self) -> String {
        self.entries
            .iter()
            .map(FinSet::key)
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Display for FinBlockSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, a) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for FinBlockSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<FinBlockSeq> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(FinBlockSeq::empty());
        }
        FinBlockSeq::new(s.split('|').map(str::parse).collect::<Result<_>>()?)
    }
}

/// `⟨A⟩`: all nonempty finite unions of entries, in canonical order.
pub fn finite_unions(a: &FinBlockSeq, budget: &Budget) -> Result<Vec<FinSet>> {
    if a.len() >= 63 {
        return Err(Error::Budget { cap: budget.cap() });
    }
    let count = (1u64 << a.len()) - 1;
    budget.spend(count)?;
    let mut out: Vec<FinSet> = (1..=count).filter_map(|m| a.union_of(m)).collect();
    out.sort();
    Ok(out)
}

/// `A ⪯ B` in FIN: each entry of `A` is exactly a union of entries of `B`.
pub fn fin_dominates(a: &FinBlockSeq, b: &FinBlockSeq) -> bool {
    a.entries.iter().all(|ak| {
        let mut covered = 0;
        for bj in &b.entries {
            if bj.max_elem() < ak.min_elem() {
                continue;
            }
            if bj.min_elem() > ak.max_elem() {
                break;
            }
            let inside = bj.elems.iter().filter(|&&n| ak.contains(n)).count();
            if inside == bj.len() {
                covered += inside;
            } else if inside > 0 {
                return false;
            }
        }
        covered == ak.len()
    })
}

/// Entrywise support of a block sequence.
pub fn supp_seq(x: &BlockSeq) -> FinBlockSeq {
    FinBlockSeq {
        entries: x.entries().iter().map(|v| v.support()).collect(),
    }
}

/// `({min a : a ∈ A}, {max a : a ∈ A})`.
pub fn min_max_trace(a: &FinBlockSeq) -> (Vec<usize>, Vec<usize>) {
    (
        a.entries.iter().map(FinSet::min_elem).collect(),
        a.entries.iter().map(FinSet::max_elem).collect(),
    )
}

type ColorFn = Arc<dyn Fn(&[FinSet]) -> u32 + Send + Sync>;

#[derive(Clone)]
enum Rule {
    Const(u32),
    MinParity,
    CardParity,
    Adjacency,
    Table(HashMap<Vec<FinSet>, u32>),
    Custom(ColorFn),
}

/// A finite coloring of FIN elements (arity 1) or of length-`k` FIN block
/// sequences, restricted to sets within `[0, bound)`.
#[derive(Clone)]
pub struct Coloring {
    bound: usize,
    arity: usize,
    rule: Rule,
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rule = match &self.rule {
            Rule::Const(c) => format!("const:{c}"),
            Rule::MinParity => "min-parity".into(),
            Rule::CardParity => "card-parity".into(),
            Rule::Adjacency => "adjacency".into(),
            Rule::Table(t) => format!("table[{}]", t.len()),
            Rule::Custom(_) => "custom".into(),
        };
        f.debug_struct("Coloring")
            .field("bound", &self.bound)
            .field("arity", &self.arity)
            .field("rule", &rule)
            .finish()
    }
}

impl Coloring {
    fn with(bound: usize, arity: usize, rule: Rule) -> Result<Coloring> {
        if arity == 0 {
            return Err(Error::Precondition(
                "coloring arity must be at least 1".into(),
            ));
        }
        Ok(Coloring { bound, arity, rule })
    }

    pub fn constant(bound: usize, arity: usize) -> Result<Coloring> {
        Coloring::with(bound, arity, Rule::Const(0))
    }

    /// Parity of the least element of the union (0 even, 1 odd).
    pub fn min_parity(bound: usize, arity: usize) -> Result<Coloring> {
        Coloring::with(bound, arity, Rule::MinParity)
    }

    /// Parity of the cardinality of the union.
    pub fn card_parity(bound: usize, arity: usize) -> Result<Coloring> {
        Coloring::with(bound, arity, Rule::CardParity)
    }

    /// 1 iff some consecutive pair is adjacent (`max(a_i) + 1 = min(a_{i+1})`).
    pub fn adjacency(bound: usize, arity: usize) -> Result<Coloring> {
        if arity < 2 {
            return Err(Error::Precondition(
                "adjacency needs arity at least 2".into(),
            ));
        }
        Coloring::with(bound, arity, Rule::Adjacency)
    }

    pub fn custom(
        bound: usize,
        arity: usize,
        f: impl Fn(&[FinSet]) -> u32 + Send + Sync + 'static,
    ) -> Result<Coloring> {
        Coloring::with(bound, arity, Rule::Custom(Arc::new(f)))
    }

    /// An explicit table keyed by tuples of sets; lookups outside it fail.
    pub fn table(bound: usize, arity: usize, table: HashMap<Vec<FinSet>, u32>) -> Result<Coloring> {
        if let Some(k) = table.keys().find(|k| k.len() != arity) {
            return Err(Error::Parse(format!(
                "table key {} has {} sets, expected {arity}",
                seq_key(k),
                k.len()
            )));
        }
        Coloring::with(bound, arity, Rule::Table(table))
    }

    /// Built-in by name: `const`, `min-parity`, `card-parity`, `adjacency`.
    pub fn named(name: &str, bound: usize, arity: usize) -> Result<Coloring> {
        match name {
            "const" => Coloring::constant(bound, arity),
            "min-parity" => Coloring::min_parity(bound, arity),
            "card-parity" => Coloring::card_parity(bound, arity),
            "adjacency" => Coloring::adjacency(bound, arity),
            _ => Err(Error::Parse(format!("unknown coloring {name:?}"))),
        }
    }

    /// Parses a JSON object mapping keys like `"0,2"` (or `"0|2,3"` for
    /// sequences) to integer colors.
    pub fn from_json(bound: usize, arity: usize, json: &serde_json::Value) -> Result<Coloring> {
        let obj = json
            .as_object()
            .ok_or_else(|| Error::Parse("coloring must be a JSON object".into()))?;
        let mut table = HashMap::with_capacity(obj.len());
        for (k, v) in obj {
            let seq: FinBlockSeq = k.parse()?;
            let c = v
                .as_u64()
                .and_then(|c| u32::try_from(c).ok())
                .ok_or_else(|| Error::Parse(format!("color for {k:?} is not a small natural")))?;
            table.insert(seq.entries, c);
        }
        Coloring::table(bound, arity, table)
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn color(&self, sets: &[FinSet]) -> Result<u32> {
        if sets.len() != self.arity {
            return Err(Error::Precondition(format!(
                "coloring takes {} sets, got {}",
                self.arity,
                sets.len()
            )));
        }
        if let Some(s) = sets.iter().find(|s| s.max_elem() >= self.bound) {
            return Err(Error::Precondition(format!(
                "{s} lies outside [0,{})",
                self.bound
            )));
        }
        let union_min = || sets[0].min_elem();
        let union_len = || sets.iter().map(FinSet::len).sum::<usize>();
        Ok(match &self.rule {
            Rule::Const(c) => *c,
            Rule::MinParity => (union_min() % 2) as u32,
            Rule::CardParity => (union_len() % 2) as u32,
            Rule::Adjacency => {
                sets.windows(2)
                    .any(|w| w[0].max_elem() + 1 == w[1].min_elem()) as u32
            }
            Rule::Table(t) => *t.get(sets).ok_or_else(|| {
                Error::Precondition(format!("coloring undefined on {}", seq_key(sets)))
            })?,
            Rule::Custom(f) => f(sets),
        })
    }
}

fn seq_key(sets: &[FinSet]) -> String {
    sets.iter().map(FinSet::key).collect::<Vec<_>>().join("|")
}

/// Block `k`-tuples of nonempty index masks over `0..=last` whose final mask
/// contains `last`. These are exactly the new tuples created by appending
/// entry `last`.
fn tuples_ending_at(last: usize, k: usize) -> Vec<Vec<u64>> {
    // masks over [lo, hi] inclusive, nonempty
    fn masks(lo: usize, hi: usize) -> impl Iterator<Item = u64> {
        let width = hi + 1 - lo;
        (1u64..(1 << width)).map(move |m| m << lo)
    }
    fn rec(
        pos: usize,
        k: usize,
        lo: usize,
        last: usize,
        acc: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if pos + 1 == k {
            for m in masks(lo, last).filter(|m| m >> last & 1 == 1) {
                acc.push(m);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        // leave room: each later mask needs at least one index
        for hi in lo..last {
            for m in masks(lo, hi).filter(|m| m >> hi & 1 == 1) {
                acc.push(m);
                rec(pos + 1, k, hi + 1, last, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, k, 0, last, &mut Vec::new(), &mut out);
    out
}

/// Per-level tuple tables, shared across search branches.
struct TupleTable {
    by_last: Vec<Vec<Vec<u64>>>,
}

impl TupleTable {
    fn new(len: usize, k: usize) -> TupleTable {
        TupleTable {
            by_last: (0..len).map(|j| tuples_ending_at(j, k)).collect(),
        }
    }
}

fn tuple_sets(prefix: &[FinSet], masks: &[u64]) -> Vec<FinSet> {
    masks
        .iter()
        .map(|&m| {
            let elems: Vec<usize> = (0..prefix.len())
                .filter(|i| m >> i & 1 == 1)
                .flat_map(|i| prefix[i].elems.iter().copied())
                .collect();
            FinSet::from_sorted_unchecked(elems)
        })
        .collect()
}

/// Color shared by every block `k`-tuple from `⟨A⟩`, or `None` when two
/// tuples disagree. `Err` if `A` is shorter than `k`.
pub fn milliken_color(c: &Coloring, a: &FinBlockSeq) -> Result<Option<u32>> {
    if a.len() < c.arity || a.len() >= 63 {
        return Err(Error::Precondition(format!(
            "need {} ≤ |A| < 63, got {}",
            c.arity,
            a.len()
        )));
    }
    let table = TupleTable::new(a.len(), c.arity);
    let mut color = None;
    for tuples in &table.by_last {
        for t in tuples {
            let col = c.color(&tuple_sets(&a.entries, t))?;
            match color {
                None => color = Some(col),
                Some(prev) if prev != col => return Ok(None),
                _ => {}
            }
        }
    }
    Ok(color)
}

/// Lexicographic DFS over length-`len` FIN block sequences within
/// `[0, bound)`, pruning any prefix whose tuples are already two-colored.
fn block_search(c: &Coloring, len: usize, budget: &Budget) -> Result<Option<(FinBlockSeq, u32)>> {
    if len < c.arity || len >= 63 {
        return Err(Error::Precondition(format!(
            "target length must lie in [{}, 63), got {len}",
            c.arity
        )));
    }
    let table = TupleTable::new(len, c.arity);

    struct Ctx<'a> {
        c: &'a Coloring,
        len: usize,
        table: &'a TupleTable,
        budget: &'a Budget,
    }

    // Extends `prefix` by one set whose elements lie in [lo, bound) and
    // whose least element is `first`, enumerating sets in lex order.
    fn try_entry(
        ctx: &Ctx,
        prefix: &mut Vec<FinSet>,
        color: Option<u32>,
        elems: &mut Vec<usize>,
    ) -> Result<Option<u32>> {
        ctx.budget.tick()?;
        prefix.push(FinSet::from_sorted_unchecked(elems.clone()));
        let mut col = color;
        let mut ok = true;
        for t in &ctx.table.by_last[prefix.len() - 1] {
            let cc = ctx.c.color(&tuple_sets(prefix, t))?;
            match col {
                None => col = Some(cc),
                Some(p) if p != cc => {
                    ok = false;
                    break;
                }
                _ => {}
            }
        }
        if ok {
            if let Some(found) = extend(ctx, prefix, col)? {
                return Ok(Some(found));
            }
        }
        prefix.pop();
        let top = *elems.last().expect("nonempty");
        for next in top + 1..ctx.c.bound {
            elems.push(next);
            if let Some(found) = try_entry(ctx, prefix, color, elems)? {
                return Ok(Some(found));
            }
            elems.pop();
        }
        Ok(None)
    }

    fn extend(ctx: &Ctx, prefix: &mut Vec<FinSet>, color: Option<u32>) -> Result<Option<u32>> {
        if prefix.len() == ctx.len {
            return Ok(color);
        }
        let lo = prefix.last().map_or(0, |a| a.max_elem() + 1);
        // the remaining entries need one point each
        let room = ctx.len - prefix.len() - 1;
        for first in lo..ctx.c.bound.saturating_sub(room) {
            if let Some(found) = try_entry(ctx, prefix, color, &mut vec![first])? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    let ctx = Ctx {
        c,
        len,
        table: &table,
        budget,
    };
    let first_choices = c.bound.saturating_sub(len - 1);
    (0..first_choices)
        .into_par_iter()
        .map(|first| {
            let mut prefix = Vec::with_capacity(len);
            try_entry(&ctx, &mut prefix, None, &mut vec![first]).map(|r| r.map(|col| (prefix, col)))
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .unwrap_or(Ok(None))
        .map(|r| r.map(|(entries, col)| (FinBlockSeq { entries }, col)))
}

/// First length-`len` block sequence `A` (canonical lexicographic order)
/// with `⟨A⟩` monochromatic, and its color. `None` means the universe
/// `[0, bound)` admits no witness.
pub fn hindman_search(
    c: &Coloring,
    len: usize,
    budget: &Budget,
) -> Result<Option<(FinBlockSeq, u32)>> {
    if c.arity != 1 {
        return Err(Error::Precondition(
            "hindman_search needs a coloring of sets".into(),
        ));
    }
    block_search(c, len, budget)
}

/// First length-`len` `A` such that all block `k`-tuples drawn from `⟨A⟩`
/// share a color, where `k` is the coloring's arity.
pub fn milliken_search(
    c: &Coloring,
    len: usize,
    budget: &Budget,
) -> Result<Option<(FinBlockSeq, u32)>> {
    block_search(c, len, budget)
}

/// All FIN elements within `[0, n)`, in canonical order.
pub fn fin_universe(n: usize) -> Vec<FinSet> {
    let mut out: Vec<FinSet> = (1u64..(1 << n))
        .map(|m| FinSet::from_sorted_unchecked((0..n).filter(|i| m >> i & 1 == 1).collect()))
        .collect();
    out.sort();
    out
}

/// Least `n ≤ max_n` such that every `colors`-coloring of FIN within
/// `[0, n)` has a monochromatic `⟨A⟩` with `|A| = len`, by exhausting all
/// colorings. Feasible only for tiny universes.
pub fn hindman_threshold(
    colors: u32,
    len: usize,
    max_n: usize,
    budget: &Budget,
) -> Result<Option<usize>> {
    for n in len..=max_n {
        let universe = fin_universe(n);
        let total = (colors as u128)
            .checked_pow(universe.len() as u32)
            .filter(|&t| t <= u64::MAX as u128);
        let total = total.ok_or(Error::Budget { cap: budget.cap() })? as u64;
        budget.spend(total)?;
        let all_ok = (0..total).into_par_iter().map(|code| {
            let mut table = HashMap::with_capacity(universe.len());
            let mut rest = code;
            for s in &universe {
                table.insert(vec![s.clone()], (rest % colors as u64) as u32);
                rest /= colors as u64;
            }
            let c = Coloring::table(n, 1, table)?;
            Ok(block_search(&c, len, &Budget::new(u64::MAX))?.is_some())
        });
        let failures: Result<Vec<bool>> = all_ok.collect();
        if failures?.into_iter().all(|b| b) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, Vector};

    fn fs(s: &[usize]) -> FinSet {
        FinSet::new(s.iter().copied()).unwrap()
    }

    fn fbs(s: &[&[usize]]) -> FinBlockSeq {
        FinBlockSeq::from_slices(s).unwrap()
    }

    #[test]
    fn finset_basics() {
        assert!(FinSet::new([]).is_err());
        let a: FinSet = "{2,0,5}".parse().unwrap();
        assert_eq!(a.elements(), &[0, 2, 5]);
        assert_eq!(a.key(), "0,2,5");
        assert!(fs(&[0]) < fs(&[0, 1]));
        assert!(fs(&[0, 3]) < fs(&[1]));
        assert!(FinBlockSeq::new(vec![fs(&[0, 2]), fs(&[1])]).is_err());
    }

    #[test]
    fn finite_unions_examples() {
        let b = Budget::default();
        assert_eq!(
            finite_unions(&fbs(&[&[0], &[2]]), &b).unwrap(),
            vec![fs(&[0]), fs(&[0, 2]), fs(&[2])]
        );
        assert_eq!(
            finite_unions(&fbs(&[&[0, 1]]), &b).unwrap(),
            vec![fs(&[0, 1])]
        );
        for k in 0..6 {
            let a = FinBlockSeq::new((0..k).map(|i| fs(&[2 * i])).collect()).unwrap();
            assert_eq!(finite_unions(&a, &b).unwrap().len(), (1 << k) - 1);
        }
    }

    #[test]
    fn fin_dominates_examples() {
        assert!(fin_dominates(
            &fbs(&[&[0, 1], &[2]]),
            &fbs(&[&[0], &[1], &[2]])
        ));
        assert!(!fin_dominates(&fbs(&[&[0, 2]]), &fbs(&[&[0], &[1]])));
        let a = fbs(&[&[1, 3], &[4]]);
        assert!(fin_dominates(&a, &a));
        assert!(!fin_dominates(&fbs(&[&[0]]), &fbs(&[&[0, 1]])));
    }

    #[test]
    fn supp_seq_examples() {
        let f = Field::gf2();
        let x = BlockSeq::new(
            f,
            vec![
                Vector::ints(f, &[(0, 1), (1, 1)]).unwrap(),
                Vector::basis(f, 2),
            ],
        )
        .unwrap();
        assert_eq!(supp_seq(&x), fbs(&[&[0, 1], &[2]]));
        assert_eq!(supp_seq(&BlockSeq::unit(f, 5..6)), fbs(&[&[5]]));
        let x = BlockSeq::new(f, vec![Vector::ints(f, &[(0, 1), (1, 1)]).unwrap()]).unwrap();
        assert!(fin_dominates(
            &supp_seq(&x),
            &supp_seq(&BlockSeq::unit(f, 0..2))
        ));
    }

    #[test]
    fn min_max_examples() {
        assert_eq!(
            min_max_trace(&fbs(&[&[0, 1], &[3, 5]])),
            (vec![0, 3], vec![1, 5])
        );
        assert_eq!(min_max_trace(&fbs(&[&[4]])), (vec![4], vec![4]));
        assert_eq!(min_max_trace(&FinBlockSeq::empty()), (vec![], vec![]));
    }

    #[test]
    fn hindman_examples() {
        let b = Budget::default();
        let got = hindman_search(&Coloring::constant(3, 1).unwrap(), 2, &b).unwrap();
        assert_eq!(got, Some((fbs(&[&[0], &[1]]), 0)));
        let got = hindman_search(&Coloring::min_parity(5, 1).unwrap(), 2, &b).unwrap();
        assert_eq!(got, Some((fbs(&[&[0], &[2]]), 0)));
        let got = hindman_search(&Coloring::card_parity(5, 1).unwrap(), 2, &b).unwrap();
        assert_eq!(got, Some((fbs(&[&[0, 1], &[2, 3]]), 0)));
    }

    #[test]
    fn milliken_examples() {
        let b = Budget::default();
        let adj = Coloring::adjacency(4, 2).unwrap();
        assert_eq!(milliken_color(&adj, &fbs(&[&[0], &[2]])).unwrap(), Some(0));
        assert_eq!(milliken_color(&adj, &fbs(&[&[0], &[1]])).unwrap(), Some(1));
        let got = milliken_search(&Coloring::constant(4, 2).unwrap(), 2, &b).unwrap();
        assert_eq!(got, Some((fbs(&[&[0], &[1]]), 0)));
    }

    #[test]
    fn tuple_tables_count_block_tuples() {
        // block k-tuples of nonempty index sets over L indices
        fn brute(l: usize, k: usize) -> usize {
            let subsets: Vec<u64> = (1u64..(1 << l)).collect();
            fn rec(subsets: &[u64], k: usize, after: Option<u64>) -> usize {
                if k == 0 {
                    return 1;
                }
                subsets
                    .iter()
                    .filter(|&&m| after.is_none_or(|p| 63 - p.leading_zeros() < m.trailing_zeros()))
                    .map(|&m| rec(subsets, k - 1, Some(m)))
                    .sum()
            }
            rec(&subsets, k, None)
        }
        for l in 1..6 {
            for k in 1..=l {
                let t = TupleTable::new(l, k);
                assert_eq!(
                    t.by_last.iter().map(Vec::len).sum::<usize>(),
                    brute(l, k),
                    "l={l} k={k}"
                );
            }
        }
    }

    #[test]
    fn table_coloring_roundtrip() {
        let json = serde_json::json!({"0": 1, "1": 0, "0,1": 1});
        let c = Coloring::from_json(2, 1, &json).unwrap();
        assert_eq!(c.color(&[fs(&[0, 1])]).unwrap(), 1);
        assert!(c.color(&[fs(&[2])]).is_err());
        assert_eq!(hindman_search(&c, 2, &Budget::default()).unwrap(), None);
    }
}
