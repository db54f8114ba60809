//! Finite posets: Hasse diagrams, intervals, gradedness and thinness,
//! Möbius functions, EL-labellings, linear extensions and DOT export.
//!
//! Elements are the indices `0..n`.  A poset is stored through its cover
//! relation together with a precomputed reachability table, so `leq` is a
//! constant-time bit lookup.

use std::collections::{BTreeMap, HashMap};

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

/// Errors raised by poset constructions and structural queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("element {element} is out of range for a poset with {len} elements")]
    OutOfRange { element: usize, len: usize },
    #[error("the relation contains a cycle through {0:?}")]
    Cycle(Vec<usize>),
    #[error("cover ({0},{1}) is implied by other covers")]
    RedundantCover(usize, usize),
    #[error("poset is not graded: interval [{x},{y}] has maximal chains of lengths {shortest} and {longest}")]
    NotGraded {
        x: usize,
        y: usize,
        shortest: usize,
        longest: usize,
    },
    #[error("poset is not bounded")]
    NotBounded,
    #[error("Hasse edge ({0},{1}) carries no label")]
    MissingLabel(usize, usize),
    #[error("linear extensions are only counted for posets with at most 64 elements (got {0})")]
    TooLarge(usize),
    #[error("element {element} cannot be realized as a staircase corner")]
    NotRealizable { element: usize },
}

/// A finite partial order on `0..n`.
#[derive(Debug, Clone)]
pub struct FinitePoset {
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    /// `above[x]` holds every `y` with `x ≤ y`.
    above: Vec<FixedBitSet>,
    /// A linear extension (smaller elements first).
    topo: Vec<usize>,
}

/// Labels attached to Hasse edges `(smaller, larger)`.
pub type EdgeLabelling<L> = BTreeMap<(usize, usize), L>;

impl FinitePoset {
    /// Build a poset from its covering pairs `(x, y)` meaning `x ⋖ y`.
    ///
    /// Fails if the relation has a cycle or if some pair is implied by the
    /// others (the input must already be a transitive reduction).
    pub fn from_covers(
        n: usize,
        covers: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, PosetError> {
        let pairs: Vec<(usize, usize)> = covers.into_iter().collect();
        let poset = Self::transitive_reduce(n, pairs.iter().copied())?;
        let mut sorted = pairs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&(x, y)) = sorted.iter().find(|&&(x, y)| !poset.up[x].contains(&y)) {
            return Err(PosetError::RedundantCover(x, y));
        }
        Ok(poset)
    }

    /// Build the poset generated by an acyclic relation, keeping only its
    /// transitive reduction as covers.
    pub fn transitive_reduce(
        n: usize,
        relation: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, PosetError> {
        let mut succ = vec![Vec::new(); n];
        for (x, y) in relation {
            for e in [x, y] {
                if e >= n {
                    return Err(PosetError::OutOfRange { element: e, len: n });
                }
            }
            if x == y {
                return Err(PosetError::Cycle(vec![x]));
            }
            succ[x].push(y);
        }
        let topo = topological_order(&succ)?;
        // Reachability, filled in reverse topological order.
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &x in topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &y in &succ[x] {
                set.union_with(&above[y]);
            }
            above[x] = set;
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for x in 0..n {
            let mut strict = above[x].clone();
            strict.set(x, false);
            let mut implied = FixedBitSet::with_capacity(n);
            for z in strict.ones() {
                let mut s = above[z].clone();
                s.set(z, false);
                implied.union_with(&s);
            }
            for y in strict.ones() {
                if !implied.contains(y) {
                    up[x].push(y);
                    down[y].push(x);
                }
            }
        }
        Ok(Self {
            up,
            down,
            above,
            topo,
        })
    }

    /// Build a poset from an order predicate `leq(x, y)`.
    pub fn from_order(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && leq(x, y))
            .collect();
        Self::transitive_reduce(n, pairs)
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// All covering pairs `(x, y)` with `x ⋖ y`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = (0..self.len())
            .flat_map(|x| self.up[x].iter().map(move |&y| (x, y)))
            .collect();
        out.sort_unstable();
        out
    }

    /// A linear extension of the order.
    pub fn linear_extension(&self) -> &[usize] {
        &self.topo
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    /// The unique minimal element, if there is exactly one.
    pub fn bottom(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    /// The unique maximal element, if there is exactly one.
    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_some() && self.top().is_some()
    }

    /// Elements of the closed interval `[x, y]`, in linear-extension order.
    pub fn interval(&self, x: usize, y: usize) -> Vec<usize> {
        self.topo
            .iter()
            .copied()
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect()
    }

    /// Shortest and longest maximal-chain lengths from `x` to every element
    /// above it (`None` for elements not above `x`).
    fn chain_lengths_from(&self, x: usize) -> Vec<Option<(usize, usize)>> {
        let mut out = vec![None; self.len()];
        out[x] = Some((0, 0));
        for &z in &self.topo {
            let Some((lo, hi)) = out[z] else { continue };
            for &w in &self.up[z] {
                out[w] = Some(match out[w] {
                    None => (lo + 1, hi + 1),
                    Some((a, b)) => (a.min(lo + 1), b.max(hi + 1)),
                });
            }
        }
        out
    }

    /// Check that in every interval all maximal chains have the same length;
    /// on failure the error names an offending interval.
    pub fn check_graded(&self) -> Result<(), PosetError> {
        for x in 0..self.len() {
            for (y, l) in self.chain_lengths_from(x).into_iter().enumerate() {
                if let Some((shortest, longest)) = l {
                    if shortest != longest {
                        return Err(PosetError::NotGraded {
                            x,
                            y,
                            shortest,
                            longest,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_graded(&self) -> bool {
        self.check_graded().is_ok()
    }

    /// Rank function of a bounded graded poset (rank of the bottom is 0).
    pub fn rank(&self) -> Result<Vec<usize>, PosetError> {
        let bottom = self.bottom().ok_or(PosetError::NotBounded)?;
        self.top().ok_or(PosetError::NotBounded)?;
        self.check_graded()?;
        Ok(self
            .chain_lengths_from(bottom)
            .into_iter()
            .map(|l| l.expect("every element lies above the bottom").0)
            .collect())
    }

    /// Thinness report over all intervals of length two.
    pub fn thinness(&self) -> Result<Thinness, PosetError> {
        self.check_graded()?;
        let mut report = Thinness {
            thin: true,
            subthin: true,
            thin_witness: None,
            subthin_witness: None,
        };
        for x in 0..self.len() {
            for (y, l) in self.chain_lengths_from(x).into_iter().enumerate() {
                if l != Some((2, 2)) {
                    continue;
                }
                let middle = self.interval(x, y).len() - 2;
                let witness = IntervalWitness { x, y, middle };
                if middle != 2 && report.thin {
                    report.thin = false;
                    report.thin_witness = Some(witness);
                }
                if middle > 2 && report.subthin {
                    report.subthin = false;
                    report.subthin_witness = Some(witness);
                }
            }
        }
        Ok(report)
    }

    /// Möbius values `μ(x, ·)` for every element (zero off the up-set of `x`).
    pub fn mobius_from(&self, x: usize) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        let mut seen: Vec<usize> = Vec::new();
        for &z in &self.topo {
            if !self.leq(x, z) {
                continue;
            }
            mu[z] = if z == x {
                1
            } else {
                -seen.iter().filter(|&&w| self.leq(w, z)).map(|&w| mu[w]).sum::<i64>()
            };
            seen.push(z);
        }
        mu
    }

    /// The Möbius function `μ(x, y)`, zero unless `x ≤ y`.
    pub fn mobius(&self, x: usize, y: usize) -> i64 {
        if !self.leq(x, y) {
            return 0;
        }
        self.mobius_from(x)[y]
    }

    /// Full Möbius table `μ[x][y]`.
    pub fn mobius_table(&self) -> Vec<Vec<i64>> {
        (0..self.len()).map(|x| self.mobius_from(x)).collect()
    }

    /// Möbius value through the chain count `Σ_k (−1)^k #{x = x_0 < … < x_k = y}`
    /// (the reduced Euler characteristic of the order complex of `(x, y)`).
    ///
    /// Chains are counted by length with a dynamic program over the interval,
    /// so the computation stays polynomial even for long intervals.
    pub fn mobius_via_chains(&self, x: usize, y: usize) -> i128 {
        if !self.leq(x, y) {
            return 0;
        }
        if x == y {
            return 1;
        }
        let elems = self.interval(x, y);
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        let n = elems.len();
        // chains[k][z] = number of chains x = x_0 < … < x_k = z.
        let mut current = vec![0i128; n];
        current[pos[&x]] = 1;
        let last = pos[&y];
        let mut total = 0i128;
        for k in 1..n {
            let mut next = vec![0i128; n];
            for (a, &za) in elems.iter().enumerate() {
                if current[a] == 0 {
                    continue;
                }
                for (b, &zb) in elems.iter().enumerate().skip(a + 1) {
                    if self.lt(za, zb) {
                        next[b] += current[a];
                    }
                }
            }
            let sign = if k % 2 == 0 { 1 } else { -1 };
            total += sign * next[last];
            if next.iter().all(|&c| c == 0) {
                break;
            }
            current = next;
        }
        total
    }

    /// Check whether `labels` is an EL-labelling: every interval has exactly
    /// one maximal chain with strictly increasing labels, and that chain is
    /// strictly lexicographically smallest among all maximal chains.
    pub fn el_report<L: Ord + Clone>(&self, labels: &EdgeLabelling<L>) -> Result<ElReport, PosetError> {
        for (x, y) in self.covers() {
            if !labels.contains_key(&(x, y)) {
                return Err(PosetError::MissingLabel(x, y));
            }
        }
        for x in 0..self.len() {
            let increasing = self.increasing_chain_counts(x, labels);
            for &y in &self.topo {
                if y == x || !self.leq(x, y) {
                    continue;
                }
                let inc: u128 = increasing[y].values().sum();
                let (lexmin_count, lexmin_increasing) = self.lexmin_chain(x, y, labels);
                if inc != 1 || lexmin_count != 1 || !lexmin_increasing {
                    return Ok(ElReport {
                        el: false,
                        witness: Some(ElWitness {
                            x,
                            y,
                            increasing_chains: inc,
                            lexmin_chains: lexmin_count,
                            lexmin_increasing,
                        }),
                    });
                }
            }
        }
        Ok(ElReport {
            el: true,
            witness: None,
        })
    }

    pub fn is_el_labelling<L: Ord + Clone>(&self, labels: &EdgeLabelling<L>) -> Result<bool, PosetError> {
        self.el_report(labels).map(|r| r.el)
    }

    /// For every `z ≥ x`: number of label-increasing chains from `x` to `z`,
    /// keyed by the last label used.
    fn increasing_chain_counts<L: Ord + Clone>(
        &self,
        x: usize,
        labels: &EdgeLabelling<L>,
    ) -> Vec<BTreeMap<Option<L>, u128>> {
        let mut states: Vec<BTreeMap<Option<L>, u128>> = vec![BTreeMap::new(); self.len()];
        states[x].insert(None, 1);
        for &z in &self.topo {
            if states[z].is_empty() {
                continue;
            }
            let here = states[z].clone();
            for &w in &self.up[z] {
                let l = &labels[&(z, w)];
                let add: u128 = here
                    .iter()
                    .filter(|(last, _)| last.as_ref().is_none_or(|p| p < l))
                    .map(|(_, c)| *c)
                    .sum();
                if add > 0 {
                    *states[w].entry(Some(l.clone())).or_insert(0) += add;
                }
            }
        }
        states
    }

    /// Greedy lexicographically smallest maximal chain of `[x, y]`; returns
    /// the number of maximal chains sharing its label word and whether that
    /// word is strictly increasing.
    fn lexmin_chain<L: Ord + Clone>(&self, x: usize, y: usize, labels: &EdgeLabelling<L>) -> (u128, bool) {
        let mut frontier: BTreeMap<usize, u128> = BTreeMap::from([(x, 1)]);
        let mut last: Option<L> = None;
        let mut increasing = true;
        loop {
            if let Some(&c) = frontier.get(&y) {
                return (c, increasing);
            }
            let best = frontier
                .keys()
                .flat_map(|&z| self.up[z].iter().map(move |&w| (z, w)))
                .filter(|&(_, w)| self.leq(w, y))
                .map(|e| labels[&e].clone())
                .min()
                .expect("an interval below y is never stuck");
            let mut next: BTreeMap<usize, u128> = BTreeMap::new();
            for (&z, &c) in &frontier {
                for &w in &self.up[z] {
                    if self.leq(w, y) && labels[&(z, w)] == best {
                        *next.entry(w).or_insert(0) += c;
                    }
                }
            }
            if last.as_ref().is_some_and(|p| *p >= best) {
                increasing = false;
            }
            last = Some(best);
            frontier = next;
        }
    }

    /// Number of linear extensions (at most 64 elements).
    pub fn count_linear_extensions(&self) -> Result<u128, PosetError> {
        let n = self.len();
        if n > 64 {
            return Err(PosetError::TooLarge(n));
        }
        let below: Vec<u64> = (0..n)
            .map(|x| {
                self.down[x].iter().fold(0u64, |acc, &w| acc | (1u64 << w))
            })
            .collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut memo: HashMap<u64, u128> = HashMap::new();
        fn go(done: u64, full: u64, below: &[u64], memo: &mut HashMap<u64, u128>) -> u128 {
            if done == full {
                return 1;
            }
            if let Some(&v) = memo.get(&done) {
                return v;
            }
            let mut total = 0;
            for (x, &b) in below.iter().enumerate() {
                if done & (1 << x) == 0 && b & !done == 0 {
                    total += go(done | (1 << x), full, below, memo);
                }
            }
            memo.insert(done, total);
            total
        }
        Ok(go(0, full, &below, &mut memo))
    }

    /// Graphviz rendering of the Hasse diagram.
    ///
    /// Nodes are emitted sorted by name and edges (oriented small → large)
    /// sorted by their endpoint names, so the output is byte-stable.
    pub fn to_dot(&self, names: &[String], options: &DotOptions) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        for &x in &order {
            let fill = if options.highlight.contains(&x) {
                format!(", style=filled, fillcolor=\"{}\"", options.fill_color)
            } else {
                String::new()
            };
            out.push_str(&format!("  \"{}\" [label=\"{}\"{}];\n", names[x], names[x], fill));
        }
        let mut edges: Vec<(usize, usize)> = self.covers();
        edges.sort_by(|a, b| (&names[a.0], &names[a.1]).cmp(&(&names[b.0], &names[b.1])));
        for (x, y) in edges {
            let label = options
                .edge_labels
                .get(&(x, y))
                .map(|l| format!(" [label=\"{l}\"]"))
                .unwrap_or_default();
            out.push_str(&format!("  \"{}\" -> \"{}\"{};\n", names[x], names[y], label));
        }
        out.push_str("}\n");
        out
    }
}

/// Rendering switches for [`FinitePoset::to_dot`].
#[derive(Debug, Clone)]
pub struct DotOptions {
    pub edge_labels: BTreeMap<(usize, usize), String>,
    pub highlight: Vec<usize>,
    pub fill_color: String,
}

impl Default for DotOptions {
    fn default() -> Self {
        Self {
            edge_labels: BTreeMap::new(),
            highlight: Vec::new(),
            fill_color: "orange".to_string(),
        }
    }
}

/// An interval `[x, y]` of length two with `middle` interior elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntervalWitness {
    pub x: usize,
    pub y: usize,
    pub middle: usize,
}

/// Result of [`FinitePoset::thinness`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Thinness {
    pub thin: bool,
    pub subthin: bool,
    pub thin_witness: Option<IntervalWitness>,
    pub subthin_witness: Option<IntervalWitness>,
}

/// First interval violating the EL conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ElWitness {
    pub x: usize,
    pub y: usize,
    pub increasing_chains: u128,
    pub lexmin_chains: u128,
    pub lexmin_increasing: bool,
}

/// Result of [`FinitePoset::el_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ElReport {
    pub el: bool,
    pub witness: Option<ElWitness>,
}

fn topological_order(succ: &[Vec<usize>]) -> Result<Vec<usize>, PosetError> {
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for ys in succ {
        for &y in ys {
            indeg[y] += 1;
        }
    }
    let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = ready.pop_first() {
        order.push(x);
        for &y in &succ[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                ready.insert(y);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // Every leftover vertex has a leftover predecessor; walk backwards
    // until a vertex repeats to extract a cycle.
    let leftover: Vec<bool> = (0..n).map(|x| indeg[x] > 0).collect();
    let mut pred = vec![None; n];
    for x in 0..n {
        for &y in &succ[x] {
            if leftover[x] && leftover[y] {
                pred[y] = Some(x);
            }
        }
    }
    let start = (0..n).find(|&x| leftover[x]).expect("a leftover vertex exists");
    let mut seen = vec![false; n];
    let mut walk = vec![start];
    let mut cur = start;
    seen[cur] = true;
    loop {
        cur = pred[cur].expect("leftover vertices have leftover predecessors");
        if seen[cur] {
            let from = walk.iter().position(|&v| v == cur).unwrap();
            let mut cycle = walk[from..].to_vec();
            cycle.reverse();
            return Err(PosetError::Cycle(cycle));
        }
        seen[cur] = true;
        walk.push(cur);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinitePoset {
        FinitePoset::from_covers(n, (1..n).map(|k| (k - 1, k))).unwrap()
    }

    /// Boolean lattice on `k` atoms, elements are subsets as bitmasks.
    fn boolean(k: usize) -> FinitePoset {
        FinitePoset::from_order(1 << k, |a, b| a & b == a).unwrap()
    }

    #[test]
    fn transitive_reduction_examples() {
        let p = FinitePoset::transitive_reduce(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        let a = FinitePoset::transitive_reduce(3, []).unwrap();
        assert!(a.covers().is_empty());
        let full = FinitePoset::from_order(4, |a, b| a <= b).unwrap();
        assert_eq!(full.covers().len(), 3);
        assert!(matches!(
            FinitePoset::transitive_reduce(3, [(0, 1), (1, 2), (2, 0)]),
            Err(PosetError::Cycle(c)) if c.len() == 3
        ));
        assert_eq!(
            FinitePoset::from_covers(3, [(0, 1), (1, 2), (0, 2)]).unwrap_err(),
            PosetError::RedundantCover(0, 2)
        );
    }

    #[test]
    fn reduction_preserves_reachability() {
        // Divisibility on 1..=24.
        let n = 24;
        let p = FinitePoset::from_order(n, |a, b| (b + 1) % (a + 1) == 0).unwrap();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(p.leq(a, b), (b + 1) % (a + 1) == 0);
            }
        }
    }

    #[test]
    fn grading_and_rank() {
        let b2 = boolean(2);
        assert!(b2.is_bounded());
        assert!(b2.is_graded());
        assert_eq!(b2.rank().unwrap()[3], 2);
        let single = chain(1);
        assert!(single.is_bounded() && single.is_graded());
        assert_eq!(single.rank().unwrap(), vec![0]);
        // Pentagon: 0 < 1 < 2 < 4 and 0 < 3 < 4.
        let pentagon = FinitePoset::from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert!(pentagon.is_bounded());
        assert!(matches!(
            pentagon.check_graded(),
            Err(PosetError::NotGraded { x: 0, y: 4, shortest: 2, longest: 3 })
        ));
        assert!(pentagon.rank().is_err());
    }

    #[test]
    fn thinness() {
        let b2 = boolean(2);
        let t = b2.thinness().unwrap();
        assert!(t.thin && t.subthin);
        let c3 = chain(3);
        let t = c3.thinness().unwrap();
        assert!(!t.thin && t.subthin);
        assert_eq!(t.thin_witness.unwrap().middle, 1);
        // 0 < {1,2,3} < 4.
        let fat = FinitePoset::from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        let t = fat.thinness().unwrap();
        assert!(!t.subthin);
        assert_eq!(t.subthin_witness.unwrap().middle, 3);
    }

    #[test]
    fn mobius_examples() {
        let c3 = chain(3);
        assert_eq!(c3.mobius(0, 2), 0);
        assert_eq!(c3.mobius(0, 1), -1);
        assert_eq!(c3.mobius_via_chains(0, 2), 0);
        assert_eq!(c3.mobius_via_chains(0, 1), -1);
        let b2 = boolean(2);
        assert_eq!(b2.mobius(0, 3), 1);
        assert_eq!(b2.mobius_via_chains(0, 3), 1);
        assert_eq!(b2.mobius(1, 2), 0);
        let b3 = boolean(3);
        assert_eq!(b3.mobius(0, 7), -1);
    }

    #[test]
    fn mobius_agrees_with_chains_and_inverts_zeta() {
        for p in [boolean(3), boolean(4), FinitePoset::from_order(30, |a, b| (b + 1) % (a + 1) == 0).unwrap()] {
            for x in 0..p.len() {
                let mu = p.mobius_from(x);
                for y in 0..p.len() {
                    assert_eq!(i128::from(mu[y]), p.mobius_via_chains(x, y));
                    if p.lt(x, y) {
                        let s: i64 = p.interval(x, y).iter().map(|&z| mu[z]).sum();
                        assert_eq!(s, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn el_labellings() {
        let c3 = chain(3);
        let inc: EdgeLabelling<u32> = BTreeMap::from([((0, 1), 1), ((1, 2), 2)]);
        assert!(c3.is_el_labelling(&inc).unwrap());
        let dec: EdgeLabelling<u32> = BTreeMap::from([((0, 1), 2), ((1, 2), 1)]);
        assert!(!c3.is_el_labelling(&dec).unwrap());
        // Diamond 0 < {1,2} < 3 with both chains increasing.
        let d = FinitePoset::from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let two_inc: EdgeLabelling<u32> =
            BTreeMap::from([((0, 1), 1), ((1, 3), 2), ((0, 2), 1), ((2, 3), 3)]);
        let r = d.el_report(&two_inc).unwrap();
        assert!(!r.el);
        let w = r.witness.unwrap();
        assert_eq!((w.x, w.y, w.increasing_chains), (0, 3, 2));
        let good: EdgeLabelling<u32> =
            BTreeMap::from([((0, 1), 1), ((1, 3), 2), ((0, 2), 2), ((2, 3), 1)]);
        assert!(d.is_el_labelling(&good).unwrap());
        assert_eq!(
            d.el_report(&BTreeMap::<(usize, usize), u32>::new()).unwrap_err(),
            PosetError::MissingLabel(0, 1)
        );
    }

    #[test]
    fn linear_extensions() {
        assert_eq!(chain(3).count_linear_extensions().unwrap(), 1);
        let anti = FinitePoset::transitive_reduce(2, []).unwrap();
        assert_eq!(anti.count_linear_extensions().unwrap(), 2);
        assert_eq!(boolean(2).count_linear_extensions().unwrap(), 2);
        assert_eq!(boolean(3).count_linear_extensions().unwrap(), 48);
    }

    #[test]
    fn dot_is_sorted_and_stable() {
        let p = FinitePoset::from_covers(3, [(2, 0), (2, 1)]).unwrap();
        let names = vec!["b".to_string(), "c".to_string(), "a".to_string()];
        let mut opts = DotOptions::default();
        opts.edge_labels.insert((2, 0), "(1,2)".into());
        opts.highlight.push(1);
        let dot = p.to_dot(&names, &opts);
        assert_eq!(
            dot,
            "digraph hasse {\n  rankdir=BT;\n  \"a\" [label=\"a\"];\n  \"b\" [label=\"b\"];\n  \
             \"c\" [label=\"c\", style=filled, fillcolor=\"orange\"];\n  \"a\" -> \"b\" [label=\"(1,2)\"];\n  \
             \"a\" -> \"c\";\n}\n"
        );
    }
}
