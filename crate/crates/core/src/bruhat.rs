//! The Bruhat order on the orbit of a composition under permutations of
//! its entries, its covering edges with transposition labels, and the
//! parabolic maps between the orbit of `λ + δ` and the orbit of `λ`.
//!
//! The bottom of an orbit is the weakly decreasing arrangement `λ_+`, the
//! top the weakly increasing arrangement `λ_−`; moving a larger entry to the
//! right goes up.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::ControlFlow;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poset::{DotOptions, EdgeLabelling, FinitePoset, PosetError};
use crate::shapes::{distinct_permutations, Composition, Partition};

/// Largest ambient length for which orbits are materialized.
pub const MAX_ORBIT_LENGTH: usize = 8;

/// Errors raised by orbit constructions and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BruhatError {
    #[error("partition {lambda} has more than {m} parts")]
    TooManyParts { lambda: Partition, m: usize },
    #[error("orbits are materialized only up to length {MAX_ORBIT_LENGTH} (requested {0})")]
    TooLarge(usize),
    #[error("composition {0} is not in the orbit")]
    NotInOrbit(Composition),
    #[error("transposition ({0},{1}) needs 1 ≤ i < j")]
    BadTransposition(usize, usize),
}

/// A transposition `(i j)` of 1-based positions with `i < j`.
///
/// The derived `Ord` is plain lexicographic order on `(i, j)`; the order used
/// for EL-labellings is [`el_label_order`] (see [`ElLabel`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Transposition {
    pub i: usize,
    pub j: usize,
}

impl Transposition {
    pub fn new(i: usize, j: usize) -> Result<Self, BruhatError> {
        if i == 0 || i >= j {
            return Err(BruhatError::BadTransposition(i, j));
        }
        Ok(Self { i, j })
    }

    /// Apply to a composition (swap the entries at positions `i` and `j`).
    pub fn apply(&self, nu: &Composition) -> Composition {
        nu.swapped(self.i, self.j)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Total order on transpositions used for EL-labellings:
/// `(i l) ◁ (j k)` iff `l < k`, or `l = k` and `i > j`.
pub fn el_label_order(a: &Transposition, b: &Transposition) -> Ordering {
    a.j.cmp(&b.j).then(b.i.cmp(&a.i))
}

/// A transposition ordered by [`el_label_order`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElLabel(pub Transposition);

impl PartialOrd for ElLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        el_label_order(&self.0, &other.0)
    }
}

/// Re-key a transposition labelling by the EL label order.
pub fn el_labels(labels: &EdgeLabelling<Transposition>) -> EdgeLabelling<ElLabel> {
    labels.iter().map(|(&e, &t)| (e, ElLabel(t))).collect()
}

/// Visit the reflection orders of `S_n`: for every reduced word
/// `s_{a_1} ⋯ s_{a_N}` of the longest permutation, the sequence of
/// transpositions `w_{k-1} s_{a_k} w_{k-1}^{-1}` with `w_k = s_{a_1} ⋯ s_{a_k}`.
/// Stops as soon as `visit` breaks and returns its result.
pub fn for_each_reflection_order(
    n: usize,
    mut visit: impl FnMut(&[Transposition]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn go(
        w: &mut Vec<usize>,
        order: &mut Vec<Transposition>,
        total: usize,
        visit: &mut dyn FnMut(&[Transposition]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if order.len() == total {
            return visit(order);
        }
        for a in 0..w.len().saturating_sub(1) {
            if w[a] < w[a + 1] {
                let (x, y) = (w[a].min(w[a + 1]), w[a].max(w[a + 1]));
                order.push(Transposition { i: x, j: y });
                w.swap(a, a + 1);
                let flow = go(w, order, total, visit);
                w.swap(a, a + 1);
                order.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
    let mut w: Vec<usize> = (1..=n).collect();
    go(&mut w, &mut Vec::new(), n * n.saturating_sub(1) / 2, &mut visit)
}

/// Default number of reflection orders tried by [`search_el_reflection_order`].
pub const EL_SEARCH_CAP: usize = 200_000;

/// Outcome of a search for an EL-labelling among reflection orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ElSearch {
    /// Labelling each edge by its transposition ranked in this order is EL.
    Found(Vec<Transposition>),
    /// No reflection order of `S_n` induces an EL-labelling.
    Exhausted,
    /// The cap was reached first.
    Capped,
}

impl ElSearch {
    /// `Some(true)` with a certificate, `Some(false)` if exhausted,
    /// `None` if inconclusive.
    pub fn verdict(&self) -> Option<bool> {
        match self {
            ElSearch::Found(_) => Some(true),
            ElSearch::Exhausted => Some(false),
            ElSearch::Capped => None,
        }
    }
}

/// Look for a reflection order of `S_n` under which the transposition
/// labels (on positions `1..=n`) of `poset`'s Hasse edges form an
/// EL-labelling.  Every Hasse edge must carry a label.
pub fn search_el_reflection_order(
    poset: &FinitePoset,
    labels: &EdgeLabelling<Transposition>,
    n: usize,
    cap: usize,
) -> Result<ElSearch, PosetError> {
    let mut tried = 0usize;
    let mut found = None;
    let mut error = None;
    let flow = for_each_reflection_order(n, |order| {
        if tried == cap {
            return ControlFlow::Break(());
        }
        tried += 1;
        let rank: HashMap<Transposition, usize> = order.iter().enumerate().map(|(r, &t)| (t, r)).collect();
        let ranked: EdgeLabelling<usize> = labels.iter().map(|(&e, t)| (e, rank[t])).collect();
        match poset.el_report(&ranked) {
            Ok(r) if r.el => {
                found = Some(order.to_vec());
                ControlFlow::Break(())
            }
            Ok(_) => ControlFlow::Continue(()),
            Err(e) => {
                error = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    Ok(match (found, flow) {
        (Some(order), _) => ElSearch::Found(order),
        (None, ControlFlow::Continue(())) => ElSearch::Exhausted,
        (None, ControlFlow::Break(())) => ElSearch::Capped,
    })
}

/// Length `#{i < j : ν_i < ν_j}`, the rank in the Bruhat order.
pub fn length(nu: &[u32]) -> usize {
    (0..nu.len())
        .flat_map(|i| (i + 1..nu.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| nu[i] < nu[j])
        .count()
}

/// `true` when `ν ⋖ (i j)ν`: `ν_i > ν_j` and no intermediate entry lies in
/// the closed interval `[ν_j, ν_i]`.
pub fn is_bruhat_cover(nu: &[u32], t: Transposition) -> bool {
    let (a, b) = (nu[t.i - 1], nu[t.j - 1]);
    a > b && nu[t.i..t.j - 1].iter().all(|&c| c < b || c > a)
}

/// Prefix-count criterion for the Bruhat order on one orbit: `ν ≤ μ` iff
/// for every prefix `p` and threshold `t`,
/// `#{k ≤ p : ν_k ≥ t} ≥ #{k ≤ p : μ_k ≥ t}`.
///
/// Both arguments must be rearrangements of each other.
pub fn bruhat_leq_criterion(nu: &[u32], mu: &[u32]) -> bool {
    debug_assert_eq!(nu.len(), mu.len());
    let mut thresholds: Vec<u32> = nu.iter().copied().filter(|&t| t > 0).collect();
    thresholds.sort_unstable();
    thresholds.dedup();
    thresholds.iter().all(|&t| {
        let (mut cn, mut cm) = (0usize, 0usize);
        nu.iter().zip(mu).all(|(&a, &b)| {
            cn += usize::from(a >= t);
            cm += usize::from(b >= t);
            cn >= cm
        })
    })
}

/// The Hasse diagram of an orbit with its transposition labelling.
#[derive(Debug, Clone)]
pub struct BruhatGraph {
    pub poset: FinitePoset,
    pub labels: EdgeLabelling<Transposition>,
}

/// All distinct rearrangements of `λ` padded with zeros to length `m`.
#[derive(Debug, Clone)]
pub struct Orbit {
    lambda: Partition,
    m: usize,
    elements: Vec<Composition>,
    index: HashMap<Composition, usize>,
    graph: OnceLock<BruhatGraph>,
}

impl Orbit {
    /// Materialize the orbit; elements are listed in decreasing
    /// lexicographic order, so `λ_+` comes first and `λ_−` last.
    pub fn new(lambda: &Partition, m: usize) -> Result<Self, BruhatError> {
        if lambda.length() > m {
            return Err(BruhatError::TooManyParts {
                lambda: lambda.clone(),
                m,
            });
        }
        if m > MAX_ORBIT_LENGTH {
            return Err(BruhatError::TooLarge(m));
        }
        let mut elements: Vec<Composition> = distinct_permutations(lambda.padded(m).as_slice())
            .into_iter()
            .map(Composition::new)
            .collect();
        elements.reverse();
        let index = elements.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();
        Ok(Self {
            lambda: lambda.clone(),
            m,
            elements,
            index,
            graph: OnceLock::new(),
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn elements(&self) -> &[Composition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, nu: &Composition) -> Option<usize> {
        self.index.get(nu).copied()
    }

    /// Covering edges `ν ⋖ (i j)ν` with their transposition labels.
    pub fn bruhat_graph(&self) -> &BruhatGraph {
        self.graph.get_or_init(|| {
            let mut labels = BTreeMap::new();
            for (a, nu) in self.elements.iter().enumerate() {
                for i in 1..=self.m {
                    for j in i + 1..=self.m {
                        let t = Transposition { i, j };
                        if is_bruhat_cover(nu, t) {
                            labels.insert((a, self.index[&t.apply(nu)]), t);
                        }
                    }
                }
            }
            let poset = FinitePoset::from_covers(self.len(), labels.keys().copied())
                .expect("Bruhat covers form a transitive reduction");
            BruhatGraph { poset, labels }
        })
    }

    /// Bruhat comparison through reachability in the Hasse diagram.
    pub fn bruhat_leq(&self, nu: &Composition, mu: &Composition) -> Result<bool, BruhatError> {
        let a = self.index_of(nu).ok_or_else(|| BruhatError::NotInOrbit(nu.clone()))?;
        let b = self.index_of(mu).ok_or_else(|| BruhatError::NotInOrbit(mu.clone()))?;
        Ok(self.bruhat_graph().poset.leq(a, b))
    }

    /// JSON listing `[{"element":[...],"rank":r}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.elements
                .iter()
                .map(|nu| serde_json::json!({"element": nu, "rank": length(nu)}))
                .collect(),
        )
    }

    /// Graphviz rendering with transposition edge labels.
    pub fn to_dot(&self) -> String {
        self.to_dot_highlighted(&[])
    }

    /// [`Orbit::to_dot`] with the listed elements filled.
    pub fn to_dot_highlighted(&self, highlight: &[usize]) -> String {
        let g = self.bruhat_graph();
        let names: Vec<String> = self.elements.iter().map(|c| c.to_string()).collect();
        let options = DotOptions {
            edge_labels: g.labels.iter().map(|(&e, t)| (e, t.to_string())).collect(),
            highlight: highlight.to_vec(),
            ..DotOptions::default()
        };
        g.poset.to_dot(&names, &options)
    }
}

/// Parabolic maps between the orbit of `λ + δ` and the orbit of `λ`.
///
/// Here `λ` is padded to `n` entries, `δ = (n−1, …, 1, 0)`, and both orbits
/// live in `m ≥ n` positions (the extra `m − n` entries are zeros).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parabolic {
    lambda: Vec<u32>,
    lifted: Vec<u32>,
    m: usize,
}

impl Parabolic {
    /// The standard case `n = m`.
    pub fn new(lambda: &Partition, m: usize) -> Result<Self, BruhatError> {
        Self::with_support(lambda, m, m)
    }

    /// `λ` padded to `n` entries, orbits living in `m` positions.
    pub fn with_support(lambda: &Partition, n: usize, m: usize) -> Result<Self, BruhatError> {
        if lambda.length() > n || n > m {
            return Err(BruhatError::TooManyParts {
                lambda: lambda.clone(),
                m: n.min(m),
            });
        }
        let lam = lambda.padded(n).into_vec();
        let lifted = lam
            .iter()
            .enumerate()
            .map(|(r, &l)| l + (n - 1 - r) as u32)
            .collect();
        Ok(Self {
            lambda: lam,
            lifted,
            m,
        })
    }

    /// The regular weight `λ + δ` padded to `m` entries.
    pub fn lifted(&self) -> Composition {
        let mut v = self.lifted.clone();
        v.resize(self.m, 0);
        Composition::new(v)
    }

    /// `λ` padded to `m` entries.
    pub fn lambda(&self) -> Composition {
        let mut v = self.lambda.clone();
        v.resize(self.m, 0);
        Composition::new(v)
    }

    /// `π_λ`: replace each entry `(λ+δ)_r` by `λ_r`.
    pub fn project(&self, nu: &Composition) -> Result<Composition, BruhatError> {
        if !nu.same_multiset(&self.lifted()) {
            return Err(BruhatError::NotInOrbit(nu.clone()));
        }
        Ok(Composition::new(
            nu.iter()
                .map(|&a| {
                    self.lifted
                        .iter()
                        .position(|&b| b == a)
                        .map_or(0, |r| self.lambda[r])
                })
                .collect(),
        ))
    }

    /// `ψ_λ^+`: the minimal-length lift of `μ` to the orbit of `λ + δ`.
    pub fn psi_plus(&self, mu: &Composition) -> Result<Composition, BruhatError> {
        self.lift(mu, true)
    }

    /// `ψ_λ^−`: the maximal-length lift of `μ` to the orbit of `λ + δ`.
    pub fn psi_minus(&self, mu: &Composition) -> Result<Composition, BruhatError> {
        self.lift(mu, false)
    }

    fn lift(&self, mu: &Composition, minimal: bool) -> Result<Composition, BruhatError> {
        if !mu.same_multiset(&self.lambda()) {
            return Err(BruhatError::NotInOrbit(mu.clone()));
        }
        let lambda = self.lambda();
        let lifted = self.lifted();
        let mut out = vec![0u32; self.m];
        let mut values: Vec<u32> = lambda.iter().copied().collect();
        values.sort_unstable();
        values.dedup();
        for value in values {
            // Lifted values for this block, largest first; placing the
            // largest leftmost creates no inversions inside the block.
            let mut block: Vec<u32> = (0..self.m)
                .filter(|&r| lambda[r] == value)
                .map(|r| lifted[r])
                .collect();
            block.sort_unstable_by(|a, b| b.cmp(a));
            if !minimal {
                block.reverse();
            }
            let positions = (0..self.m).filter(|&p| mu[p] == value);
            for (p, v) in positions.zip(block) {
                out[p] = v;
            }
        }
        Ok(Composition::new(out))
    }
}
