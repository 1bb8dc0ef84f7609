use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use super::{Mode, SearchProblem, SearchResult};
use crate::error::{Error, Result};
use crate::family_core::{find_matching_of_size, k_subsets, max_matching_masks, Family, VertexSet};
use crate::par;

/// Largest `C(n, k)` the oracle will take on; the cone tables are quadratic in it.
pub const MAX_ORACLE_EDGES: usize = 4096;

const TICK: u64 = 1024;

/// Colex-indexed k-sets with the down-cone and up-cone of every edge under `≺`.
struct Tables {
    edges: Vec<u64>,
    index: HashMap<u64, usize>,
    words: usize,
    down: Vec<u64>,
    up: Vec<u64>,
}

impl Tables {
    fn new(n: usize, k: usize) -> Result<Self> {
        let edges: Vec<u64> = k_subsets(n, k).map(|e| e.mask()).collect();
        if edges.len() > MAX_ORACLE_EDGES {
            return Err(Error::arg(format!(
                "C({n},{k}) = {} edges exceeds the oracle limit of {MAX_ORACLE_EDGES}",
                edges.len()
            )));
        }
        let count = edges.len();
        let words = count.div_ceil(64).max(1);
        let index: HashMap<u64, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut down = vec![0u64; count * words];
        let mut up = vec![0u64; count * words];
        // immediate predecessors replace j by j-1; they precede in colex
        for i in 0..count {
            let e = VertexSet::from_mask(edges[i]);
            set_bit(&mut down[i * words..(i + 1) * words], i);
            for j in e.iter().filter(|&j| j > 1 && !e.contains(j - 1)) {
                let p = index[&e.remove(j).insert(j - 1).mask()];
                for w in 0..words {
                    down[i * words + w] |= down[p * words + w];
                }
            }
        }
        for i in (0..count).rev() {
            let e = VertexSet::from_mask(edges[i]);
            set_bit(&mut up[i * words..(i + 1) * words], i);
            for j in e.iter().filter(|&j| j < n && !e.contains(j + 1)) {
                let p = index[&e.remove(j).insert(j + 1).mask()];
                for w in 0..words {
                    up[i * words + w] |= up[p * words + w];
                }
            }
        }
        Ok(Tables { edges, index, words, down, up })
    }

    fn down(&self, i: usize) -> &[u64] {
        &self.down[i * self.words..(i + 1) * self.words]
    }

    fn up(&self, i: usize) -> &[u64] {
        &self.up[i * self.words..(i + 1) * self.words]
    }
}

/// The `count` lowest set bits of `mask`, if it has that many.
fn lowest_bits(mut mask: u64, count: usize) -> Option<u64> {
    let mut out = 0u64;
    for _ in 0..count {
        if mask == 0 {
            return None;
        }
        let low = mask & mask.wrapping_neg();
        out |= low;
        mask ^= low;
    }
    Some(out)
}

#[inline]
fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1u64 << (i % 64);
}

#[inline]
fn clear_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] &= !(1u64 << (i % 64));
}

#[inline]
fn get_bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

/// A partial down-set: edges forced in, edges forced out, the rest undecided.
#[derive(Clone, Debug)]
struct Node {
    in_bits: Vec<u64>,
    out_bits: Vec<u64>,
    in_count: usize,
    out_count: usize,
    in_edges: Vec<u64>,
    /// A maximum matching of the included edges; its length is ν.
    matching: Vec<u64>,
    pos: usize,
}

impl Node {
    fn nu(&self) -> usize {
        self.matching.len()
    }
}

/// What changed in the included set since the last propagation.
#[derive(Clone, Copy)]
enum Growth {
    None,
    Full,
    Edge(u64),
}

struct Shared {
    best: AtomicUsize,
    nodes: AtomicU64,
    stop: AtomicBool,
    started: Instant,
}

struct Worker<'a> {
    tables: &'a Tables,
    shared: &'a Shared,
    problem: &'a SearchProblem,
    local_nodes: u64,
    found: Option<(usize, Vec<u64>)>,
}

impl<'a> Worker<'a> {
    fn new(tables: &'a Tables, shared: &'a Shared, problem: &'a SearchProblem) -> Self {
        Worker { tables, shared, problem, local_nodes: 0, found: None }
    }

    fn flush(&mut self) {
        self.shared.nodes.fetch_add(self.local_nodes, Ordering::Relaxed);
        self.local_nodes = 0;
    }

    /// Counts a node; returns true once the search must stop.
    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes >= TICK.min(self.problem.budget.node_limit) {
            self.flush();
            let budget = &self.problem.budget;
            if self.shared.nodes.load(Ordering::Relaxed) >= budget.node_limit
                || self.shared.started.elapsed() >= budget.time_limit
            {
                self.shared.stop.store(true, Ordering::Relaxed);
            }
        }
        self.shared.stop.load(Ordering::Relaxed)
    }

    /// A maximum matching after adding edge `pos`, or `None` if ν would exceed `s`.
    fn include_matching(&self, node: &Node, pos: usize) -> Option<Vec<u64>> {
        let e = self.tables.edges[pos];
        let disjoint: Vec<u64> = node.in_edges.iter().copied().filter(|&f| f & e == 0).collect();
        match find_matching_of_size(&disjoint, self.problem.k, node.nu()) {
            Some(mut bigger) => {
                if bigger.len() + 1 > self.problem.s {
                    return None;
                }
                bigger.push(e);
                Some(bigger)
            }
            None => Some(node.matching.clone()),
        }
    }

    fn advance(&self, node: &mut Node) {
        let count = self.tables.edges.len();
        while node.pos < count
            && (get_bit(&node.in_bits, node.pos) || get_bit(&node.out_bits, node.pos))
        {
            node.pos += 1;
        }
    }

    fn include(&self, node: &mut Node, pos: usize, matching: Vec<u64>) -> Vec<u64> {
        set_bit(&mut node.in_bits, pos);
        node.in_edges.push(self.tables.edges[pos]);
        node.in_count += 1;
        node.pos = pos + 1;
        std::mem::replace(&mut node.matching, matching)
    }

    fn uninclude(&self, node: &mut Node, pos: usize, prev: Vec<u64>) {
        clear_bit(&mut node.in_bits, pos);
        node.in_edges.pop();
        node.in_count -= 1;
        node.matching = prev;
        node.pos = pos;
    }

    /// Once ν = s, excludes every undecided edge `f` that no completion can
    /// hold, together with its up-cone. Returns the previous exclusion state
    /// when anything changed.
    ///
    /// `f` is dead iff the included edges have an s-matching avoiding `f`.
    /// The included edges form a down-set, so an order-preserving relabelling
    /// moves any such matching onto `W_f`, the `sk` smallest vertices outside
    /// `f`; the test is a perfect-matching check on `W_f` alone.
    ///
    /// When ν already equalled `s` before `added` was included, only windows
    /// containing `added` can have changed verdict.
    fn propagate(&self, node: &mut Node, added: Option<u64>) -> Option<(Vec<u64>, usize)> {
        let SearchProblem { n, k, s, .. } = *self.problem;
        if node.nu() < s {
            return None;
        }
        let required = added.unwrap_or(0);
        let ground = VertexSet::ground(n).mask();
        let count = self.tables.edges.len();
        let mut verdicts: HashMap<u64, bool> = HashMap::new();
        let mut saved: Option<(Vec<u64>, usize)> = None;
        for i in node.pos..count {
            if get_bit(&node.in_bits, i) || get_bit(&node.out_bits, i) {
                continue;
            }
            let Some(window) = lowest_bits(ground & !self.tables.edges[i], s * k) else {
                continue;
            };
            if window & required != required {
                continue;
            }
            let dead = *verdicts.entry(window).or_insert_with(|| {
                let inside: Vec<u64> =
                    node.in_edges.iter().copied().filter(|&e| e & !window == 0).collect();
                find_matching_of_size(&inside, k, s).is_some()
            });
            if dead {
                if saved.is_none() {
                    saved = Some((node.out_bits.clone(), node.out_count));
                }
                for (o, u) in node.out_bits.iter_mut().zip(self.tables.up(i)) {
                    *o |= u;
                }
            }
        }
        if saved.is_some() {
            node.out_count = node.out_bits.iter().map(|w| w.count_ones() as usize).sum();
        }
        saved
    }

    /// Excludes the up-cone of `pos`; returns the words it overwrote.
    fn exclude(&self, node: &mut Node, pos: usize) -> (Vec<u64>, usize) {
        let saved = (node.out_bits.clone(), node.out_count);
        let mut added = 0usize;
        for (w, &u) in node.out_bits.iter_mut().zip(self.tables.up(pos)) {
            added += (u & !*w).count_ones() as usize;
            *w |= u;
        }
        node.out_count += added;
        node.pos = pos + 1;
        saved
    }

    fn unexclude(&self, node: &mut Node, pos: usize, saved: (Vec<u64>, usize)) {
        (node.out_bits, node.out_count) = saved;
        node.pos = pos;
    }

    fn leaf(&mut self, node: &Node) {
        if self.problem.mode == Mode::MStar && node.nu() != self.problem.s {
            return;
        }
        let value = node.in_count;
        let prev = self.shared.best.fetch_max(value, Ordering::Relaxed);
        if prev < value && self.found.as_ref().is_none_or(|(v, _)| *v < value) {
            self.found = Some((value, node.in_edges.clone()));
        }
    }

    fn dfs(&mut self, node: &mut Node, grew: Growth) {
        if self.tick() {
            return;
        }
        let restore = match grew {
            Growth::None => None,
            Growth::Full => self.propagate(node, None),
            Growth::Edge(e) => self.propagate(node, Some(e)),
        };
        self.branch(node);
        if let Some((bits, count)) = restore {
            node.out_bits = bits;
            node.out_count = count;
        }
    }

    fn branch(&mut self, node: &mut Node) {
        let entry = node.pos;
        self.advance(node);
        let pos = node.pos;
        if pos == self.tables.edges.len() {
            self.leaf(node);
            node.pos = entry;
            return;
        }
        let undecided = self.tables.edges.len() - node.in_count - node.out_count;
        if node.in_count + undecided > self.shared.best.load(Ordering::Relaxed) {
            self.descend(node, pos, undecided);
        }
        node.pos = entry;
    }

    fn descend(&mut self, node: &mut Node, pos: usize, undecided: usize) {
        if let Some(matching) = self.include_matching(node, pos) {
            let growth = if node.nu() == self.problem.s {
                Growth::Edge(self.tables.edges[pos])
            } else {
                Growth::Full
            };
            let prev = self.include(node, pos, matching);
            self.dfs(node, growth);
            self.uninclude(node, pos, prev);
            if node.in_count + undecided - 1 <= self.shared.best.load(Ordering::Relaxed) {
                return;
            }
        }
        let saved = self.exclude(node, pos);
        self.dfs(node, Growth::None);
        self.unexclude(node, pos, saved);
    }

    /// Splits `node` into independent subtrees, in the order the sequential
    /// search would visit them.
    fn split(&self, mut node: Node, depth: usize, out: &mut Vec<Node>) {
        self.advance(&mut node);
        let pos = node.pos;
        if depth == 0 || pos == self.tables.edges.len() {
            out.push(node);
            return;
        }
        if let Some(matching) = self.include_matching(&node, pos) {
            let mut child = node.clone();
            self.include(&mut child, pos, matching);
            self.split(child, depth - 1, out);
        }
        self.exclude(&mut node, pos);
        self.split(node, depth - 1, out);
    }
}

fn root(tables: &Tables, problem: &SearchProblem) -> Option<Node> {
    let SearchProblem { k, s, q, n, .. } = *problem;
    let words = tables.words;
    let top = VertexSet::interval(q + 1 - k, q).mask();
    let top_idx = tables.index[&top];
    let in_bits = tables.down(top_idx).to_vec();
    let in_edges: Vec<u64> = (0..tables.edges.len())
        .filter(|&i| get_bit(&in_bits, i))
        .map(|i| tables.edges[i])
        .collect();
    let matching = max_matching_masks(&in_edges, k);
    if matching.len() > s {
        return None;
    }
    let mut out_bits = vec![0u64; words];
    if problem.mode == Mode::MStar && q < n {
        let above = VertexSet::interval(q + 2 - k, q + 1).mask();
        out_bits.copy_from_slice(tables.up(tables.index[&above]));
    }
    let count = |b: &[u64]| b.iter().map(|w| w.count_ones() as usize).sum::<usize>();
    Some(Node {
        in_count: count(&in_bits),
        out_count: count(&out_bits),
        in_bits,
        out_bits,
        in_edges,
        matching,
        pos: 0,
    })
}

pub(super) fn solve(problem: &SearchProblem, seed: Option<Family>) -> Result<SearchResult> {
    let SearchProblem { n, k, .. } = *problem;
    let tables = Tables::new(n, k)?;
    let shared = Shared {
        best: AtomicUsize::new(seed.as_ref().map_or(0, Family::len)),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        started: Instant::now(),
    };
    let mut found: Vec<(usize, Vec<u64>)> = Vec::new();
    if let Some(start) = root(&tables, problem) {
        let threads = problem.threads.unwrap_or_else(par::available_threads).max(1);
        if threads == 1 {
            let mut worker = Worker::new(&tables, &shared, problem);
            let mut node = start;
            worker.dfs(&mut node, Growth::Full);
            worker.flush();
            found.extend(worker.found);
        } else {
            let mut tasks = Vec::new();
            let depth = (usize::BITS - (threads * 16).leading_zeros()) as usize;
            Worker::new(&tables, &shared, problem).split(start, depth, &mut tasks);
            let results = par::with_threads(problem.threads, || {
                par::map(tasks, |mut node| {
                    let mut worker = Worker::new(&tables, &shared, problem);
                    worker.dfs(&mut node, Growth::Full);
                    worker.flush();
                    worker.found
                })
            });
            found.extend(results.into_iter().flatten());
        }
    }
    let proven_optimal = !shared.stop.load(Ordering::Relaxed);
    let nodes_explored = shared.nodes.load(Ordering::Relaxed);
    // first maximum keeps the witness stable across runs with equal task order
    let best_found = found.into_iter().fold(None::<(usize, Vec<u64>)>, |acc, cur| match acc {
        Some(a) if a.0 >= cur.0 => Some(a),
        _ => Some(cur),
    });
    let seed_len = seed.as_ref().map_or(0, Family::len);
    let witness = match best_found {
        Some((value, edges)) if value > seed_len => {
            Family::from_edges(n, k, edges.into_iter().map(VertexSet::from_mask))?
        }
        _ => match seed {
            Some(f) => f,
            None => Family::empty(n, k)?,
        },
    };
    Ok(SearchResult { value: witness.len(), witness, nodes_explored, proven_optimal })
}
