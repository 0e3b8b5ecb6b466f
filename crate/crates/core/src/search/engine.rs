use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::Instant;

use crate::detect::{cycle_through_edge, is_good_coloring, IncrementalMatching};
use crate::graph::{ClassGraph, Coloring, TargetSpec, UNASSIGNED};

use super::symmetry::{symmetry_reduction, LexState, PositionMap};
use super::{ArrowInstance, ArrowVerdict, Budget, SearchConfig, SearchOutcome};

const NOT_SATISFIED: usize = usize::MAX;

/// Immutable description of the tree shared by all workers.
struct Plan {
    n: usize,
    k: usize,
    /// Search position -> edge. Edges are introduced vertex by vertex
    /// (ordered by larger endpoint, then smaller) so small sub-hosts are
    /// completed early and targets close as soon as possible.
    order: Vec<(usize, usize)>,
    host_index: Vec<usize>,
    targets: Vec<TargetSpec>,
    lex: Vec<PositionMap>,
}

impl Plan {
    fn new(instance: &ArrowInstance, symmetry: bool) -> Self {
        let host = instance.host();
        let n = host.vertex_count();
        let order: Vec<(usize, usize)> = (0..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|&(u, v)| host.is_cross(u, v))
            .collect();
        let host_index: Vec<usize> = order
            .iter()
            .map(|&(u, v)| host.edge_index(u, v).unwrap())
            .collect();
        let mut position = vec![0; host.edge_count()];
        for (p, &e) in host_index.iter().enumerate() {
            position[e] = p;
        }
        let lex = if symmetry {
            symmetry_reduction(instance)
                .elements
                .iter()
                .map(|el| {
                    PositionMap::compile(el, &order, |u, v| {
                        position[host.edge_index(u, v).unwrap()]
                    })
                })
                .collect()
        } else {
            Vec::new()
        };
        Plan {
            n,
            k: instance.color_count(),
            order,
            host_index,
            targets: instance.targets().to_vec(),
            lex,
        }
    }

    fn edges(&self) -> usize {
        self.order.len()
    }
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    budget_hit: AtomicBool,
    best_shard: AtomicUsize,
    deterministic: bool,
    budget: Budget,
    start: Instant,
    progress: bool,
    last_report_ms: AtomicU64,
}

impl Shared {
    fn new(config: &SearchConfig) -> Self {
        Shared {
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            budget_hit: AtomicBool::new(false),
            best_shard: AtomicUsize::new(usize::MAX),
            deterministic: config.deterministic,
            budget: config.budget,
            start: Instant::now(),
            progress: config.progress,
            last_report_ms: AtomicU64::new(0),
        }
    }

    fn out_of_budget(&self, total: u64) -> bool {
        let over_nodes = self.budget.max_nodes.is_some_and(|m| total >= m);
        let over_time = self
            .budget
            .max_time
            .is_some_and(|t| self.start.elapsed() >= t);
        if over_nodes || over_time {
            self.budget_hit.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    fn report(&self, total: u64, hist: &[u64]) {
        let ms = self.start.elapsed().as_millis() as u64;
        let last = self.last_report_ms.load(Ordering::Relaxed);
        if ms < last + 1000
            || self
                .last_report_ms
                .compare_exchange(last, ms, Ordering::Relaxed, Ordering::Relaxed)
                .is_err()
        {
            return;
        }
        let rate = total as f64 / (ms.max(1) as f64 / 1000.0);
        let used = hist.iter().rposition(|&h| h > 0).map_or(0, |i| i + 1);
        eprintln!(
            "[search] {total} nodes, {rate:.0} nodes/s, depth histogram {:?}",
            &hist[..used]
        );
    }
}

enum Step {
    Exhausted,
    Found,
    Aborted,
}

struct Worker<'a> {
    plan: &'a Plan,
    shared: &'a Shared,
    classes: Vec<ClassGraph>,
    matchings: Vec<Option<IncrementalMatching>>,
    undo: Vec<Option<Vec<usize>>>,
    assign: Vec<u8>,
    sat_depth: Vec<usize>,
    pending: u64,
    flush_every: u64,
    hist: Vec<u64>,
    shard: usize,
}

impl<'a> Worker<'a> {
    fn new(plan: &'a Plan, shared: &'a Shared) -> Self {
        let flush_every = shared
            .budget
            .max_nodes
            .map_or(256, |m| (m / 16).clamp(1, 256));
        Worker {
            plan,
            shared,
            classes: vec![ClassGraph::new(plan.n); plan.k],
            matchings: plan
                .targets
                .iter()
                .map(|t| {
                    matches!(t, TargetSpec::Stripe(_)).then(|| IncrementalMatching::new(plan.n))
                })
                .collect(),
            undo: vec![None; plan.edges()],
            assign: vec![UNASSIGNED; plan.edges()],
            sat_depth: vec![NOT_SATISFIED; plan.lex.len()],
            pending: 0,
            flush_every,
            hist: vec![0; plan.edges() + 1],
            shard: 0,
        }
    }

    /// Publishes pending node counts without budget checks.
    fn settle(&mut self) {
        self.shared.nodes.fetch_add(self.pending, Ordering::Relaxed);
        self.pending = 0;
    }

    fn flush(&mut self) -> bool {
        let total = self.shared.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        if self.shared.progress {
            self.shared.report(total, &self.hist);
        }
        if self.shared.stop.load(Ordering::Relaxed) {
            return true;
        }
        if self.shared.deterministic && self.shared.best_shard.load(Ordering::Relaxed) < self.shard
        {
            return true;
        }
        self.shared.out_of_budget(total)
    }

    #[inline]
    fn tick(&mut self, depth: usize) -> bool {
        self.hist[depth] += 1;
        self.pending += 1;
        self.pending >= self.flush_every && self.flush()
    }

    /// Colors edge `depth` with `c` unless that closes target `c`.
    fn push(&mut self, depth: usize, c: u8) -> bool {
        let (u, v) = self.plan.order[depth];
        let ci = c as usize;
        self.classes[ci].add_edge(u, v);
        let closes = match self.plan.targets[ci] {
            TargetSpec::Cycle(m) => cycle_through_edge(&self.classes[ci], u, v, m),
            TargetSpec::Stripe(s) => {
                let m = self.matchings[ci].as_mut().unwrap();
                self.undo[depth] = m.edge_added(&self.classes[ci], u, v);
                m.size() >= s
            }
        };
        if closes {
            self.unpush(depth, ci);
            return false;
        }
        self.assign[depth] = c;
        true
    }

    fn unpush(&mut self, depth: usize, c: usize) {
        let (u, v) = self.plan.order[depth];
        self.classes[c].remove_edge(u, v);
        if let Some(snapshot) = self.undo[depth].take() {
            self.matchings[c].as_mut().unwrap().restore(snapshot);
        }
    }

    fn pop(&mut self, depth: usize) {
        let c = std::mem::replace(&mut self.assign[depth], UNASSIGNED) as usize;
        self.unpush(depth, c);
    }

    /// Lex-leader test of the prefix ending at `depth`. Elements already
    /// strictly satisfied on an ancestor are skipped.
    fn lex_ok(&mut self, depth: usize) -> bool {
        for (i, map) in self.plan.lex.iter().enumerate() {
            if self.sat_depth[i] < depth {
                continue;
            }
            match map.compare_prefix(&self.assign, depth) {
                LexState::Smaller => self.sat_depth[i] = depth,
                LexState::Open => self.sat_depth[i] = NOT_SATISFIED,
                LexState::Larger => return false,
            }
        }
        true
    }

    fn dfs(&mut self, depth: usize) -> Step {
        if depth == self.plan.edges() {
            return Step::Found;
        }
        for c in 0..self.plan.k as u8 {
            if self.tick(depth) {
                return Step::Aborted;
            }
            if !self.push(depth, c) {
                continue;
            }
            if self.lex_ok(depth) {
                match self.dfs(depth + 1) {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.pop(depth);
        }
        Step::Exhausted
    }

    /// Same walk as `dfs` but stops at `limit`, recording each surviving prefix.
    fn collect(&mut self, depth: usize, limit: usize, out: &mut Vec<Vec<u8>>) -> Step {
        if depth == limit {
            out.push(self.assign[..limit].to_vec());
            return Step::Exhausted;
        }
        for c in 0..self.plan.k as u8 {
            if self.tick(depth) {
                return Step::Aborted;
            }
            if !self.push(depth, c) {
                continue;
            }
            if self.lex_ok(depth) {
                if let Step::Aborted = self.collect(depth + 1, limit, out) {
                    return Step::Aborted;
                }
            }
            self.pop(depth);
        }
        Step::Exhausted
    }

    fn run_shard(&mut self, prefix: &[u8]) -> Step {
        for (d, &c) in prefix.iter().enumerate() {
            let ok = self.push(d, c) && self.lex_ok(d);
            assert!(ok, "shard prefix no longer valid");
        }
        let step = self.dfs(prefix.len());
        if let Step::Exhausted = step {
            for d in (0..prefix.len()).rev() {
                self.pop(d);
            }
        }
        step
    }

    fn certificate(&self, instance: &ArrowInstance) -> Coloring {
        let mut assignment = vec![UNASSIGNED; self.plan.edges()];
        for (p, &e) in self.plan.host_index.iter().enumerate() {
            assignment[e] = self.assign[p];
        }
        Coloring::from_assignment(instance.host_arc().clone(), self.plan.k, assignment)
    }
}

fn default_split_depth(plan: &Plan, workers: usize) -> usize {
    let want = 32 * workers as u64;
    let mut leaves = 1u64;
    let mut d = 0;
    while leaves < want && d + 1 < plan.edges() {
        leaves = leaves.saturating_mul(plan.k as u64);
        d += 1;
    }
    d
}

/// Decides whether every coloring of the host contains some target in its
/// own color.
///
/// Depth-first over the edges, trying colors in increasing order; a branch
/// dies as soon as the edge just colored closes the target of its color
/// (containment only grows as edges are added, so this is sound). A total
/// coloring reached this way is returned as a re-verified certificate.
pub fn arrows_exhaustive(instance: &ArrowInstance, config: &SearchConfig) -> SearchOutcome {
    let plan = Plan::new(instance, config.symmetry);
    let shared = Shared::new(config);
    let workers = config.workers.max(1);

    let (found, hist) = if workers == 1 || plan.edges() < 2 {
        let mut w = Worker::new(&plan, &shared);
        let step = w.dfs(0);
        w.settle();
        let found = matches!(step, Step::Found).then(|| w.certificate(instance));
        (found, w.hist)
    } else {
        run_parallel(instance, &plan, &shared, config, workers)
    };

    let elapsed = shared.start.elapsed();
    let nodes_explored = shared.nodes.load(Ordering::Relaxed);
    let budget_exhausted = shared.budget_hit.load(Ordering::Relaxed);
    let (verdict, exhaustive) = match (&found, budget_exhausted) {
        (Some(_), _) => (ArrowVerdict::NotArrows, false),
        (None, true) => (ArrowVerdict::Inconclusive, false),
        (None, false) => (ArrowVerdict::Arrows, true),
    };
    if let Some(c) = &found {
        assert!(
            is_good_coloring(c, instance.targets()).unwrap_or(false),
            "search produced a certificate that fails verification"
        );
    }
    SearchOutcome {
        verdict,
        certificate: found,
        nodes_explored,
        exhaustive,
        budget_exhausted: budget_exhausted && verdict == ArrowVerdict::Inconclusive,
        elapsed,
        depth_histogram: hist,
    }
}

fn run_parallel(
    instance: &ArrowInstance,
    plan: &Plan,
    shared: &Shared,
    config: &SearchConfig,
    workers: usize,
) -> (Option<Coloring>, Vec<u64>) {
    let split = config
        .split_depth
        .unwrap_or_else(|| default_split_depth(plan, workers))
        .min(plan.edges() - 1);
    let mut shards = Vec::new();
    let mut root = Worker::new(plan, shared);
    let step = root.collect(0, split, &mut shards);
    root.settle();
    let mut hist = root.hist;
    if let Step::Aborted = step {
        return (None, hist);
    }

    let next = AtomicUsize::new(0);
    let found: Mutex<Vec<(usize, Coloring)>> = Mutex::new(Vec::new());
    let hists: Mutex<Vec<Vec<u64>>> = Mutex::new(Vec::new());
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| {
                let mut w = Worker::new(plan, shared);
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= shards.len() || shared.stop.load(Ordering::Relaxed) {
                        break;
                    }
                    if shared.deterministic && shared.best_shard.load(Ordering::Relaxed) < i {
                        break;
                    }
                    w.shard = i;
                    match w.run_shard(&shards[i]) {
                        Step::Exhausted => {}
                        Step::Found => {
                            found.lock().unwrap().push((i, w.certificate(instance)));
                            if shared.deterministic {
                                shared.best_shard.fetch_min(i, Ordering::Relaxed);
                            } else {
                                shared.stop.store(true, Ordering::Relaxed);
                            }
                            break;
                        }
                        Step::Aborted => break,
                    }
                }
                w.settle();
                hists.lock().unwrap().push(w.hist);
            });
        }
    });

    for h in hists.into_inner().unwrap() {
        for (a, b) in hist.iter_mut().zip(h) {
            *a += b;
        }
    }
    let mut found = found.into_inner().unwrap();
    found.sort_by_key(|(i, _)| *i);
    (found.into_iter().next().map(|(_, c)| c), hist)
}
