//! Tour construction with Independent Roulette selection.
//!
//! At each step every unvisited candidate `j` gets the score
//! `tau(i,j)^alpha * eta(i,j)^beta * u_j` with a fresh uniform `u_j`, and the
//! highest score wins. Candidates are scanned in ascending city order, one
//! draw each, so a seeded stream always replays the same choices.

use rand::Rng;

use crate::colony::{Ant, ColonyState};
use crate::error::Error;
use crate::instance::{euc_2d, Instance};
use crate::tour::Tour;

/// Lower bound kept on classic-mode pheromone after evaporation.
pub const CLASSIC_FLOOR: f64 = 1e-6;

/// An exponent, with integer values evaluated by repeated multiplication.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Int(i32),
    Real(f64),
}

impl Exponent {
    pub fn new(value: f64) -> Self {
        if value.fract() == 0.0 && value.abs() <= 64.0 {
            Exponent::Int(value as i32)
        } else {
            Exponent::Real(value)
        }
    }

    #[inline]
    pub fn apply(self, base: f64) -> f64 {
        match self {
            Exponent::Int(5) => {
                let b2 = base * base;
                b2 * b2 * base
            }
            Exponent::Int(k) => base.powi(k),
            Exponent::Real(e) => base.powf(e),
        }
    }
}

/// `eta^beta` with `eta = 1 / d`, distances clamped to at least 1.
#[derive(Debug, Clone)]
pub enum HeuristicTable {
    Dense { n: usize, values: Vec<f32> },
    OnTheFly { coords: Vec<(f64, f64)>, beta: Exponent },
}

impl HeuristicTable {
    pub fn new(inst: &Instance, beta: f64) -> Self {
        let beta = Exponent::new(beta);
        let n = inst.len();
        if inst.has_matrix() {
            let mut values = vec![0f32; n * n];
            for i in 0..n {
                let row = inst.matrix_row(i).expect("matrix present");
                for (j, &d) in row.iter().enumerate() {
                    values[i * n + j] = Self::weight(d, beta) as f32;
                }
            }
            HeuristicTable::Dense { n, values }
        } else {
            HeuristicTable::OnTheFly {
                coords: inst.coords().to_vec(),
                beta,
            }
        }
    }

    #[inline]
    fn weight(d: u32, beta: Exponent) -> f64 {
        beta.apply(1.0 / d.max(1) as f64)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        match self {
            HeuristicTable::Dense { n, values } => values[i * n + j] as f64,
            HeuristicTable::OnTheFly { coords, beta } => {
                Self::weight(euc_2d(coords[i], coords[j]), *beta)
            }
        }
    }
}

/// Anything that can supply `tau(from, j)` for every `j` in one call.
pub trait PheromoneView {
    /// Pheromone on edges the view has nothing recorded for.
    fn tau0(&self) -> f64;
    /// Writes the pheromone row of `from` into `row`.
    fn load_row(&self, from: usize, row: &mut RowWeights);
}

/// Dense buffer of `tau^alpha` for the current city.
///
/// Entries default to `tau0^alpha`; only entries a view touches are
/// recomputed and later reset, which keeps sparse views `O(m)` per step.
#[derive(Debug, Clone)]
pub struct RowWeights {
    alpha: Exponent,
    tau0: f64,
    base: f64,
    values: Vec<f64>,
    acc: Vec<f64>,
    touched: Vec<u32>,
}

impl RowWeights {
    pub fn new(n: usize, alpha: Exponent) -> Self {
        Self {
            alpha,
            tau0: 1.0,
            base: 1.0,
            values: vec![1.0; n],
            acc: vec![0.0; n],
            touched: Vec::new(),
        }
    }

    fn set_tau0(&mut self, tau0: f64) {
        self.clear();
        if tau0 != self.tau0 {
            self.tau0 = tau0;
            self.base = self.alpha.apply(tau0);
            self.values.fill(self.base);
        }
    }

    /// Adds pheromone on top of `tau0` for city `j`. Call [`commit`](Self::commit) after.
    #[inline]
    pub fn add(&mut self, j: usize, amount: f64) {
        if self.acc[j] == 0.0 {
            self.touched.push(j as u32);
        }
        self.acc[j] += amount;
    }

    pub fn commit(&mut self) {
        for &j in &self.touched {
            let j = j as usize;
            self.values[j] = self.alpha.apply(self.tau0 + self.acc[j]);
        }
    }

    /// Sets the absolute pheromone level of city `j`.
    #[inline]
    pub fn set(&mut self, j: usize, tau: f64) {
        if self.acc[j] == 0.0 {
            self.touched.push(j as u32);
            self.acc[j] = f64::MIN_POSITIVE;
        }
        self.values[j] = self.alpha.apply(tau);
    }

    #[inline]
    pub fn weight(&self, j: usize) -> f64 {
        self.values[j]
    }

    fn clear(&mut self) {
        for &j in &self.touched {
            let j = j as usize;
            self.acc[j] = 0.0;
            self.values[j] = self.base;
        }
        self.touched.clear();
    }
}

/// Per-worker buffers for building tours.
#[derive(Debug, Clone)]
pub struct ConstructionScratch {
    unvisited: Vec<u32>,
    partial: Vec<u32>,
    current: u32,
    comparisons: u64,
    row: RowWeights,
}

impl ConstructionScratch {
    pub fn new(n: usize, alpha: f64) -> Self {
        Self {
            unvisited: Vec::with_capacity(n),
            partial: Vec::with_capacity(n),
            current: 0,
            comparisons: 0,
            row: RowWeights::new(n, Exponent::new(alpha)),
        }
    }

    /// Edge evaluations made so far by this scratch.
    pub fn comparisons(&self) -> u64 {
        self.comparisons
    }

    pub fn unvisited(&self) -> &[u32] {
        &self.unvisited
    }

    pub fn partial(&self) -> &[u32] {
        &self.partial
    }

    /// Starts a tour at `start` with every other city unvisited.
    pub fn begin(&mut self, n: usize, start: u32) {
        self.partial.clear();
        self.partial.push(start);
        self.unvisited.clear();
        self.unvisited.extend((0..n as u32).filter(|&c| c != start));
        self.current = start;
    }

    /// Starts from a fixed prefix; `rest` becomes the unvisited set.
    pub fn begin_with_prefix(&mut self, prefix: &[u32], rest: &[u32]) {
        self.partial.clear();
        self.partial.extend_from_slice(prefix);
        self.unvisited.clear();
        self.unvisited.extend_from_slice(rest);
        self.unvisited.sort_unstable();
        self.current = *prefix.last().expect("non-empty prefix");
    }

    fn push(&mut self, pos: usize) -> u32 {
        let city = self.unvisited.remove(pos);
        self.partial.push(city);
        self.current = city;
        city
    }
}

/// Picks the next city from `scratch.current` and appends it.
///
/// Returns `None` if no unvisited city remains. Adds one comparison per
/// unvisited candidate.
pub fn select_next<V, R>(
    scratch: &mut ConstructionScratch,
    view: &V,
    heur: &HeuristicTable,
    rng: &mut R,
) -> Option<u32>
where
    V: PheromoneView + ?Sized,
    R: Rng + ?Sized,
{
    if scratch.unvisited.is_empty() {
        return None;
    }
    let from = scratch.current as usize;
    scratch.row.set_tau0(view.tau0());
    view.load_row(from, &mut scratch.row);

    let row = &scratch.row;
    let mut best = -1.0f64;
    let mut best_pos = 0usize;
    match heur {
        HeuristicTable::Dense { n, values } => {
            let hrow = &values[from * n..(from + 1) * n];
            for (pos, &c) in scratch.unvisited.iter().enumerate() {
                let c = c as usize;
                let score = hrow[c] as f64 * row.weight(c) * rng.random::<f64>();
                if score > best {
                    best = score;
                    best_pos = pos;
                }
            }
        }
        HeuristicTable::OnTheFly { .. } => {
            for (pos, &c) in scratch.unvisited.iter().enumerate() {
                let c = c as usize;
                let score = heur.get(from, c) * row.weight(c) * rng.random::<f64>();
                if score > best {
                    best = score;
                    best_pos = pos;
                }
            }
        }
    }
    scratch.comparisons += scratch.unvisited.len() as u64;
    scratch.row.clear();
    Some(scratch.push(best_pos))
}

/// Builds a whole tour from a uniformly random start city.
pub fn build_full<V, R>(
    inst: &Instance,
    heur: &HeuristicTable,
    view: &V,
    scratch: &mut ConstructionScratch,
    rng: &mut R,
) -> Tour
where
    V: PheromoneView + ?Sized,
    R: Rng + ?Sized,
{
    let n = inst.len();
    let start = rng.random_range(0..n as u32);
    scratch.begin(n, start);
    while select_next(scratch, view, heur, rng).is_some() {}
    Tour::from_valid(inst, std::mem::take(&mut scratch.partial))
}

/// Draws how many cities a partial construction rebuilds: uniform over
/// `2..=cap` with `cap = max(2, floor(max_mod_frac * n))`, never above `n - 1`.
pub fn draw_modified_count<R: Rng + ?Sized>(n: usize, max_mod_frac: f64, rng: &mut R) -> usize {
    let cap = modified_cap(n, max_mod_frac);
    rng.random_range(2..=cap)
}

pub fn modified_cap(n: usize, max_mod_frac: f64) -> usize {
    ((max_mod_frac * n as f64).floor() as usize).clamp(2, n - 1)
}

/// Keeps `n - modified` cities of `l_best` starting at position `start`
/// (wrapping) and rebuilds the rest.
///
/// The last free city is forced and appended without evaluation, so a
/// rebuild of `k` cities costs `k(k-1)/2 + (k-1)` comparisons. `modified < 2`
/// leaves nothing to choose and returns `l_best` itself.
#[allow(clippy::too_many_arguments)]
pub fn build_partial_at<V, R>(
    inst: &Instance,
    heur: &HeuristicTable,
    view: &V,
    scratch: &mut ConstructionScratch,
    l_best: &Tour,
    start: usize,
    modified: usize,
    rng: &mut R,
) -> Tour
where
    V: PheromoneView + ?Sized,
    R: Rng + ?Sized,
{
    let n = inst.len();
    if modified < 2 {
        return l_best.clone();
    }
    let modified = modified.min(n - 1);
    let preserved = n - modified;
    let order = l_best.order();
    let start = start % n;

    // rotate so the preserved segment sits at the front
    let mut rotated = Vec::with_capacity(n);
    rotated.extend_from_slice(&order[start..]);
    rotated.extend_from_slice(&order[..start]);
    let (keep, free) = rotated.split_at(preserved);
    scratch.begin_with_prefix(keep, free);

    while scratch.unvisited.len() > 1 {
        select_next(scratch, view, heur, rng);
    }
    scratch.push(0);
    Tour::from_valid(inst, std::mem::take(&mut scratch.partial))
}

/// Partial construction with a random start position and modified count.
pub fn build_partial<V, R>(
    inst: &Instance,
    heur: &HeuristicTable,
    view: &V,
    scratch: &mut ConstructionScratch,
    l_best: &Tour,
    max_mod_frac: f64,
    rng: &mut R,
) -> Tour
where
    V: PheromoneView + ?Sized,
    R: Rng + ?Sized,
{
    let n = inst.len();
    let start = rng.random_range(0..n);
    let modified = draw_modified_count(n, max_mod_frac, rng);
    build_partial_at(inst, heur, view, scratch, l_best, start, modified, rng)
}

/// Full construction for `ant` against the current colony state.
pub fn construct_full(
    ant: &mut Ant,
    state: &ColonyState,
    inst: &Instance,
    heur: &HeuristicTable,
    scratch: &mut ConstructionScratch,
) -> Tour {
    let view = state.snapshot();
    build_full(inst, heur, &view, scratch, &mut ant.rng)
}

/// Partial construction from the ant's `l_best`.
pub fn construct_partial(
    ant: &mut Ant,
    state: &ColonyState,
    inst: &Instance,
    heur: &HeuristicTable,
    scratch: &mut ConstructionScratch,
    max_mod_frac: f64,
) -> Result<Tour, Error> {
    let l_best = ant
        .l_best()
        .cloned()
        .ok_or_else(|| Error::Config("partial construction needs an existing l_best".into()))?;
    let view = state.snapshot();
    Ok(build_partial(
        inst,
        heur,
        &view,
        scratch,
        &l_best,
        max_mod_frac,
        &mut ant.rng,
    ))
}

/// Full `n x n` pheromone matrix for the classic reference mode.
#[derive(Debug, Clone, PartialEq)]
pub struct PheromoneMatrix {
    n: usize,
    rho: f64,
    tau: Vec<f64>,
}

impl PheromoneMatrix {
    pub fn new(n: usize, rho: f64, initial: f64) -> Result<Self, Error> {
        if n > crate::instance::MATRIX_LIMIT {
            return Err(Error::Config(format!(
                "pheromone matrix refused for {n} cities (limit {})",
                crate::instance::MATRIX_LIMIT
            )));
        }
        if !(0.0..=1.0).contains(&rho) {
            return Err(Error::Config(format!("rho must lie in [0, 1], got {rho}")));
        }
        if initial <= 0.0 {
            return Err(Error::Config("initial pheromone must be positive".into()));
        }
        Ok(Self {
            n,
            rho,
            tau: vec![initial; n * n],
        })
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.tau[i * self.n + j]
    }

    pub fn scale(&mut self, factor: f64) {
        self.tau.iter_mut().for_each(|t| *t *= factor);
    }

    /// `tau <- (1 - rho) tau`, floored at [`CLASSIC_FLOOR`].
    pub fn evaporate(&mut self) {
        let keep = 1.0 - self.rho;
        for t in &mut self.tau {
            *t = (*t * keep).max(CLASSIC_FLOOR);
        }
    }

    /// Each tour adds `1 / length` to both directions of each of its edges.
    pub fn deposit<'a>(&mut self, tours: impl IntoIterator<Item = &'a Tour>) {
        let n = self.n;
        for tour in tours {
            let amount = 1.0 / tour.length().max(1) as f64;
            let order = tour.order();
            for k in 0..order.len() {
                let a = order[k] as usize;
                let b = order[(k + 1) % order.len()] as usize;
                self.tau[a * n + b] += amount;
                self.tau[b * n + a] += amount;
            }
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn min(&self) -> f64 {
        self.tau.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

impl PheromoneView for PheromoneMatrix {
    fn tau0(&self) -> f64 {
        // rows are always written in full
        1.0
    }

    fn load_row(&self, from: usize, row: &mut RowWeights) {
        let n = self.n;
        for (j, &t) in self.tau[from * n..(from + 1) * n].iter().enumerate() {
            row.set(j, t);
        }
    }
}

/// Uniform pheromone, i.e. plain heuristic-guided construction.
#[derive(Debug, Clone, Copy)]
pub struct Uniform(pub f64);

impl PheromoneView for Uniform {
    fn tau0(&self) -> f64 {
        self.0
    }

    fn load_row(&self, _from: usize, _row: &mut RowWeights) {}
}
