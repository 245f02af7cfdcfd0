//! Shared colony state for the matrix-free pheromone model.
//!
//! Every ant keeps its best tour (`l_best`). Pheromone on an edge is derived
//! on demand from the `l_best` tours that contain it, weighted by how close
//! each one is to the global best. Per ant the edge index is a table of the
//! two tour neighbours of every city, so a lookup from one city costs `O(m)`.
//!
//! Published `l_best` tours are immutable `Arc`s swapped in whole, so a reader
//! always sees either the previous tour or the new one.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use parking_lot::{Mutex, RwLock};
use rand::rngs::SmallRng;
use rand::SeedableRng;

use crate::construct::{PheromoneView, RowWeights};
use crate::error::Error;
use crate::tour::Tour;

/// Pheromone on edges that no `l_best` tour uses. Every `l_best` edge adds at
/// most 1 on top, so with 16 ants and `alpha = 5` the preference for the most
/// shared edge stays within `(25/8)^5` rather than `17^5`.
pub const DEFAULT_TAU0: f64 = 8.0;

/// A published best tour together with its neighbour table.
#[derive(Debug)]
pub struct LocalBest {
    tour: Tour,
    adjacency: Vec<[u32; 2]>,
}

impl LocalBest {
    pub fn new(tour: Tour) -> Self {
        let order = tour.order();
        let n = order.len();
        let mut adjacency = vec![[0u32; 2]; n];
        for (pos, &city) in order.iter().enumerate() {
            let prev = order[(pos + n - 1) % n];
            let next = order[(pos + 1) % n];
            adjacency[city as usize] = [prev, next];
        }
        Self { tour, adjacency }
    }

    pub fn tour(&self) -> &Tour {
        &self.tour
    }

    pub fn length(&self) -> u64 {
        self.tour.length()
    }

    /// The two cities adjacent to `city` in this tour.
    #[inline]
    pub fn neighbours(&self, city: usize) -> [u32; 2] {
        self.adjacency[city]
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let [a, b] = self.adjacency[i];
        a as usize == j || b as usize == j
    }
}

/// Splits a master seed into an independent stream per ant.
pub fn ant_seed(master: u64, ant: usize) -> u64 {
    fn splitmix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    splitmix(master ^ splitmix(ant as u64))
}

/// Per-ant state, owned by exactly one worker.
#[derive(Debug)]
pub struct Ant {
    id: usize,
    pub(crate) rng: SmallRng,
    l_best: Option<Arc<LocalBest>>,
}

impl Ant {
    pub fn new(id: usize, master_seed: u64) -> Self {
        Self {
            id,
            rng: SmallRng::seed_from_u64(ant_seed(master_seed, id)),
            l_best: None,
        }
    }

    pub fn id(&self) -> usize {
        self.id
    }

    pub fn l_best(&self) -> Option<&Tour> {
        self.l_best.as_deref().map(LocalBest::tour)
    }

    pub fn rng_mut(&mut self) -> &mut SmallRng {
        &mut self.rng
    }
}

/// The global best tour, replaced only by strictly shorter candidates.
#[derive(Debug)]
pub struct GlobalBest {
    length: AtomicU64,
    tour: Mutex<Option<Tour>>,
}

impl Default for GlobalBest {
    fn default() -> Self {
        Self {
            length: AtomicU64::new(u64::MAX),
            tour: Mutex::new(None),
        }
    }
}

impl GlobalBest {
    /// Current best length, `u64::MAX` before the first tour.
    pub fn length(&self) -> u64 {
        self.length.load(Ordering::Acquire)
    }

    pub fn tour(&self) -> Option<Tour> {
        self.tour.lock().clone()
    }

    /// Replaces the best tour iff `candidate` is strictly shorter.
    pub fn offer(&self, candidate: &Tour) -> bool {
        if candidate.length() >= self.length() {
            return false;
        }
        let mut slot = self.tour.lock();
        if candidate.length() >= self.length.load(Ordering::Relaxed) {
            return false;
        }
        *slot = Some(candidate.clone());
        self.length.store(candidate.length(), Ordering::Release);
        true
    }
}

/// All `l_best` tours plus the global best, shared between workers.
#[derive(Debug)]
pub struct ColonyState {
    n: usize,
    tau0: f64,
    slots: Vec<RwLock<Option<Arc<LocalBest>>>>,
    g_best: GlobalBest,
}

impl ColonyState {
    pub fn new(n: usize, ants: usize, tau0: f64) -> Self {
        assert!(tau0 > 0.0, "tau0 must be positive");
        Self {
            n,
            tau0,
            slots: (0..ants).map(|_| RwLock::new(None)).collect(),
            g_best: GlobalBest::default(),
        }
    }

    pub fn ants(&self) -> usize {
        self.slots.len()
    }

    pub fn cities(&self) -> usize {
        self.n
    }

    pub fn tau0(&self) -> f64 {
        self.tau0
    }

    pub fn g_best(&self) -> &GlobalBest {
        &self.g_best
    }

    pub fn l_best(&self, ant: usize) -> Option<Arc<LocalBest>> {
        self.slots[ant].read().clone()
    }

    /// Offers a tour as the new global best.
    pub fn update_g_best(&self, candidate: &Tour) -> bool {
        self.g_best.offer(candidate)
    }

    /// Replaces the ant's `l_best` iff `candidate` is strictly shorter, and
    /// republishes its edges. The global best is offered the tour first so
    /// that any published `l_best` is never shorter than the global best.
    pub fn update_l_best(&self, ant: &mut Ant, candidate: Tour) -> Result<bool, Error> {
        if candidate.len() != self.n {
            return Err(Error::InvalidTour(format!(
                "tour has {} cities, colony has {}",
                candidate.len(),
                self.n
            )));
        }
        if let Some(current) = &ant.l_best {
            if candidate.length() >= current.length() {
                return Ok(false);
            }
        }
        self.g_best.offer(&candidate);
        let published = Arc::new(LocalBest::new(candidate));
        *self.slots[ant.id].write() = Some(Arc::clone(&published));
        ant.l_best = Some(published);
        Ok(true)
    }

    /// Freezes the current `l_best` tours and their contribution ratios.
    pub fn snapshot(&self) -> PheromoneSnapshot {
        let tours: Vec<Arc<LocalBest>> = self.slots.iter().filter_map(|s| s.read().clone()).collect();
        // read after the tours: every published l_best was offered to g_best first
        let g = self.g_best.length();
        let entries = tours
            .into_iter()
            .map(|lb| {
                let ratio = g as f64 / lb.length() as f64;
                debug_assert!(ratio > 0.0 && ratio <= 1.0);
                (lb, ratio)
            })
            .collect();
        PheromoneSnapshot {
            tau0: self.tau0,
            entries,
        }
    }

    /// Pheromone on `{i, j}` from the current state.
    pub fn pheromone(&self, i: usize, j: usize) -> f64 {
        self.snapshot().pheromone(i, j)
    }

    /// Number of (neighbour, ant) entries across every city.
    pub fn edge_index_entries(&self) -> usize {
        self.slots
            .iter()
            .filter_map(|s| s.read().clone())
            .map(|lb| lb.adjacency.iter().map(|a| a.len()).sum::<usize>())
            .sum()
    }
}

/// A consistent view of the colony for one tour construction.
#[derive(Debug, Clone)]
pub struct PheromoneSnapshot {
    tau0: f64,
    entries: Vec<(Arc<LocalBest>, f64)>,
}

impl PheromoneSnapshot {
    /// `tau0` plus the contribution of every `l_best` tour containing `{i, j}`.
    pub fn pheromone(&self, i: usize, j: usize) -> f64 {
        self.tau0
            + self
                .entries
                .iter()
                .filter(|(lb, _)| lb.has_edge(i, j))
                .map(|(_, r)| r)
                .sum::<f64>()
    }

    /// Contribution ratios `g_best / l_best`, one per published tour.
    pub fn contributions(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().map(|(_, r)| *r)
    }
}

impl PheromoneView for PheromoneSnapshot {
    fn tau0(&self) -> f64 {
        self.tau0
    }

    fn load_row(&self, from: usize, row: &mut RowWeights) {
        for (lb, ratio) in &self.entries {
            let [a, b] = lb.neighbours(from);
            row.add(a as usize, *ratio);
            row.add(b as usize, *ratio);
        }
        row.commit();
    }
}
