//! First-improvement 2-opt, optionally restricted to a position window.

use rand::Rng;

use crate::error::Error;
use crate::instance::Instance;
use crate::tour::Tour;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoOptParams {
    /// Chance of improving a freshly built tour.
    pub probability: f64,
    /// Largest `j - i` position gap considered; 0 means unbounded.
    pub window: usize,
}

impl TwoOptParams {
    pub fn new(probability: f64, window: usize) -> Result<Self, Error> {
        if !(0.0..=1.0).contains(&probability) {
            return Err(Error::Config(format!(
                "2-opt probability must lie in [0, 1], got {probability}"
            )));
        }
        Ok(Self {
            probability,
            window,
        })
    }
}

impl Default for TwoOptParams {
    fn default() -> Self {
        Self {
            probability: 0.0,
            window: 0,
        }
    }
}

/// Applies improving 2-opt moves in place until a full pass finds none.
/// Returns the number of accepted moves.
///
/// Scan order is `i` ascending, then `j` ascending; an accepted move reverses
/// `order[i+1..=j]` and the pass carries on from the same `(i, j)`. Pairs are
/// limited to `j - i <= window` on the linear order, so with a window the
/// moves never wrap around the end of the array.
pub fn two_opt_in_place(inst: &Instance, order: &mut [u32], window: usize) -> usize {
    let n = order.len();
    if n < 4 {
        return 0;
    }
    let span = if window == 0 { n } else { window };
    let d = |a: u32, b: u32| inst.dist(a as usize, b as usize) as i64;
    let mut moves = 0;
    loop {
        let mut improved = false;
        for i in 0..n - 2 {
            let jmax = (i + span).min(n - 1);
            let mut j = i + 2;
            while j <= jmax {
                if i == 0 && j == n - 1 {
                    break;
                }
                let (a, b) = (order[i], order[i + 1]);
                let (c, e) = (order[j], order[(j + 1) % n]);
                let delta = d(a, c) + d(b, e) - d(a, b) - d(c, e);
                if delta < 0 {
                    order[i + 1..=j].reverse();
                    improved = true;
                    moves += 1;
                }
                j += 1;
            }
        }
        if !improved {
            return moves;
        }
    }
}

/// 2-opt local optimum reachable from `tour`.
pub fn two_opt(inst: &Instance, tour: &Tour, params: &TwoOptParams) -> Tour {
    let mut order = tour.order().to_vec();
    if two_opt_in_place(inst, &mut order, params.window) == 0 {
        return tour.clone();
    }
    let improved = Tour::from_valid(inst, order);
    debug_assert!(improved.length() < tour.length());
    improved
}

/// Runs [`two_opt`] with probability `params.probability`. Draws exactly one
/// uniform either way.
pub fn maybe_two_opt<R: Rng + ?Sized>(
    inst: &Instance,
    tour: Tour,
    params: &TwoOptParams,
    rng: &mut R,
) -> (Tour, bool) {
    let u: f64 = rng.random();
    if u < params.probability {
        (two_opt(inst, &tour, params), true)
    } else {
        (tour, false)
    }
}
