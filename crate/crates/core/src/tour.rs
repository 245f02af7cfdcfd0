use crate::error::Error;
use crate::instance::Instance;

/// Exhaustive search is refused above this many cities.
pub const BRUTE_FORCE_LIMIT: usize = 10;

/// A Hamiltonian cycle given as a visiting order, with its cached length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tour {
    order: Vec<u32>,
    length: u64,
}

impl Tour {
    /// Validates `order` and computes its length.
    pub fn new(inst: &Instance, order: Vec<u32>) -> Result<Self, Error> {
        let length = tour_length(inst, &order)?;
        Ok(Self { order, length })
    }

    /// Builds a tour whose order is already known to be a permutation.
    pub(crate) fn from_valid(inst: &Instance, order: Vec<u32>) -> Self {
        debug_assert!(check_permutation(&order, inst.len()).is_ok());
        let length = cycle_length(inst, &order);
        Self { order, length }
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn into_order(self) -> Vec<u32> {
        self.order
    }

    /// Percentage above `reference`.
    pub fn pct_error(&self, reference: u64) -> f64 {
        pct_error(self.length, reference)
    }
}

pub fn pct_error(length: u64, reference: u64) -> f64 {
    100.0 * (length as f64 - reference as f64) / reference as f64
}

/// Checks that `order` visits each of `0..n` exactly once.
pub fn check_permutation(order: &[u32], n: usize) -> Result<(), Error> {
    if order.len() != n {
        return Err(Error::InvalidTour(format!(
            "expected {n} cities, got {}",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &c in order {
        let c = c as usize;
        if c >= n {
            return Err(Error::InvalidTour(format!("city {c} out of range")));
        }
        if std::mem::replace(&mut seen[c], true) {
            return Err(Error::InvalidTour(format!("city {c} visited twice")));
        }
    }
    Ok(())
}

pub(crate) fn cycle_length(inst: &Instance, order: &[u32]) -> u64 {
    let n = order.len();
    let mut total = inst.dist(order[n - 1] as usize, order[0] as usize) as u64;
    for w in order.windows(2) {
        total += inst.dist(w[0] as usize, w[1] as usize) as u64;
    }
    total
}

/// Length of the closed cycle `order`, including the edge back to the start.
pub fn tour_length(inst: &Instance, order: &[u32]) -> Result<u64, Error> {
    check_permutation(order, inst.len())?;
    Ok(cycle_length(inst, order))
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Exact optimum by enumerating every order with city 0 fixed first.
pub fn brute_force_optimum(inst: &Instance) -> Result<Tour, Error> {
    let n = inst.len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::InstanceTooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut order: Vec<u32> = (0..n as u32).collect();
    let mut best = order.clone();
    let mut best_len = cycle_length(inst, &order);
    while next_permutation(&mut order[1..]) {
        let len = cycle_length(inst, &order);
        if len < best_len {
            best_len = len;
            best.copy_from_slice(&order);
        }
    }
    Ok(Tour {
        order: best,
        length: best_len,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn triangle() -> Instance {
        Instance::new("tri", vec![(0.0, 0.0), (3.0, 0.0), (0.0, 4.0)]).unwrap()
    }

    fn random_instance(n: usize, seed: u64) -> Instance {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::SmallRng::seed_from_u64(seed);
        let coords = (0..n)
            .map(|_| (rng.random_range(0.0..1000.0), rng.random_range(0.0..1000.0)))
            .collect();
        Instance::new("rand", coords).unwrap()
    }

    /// Held-Karp dynamic program over subsets, used only as an oracle.
    fn held_karp(inst: &Instance) -> u64 {
        let n = inst.len();
        let full = 1usize << (n - 1);
        let mut dp = vec![u64::MAX; full * (n - 1)];
        for j in 0..n - 1 {
            dp[(1 << j) * (n - 1) + j] = inst.dist(0, j + 1) as u64;
        }
        for mask in 1..full {
            for j in 0..n - 1 {
                let cur = dp[mask * (n - 1) + j];
                if mask & (1 << j) == 0 || cur == u64::MAX {
                    continue;
                }
                for k in 0..n - 1 {
                    if mask & (1 << k) != 0 {
                        continue;
                    }
                    let next = mask | (1 << k);
                    let cand = cur + inst.dist(j + 1, k + 1) as u64;
                    let slot = &mut dp[next * (n - 1) + k];
                    if cand < *slot {
                        *slot = cand;
                    }
                }
            }
        }
        (0..n - 1)
            .map(|j| dp[(full - 1) * (n - 1) + j] + inst.dist(j + 1, 0) as u64)
            .min()
            .unwrap()
    }

    #[test]
    fn triangle_length() {
        let inst = triangle();
        assert_eq!(tour_length(&inst, &[0, 1, 2]).unwrap(), 12);
        let best = brute_force_optimum(&inst).unwrap();
        assert_eq!(best.length(), 12);
    }

    #[test]
    fn unit_square_optimum_is_perimeter() {
        let inst = Instance::new("sq", vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
        let best = brute_force_optimum(&inst).unwrap();
        assert_eq!(best.length(), 4);
    }

    #[test]
    fn rejects_non_permutations() {
        let inst = triangle();
        assert!(tour_length(&inst, &[0, 1, 1]).is_err());
        assert!(tour_length(&inst, &[0, 1]).is_err());
        assert!(tour_length(&inst, &[0, 1, 3]).is_err());
        assert!(Tour::new(&inst, vec![2, 2, 0]).is_err());
    }

    #[test]
    fn brute_force_refuses_large() {
        let inst = random_instance(11, 1);
        assert!(matches!(
            brute_force_optimum(&inst),
            Err(Error::InstanceTooLarge { n: 11, .. })
        ));
    }

    #[test]
    fn seven_city_length_matches_reverse_summation() {
        let inst = random_instance(7, 7);
        let order = [3u32, 0, 6, 2, 5, 1, 4];
        // independent route: walk the cycle backwards
        let mut expected = 0u64;
        for k in (0..7).rev() {
            let a = order[k] as usize;
            let b = order[(k + 6) % 7] as usize;
            expected += inst.dist(a, b) as u64;
        }
        assert_eq!(tour_length(&inst, &order).unwrap(), expected);
    }

    #[test]
    fn brute_force_matches_held_karp() {
        for seed in 0..5 {
            let inst = random_instance(8, 100 + seed);
            assert_eq!(brute_force_optimum(&inst).unwrap().length(), held_karp(&inst));
        }
        let inst = random_instance(9, 42);
        assert_eq!(brute_force_optimum(&inst).unwrap().length(), held_karp(&inst));
    }

    proptest! {
        #[test]
        fn rotation_and_reversal_keep_length(seed in any::<u64>(), n in 3usize..40, rot in 0usize..40) {
            let inst = random_instance(n, seed);
            let mut order: Vec<u32> = (0..n as u32).collect();
            use rand::{seq::SliceRandom, SeedableRng};
            order.shuffle(&mut rand::rngs::SmallRng::seed_from_u64(seed ^ 0x5555));
            let base = tour_length(&inst, &order).unwrap();
            let mut rotated = order.clone();
            rotated.rotate_left(rot % n);
            prop_assert_eq!(tour_length(&inst, &rotated).unwrap(), base);
            order.reverse();
            prop_assert_eq!(tour_length(&inst, &order).unwrap(), base);
        }

        #[test]
        fn brute_force_is_a_lower_bound(seed in any::<u64>(), n in 3usize..8) {
            let inst = random_instance(n, seed);
            let best = brute_force_optimum(&inst).unwrap();
            let mut order: Vec<u32> = (0..n as u32).collect();
            use rand::{seq::SliceRandom, SeedableRng};
            order.shuffle(&mut rand::rngs::SmallRng::seed_from_u64(seed));
            prop_assert!(best.length() <= tour_length(&inst, &order).unwrap());
        }

        #[test]
        fn dist_is_symmetric(seed in any::<u64>(), i in 0usize..30, j in 0usize..30) {
            let inst = random_instance(30, seed);
            prop_assert_eq!(inst.dist(i, j), inst.dist(j, i));
            prop_assert_eq!(inst.dist(i, i), 0);
        }

        #[test]
        fn tsplib_round_trip(seed in any::<u64>(), n in 3usize..30) {
            let inst = random_instance(n, seed);
            let back = crate::instance::parse_tsplib(inst.to_tsplib().as_bytes()).unwrap();
            prop_assert_eq!(back.len(), inst.len());
            prop_assert_eq!(back.coords(), inst.coords());
        }
    }
}
