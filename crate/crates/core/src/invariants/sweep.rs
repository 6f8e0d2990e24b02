//! `α_{m,k}` as a minimum of `α^Π` over weight sets of total size `k`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::group::alpha_pi;
use super::toric::alpha_toric;
use super::{AlphaValue, CompactificationData};
use crate::error::{Error, Result};
use crate::kernel::{Point, Rational};
use crate::rootsystem::{dominant_points, irrep_dimension, WeightSet};

/// How a weight set is measured against `k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DimensionMode {
    /// `|I|`, the number of isotypic blocks.
    BlockCount,
    /// `Σ (dim V_λ)²`, the dimension of the subspace.
    #[default]
    TrueDimension,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub mode: DimensionMode,
    pub threads: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { mode: DimensionMode::default(), threads: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MkResult {
    pub alpha: AlphaValue,
    pub weights: WeightSet,
    /// Number of dominant weights at level `m` that fit into `k`.
    pub candidates: usize,
}

struct Best {
    value: Rational,
    indices: Vec<usize>,
    alpha: AlphaValue,
}

struct Search<'a> {
    data: &'a CompactificationData,
    m: u32,
    items: Vec<Point>,
    sizes: Vec<u64>,
    single: Vec<AlphaValue>,
    /// A value no weight set can beat; reaching it ends the search.
    floor: Option<Rational>,
    best: Mutex<Option<Best>>,
    /// First index of a set that reached the floor; later branches are skipped.
    stop_after: AtomicUsize,
}

impl Search<'_> {
    fn current(&self) -> Option<Rational> {
        self.best.lock().unwrap().as_ref().map(|b| b.value.clone())
    }

    fn offer(&self, indices: &[usize], alpha: AlphaValue) {
        let mut best = self.best.lock().unwrap();
        let better = match best.as_ref() {
            None => true,
            Some(b) => (&alpha.value, indices) < (&b.value, b.indices.as_slice()),
        };
        if better {
            *best = Some(Best { value: alpha.value.clone(), indices: indices.to_vec(), alpha });
        }
    }

    fn evaluate(&self, indices: &[usize]) -> Result<AlphaValue> {
        if let [i] = indices {
            return Ok(self.single[*i].clone());
        }
        let ws = WeightSet::new_unchecked(
            self.data.root_data(),
            self.m,
            indices.iter().map(|&i| self.items[i].clone()).collect(),
        );
        alpha_pi(self.data, &ws)
    }

    fn pruned(&self, i: usize) -> bool {
        self.current().is_some_and(|b| self.single[i].value > b)
    }

    /// Depth-first over increasing index sequences; returns true once the floor is reached.
    fn dfs(&self, chosen: &mut Vec<usize>, start: usize, remaining: u64) -> Result<bool> {
        if remaining == 0 {
            let alpha = self.evaluate(chosen)?;
            let at_floor = self.floor.as_ref() == Some(&alpha.value);
            self.offer(chosen, alpha);
            if at_floor {
                self.stop_after.fetch_min(chosen[0], Ordering::SeqCst);
            }
            return Ok(at_floor);
        }
        for i in start..self.items.len() {
            if self.sizes[i] > remaining || self.pruned(i) {
                continue;
            }
            chosen.push(i);
            let done = self.dfs(chosen, i + 1, remaining - self.sizes[i])?;
            chosen.pop();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn branch(&self, first: usize, k: u64) -> Result<()> {
        if first > self.stop_after.load(Ordering::SeqCst) || self.sizes[first] > k || self.pruned(first) {
            return Ok(());
        }
        let mut chosen = vec![first];
        self.dfs(&mut chosen, first + 1, k - self.sizes[first]).map(|_| ())
    }
}

/// `min α^Π` over weight sets `I ⊆ mP₊ ∩ 𝔐` of size `k` (per `mode`), ties to the
/// lexicographically smallest `I`.
///
/// Any weight whose singleton value already exceeds the best set found is
/// skipped: a larger hull can only raise `α^Π`.
pub fn alpha_mk(data: &CompactificationData, m: u32, k: u64, opts: SweepOptions) -> Result<MkResult> {
    if m == 0 || k == 0 {
        return Err(Error::Precondition("m and k must be positive".into()));
    }
    let rd = data.root_data();
    let mut items = Vec::new();
    let mut sizes = Vec::new();
    for p in dominant_points(rd, data.polytope(), m)? {
        let size = match opts.mode {
            DimensionMode::BlockCount => 1,
            DimensionMode::TrueDimension => irrep_dimension(rd, &p)?.pow(2),
        };
        if size <= k {
            items.push(p);
            sizes.push(size);
        }
    }
    let floor = if data.is_toric() && data.is_fano() { Some(alpha_toric(data.polytope())?.value) } else { None };

    let run = || -> Result<MkResult> {
        let single_of = |p: &Point| alpha_pi(data, &WeightSet::new_unchecked(rd, m, vec![p.clone()]));
        let single: Vec<AlphaValue> = if opts.threads > 1 {
            items.par_iter().map(single_of).collect::<Result<_>>()?
        } else {
            items.iter().map(single_of).collect::<Result<_>>()?
        };
        let search = Search {
            data,
            m,
            items: items.clone(),
            sizes: sizes.clone(),
            single,
            floor: floor.clone(),
            best: Mutex::new(None),
            stop_after: AtomicUsize::new(usize::MAX),
        };
        if opts.threads > 1 {
            (0..items.len()).into_par_iter().try_for_each(|i| search.branch(i, k))?;
        } else {
            for i in 0..items.len() {
                search.branch(i, k)?;
            }
        }
        let best = search.best.into_inner().unwrap().ok_or(Error::EmptyGrassmannian { m, k })?;
        let weights = WeightSet::new_unchecked(rd, m, best.indices.iter().map(|&i| items[i].clone()).collect());
        Ok(MkResult { alpha: best.alpha, weights, candidates: items.len() })
    };

    if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
        pool.install(run)
    } else {
        run()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::ratio;
    use crate::polytope::HPolytope;
    use crate::rootsystem::{build_root_data, NamedFactor, RootData, RootSpec, RootType};

    fn gl2() -> CompactificationData {
        let rd =
            build_root_data(2, &RootSpec::Named(vec![NamedFactor { kind: RootType::A, n: 1, offset: 0 }])).unwrap();
        let p =
            HPolytope::from_integer_pairs(2, &[(1, &[1, 1]), (1, &[-1, -1]), (2, &[-1, 0]), (2, &[0, -1])]).unwrap();
        CompactificationData::new(rd, p, None, true).unwrap()
    }

    fn toric(pairs: &[(i64, &[i64])]) -> CompactificationData {
        CompactificationData::new(RootData::toric(2), HPolytope::from_integer_pairs(2, pairs).unwrap(), None, true)
            .unwrap()
    }

    fn pentagon() -> CompactificationData {
        toric(&[(1, &[-1, -1]), (1, &[-1, 0]), (1, &[0, -1]), (1, &[1, 0]), (1, &[0, 1])])
    }

    #[test]
    fn gl2_k1() {
        let r = alpha_mk(&gl2(), 2, 1, SweepOptions::default()).unwrap();
        assert_eq!(r.alpha.value, ratio(2, 5));
        assert_eq!(r.weights.weights(), &[Point::from_ints(&[-1, -1])]);
        assert_eq!(r.candidates, 3);
        assert_eq!(alpha_mk(&gl2(), 4, 1, SweepOptions::default()).unwrap().alpha.value, ratio(2, 5));
    }

    #[test]
    fn toric_values() {
        let sq = toric(&[(1, &[1, 0]), (1, &[-1, 0]), (1, &[0, 1]), (1, &[0, -1])]);
        assert_eq!(alpha_mk(&sq, 1, 1, SweepOptions::default()).unwrap().alpha.value, ratio(1, 2));
        let r = alpha_mk(&pentagon(), 1, 2, SweepOptions::default()).unwrap();
        assert_eq!(r.alpha.value, ratio(1, 2));
    }

    #[test]
    fn empty_grassmannian() {
        // far more than the total dimension available at level 1
        let r = alpha_mk(&gl2(), 1, 1000, SweepOptions::default());
        assert!(matches!(r, Err(Error::EmptyGrassmannian { m: 1, k: 1000 })));
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = alpha_mk(&pentagon(), 2, 2, SweepOptions::default()).unwrap();
        let par = alpha_mk(&pentagon(), 2, 2, SweepOptions { threads: 4, ..SweepOptions::default() }).unwrap();
        assert_eq!(seq, par);
    }
}
