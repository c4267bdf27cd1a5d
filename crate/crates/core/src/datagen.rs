//! Seeded random point sets.
//!
//! The stream comes from ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`)
//! and is reduced to a range with Lemire's widening-multiply rejection
//! method, both implemented here on raw `u64` draws so the output depends on
//! nothing but the seed.

use std::collections::HashSet;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{Coord, COORD_LIMIT};

pub const DEFAULT_COORD_MAX: i64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("cannot place {n} distinct points on a {coord_max}x{coord_max} grid")]
    Infeasible { n: usize, coord_max: i64 },
    #[error("coord_max must be in 1..={COORD_LIMIT}, got {0}")]
    BadRange(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    /// Exclusive upper bound on both coordinates; the lower bound is 0.
    pub coord_max: i64,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(n: usize, coord_max: i64, seed: u64) -> Self {
        GenSpec { n, coord_max, seed }
    }
}

/// Uniform draw from `0..bound`, `bound > 0`.
fn below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    let threshold = bound.wrapping_neg() % bound;
    loop {
        let m = rng.next_u64() as u128 * bound as u128;
        if (m as u64) >= threshold {
            return (m >> 64) as u64;
        }
    }
}

/// Exactly `spec.n` distinct points, uniform over `[0, coord_max)^2`, in draw
/// order. Repeated draws are rejected.
pub fn generate(spec: GenSpec) -> Result<Vec<Coord>, GenError> {
    if spec.coord_max < 1 || spec.coord_max > COORD_LIMIT {
        return Err(GenError::BadRange(spec.coord_max));
    }
    let cells = (spec.coord_max as u128) * (spec.coord_max as u128);
    if spec.n as u128 > cells {
        return Err(GenError::Infeasible {
            n: spec.n,
            coord_max: spec.coord_max,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let bound = spec.coord_max as u64;
    let mut seen = HashSet::with_capacity(spec.n);
    let mut out = Vec::with_capacity(spec.n);
    while out.len() < spec.n {
        let x = below(&mut rng, bound) as i64;
        let y = below(&mut rng, bound) as i64;
        let c = Coord::new(x, y);
        if seen.insert(c) {
            out.push(c);
        }
    }
    Ok(out)
}
