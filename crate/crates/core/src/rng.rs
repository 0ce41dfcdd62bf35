//! Uniform random sources.
//!
//! The optimizers consume a single primitive, [`RandomStream::next_uniform`].
//! Discrete choices (the partner index and the factor `T`) are derived from
//! one uniform draw each, so a run is fully described by its sequence of
//! uniforms. That makes a run reproducible from a seed and lets tests replay
//! hand-picked sequences through [`ScriptedStream`].

use alloc::vec::Vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Error;

pub trait RandomStream {
    /// Next value in `[0, 1)`.
    fn next_uniform(&mut self) -> Result<f64, Error>;
}

impl<R: RandomStream + ?Sized> RandomStream for &mut R {
    fn next_uniform(&mut self) -> Result<f64, Error> {
        (**self).next_uniform()
    }
}

/// ChaCha8 backed stream; identical seeds give identical sequences.
#[derive(Debug, Clone)]
pub struct SeededStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl SeededStream {
    pub fn new(seed: u64) -> Self {
        Self { seed, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl RandomStream for SeededStream {
    #[inline]
    fn next_uniform(&mut self) -> Result<f64, Error> {
        Ok(self.rng.random::<f64>())
    }
}

/// Replays a fixed list of values and fails once it runs dry.
///
/// Values are returned as given. Scripts may use `1.0` to hit the closed end
/// of a formula even though a seeded stream never produces it.
#[derive(Debug, Clone, Default)]
pub struct ScriptedStream {
    values: Vec<f64>,
    cursor: usize,
}

impl ScriptedStream {
    pub fn new(values: impl Into<Vec<f64>>) -> Self {
        Self { values: values.into(), cursor: 0 }
    }

    pub fn push(&mut self, value: f64) -> &mut Self {
        self.values.push(value);
        self
    }

    /// Appends the draw that selects partner `partner` for candidate `k` in a
    /// population of `n`.
    pub fn push_partner(&mut self, k: usize, partner: usize, n: usize) -> &mut Self {
        self.push(partner_draw(k, partner, n))
    }

    /// Appends the draw that selects factor `t` (1 or 2).
    pub fn push_factor(&mut self, t: u8) -> &mut Self {
        self.push(factor_draw(t))
    }

    pub fn consumed(&self) -> usize {
        self.cursor
    }

    pub fn remaining(&self) -> usize {
        self.values.len() - self.cursor
    }
}

impl RandomStream for ScriptedStream {
    fn next_uniform(&mut self) -> Result<f64, Error> {
        let value = *self.values.get(self.cursor).ok_or(Error::StreamExhausted { consumed: self.cursor })?;
        self.cursor += 1;
        Ok(value)
    }
}

/// Draws a partner index uniformly from `{0..n} \ {k}`.
pub(crate) fn draw_partner<R: RandomStream + ?Sized>(rng: &mut R, k: usize, n: usize) -> Result<usize, Error> {
    let u = rng.next_uniform()?;
    let slots = n - 1;
    // `as usize` saturates, the `min` guards scripted values of exactly 1.0
    let idx = ((u * slots as f64) as usize).min(slots - 1);
    Ok(if idx >= k { idx + 1 } else { idx })
}

/// Draws `T` from {1, 2}: `u < 0.5` gives 1.
pub(crate) fn draw_factor<R: RandomStream + ?Sized>(rng: &mut R) -> Result<f64, Error> {
    Ok(if rng.next_uniform()? < 0.5 { 1.0 } else { 2.0 })
}

/// Uniform value that [`draw_partner`] maps to `partner` for candidate `k`.
///
/// # Panics
/// If `partner == k` or either index is out of range.
pub fn partner_draw(k: usize, partner: usize, n: usize) -> f64 {
    assert!(partner != k && partner < n && k < n, "invalid partner {partner} for {k} of {n}");
    let idx = if partner > k { partner - 1 } else { partner };
    (idx as f64 + 0.5) / (n - 1) as f64
}

/// Uniform value that [`draw_factor`] maps to `t`.
pub fn factor_draw(t: u8) -> f64 {
    match t {
        1 => 0.25,
        2 => 0.75,
        _ => panic!("factor must be 1 or 2, got {t}"),
    }
}
