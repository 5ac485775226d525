//! Counter-based random streams for order-independent parallel sampling.
//!
//! Every `(seed, path, cell)` triple names its own logical stream: the
//! three levels are folded into a 64-bit key, and the `i`-th output is a
//! bijective mix of `key + i * gamma` (the splitmix64 construction, which
//! passes standard statistical batteries).  Because outputs depend only on
//! the key and a local counter, a simulation can hand each path-and-cell
//! task its own stream and produce bit-identical batches no matter how the
//! tasks are scheduled across threads, and no matter how many draws a
//! neighboring cell consumed.

use std::convert::Infallible;

use rand::rand_core::TryRng;

/// Weyl increment used by splitmix64 (the odd integer closest to
/// 2^64 / golden ratio).
const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
/// A second odd constant for folding the cell level, so that
/// `(path + 1, cell)` and `(path, cell + k)` never alias by construction.
const CELL_SALT: u64 = 0xD1B5_4A32_D192_ED03;

/// The splitmix64 finalizer: an invertible avalanche mix of 64 bits.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A deterministic, splittable random stream addressed by
/// `(seed, path, cell)`.
#[derive(Debug, Clone)]
pub struct CounterRng {
    key: u64,
    counter: u64,
}

impl CounterRng {
    /// Open the stream for one `(path, cell)` task under a global seed.
    pub fn new(seed: u64, path: u64, cell: u64) -> Self {
        let k = mix(seed).wrapping_add(path.wrapping_mul(GAMMA));
        let k = mix(k).wrapping_add(cell.wrapping_mul(CELL_SALT));
        CounterRng { key: mix(k), counter: 0 }
    }

    fn next(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix(self.key.wrapping_add(self.counter.wrapping_mul(GAMMA)))
    }
}

impl TryRng for CounterRng {
    type Error = Infallible;

    fn try_next_u32(&mut self) -> Result<u32, Infallible> {
        Ok((self.next() >> 32) as u32)
    }

    fn try_next_u64(&mut self) -> Result<u64, Infallible> {
        Ok(self.next())
    }

    fn try_fill_bytes(&mut self, dst: &mut [u8]) -> Result<(), Infallible> {
        for chunk in dst.chunks_mut(8) {
            let bytes = self.next().to_le_bytes();
            chunk.copy_from_slice(&bytes[..chunk.len()]);
        }
        Ok(())
    }
}
