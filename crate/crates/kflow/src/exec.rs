//! Data-parallel execution with a sequential fallback.
//!
//! Every Monte Carlo scan in this crate is expressed as an order-preserving
//! map over work items (usually sample chunks). With the `parallel` feature
//! the map runs on rayon; without it the same closure runs sequentially.
//! Because results are collected in item order and reduced sequentially,
//! output is bitwise identical regardless of feature or worker count.
//!
//! Reproducible randomness: each chunk draws from its own ChaCha8 stream,
//! derived from the experiment seed and the chunk index. Fixing the seed and
//! the chunk size therefore fixes every random number in the run.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Order-preserving indexed map, parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// Order-preserving indexed map (sequential build).
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Sequential map, always available; used by benches to compare against the
/// parallel path and by tests to assert bitwise equality.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// RNG for chunk `chunk` of the stream family `family`, derived from `seed`.
///
/// ChaCha streams are independent per (seed, stream) pair; the family tag
/// keeps different suites of the same run from sharing a stream.
pub fn chunk_rng(seed: u64, family: u32, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((family as u64) << 40) ^ chunk);
    rng
}

/// Split `total` items into chunks of at most `chunk_size`, returning
/// `(chunk_index, start, len)` descriptors.
pub fn chunks(total: usize, chunk_size: usize) -> Vec<(u64, usize, usize)> {
    assert!(chunk_size > 0);
    let mut out = Vec::with_capacity(total.div_ceil(chunk_size));
    let mut start = 0usize;
    let mut idx = 0u64;
    while start < total {
        let len = chunk_size.min(total - start);
        out.push((idx, start, len));
        start += len;
        idx += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn parallel_and_sequential_agree_bitwise() {
        let work = |i: usize| {
            let mut rng = chunk_rng(42, 7, i as u64);
            (0..100).map(|_| rng.gen::<f64>()).sum::<f64>()
        };
        let a = map_indexed(16, work);
        let b = map_indexed_seq(16, work);
        assert_eq!(a, b);
    }

    #[test]
    fn chunk_layout_covers_everything_once() {
        let cs = chunks(1003, 256);
        assert_eq!(cs.len(), 4);
        assert_eq!(cs.iter().map(|c| c.2).sum::<usize>(), 1003);
        assert_eq!(cs.last().unwrap().2, 1003 - 3 * 256);
    }

    #[test]
    fn distinct_chunks_get_distinct_streams() {
        let mut a = chunk_rng(1, 0, 0);
        let mut b = chunk_rng(1, 0, 1);
        let xs: Vec<f64> = (0..4).map(|_| a.gen()).collect();
        let ys: Vec<f64> = (0..4).map(|_| b.gen()).collect();
        assert_ne!(xs, ys);
    }
}
