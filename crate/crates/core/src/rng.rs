use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random stream for Monte-Carlo task `task` of a run seeded with `seed`.
///
/// Streams depend only on `(seed, task)`, so tasks can be evaluated in any order.
pub fn task_rng(seed: u64, task: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(task);
    rng
}
