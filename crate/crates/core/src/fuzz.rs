//! Seeded random monomial algebras.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::MonomialAlgebra;
use crate::quiver::{Arrow, Path, Quiver, VertexId};

pub const DEFAULT_SEED: u64 = 0xF5BCA;
pub const RESAMPLE_BUDGET: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_generator_len: usize,
    pub dim_cap: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: DEFAULT_SEED,
            count: 200,
            max_vertices: 5,
            max_arrows: 8,
            max_generator_len: 4,
            dim_cap: 60,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_vertices == 0 {
            return Err(Error::InvalidInput("max vertices must be at least 1".into()));
        }
        if self.max_generator_len < 2 {
            return Err(Error::InvalidInput("max generator length must be at least 2".into()));
        }
        if self.dim_cap == 0 {
            return Err(Error::InvalidInput("dimension cap must be at least 1".into()));
        }
        Ok(())
    }
}

fn sample(rng: &mut ChaCha8Rng, config: &FuzzConfig) -> Result<MonomialAlgebra> {
    let n = rng.gen_range(1..=config.max_vertices);
    let m = rng.gen_range(0..=config.max_arrows);
    let vertices = (1..=n).map(|i| i.to_string()).collect();
    let arrows = (0..m)
        .map(|i| Arrow {
            name: format!("a{}", i + 1),
            source: VertexId(rng.gen_range(0..n)),
            target: VertexId(rng.gen_range(0..n)),
        })
        .collect();
    let q = Quiver::new(vertices, arrows)?;
    let mut gens = Vec::new();
    if m > 0 {
        let walks = rng.gen_range(m..=3 * m);
        for _ in 0..walks {
            let len = rng.gen_range(2..=config.max_generator_len);
            let mut p = Path::trivial(VertexId(rng.gen_range(0..n)));
            for _ in 0..len {
                let out = q.out_arrows(p.target());
                if out.is_empty() {
                    break;
                }
                let a = out[rng.gen_range(0..out.len())];
                p = p.then(&q, a).expect("arrow leaves the target");
            }
            if p.len() >= 2 {
                gens.push(p);
            }
        }
    }
    MonomialAlgebra::with_cap(q, gens, config.dim_cap)
}

/// The instance with the given index. Each attempt uses its own ChaCha
/// stream, so instances do not depend on each other.
pub fn generate_monomial_algebra(config: &FuzzConfig, index: usize) -> Result<MonomialAlgebra> {
    config.validate()?;
    for attempt in 0..RESAMPLE_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream((index as u64) * 1001 + attempt as u64);
        match sample(&mut rng, config) {
            Ok(a) => return Ok(a),
            Err(Error::NotFiniteDimensional { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ResampleBudgetExceeded { index, attempts: RESAMPLE_BUDGET })
}

pub fn generate_all(config: &FuzzConfig) -> Result<Vec<MonomialAlgebra>> {
    (0..config.count).map(|i| generate_monomial_algebra(config, i)).collect()
}
