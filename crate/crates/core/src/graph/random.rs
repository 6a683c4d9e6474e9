use super::{ColorLists, Graph, LinearArrangement, Vertex};

/// SplitMix64 generator. Fully determined by its seed.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

/// Random simple graph: one draw per pair `u < v` in lexicographic order,
/// edge kept iff the draw is below `edge_probability`.
pub fn seeded_random_graph(n: usize, edge_probability: f64, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 1..=n as Vertex {
        for v in u + 1..=n as Vertex {
            if rng.next_f64() < edge_probability {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated graph is simple")
}

/// Uniform random arrangement (Fisher–Yates).
pub fn random_permutation(n: usize, rng: &mut SplitMix64) -> LinearArrangement {
    let mut order: Vec<Vertex> = (1..=n as Vertex).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        order.swap(i, j);
    }
    LinearArrangement::new(order).expect("shuffle is a permutation")
}

/// Random nonempty lists: each color kept with probability 1/2, falling
/// back to a single uniform color when nothing was kept.
pub fn random_lists(n: usize, q: u32, rng: &mut SplitMix64) -> ColorLists {
    let lists = (0..n)
        .map(|_| {
            let mut l: Vec<u32> = (1..=q).filter(|_| rng.next_u64() & 1 == 1).collect();
            if l.is_empty() {
                l.push(rng.below(q as u64) as u32 + 1);
            }
            l
        })
        .collect();
    ColorLists::from_lists(q, lists).expect("lists are nonempty and in range")
}
