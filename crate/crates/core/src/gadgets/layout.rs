//! Indexing of `W = {t} ∪ ⋃_z W_z` with `W_z = (F_ρ × {0..b})^a`.
//!
//! `t` is vertex 0. A point of `W_z` is a tuple of `a` digits, digit
//! `r (b+1) + β` for the pair `(r, β)`, read most-significant first in base
//! `ρ (b+1)` and offset by `1 + z ρ^a (b+1)^a`.

/// A decoded vertex of `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WCoordinate {
    Sentinel,
    Point { block: usize, coords: Vec<(u64, u64)> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WLayout {
    pub rho: u64,
    pub b: usize,
    pub a: usize,
    pub h: usize,
}

impl WLayout {
    pub const SENTINEL: usize = 0;

    /// Radix `ρ (b+1)` of one coordinate.
    pub fn radix(&self) -> usize {
        self.rho as usize * (self.b + 1)
    }

    /// `|W_z| = (ρ (b+1))^a`.
    pub fn block_len(&self) -> usize {
        self.radix().pow(self.a as u32)
    }

    /// `|W| = 1 + h (ρ (b+1))^a`, saturating.
    pub fn total_u128(&self) -> u128 {
        let block = (0..self.a).fold(1u128, |acc, _| acc.saturating_mul(self.radix() as u128));
        block.saturating_mul(self.h as u128).saturating_add(1)
    }

    pub fn total(&self) -> usize {
        1 + self.h * self.block_len()
    }

    /// Distance between consecutive values of coordinate `i` (0-based).
    pub fn stride(&self, i: usize) -> usize {
        self.radix().pow((self.a - 1 - i) as u32)
    }

    pub fn block_offset(&self, z: usize) -> usize {
        1 + z * self.block_len()
    }

    pub fn encode(&self, block: usize, coords: &[(u64, u64)]) -> usize {
        debug_assert_eq!(coords.len(), self.a);
        let mut id = 0usize;
        for &(r, beta) in coords {
            debug_assert!(r < self.rho && beta <= self.b as u64);
            id = id * self.radix() + (r as usize) * (self.b + 1) + beta as usize;
        }
        self.block_offset(block) + id
    }

    pub fn decode(&self, id: usize) -> WCoordinate {
        if id == Self::SENTINEL {
            return WCoordinate::Sentinel;
        }
        let block = (id - 1) / self.block_len();
        let mut rest = (id - 1) % self.block_len();
        let mut coords = vec![(0, 0); self.a];
        for slot in coords.iter_mut().rev() {
            let digit = rest % self.radix();
            rest /= self.radix();
            *slot = ((digit / (self.b + 1)) as u64, (digit % (self.b + 1)) as u64);
        }
        WCoordinate::Point { block, coords }
    }

    /// `f̂(v)`: the point of `Ŵ_z` with coordinates `(f[i], 0)`.
    pub fn hat(&self, block: usize, f: &[u64]) -> usize {
        let coords: Vec<(u64, u64)> = f.iter().map(|&r| (r, 0)).collect();
        self.encode(block, &coords)
    }

    /// All points of `Ŵ_z` (every `β` zero), ascending.
    pub fn hat_points(&self, block: usize) -> Vec<usize> {
        let mut out = vec![self.block_offset(block)];
        for i in 0..self.a {
            let stride = self.stride(i) * (self.b + 1);
            out = out
                .iter()
                .flat_map(|&base| (0..self.rho as usize).map(move |r| base + r * stride))
                .collect();
        }
        out.sort_unstable();
        out
    }
}
