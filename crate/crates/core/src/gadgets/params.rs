use super::GadgetError;
use crate::instances::PsiInstance;

/// Parameters of one reduction run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetParams {
    /// The prime `ρ`.
    pub rho: u64,
    /// Number of pattern edges `a`.
    pub a: usize,
    /// `b = 2a`, the length of the concatenated field vectors.
    pub b: usize,
    /// Number of pattern vertices `h`.
    pub h: usize,
    /// Block size `n`.
    pub n: usize,
    /// Pattern edges `e_1..e_a` in lexicographic order, each with `x < y`.
    pub edge_order: Vec<(usize, usize)>,
    /// `f_x(v)` for every host vertex `v` (indexed by host vertex): an
    /// `a`-tuple over `{1, .., ρ-1}`.
    pub f_maps: Vec<Vec<u64>>,
}

impl GadgetParams {
    /// `g_xy(v_x v_y) = f_x(v_x) ∘ f_y(v_y)`, of length `b`.
    pub fn g_vector(&self, vx: usize, vy: usize) -> Vec<u64> {
        let mut g = self.f_maps[vx].clone();
        g.extend_from_slice(&self.f_maps[vy]);
        g
    }
}

fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_sat(base: u64, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

/// Smallest `m` with `m^a >= n`, i.e. `⌈n^(1/a)⌉`.
fn ceil_root(n: usize, a: usize) -> u64 {
    let mut m = 1u64;
    while pow_sat(m, a) < n as u128 {
        m += 1;
    }
    m
}

/// Smallest prime `ρ` with `⌈n^(1/a)⌉ < ρ <= 2⌈n^(1/a)⌉`.
///
/// The returned prime satisfies `(ρ-1)^a >= n` and `ρ^(2a) >= n^2`.
pub fn choose_prime(n: usize, a: usize) -> Result<u64, GadgetError> {
    assert!(n >= 1 && a >= 1, "choose_prime needs n >= 1 and a >= 1");
    let m = ceil_root(n, a);
    let rho = (m + 1..=2 * m)
        .find(|&r| is_prime(r))
        .ok_or(GadgetError::NoPrimeInRange { low: m, high: 2 * m })?;
    assert!(pow_sat(rho - 1, a) >= n as u128, "(rho-1)^a >= n");
    assert!(pow_sat(rho, 2 * a) >= (n as u128) * (n as u128), "rho^b >= n^2");
    Ok(rho)
}

/// Lexicographic injective maps: the `i`-th vertex of each block (ascending)
/// gets the `i`-th tuple of `(F*_ρ)^a` in lexicographic order.
pub fn build_f_maps(inst: &PsiInstance, rho: u64, a: usize) -> Vec<Vec<u64>> {
    let n = inst.block_size();
    assert!(pow_sat(rho - 1, a) >= n as u128, "(rho-1)^a must be at least n");
    let mut maps = vec![Vec::new(); inst.host().vertex_count()];
    for block in inst.blocks() {
        for (i, &v) in block.iter().enumerate() {
            maps[v] = lex_tuple(i as u64, rho - 1, a);
        }
    }
    maps
}

/// The `index`-th tuple of `{1..=base}^len` in lexicographic order.
fn lex_tuple(mut index: u64, base: u64, len: usize) -> Vec<u64> {
    let mut digits = vec![0u64; len];
    for slot in digits.iter_mut().rev() {
        *slot = index % base + 1;
        index /= base;
    }
    digits
}
