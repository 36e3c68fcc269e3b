//! Run configuration: oracle caps and the calibration slots for the
//! existential constants of the embedding analysis.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Limits on brute-force enumeration. Exceeding one yields
/// [`OracleError::CapExceeded`](crate::OracleError::CapExceeded).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Maximum vertex count for the CMC subset enumeration.
    pub cmc_vertices: usize,
    /// Maximum number of `a`-subsets of colors for the DCMC oracle.
    pub dual_combinations: u128,
    /// Maximum `n^h` for the PSI oracle.
    pub psi_assignments: u128,
    /// Maximum product of domain sizes for the CSP oracle.
    pub csp_product: u128,
    /// Maximum variable count for the SAT oracle.
    pub sat_variables: usize,
    /// Largest expander size certified by exhaustive subset enumeration.
    pub expander_exhaustive: usize,
    /// Largest product domain materialized while routing a CSP.
    pub routed_domain: u128,
    /// Largest vertex set `W` the gadget reduction will build.
    pub gadget_vertices: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            cmc_vertices: 24,
            dual_combinations: 1_000_000,
            psi_assignments: 1_000_000,
            csp_product: 1_000_000,
            sat_variables: 20,
            expander_exhaustive: 16,
            routed_domain: 1_000_000,
            gadget_vertices: 20_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub seed: u64,
    pub caps: Caps,
    /// Flow-congestion constant: min-congestion flows on the certified
    /// expanders stay below `c_hat * l * ln l`. Pinned by `calibrate`.
    pub c_hat: f64,
    /// Depth constant of the embedding bound `C (1 + (n+m)/k) ln k`.
    /// `None` derives it from `c_hat` as `120 c_hat + 6`.
    pub big_c_hat: Option<f64>,
    /// Target edge expansion certified for every expander.
    pub delta_target: f64,
    /// Embedding attempts per call of the retrying wrapper.
    pub retries: u32,
    /// Relative tolerance for LP optimality and flow normalization.
    pub lp_tolerance: f64,
    /// Seed for expander sampling; fixed so flows can be cached per size.
    pub expander_seed: u64,
    /// Resampling attempts before the deterministic expander fallback.
    pub expander_retries: u32,
}

/// Calibrated flow constant. `labelcut calibrate` recomputes the ratio
/// `congestion / (l ln l)` on the default expanders for
/// l in {2, .., 8, 16, 32}; the maximum is 2.164 at l = 2 (the single
/// edge, congestion 3), rounded up here.
pub const CALIBRATED_C_HAT: f64 = 2.17;

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            caps: Caps::default(),
            c_hat: CALIBRATED_C_HAT,
            big_c_hat: None,
            delta_target: 0.1,
            retries: 20,
            lp_tolerance: 1e-6,
            expander_seed: 0x5eed_e4a9,
            expander_retries: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("cap `{0}` must be positive")]
    NonPositiveCap(&'static str),
    #[error("LP tolerance {0} outside (0, 0.1]")]
    Tolerance(f64),
    #[error("constant `{0}` must be positive and finite")]
    Constant(&'static str),
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let c = &self.caps;
        let caps: [(&'static str, bool); 8] = [
            ("cmc_vertices", c.cmc_vertices > 0),
            ("dual_combinations", c.dual_combinations > 0),
            ("psi_assignments", c.psi_assignments > 0),
            ("csp_product", c.csp_product > 0),
            ("sat_variables", c.sat_variables > 0),
            ("expander_exhaustive", c.expander_exhaustive > 0),
            ("routed_domain", c.routed_domain > 0),
            ("gadget_vertices", c.gadget_vertices > 0),
        ];
        if let Some((name, _)) = caps.iter().find(|(_, ok)| !ok) {
            return Err(ConfigError::NonPositiveCap(name));
        }
        if !(self.lp_tolerance > 0.0 && self.lp_tolerance <= 0.1) {
            return Err(ConfigError::Tolerance(self.lp_tolerance));
        }
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(self.c_hat) {
            return Err(ConfigError::Constant("c_hat"));
        }
        if !positive(self.delta_target) {
            return Err(ConfigError::Constant("delta_target"));
        }
        if let Some(big) = self.big_c_hat {
            if !positive(big) {
                return Err(ConfigError::Constant("big_c_hat"));
            }
        }
        Ok(())
    }

    /// The depth constant actually used: explicit value or `120 c_hat + 6`.
    pub fn depth_constant(&self) -> f64 {
        self.big_c_hat.unwrap_or(120.0 * self.c_hat + 6.0)
    }
}
