use super::{EmbedError, Embedder};

/// Sizes whose flows fix the congestion constant: every host size the
/// embedding reaches for `k <= 35`, plus 16 and 32.
pub const CALIBRATION_SIZES: [usize; 9] = [2, 3, 4, 5, 6, 7, 8, 16, 32];

#[derive(Debug, Clone, PartialEq)]
pub struct FlowCalibration {
    pub l: usize,
    pub delta_hat: f64,
    pub lp_optimum: f64,
    pub congestion: f64,
    /// `congestion / (l ln l)`.
    pub ratio: f64,
}

pub fn calibrate_flow(embedder: &mut Embedder, sizes: &[usize]) -> Result<Vec<FlowCalibration>, EmbedError> {
    sizes
        .iter()
        .map(|&l| {
            let routing = embedder.routing(l)?;
            let congestion = routing.flow.congestion();
            let scale = l as f64 * (l as f64).ln();
            Ok(FlowCalibration {
                l,
                delta_hat: routing.expander.delta_hat,
                lp_optimum: routing.flow.lp_optimum,
                congestion,
                ratio: if scale > 0.0 { congestion / scale } else { f64::INFINITY },
            })
        })
        .collect()
}

/// Smallest constant `c >= 1` covering every measured ratio, rounded up to
/// two decimals.
pub fn fitted_constant(rows: &[FlowCalibration]) -> f64 {
    let worst = rows.iter().map(|r| r.ratio).fold(1.0, f64::max);
    (worst * 100.0).ceil() / 100.0
}
