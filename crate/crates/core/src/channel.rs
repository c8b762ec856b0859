//! Wideband clustered geometric mmWave channel generation.
//!
//! A realization consists of `L` clusters of `R` rays each. Every ray
//! carries a complex gain, a delay bounded by the cyclic prefix, and a
//! pair of departure/arrival angles drawn around its cluster center.
//! The per-subcarrier frequency response `H[k]` is the sum of the
//! rank-1 ray contributions with a delay-dependent phase ramp.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{CMat, CVec, Cpx};

/// Scenario parameters for one link.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelConfig {
    /// BS (transmit) antenna count.
    pub n_bs: usize,
    /// MS (receive) antenna count.
    pub n_ms: usize,
    /// Number of OFDM subcarriers K.
    pub k_subcarriers: usize,
    /// Cyclic prefix length D in samples; bounds the path delays.
    pub cp_length: usize,
    /// Number of clusters L.
    pub n_clusters: usize,
    /// Rays per cluster R.
    pub rays_per_cluster: usize,
    /// Per-cluster angle spread in degrees. This is the *scale*
    /// parameter of the Laplacian offset distribution, not its
    /// standard deviation.
    pub angle_spread_deg: f64,
    /// Sample period T_s. Only the ratio delay/T_s matters, so 1.0 is
    /// a fine default.
    pub sample_period: f64,
}

impl ChannelConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.n_bs < 1 || self.n_ms < 1 {
            return Err("antenna counts must be >= 1".into());
        }
        if self.k_subcarriers < 1 || self.cp_length < 1 {
            return Err("k_subcarriers and cp_length must be >= 1".into());
        }
        if self.cp_length >= self.k_subcarriers {
            return Err(format!(
                "cp_length ({}) must be smaller than k_subcarriers ({})",
                self.cp_length, self.k_subcarriers
            ));
        }
        if self.n_clusters < 1 || self.rays_per_cluster < 1 {
            return Err("cluster and ray counts must be >= 1".into());
        }
        if !(self.angle_spread_deg > 0.0) {
            return Err("angle_spread_deg must be > 0".into());
        }
        if !(self.sample_period > 0.0) {
            return Err("sample_period must be > 0".into());
        }
        Ok(())
    }

    /// Maximum resolvable delay D * T_s.
    pub fn max_delay(&self) -> f64 {
        self.cp_length as f64 * self.sample_period
    }
}

/// One propagation ray.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ray {
    /// Complex gain alpha.
    pub gain: Cpx,
    /// Delay in seconds, within [0, D * T_s].
    pub delay: f64,
    /// Angle of departure (BS side), radians.
    pub aod: f64,
    /// Angle of arrival (MS side), radians.
    pub aoa: f64,
}

/// Rays grouped by the cluster they belong to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub center_aod: f64,
    pub center_aoa: f64,
    pub rays: Vec<Ray>,
}

/// All rays of one channel realization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathSet {
    pub clusters: Vec<Cluster>,
}

impl PathSet {
    pub fn n_rays(&self) -> usize {
        self.clusters.iter().map(|c| c.rays.len()).sum()
    }

    pub fn rays(&self) -> impl Iterator<Item = &Ray> {
        self.clusters.iter().flat_map(|c| c.rays.iter())
    }
}

/// Per-subcarrier channel matrices together with their generating rays.
#[derive(Debug, Clone)]
pub struct ChannelRealization {
    /// H[k], k = 0..K-1, each N_MS x N_BS.
    pub h: Vec<CMat>,
    pub source: PathSet,
    pub config: ChannelConfig,
}

/// ULA steering vector `a(theta)` with half-wavelength spacing.
///
/// Entry `m` is `exp(j * pi * m * sin(theta))`; every entry has unit
/// modulus, so `||a||^2 = n`.
pub fn ula_response(angle: f64, n: usize) -> CVec {
    let s = PI * angle.sin();
    CVec::from_fn(n, |m, _| Cpx::from_polar(1.0, s * m as f64))
}

/// Draw one Laplacian offset with scale `b` (inverse-CDF sampling).
fn laplacian(rng: &mut impl Rng, b: f64) -> f64 {
    let u: f64 = rng.gen::<f64>() - 0.5;
    let t = (1.0 - 2.0 * u.abs()).max(f64::MIN_POSITIVE);
    -b * u.signum() * t.ln()
}

/// Standard circular complex Gaussian, unit variance.
fn cn_gain(rng: &mut impl Rng) -> Cpx {
    let re: f64 = rng.sample(rand_distr::StandardNormal);
    let im: f64 = rng.sample(rand_distr::StandardNormal);
    Cpx::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Sample the ray parameters of one realization.
///
/// Cluster centers are uniform on [0, 2*pi) for both AoA and AoD; each
/// ray offsets both angles by independent Laplacian deviations with the
/// configured spread. Gains are i.i.d. CN(0, 1); delays are i.i.d.
/// uniform on [0, D * T_s].
pub fn sample_paths(config: &ChannelConfig, rng: &mut impl Rng) -> PathSet {
    let spread = config.angle_spread_deg.to_radians();
    let max_delay = config.max_delay();
    let clusters = (0..config.n_clusters)
        .map(|_| {
            let center_aoa = rng.gen::<f64>() * 2.0 * PI;
            let center_aod = rng.gen::<f64>() * 2.0 * PI;
            let rays = (0..config.rays_per_cluster)
                .map(|_| {
                    let aoa = center_aoa + laplacian(rng, spread);
                    let aod = center_aod + laplacian(rng, spread);
                    let gain = cn_gain(rng);
                    let delay = rng.gen::<f64>() * max_delay;
                    Ray { gain, delay, aod, aoa }
                })
                .collect();
            Cluster { center_aod, center_aoa, rays }
        })
        .collect();
    PathSet { clusters }
}

/// Synthesize the per-subcarrier frequency response from a path set.
///
/// `H[k] = gamma * sum_rays alpha * exp(-j*2*pi*k*tau/(K*T_s)) *
/// a_MS(aoa) a_BS(aod)^*`, where the array responses are normalized to
/// unit norm and `gamma = sqrt(N_BS * N_MS / (L * R))`, so that
/// `E[||H[k]||_F^2] = N_BS * N_MS`.
pub fn freq_response(paths: &PathSet, config: &ChannelConfig) -> ChannelRealization {
    let (n_ms, n_bs, k_sub) = (config.n_ms, config.n_bs, config.k_subcarriers);
    let n_rays = paths.n_rays() as f64;
    let gamma = ((n_bs * n_ms) as f64 / n_rays).sqrt();
    let a_norm = 1.0 / ((n_ms * n_bs) as f64).sqrt();

    // Rank-1 outer product per ray, reused across subcarriers.
    let outers: Vec<(CMat, f64)> = paths
        .rays()
        .map(|ray| {
            let a_ms = ula_response(ray.aoa, n_ms);
            let a_bs = ula_response(ray.aod, n_bs);
            let outer = &a_ms * a_bs.adjoint() * (ray.gain * gamma * a_norm);
            (outer, ray.delay)
        })
        .collect();

    let kt = k_sub as f64 * config.sample_period;
    let h = (0..k_sub)
        .map(|k| {
            let mut hk = DMatrix::zeros(n_ms, n_bs);
            for (outer, delay) in &outers {
                let ramp = Cpx::from_polar(1.0, -2.0 * PI * k as f64 * delay / kt);
                hk += outer * ramp;
            }
            hk
        })
        .collect();

    ChannelRealization { h, source: paths.clone(), config: config.clone() }
}

impl ChannelRealization {
    /// Sample paths and synthesize H[k] in one step.
    pub fn generate(config: &ChannelConfig, rng: &mut impl Rng) -> Self {
        let paths = sample_paths(config, rng);
        freq_response(&paths, config)
    }

    pub fn k_subcarriers(&self) -> usize {
        self.h.len()
    }

    /// JSON debug dump: each H[k] as a row-major list of interleaved
    /// re/im pairs, for external differs.
    pub fn debug_json(&self) -> serde_json::Value {
        let mats: Vec<Vec<f64>> = self
            .h
            .iter()
            .map(|hk| {
                let mut flat = Vec::with_capacity(2 * hk.len());
                for r in 0..hk.nrows() {
                    for c in 0..hk.ncols() {
                        flat.push(hk[(r, c)].re);
                        flat.push(hk[(r, c)].im);
                    }
                }
                flat
            })
            .collect();
        serde_json::json!({
            "n_ms": self.config.n_ms,
            "n_bs": self.config.n_bs,
            "k_subcarriers": self.config.k_subcarriers,
            "h": mats,
        })
    }
}
