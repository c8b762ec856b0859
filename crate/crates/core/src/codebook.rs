//! Quantized unit-modulus RF beamforming codebooks.
//!
//! Every RF precoder column is drawn from a codebook of beamsteering
//! vectors whose entries are pure phase rotations, matching the analog
//! phase-shifter hardware constraint.

use std::f64::consts::PI;
use std::io::Write;

use crate::error::{Error, Result};
use crate::{CMat, CVec, Cpx};

/// Matrix of candidate RF codewords, one per column.
#[derive(Debug, Clone, PartialEq)]
pub struct Codebook {
    /// N_antennas x N_CB; column n is codeword n.
    pub words: CMat,
    /// Spatial steering angle (radians) behind each column.
    pub steering_angles: Vec<f64>,
}

impl Codebook {
    pub fn n_antennas(&self) -> usize {
        self.words.nrows()
    }

    pub fn n_codewords(&self) -> usize {
        self.words.ncols()
    }

    /// Codeword `n` as an owned column vector.
    pub fn codeword(&self, n: usize) -> CVec {
        self.words.column(n).into_owned()
    }

    /// CSV export, one codeword per column, cells formatted "re,im"
    /// within quoted fields.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        for r in 0..self.words.nrows() {
            let row: Vec<String> = (0..self.words.ncols())
                .map(|c| {
                    let z = self.words[(r, c)];
                    format!("\"{},{}\"", z.re, z.im)
                })
                .collect();
            writeln!(out, "{}", row.join(","))?;
        }
        Ok(())
    }
}

/// Beamsteering codebook on a uniform spatial-frequency grid.
///
/// Column `n` has entries `exp(j * m * omega_n)` with
/// `omega_n = 2*pi*n / N_CB`, so all phases land on the quantized grid
/// `{2*pi*n / N_CB}`. For `n_cb == n_antennas` this is the unnormalized
/// DFT matrix.
pub fn beamsteering_codebook(n_antennas: usize, n_cb: usize) -> Codebook {
    assert!(n_antennas >= 1 && n_cb >= 1);
    let words = CMat::from_fn(n_antennas, n_cb, |m, n| {
        let omega = 2.0 * PI * n as f64 / n_cb as f64;
        Cpx::from_polar(1.0, omega * m as f64)
    });
    // omega = pi * sin(theta) maps each column to a physical angle;
    // kept for inspection only, aliased frequencies clamp to +/-pi.
    let steering_angles = (0..n_cb)
        .map(|n| {
            let mut omega = 2.0 * PI * n as f64 / n_cb as f64;
            if omega > PI {
                omega -= 2.0 * PI;
            }
            (omega / PI).clamp(-1.0, 1.0).asin()
        })
        .collect();
    Codebook { words, steering_angles }
}

/// Snap each entry of `v` to the nearest point of the `2^bits`-point
/// uniform phase grid, keeping unit modulus. Ties round toward the
/// lower grid index.
pub fn quantize_phases(v: &CVec, bits: u32) -> Result<CVec> {
    let levels = 1u64 << bits;
    let step = 2.0 * PI / levels as f64;
    let mut out = CVec::zeros(v.len());
    for (i, z) in v.iter().enumerate() {
        if z.norm() == 0.0 {
            return Err(Error::ZeroEntry(i));
        }
        let phase = z.arg().rem_euclid(2.0 * PI);
        let pos = phase / step;
        let lower = pos.floor();
        let frac = pos - lower;
        // Half-way ties go to the lower grid index.
        let idx = if frac > 0.5 { lower + 1.0 } else { lower } as u64 % levels;
        out[i] = Cpx::from_polar(1.0, idx as f64 * step);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn square_codebook_is_dft_matrix() {
        let cb = beamsteering_codebook(4, 4);
        for m in 0..4 {
            for n in 0..4 {
                let expect = Cpx::from_polar(1.0, 2.0 * PI * (m * n) as f64 / 4.0);
                assert_relative_eq!((cb.words[(m, n)] - expect).norm(), 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn all_entries_unit_modulus() {
        let cb = beamsteering_codebook(8, 64);
        assert_eq!(cb.words.len(), 512);
        for z in cb.words.iter() {
            assert_relative_eq!(z.norm(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn first_column_is_all_ones() {
        let cb = beamsteering_codebook(5, 7);
        for m in 0..5 {
            assert_relative_eq!((cb.words[(m, 0)] - Cpx::new(1.0, 0.0)).norm(), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn no_duplicate_columns() {
        let cb = beamsteering_codebook(8, 64);
        for a in 0..cb.n_codewords() {
            for b in (a + 1)..cb.n_codewords() {
                let diff = (cb.words.column(a) - cb.words.column(b)).norm();
                assert!(diff > 1e-9, "columns {a} and {b} coincide");
            }
        }
    }

    #[test]
    fn square_gram_is_scaled_identity() {
        let cb = beamsteering_codebook(8, 8);
        let gram = cb.words.adjoint() * &cb.words;
        for r in 0..8 {
            for c in 0..8 {
                let expect = if r == c { 8.0 } else { 0.0 };
                assert_relative_eq!((gram[(r, c)] - Cpx::new(expect, 0.0)).norm(), 0.0, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn quantize_on_grid_is_unchanged() {
        let v = CVec::from_vec(vec![Cpx::new(1.0, 0.0), Cpx::new(0.0, 1.0)]);
        let q = quantize_phases(&v, 2).unwrap();
        assert_relative_eq!((q - v).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn quantize_one_bit_rounds_to_real_axis() {
        let v = CVec::from_vec(vec![Cpx::from_polar(1.0, 0.1)]);
        let q = quantize_phases(&v, 1).unwrap();
        assert_relative_eq!((q[0] - Cpx::new(1.0, 0.0)).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn quantize_sixty_degrees_to_quarter_grid() {
        let v = CVec::from_vec(vec![
            Cpx::from_polar(1.0, PI / 3.0),
            Cpx::from_polar(1.0, -PI / 3.0),
        ]);
        let q = quantize_phases(&v, 2).unwrap();
        assert_relative_eq!((q[0] - Cpx::new(0.0, 1.0)).norm(), 0.0, epsilon = 1e-12);
        assert_relative_eq!((q[1] - Cpx::new(0.0, -1.0)).norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn quantize_tie_goes_to_lower_index() {
        // pi/4 is exactly between grid points 0 and pi/2 for bits = 2.
        let v = CVec::from_vec(vec![Cpx::from_polar(1.0, PI / 4.0)]);
        let q = quantize_phases(&v, 2).unwrap();
        assert_relative_eq!((q[0] - Cpx::new(1.0, 0.0)).norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn quantize_rejects_zero_entry() {
        let v = CVec::from_vec(vec![Cpx::new(0.0, 0.0)]);
        assert!(matches!(quantize_phases(&v, 3), Err(Error::ZeroEntry(0))));
    }

    #[test]
    fn csv_export_has_one_row_per_antenna() {
        let cb = beamsteering_codebook(3, 5);
        let mut buf = Vec::new();
        cb.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert_eq!(text.lines().next().unwrap().matches('"').count(), 10);
    }

    proptest! {
        #[test]
        fn quantization_is_idempotent(phases in prop::collection::vec(-10.0f64..10.0, 1..12), bits in 1u32..6) {
            let v = CVec::from_vec(phases.iter().map(|&p| Cpx::from_polar(1.0, p)).collect());
            let q1 = quantize_phases(&v, bits).unwrap();
            let q2 = quantize_phases(&q1, bits).unwrap();
            prop_assert!((q2 - &q1).norm() < 1e-12);
        }

        #[test]
        fn quantization_output_unit_modulus(res in prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..12), bits in 1u32..6) {
            let v = CVec::from_vec(
                res.iter().map(|&(re, im)| Cpx::new(re + 3.0, im)).collect(),
            );
            let q = quantize_phases(&v, bits).unwrap();
            for z in q.iter() {
                prop_assert!((z.norm() - 1.0).abs() < 1e-12);
            }
        }
    }
}
