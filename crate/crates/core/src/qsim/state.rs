//! Statevector type, gate application, measurement, fidelity.

use num_complex::Complex64;
use rand::Rng;

use super::gate::GateOp;
use super::MAX_QUBITS;
use crate::error::{Error, Result};

const NORM_TOL: f64 = 1e-10;

/// Pure state of `num_qubits` qubits as a dense amplitude vector.
///
/// Qubit 0 is the least significant bit of the amplitude index.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

/// Result of a single-qubit measurement.
///
/// `actual` is the Born-rule outcome that collapsed the state; `recorded`
/// is what the (possibly faulty) readout reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Measured {
    pub actual: u8,
    pub recorded: u8,
}

impl QuantumState {
    /// The all-zeros computational basis state.
    pub fn zero(num_qubits: usize) -> Result<Self> {
        Self::basis(num_qubits, 0)
    }

    /// Computational basis state `|index>`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        if num_qubits == 0 || num_qubits > MAX_QUBITS {
            return Err(Error::ShapeMismatch(format!(
                "qubit count {num_qubits} outside 1..={MAX_QUBITS}"
            )));
        }
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(Error::ShapeMismatch(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut amps = vec![Complex64::ZERO; dim];
        amps[index] = Complex64::ONE;
        Ok(Self { num_qubits, amps })
    }

    /// Wrap an amplitude vector; the length must be a power of two and the
    /// norm must be 1 within 1e-10.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let dim = amps.len();
        if dim == 0 || !dim.is_power_of_two() || dim > (1 << MAX_QUBITS) {
            return Err(Error::ShapeMismatch(format!(
                "amplitude vector length {dim} is not a supported power of two"
            )));
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self {
            num_qubits: dim.trailing_zeros() as usize,
            amps,
        })
    }

    /// Encode an arbitrary nonzero real vector, zero-padding to the next
    /// power of two and normalizing.
    pub fn encode_real(v: &[f64]) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::EmptyInput("cannot encode an empty vector".into()));
        }
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("vector to encode".into()));
        }
        let dim = v.len().next_power_of_two().max(2);
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::EmptyInput("cannot encode the zero vector".into()));
        }
        let mut amps = vec![Complex64::ZERO; dim];
        for (a, x) in amps.iter_mut().zip(v) {
            *a = Complex64::new(x / norm, 0.0);
        }
        Self::from_amplitudes(amps)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Probability that `qubit` reads 1.
    pub fn prob_one(&self, qubit: usize) -> Result<f64> {
        self.check_qubit(qubit)?;
        let mask = 1usize << qubit;
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & mask != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.num_qubits {
            return Err(Error::BadQubit {
                index: qubit,
                num_qubits: self.num_qubits,
            });
        }
        Ok(())
    }

    /// Apply a `k`-qubit gate to the targeted qubits.
    pub fn apply_gate(&mut self, gate: &GateOp) -> Result<()> {
        let targets = gate.targets();
        let k = targets.len();
        for (i, &t) in targets.iter().enumerate() {
            self.check_qubit(t)?;
            if targets[..i].contains(&t) {
                return Err(Error::ShapeMismatch(format!(
                    "gate '{}' targets qubit {t} twice",
                    gate.label()
                )));
            }
        }
        let u = gate.matrix();
        let sub = 1usize << k;
        debug_assert_eq!(u.nrows(), sub);

        // Enumerate all indices whose target bits are zero by depositing a
        // counter into the non-target bit positions.
        let masks: Vec<usize> = targets.iter().map(|&t| 1usize << t).collect();
        let rest: Vec<usize> = (0..self.num_qubits)
            .filter(|q| !targets.contains(q))
            .map(|q| 1usize << q)
            .collect();
        let mut scratch = vec![Complex64::ZERO; sub];
        for g in 0..(1usize << rest.len()) {
            let mut base = 0usize;
            for (bit, m) in rest.iter().enumerate() {
                if g >> bit & 1 == 1 {
                    base |= m;
                }
            }
            for (row, s) in scratch.iter_mut().enumerate() {
                let mut acc = Complex64::ZERO;
                for col in 0..sub {
                    let mut idx = base;
                    for (bit, m) in masks.iter().enumerate() {
                        if col >> bit & 1 == 1 {
                            idx |= m;
                        }
                    }
                    acc += u[(row, col)] * self.amps[idx];
                }
                *s = acc;
            }
            for (row, s) in scratch.iter().enumerate() {
                let mut idx = base;
                for (bit, m) in masks.iter().enumerate() {
                    if row >> bit & 1 == 1 {
                        idx |= m;
                    }
                }
                self.amps[idx] = *s;
            }
        }
        Ok(())
    }

    /// Born-rule measurement of one qubit.
    ///
    /// The state collapses and renormalizes according to the true outcome;
    /// only the recorded bit is subject to the readout-error flip, so a
    /// noisy record never alters the post-measurement state.
    pub fn measure<R: Rng + ?Sized>(
        &mut self,
        qubit: usize,
        meas_noise_p: f64,
        rng: &mut R,
    ) -> Result<Measured> {
        let p1 = self.prob_one(qubit)?;
        let actual: u8 = if rng.random::<f64>() < p1 { 1 } else { 0 };
        self.collapse(qubit, actual, if actual == 1 { p1 } else { 1.0 - p1 });
        let recorded = if meas_noise_p > 0.0 && rng.random::<f64>() < meas_noise_p {
            actual ^ 1
        } else {
            actual
        };
        Ok(Measured { actual, recorded })
    }

    fn collapse(&mut self, qubit: usize, outcome: u8, prob: f64) {
        let mask = 1usize << qubit;
        let scale = 1.0 / prob.sqrt();
        for (i, a) in self.amps.iter_mut().enumerate() {
            if ((i & mask != 0) as u8) == outcome {
                *a *= scale;
            } else {
                *a = Complex64::ZERO;
            }
        }
    }

    /// Exact projection onto `qubit == outcome`, returning the normalized
    /// branch and its probability, or `None` when the branch has no weight.
    pub fn project(&self, qubit: usize, outcome: u8) -> Result<Option<(QuantumState, f64)>> {
        self.check_qubit(qubit)?;
        let mask = 1usize << qubit;
        let prob: f64 = self
            .amps
            .iter()
            .enumerate()
            .filter(|(i, _)| ((i & mask != 0) as u8) == outcome)
            .map(|(_, a)| a.norm_sqr())
            .sum();
        if prob <= 1e-300 {
            return Ok(None);
        }
        let mut out = self.clone();
        out.collapse(qubit, outcome, prob);
        Ok(Some((out, prob)))
    }
}

/// Overlap fidelity `|<a|b>|^2` between two pure states.
pub fn fidelity(a: &QuantumState, b: &QuantumState) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::ShapeMismatch(format!(
            "fidelity between dimensions {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    let inner: Complex64 = a
        .amps
        .iter()
        .zip(&b.amps)
        .map(|(x, y)| x.conj() * y)
        .sum();
    Ok(inner.norm_sqr().min(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsim::gates;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn x_flips_zero_to_one() {
        let mut s = QuantumState::zero(1).unwrap();
        s.apply_gate(&GateOp::single("X", gates::x(), 0).unwrap())
            .unwrap();
        assert_eq!(s.amplitudes()[0], Complex64::ZERO);
        assert_eq!(s.amplitudes()[1], Complex64::ONE);
    }

    #[test]
    fn hadamard_makes_plus() {
        let mut s = QuantumState::zero(1).unwrap();
        s.apply_gate(&GateOp::single("H", gates::h(), 0).unwrap())
            .unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((s.amplitudes()[0].re - r).abs() < 1e-12);
        assert!((s.amplitudes()[1].re - r).abs() < 1e-12);
    }

    #[test]
    fn random_two_qubit_gate_preserves_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let u = crate::qsim::gate::random_unitary(4, &mut rng);
        let gate = GateOp::new("U", vec![0, 2], u).unwrap();
        let mut s = crate::qsim::gate::random_state(3, &mut rng);
        s.apply_gate(&gate).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn measure_one_is_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut s = QuantumState::basis(1, 1).unwrap();
        let m = s.measure(0, 0.0, &mut rng).unwrap();
        assert_eq!(m.recorded, 1);
        assert_eq!(s.amplitudes()[1], Complex64::ONE);
    }

    #[test]
    fn readout_error_flips_record_only() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut s = QuantumState::zero(1).unwrap();
        let m = s.measure(0, 1.0, &mut rng).unwrap();
        assert_eq!(m.actual, 0);
        assert_eq!(m.recorded, 1);
        assert_eq!(s.amplitudes()[0], Complex64::ONE);
    }

    #[test]
    fn plus_state_measurement_frequency() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let h = GateOp::single("H", gates::h(), 0).unwrap();
        let mut ones = 0u32;
        let shots = 100_000;
        for _ in 0..shots {
            let mut s = QuantumState::zero(1).unwrap();
            s.apply_gate(&h).unwrap();
            ones += s.measure(0, 0.0, &mut rng).unwrap().recorded as u32;
        }
        let freq = f64::from(ones) / f64::from(shots);
        assert!((freq - 0.5).abs() < 0.005, "freq {freq}");
    }

    #[test]
    fn fidelity_examples() {
        let zero = QuantumState::zero(1).unwrap();
        let one = QuantumState::basis(1, 1).unwrap();
        let mut plus = QuantumState::zero(1).unwrap();
        plus.apply_gate(&GateOp::single("H", gates::h(), 0).unwrap())
            .unwrap();
        assert_eq!(fidelity(&zero, &zero).unwrap(), 1.0);
        assert_eq!(fidelity(&zero, &one).unwrap(), 0.0);
        assert!((fidelity(&zero, &plus).unwrap() - 0.5).abs() < 1e-12);
    }
}
