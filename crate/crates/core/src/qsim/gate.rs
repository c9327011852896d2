//! Gate operations: a unitary matrix bound to an ordered list of targets.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use super::state::QuantumState;
use crate::error::{Error, Result};

const UNITARY_TOL: f64 = 1e-10;

/// A `k`-qubit unitary applied to `k` target qubits.
///
/// Bit `i` of the gate's local index corresponds to `targets[i]`, so for a
/// controlled gate built with [`controlled`] the control is the *last*
/// target.
#[derive(Debug, Clone)]
pub struct GateOp {
    label: String,
    targets: Vec<usize>,
    matrix: DMatrix<Complex64>,
}

impl GateOp {
    pub fn new(
        label: impl Into<String>,
        targets: Vec<usize>,
        matrix: DMatrix<Complex64>,
    ) -> Result<Self> {
        let label = label.into();
        let dim = 1usize << targets.len();
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::ShapeMismatch(format!(
                "gate '{label}': matrix is {}x{} but {} targets need {dim}x{dim}",
                matrix.nrows(),
                matrix.ncols(),
                targets.len()
            )));
        }
        if !is_unitary(&matrix, UNITARY_TOL) {
            return Err(Error::NotUnitary(label));
        }
        Ok(Self {
            label,
            targets,
            matrix,
        })
    }

    pub fn single(label: impl Into<String>, matrix: DMatrix<Complex64>, qubit: usize) -> Result<Self> {
        Self::new(label, vec![qubit], matrix)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// The inverse gate (conjugate transpose) on the same targets.
    pub fn adjoint(&self) -> GateOp {
        GateOp {
            label: adjoint_label(&self.label),
            targets: self.targets.clone(),
            matrix: self.matrix.adjoint(),
        }
    }
}

fn adjoint_label(label: &str) -> String {
    match label.strip_suffix(".dag") {
        Some(base) => base.to_string(),
        None => format!("{label}.dag"),
    }
}

pub fn is_unitary(m: &DMatrix<Complex64>, tol: f64) -> bool {
    if m.nrows() != m.ncols() {
        return false;
    }
    let prod = m.adjoint() * m;
    let eye = DMatrix::<Complex64>::identity(m.nrows(), m.ncols());
    (prod - eye).iter().all(|z| z.norm() <= tol * m.nrows() as f64)
}

/// Kronecker product with the left factor most significant.
pub fn kron(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    a.kronecker(b)
}

/// Block-diagonal controlled version of `u`; the control is the highest
/// local bit (append it last in the target list).
pub fn controlled(u: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let d = u.nrows();
    let mut out = DMatrix::<Complex64>::identity(2 * d, 2 * d);
    out.view_mut((d, d), (d, d)).copy_from(u);
    out
}

/// A unitary whose first column is the given normalized vector, completed
/// by Gram-Schmidt against the computational basis.
pub fn state_prep_unitary(v: &[Complex64]) -> Result<DMatrix<Complex64>> {
    let d = v.len();
    if d == 0 || !d.is_power_of_two() {
        return Err(Error::ShapeMismatch(format!(
            "state-prep vector length {d} is not a power of two"
        )));
    }
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm < 1e-12 {
        return Err(Error::EmptyInput("state-prep of the zero vector".into()));
    }
    let mut cols: Vec<Vec<Complex64>> = vec![v.iter().map(|z| z / norm).collect()];
    for i in 0..d {
        if cols.len() == d {
            break;
        }
        let mut w = vec![Complex64::ZERO; d];
        w[i] = Complex64::ONE;
        for c in &cols {
            let overlap: Complex64 = c.iter().zip(&w).map(|(a, b)| a.conj() * b).sum();
            for (we, ce) in w.iter_mut().zip(c) {
                *we -= overlap * ce;
            }
        }
        let wn = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if wn > 1e-9 {
            for we in &mut w {
                *we /= wn;
            }
            cols.push(w);
        }
    }
    debug_assert_eq!(cols.len(), d);
    Ok(DMatrix::from_fn(d, d, |r, c| cols[c][r]))
}

/// Fixed-matrix gate constructors.
pub mod gates {
    use nalgebra::DMatrix;
    use num_complex::Complex64;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    pub fn h() -> DMatrix<Complex64> {
        DMatrix::from_row_slice(2, 2, &[
            c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0),
            c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0),
        ])
    }

    pub fn x() -> DMatrix<Complex64> {
        DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
    }

    pub fn y() -> DMatrix<Complex64> {
        DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
    }

    pub fn z() -> DMatrix<Complex64> {
        DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)])
    }

    pub fn s() -> DMatrix<Complex64> {
        phase(std::f64::consts::FRAC_PI_2)
    }

    pub fn sdg() -> DMatrix<Complex64> {
        phase(-std::f64::consts::FRAC_PI_2)
    }

    pub fn t() -> DMatrix<Complex64> {
        phase(FRAC_PI_4)
    }

    pub fn tdg() -> DMatrix<Complex64> {
        phase(-FRAC_PI_4)
    }

    /// diag(1, e^{i theta})
    pub fn phase(theta: f64) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(2, 2, &[
            c(1.0, 0.0), c(0.0, 0.0),
            c(0.0, 0.0), Complex64::from_polar(1.0, theta),
        ])
    }

    pub fn ry(theta: f64) -> DMatrix<Complex64> {
        let (s, co) = (theta / 2.0).sin_cos();
        DMatrix::from_row_slice(2, 2, &[c(co, 0.0), c(-s, 0.0), c(s, 0.0), c(co, 0.0)])
    }

    /// CNOT in this crate's convention: targets `[target, control]`.
    pub fn cx() -> DMatrix<Complex64> {
        super::controlled(&x())
    }

    pub fn swap() -> DMatrix<Complex64> {
        let mut m = DMatrix::<Complex64>::zeros(4, 4);
        m[(0, 0)] = Complex64::ONE;
        m[(1, 2)] = Complex64::ONE;
        m[(2, 1)] = Complex64::ONE;
        m[(3, 3)] = Complex64::ONE;
        m
    }

    /// Controlled SWAP; targets `[a, b, control]`.
    pub fn cswap() -> DMatrix<Complex64> {
        super::controlled(&swap())
    }

    pub fn by_label(label: &str) -> Option<DMatrix<Complex64>> {
        match label {
            "H" => Some(h()),
            "X" => Some(x()),
            "Y" => Some(y()),
            "Z" => Some(z()),
            "S" => Some(s()),
            "SDG" => Some(sdg()),
            "T" => Some(t()),
            "TDG" => Some(tdg()),
            "CX" => Some(cx()),
            "SWAP" => Some(swap()),
            "CSWAP" => Some(cswap()),
            _ => None,
        }
    }

    /// True when `label` resolves to a fixed matrix via [`by_label`].
    pub fn is_registered(label: &str) -> bool {
        by_label(label).is_some()
    }
}

/// Haar-ish random unitary via Gram-Schmidt of a Gaussian matrix. Test and
/// harness helper, not a calibrated Haar sampler.
pub fn random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DMatrix<Complex64> {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut w: Vec<Complex64> = (0..dim)
            .map(|_| {
                Complex64::new(
                    gaussian(rng),
                    gaussian(rng),
                )
            })
            .collect();
        for c in &cols {
            let overlap: Complex64 = c.iter().zip(&w).map(|(a, b)| a.conj() * b).sum();
            for (we, ce) in w.iter_mut().zip(c) {
                *we -= overlap * ce;
            }
        }
        let n = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if n > 1e-6 {
            for we in &mut w {
                *we /= n;
            }
            cols.push(w);
        }
    }
    DMatrix::from_fn(dim, dim, |r, c| cols[c][r])
}

/// Random normalized state on `num_qubits` qubits.
pub fn random_state<R: Rng + ?Sized>(num_qubits: usize, rng: &mut R) -> QuantumState {
    let dim = 1usize << num_qubits;
    let mut amps: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(gaussian(rng), gaussian(rng)))
        .collect();
    let n = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= n;
    }
    QuantumState::from_amplitudes(amps).expect("normalized by construction")
}

/// Box-Muller standard normal draw.
pub(crate) fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u1: f64 = rng.random::<f64>().max(1e-300);
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_non_unitary() {
        let m = DMatrix::from_row_slice(2, 2, &[
            Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0), Complex64::new(0.5, 0.0),
        ]);
        assert!(matches!(
            GateOp::single("BAD", m, 0),
            Err(Error::NotUnitary(_))
        ));
    }

    #[test]
    fn controlled_x_is_cnot() {
        // |c=1, t=0> -> |c=1, t=1>; targets are [target, control]
        let mut s = QuantumState::basis(2, 0b10).unwrap();
        let g = GateOp::new("CX", vec![0, 1], gates::cx()).unwrap();
        s.apply_gate(&g).unwrap();
        assert_eq!(s.amplitudes()[0b11], Complex64::ONE);
    }

    #[test]
    fn prep_unitary_first_column() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let st = random_state(2, &mut rng);
        let u = state_prep_unitary(st.amplitudes()).unwrap();
        assert!(is_unitary(&u, 1e-10));
        for (i, a) in st.amplitudes().iter().enumerate() {
            assert!((u[(i, 0)] - a).norm() < 1e-10);
        }
    }

    #[test]
    fn adjoint_round_trip() {
        let g = GateOp::single("S", gates::s(), 0).unwrap();
        let gd = g.adjoint();
        assert_eq!(gd.label(), "S.dag");
        assert_eq!(gd.adjoint().label(), "S");
        let prod = gd.matrix() * g.matrix();
        assert!((prod - DMatrix::<Complex64>::identity(2, 2)).norm() < 1e-12);
    }
}
