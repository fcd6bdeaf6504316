//! Dense complex state algebra over ordered qubit registers.
//!
//! Register convention: qubit index 0 is the leftmost ket label, so the
//! amplitude index of |b0 b1 ... b{n-1}⟩ is b0·2^{n-1} + ... + b{n-1}.
//! Kronecker products follow label order.
//!
//! Entropies are in bits (log base 2) with the 0·log 0 := 0 convention.

mod families;

pub use families::{
    acin, build_named_state, cluster4, family_angle_params, family_param_names, gen_w, ghz3,
    ghz4, rank2_w, two_param, w3, QuantumState,
};

use crate::error::{QcorrError, Result};
use nalgebra::{Complex, DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub type C64 = Complex<f64>;

/// Tolerance for normalization and Hermiticity checks.
pub const STATE_TOL: f64 = 1e-12;
/// Eigenvalues in [-EIG_CLIP, 0) are clipped to 0; anything more negative is an error.
pub const EIG_CLIP: f64 = 1e-10;
/// Eigenvalues below this threshold contribute exactly 0 to entropies.
pub const ENTROPY_CUTOFF: f64 = 1e-12;
/// Numerical-rank cutoff used when compressing a block to a logic qubit.
pub const RANK_CUTOFF: f64 = 1e-9;

fn default_labels(n: usize) -> Vec<String> {
    const NAMES: [&str; 8] = ["A", "B", "C", "D", "E", "F", "G", "H"];
    if n <= NAMES.len() {
        NAMES[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (0..n).map(|i| format!("q{i}")).collect()
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(QcorrError::LabelCollision(l.clone()));
        }
    }
    Ok(())
}

fn qubit_count_for_dim(dim: usize) -> Result<usize> {
    if dim < 2 || !dim.is_power_of_two() {
        return Err(QcorrError::Dimension(format!(
            "dimension {dim} is not a power of two >= 2"
        )));
    }
    Ok(dim.trailing_zeros() as usize)
}

/// Placement masks for composing full-register indices from a sub-block index.
///
/// `positions` are register positions (0 = leftmost). The returned closure maps
/// a block-local index (bit t of the block = positions[t]) to its contribution
/// to the full index.
fn block_placer(positions: &[usize], n: usize) -> impl Fn(usize) -> usize + '_ {
    let k = positions.len();
    move |local: usize| {
        let mut full = 0usize;
        for (t, &p) in positions.iter().enumerate() {
            let bit = (local >> (k - 1 - t)) & 1;
            full |= bit << (n - 1 - p);
        }
        full
    }
}

fn validate_block(block: &[usize], n: usize) -> Result<()> {
    if block.is_empty() {
        return Err(QcorrError::InvalidBlock("empty index set".into()));
    }
    for (i, &q) in block.iter().enumerate() {
        if q >= n {
            return Err(QcorrError::InvalidBlock(format!(
                "index {q} outside register of {n} qubits"
            )));
        }
        if block[..i].contains(&q) {
            return Err(QcorrError::InvalidBlock(format!("duplicate index {q}")));
        }
    }
    Ok(())
}

/// Named, disjoint index sets splitting a register into blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub block_a: Vec<usize>,
    pub block_b: Vec<usize>,
    pub block_c: Option<Vec<usize>>,
}

impl Partition {
    pub fn bipartite(block_a: Vec<usize>, block_b: Vec<usize>) -> Result<Self> {
        let p = Partition {
            block_a,
            block_b,
            block_c: None,
        };
        p.validate(usize::MAX)?;
        Ok(p)
    }

    pub fn tripartite(
        block_a: Vec<usize>,
        block_b: Vec<usize>,
        block_c: Vec<usize>,
    ) -> Result<Self> {
        let p = Partition {
            block_a,
            block_b,
            block_c: Some(block_c),
        };
        p.validate(usize::MAX)?;
        Ok(p)
    }

    /// Checks blocks are disjoint and within an `n`-qubit register.
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen: Vec<usize> = Vec::new();
        let blocks: Vec<&Vec<usize>> = match &self.block_c {
            Some(c) => vec![&self.block_a, &self.block_b, c],
            None => vec![&self.block_a, &self.block_b],
        };
        for b in blocks {
            if b.is_empty() {
                return Err(QcorrError::InvalidBlock("empty block".into()));
            }
            for &q in b {
                if n != usize::MAX && q >= n {
                    return Err(QcorrError::InvalidBlock(format!(
                        "index {q} outside register of {n} qubits"
                    )));
                }
                if seen.contains(&q) {
                    return Err(QcorrError::InvalidBlock(format!(
                        "index {q} appears in two blocks"
                    )));
                }
                seen.push(q);
            }
        }
        Ok(())
    }
}

/// Isometric embedding of a 2-dimensional support into a block's full space.
#[derive(Debug, Clone)]
pub struct LogicQubitMap {
    /// 2^|block| x 2 matrix with orthonormal columns.
    pub isometry: DMatrix<C64>,
    /// Register positions of the compressed block (original register).
    pub block: Vec<usize>,
}

/// Complex amplitude vector over an ordered qubit register.
#[derive(Debug, Clone)]
pub struct PureState {
    amps: DVector<C64>,
    n: usize,
    labels: Vec<String>,
}

impl PureState {
    /// Builds a state from amplitudes already normalized to 1 within `STATE_TOL`.
    pub fn new(amps: DVector<C64>, labels: Vec<String>) -> Result<Self> {
        let n = qubit_count_for_dim(amps.len())?;
        if labels.len() != n {
            return Err(QcorrError::Dimension(format!(
                "{} labels for {} qubits",
                labels.len(),
                n
            )));
        }
        check_labels(&labels)?;
        let norm2: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm2 - 1.0).abs() > STATE_TOL {
            return Err(QcorrError::InvalidState(format!(
                "norm^2 = {norm2}, expected 1"
            )));
        }
        Ok(PureState { amps, n, labels })
    }

    /// Builds a state from arbitrary non-zero amplitudes, normalizing them.
    pub fn normalized(amps: DVector<C64>, labels: Vec<String>) -> Result<Self> {
        let norm2: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if norm2 < 1e-300 {
            return Err(QcorrError::InvalidState("zero vector".into()));
        }
        let scaled = amps / C64::new(norm2.sqrt(), 0.0);
        Self::new(scaled, labels)
    }

    pub fn with_default_labels(amps: DVector<C64>) -> Result<Self> {
        let n = qubit_count_for_dim(amps.len())?;
        Self::new(amps, default_labels(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amps
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Full projector |ψ⟩⟨ψ| as a density matrix.
    pub fn density(&self) -> DensityMatrix {
        let mat = &self.amps * self.amps.adjoint();
        DensityMatrix {
            mat,
            n: self.n,
            labels: self.labels.clone(),
        }
    }

    /// Reduced density matrix on `keep`, in the order given by `keep`.
    pub fn marginal(&self, keep: &[usize]) -> Result<DensityMatrix> {
        validate_block(keep, self.n)?;
        let k = keep.len();
        let traced: Vec<usize> = (0..self.n).filter(|q| !keep.contains(q)).collect();
        let place_k = block_placer(keep, self.n);
        let place_e = block_placer(&traced, self.n);
        let dk = 1usize << k;
        let de = 1usize << traced.len();
        let kept_base: Vec<usize> = (0..dk).map(&place_k).collect();
        let mut mat = DMatrix::<C64>::zeros(dk, dk);
        if traced.is_empty() {
            for i in 0..dk {
                for j in 0..dk {
                    mat[(i, j)] = self.amps[kept_base[i]] * self.amps[kept_base[j]].conj();
                }
            }
        } else {
            for e in 0..de {
                let eb = place_e(e);
                for i in 0..dk {
                    let ai = self.amps[kept_base[i] | eb];
                    if ai.norm_sqr() == 0.0 {
                        continue;
                    }
                    for j in 0..dk {
                        mat[(i, j)] += ai * self.amps[kept_base[j] | eb].conj();
                    }
                }
            }
        }
        let labels = keep.iter().map(|&q| self.labels[q].clone()).collect();
        Ok(DensityMatrix {
            mat,
            n: k,
            labels,
        })
    }

    /// Tensor product; label order is self-then-other.
    pub fn tensor(&self, other: &PureState) -> Result<PureState> {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        check_labels(&labels)?;
        let amps = self.amps.kronecker(&other.amps);
        Ok(PureState {
            amps: DVector::from_column_slice(amps.as_slice()),
            n: self.n + other.n,
            labels,
        })
    }

    /// Applies a single-qubit unitary on register position `qubit`.
    pub fn apply_one_qubit(&self, u: &DMatrix<C64>, qubit: usize) -> Result<PureState> {
        if u.nrows() != 2 || u.ncols() != 2 {
            return Err(QcorrError::Dimension("expected a 2x2 unitary".into()));
        }
        validate_block(&[qubit], self.n)?;
        let shift = self.n - 1 - qubit;
        let mask = 1usize << shift;
        let mut out = DVector::<C64>::zeros(self.dim());
        for idx in 0..self.dim() {
            let b = (idx >> shift) & 1;
            let base = idx & !mask;
            // new amplitude at idx = sum_b' u[b, b'] * old[base | b']
            out[idx] = u[(b, 0)] * self.amps[base] + u[(b, 1)] * self.amps[base | mask];
        }
        Ok(PureState {
            amps: out,
            n: self.n,
            labels: self.labels.clone(),
        })
    }
}

/// Hermitian, positive semidefinite, unit-trace operator over a qubit register.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    mat: DMatrix<C64>,
    n: usize,
    labels: Vec<String>,
}

impl DensityMatrix {
    /// Builds and fully validates a density matrix (Hermitian within 1e-12,
    /// unit trace within 1e-12, eigenvalues >= -1e-10).
    pub fn new(mat: DMatrix<C64>, labels: Vec<String>) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(QcorrError::Dimension("matrix is not square".into()));
        }
        let n = qubit_count_for_dim(mat.nrows())?;
        if labels.len() != n {
            return Err(QcorrError::Dimension(format!(
                "{} labels for {} qubits",
                labels.len(),
                n
            )));
        }
        check_labels(&labels)?;
        let herm_dev = (&mat - mat.adjoint()).iter().map(|c| c.norm()).fold(0.0, f64::max);
        if herm_dev > 10.0 * STATE_TOL {
            return Err(QcorrError::InvalidState(format!(
                "not Hermitian: max |M - M^+| = {herm_dev:.3e}"
            )));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > 1e-10 || tr.im.abs() > 1e-10 {
            return Err(QcorrError::InvalidState(format!("trace = {tr}, expected 1")));
        }
        let dm = DensityMatrix { mat, n, labels };
        // eigenvalue check doubles as the PSD validation
        dm.eigenvalues()?;
        Ok(dm)
    }

    pub fn with_default_labels(mat: DMatrix<C64>) -> Result<Self> {
        let n = qubit_count_for_dim(mat.nrows())?;
        Self::new(mat, default_labels(n))
    }

    /// Internal constructor for matrices Hermitian/PSD by construction.
    pub(crate) fn from_valid_parts(mat: DMatrix<C64>, labels: Vec<String>) -> Self {
        let n = labels.len();
        debug_assert_eq!(mat.nrows(), 1 << n);
        DensityMatrix { mat, n, labels }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.mat
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Tensor product; label order is self-then-other.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        check_labels(&labels)?;
        Ok(DensityMatrix {
            mat: self.mat.kronecker(&other.mat),
            n: self.n + other.n,
            labels,
        })
    }

    /// Partial trace keeping `keep`, reordered to the order given by `keep`.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        validate_block(keep, self.n)?;
        let k = keep.len();
        let traced: Vec<usize> = (0..self.n).filter(|q| !keep.contains(q)).collect();
        let place_k = block_placer(keep, self.n);
        let place_e = block_placer(&traced, self.n);
        let dk = 1usize << k;
        let de = 1usize << traced.len();
        let kept_base: Vec<usize> = (0..dk).map(&place_k).collect();
        let mut mat = DMatrix::<C64>::zeros(dk, dk);
        for e in 0..de {
            let eb = place_e(e);
            for i in 0..dk {
                for j in i..dk {
                    mat[(i, j)] += self.mat[(kept_base[i] | eb, kept_base[j] | eb)];
                }
            }
        }
        // fill the lower triangle from Hermiticity
        for i in 0..dk {
            for j in 0..i {
                mat[(i, j)] = mat[(j, i)].conj();
            }
            mat[(i, i)] = C64::new(mat[(i, i)].re, 0.0);
        }
        let labels = keep.iter().map(|&q| self.labels[q].clone()).collect();
        Ok(DensityMatrix {
            mat,
            n: k,
            labels,
        })
    }

    /// Eigenvalues sorted descending, with values in [-1e-10, 0) clipped to 0.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let herm = (&self.mat + self.mat.adjoint()) * C64::new(0.5, 0.0);
        let eig = herm.symmetric_eigen();
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        for v in &mut vals {
            if *v < -EIG_CLIP {
                return Err(QcorrError::InvalidState(format!(
                    "negative eigenvalue {v:.3e} beyond tolerance"
                )));
            }
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Ok(vals)
    }

    /// Tr ρ².
    pub fn purity(&self) -> f64 {
        self.mat.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn is_pure(&self, tol: f64) -> bool {
        (self.purity() - 1.0).abs() < tol
    }

    /// Numerical rank at the logic-qubit cutoff (1e-9).
    pub fn numerical_rank(&self) -> Result<usize> {
        Ok(self
            .eigenvalues()?
            .iter()
            .filter(|&&v| v > RANK_CUTOFF)
            .count())
    }

    /// Conjugates by a product of single-qubit unitaries placed on `qubits`.
    pub fn apply_local_unitaries(&self, us: &[(usize, DMatrix<C64>)]) -> Result<DensityMatrix> {
        let mut full = DMatrix::<C64>::identity(1, 1);
        let mut per_qubit: Vec<DMatrix<C64>> =
            (0..self.n).map(|_| DMatrix::identity(2, 2)).collect();
        for (q, u) in us {
            validate_block(&[*q], self.n)?;
            if u.nrows() != 2 || u.ncols() != 2 {
                return Err(QcorrError::Dimension("expected 2x2 unitaries".into()));
            }
            per_qubit[*q] = u.clone();
        }
        for u in &per_qubit {
            full = full.kronecker(u);
        }
        let mat = &full * &self.mat * full.adjoint();
        Ok(DensityMatrix {
            mat,
            n: self.n,
            labels: self.labels.clone(),
        })
    }
}

/// Shannon entropy of {x, 1-x} in bits; h(0) = h(1) = 0.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-STATE_TOL..=1.0 + STATE_TOL).contains(&x) {
        return Err(QcorrError::ParamRange(format!("binary entropy of {x}")));
    }
    let x = x.clamp(0.0, 1.0);
    let mut h = 0.0;
    for p in [x, 1.0 - x] {
        if p > ENTROPY_CUTOFF {
            h -= p * p.log2();
        }
    }
    Ok(h)
}

/// Von Neumann entropy in bits. Eigenvalues below 1e-12 contribute exactly 0.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let mut s = 0.0;
    for lam in rho.eigenvalues()? {
        if lam > ENTROPY_CUTOFF {
            s -= lam * lam.log2();
        }
    }
    Ok(s.max(0.0))
}

/// Result of compressing a block with rank-2 support to a logic qubit.
///
/// The compressed register keeps the non-block qubits in their original order
/// and appends the logic qubit last, labeled with the concatenated block labels.
#[derive(Debug, Clone)]
pub struct CompressedState {
    pub state: DensityMatrix,
    pub map: LogicQubitMap,
    /// New position of each kept original qubit, in original-register order.
    pub kept_positions: Vec<(usize, usize)>,
    /// Position of the logic qubit in the compressed register.
    pub logic_position: usize,
}

/// Re-expresses `rho` with `block` compressed to a logic qubit.
///
/// Errors with `RankOverflow` if the reduced state on `block` has numerical
/// rank above 2 at the 1e-9 eigenvalue cutoff.
pub fn compress_support(rho: &DensityMatrix, block: &[usize]) -> Result<CompressedState> {
    validate_block(block, rho.n())?;
    let rest: Vec<usize> = (0..rho.n()).filter(|q| !block.contains(q)).collect();
    let block_dim = 1usize << block.len();

    let reduced = rho.partial_trace(block)?;
    let herm = (reduced.matrix() + reduced.matrix().adjoint()) * C64::new(0.5, 0.0);
    let eig = herm.symmetric_eigen();
    let mut order: Vec<usize> = (0..block_dim).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).unwrap());
    let rank = order
        .iter()
        .filter(|&&i| eig.eigenvalues[i] > RANK_CUTOFF)
        .count();
    if rank > 2 {
        return Err(QcorrError::RankOverflow {
            block: block.to_vec(),
            rank,
        });
    }

    let mut isometry = DMatrix::<C64>::zeros(block_dim, 2);
    for col in 0..2usize.min(block_dim) {
        isometry.set_column(col, &eig.eigenvectors.column(order[col]));
    }

    // W: (rest ⊗ logic) -> full register, W[(full),(r,l)] = V[block-bits, l] δ_rest
    let n = rho.n();
    let place_rest = block_placer(&rest, n);
    let place_block = block_placer(block, n);
    let dr = 1usize << rest.len();
    let dnew = dr * 2;
    let mut w = DMatrix::<C64>::zeros(rho.dim(), dnew);
    for r in 0..dr {
        let rb = place_rest(r);
        for l in 0..2 {
            let col = r * 2 + l;
            for bl in 0..block_dim {
                w[(rb | place_block(bl), col)] = isometry[(bl, l)];
            }
        }
    }
    let mut mat = w.adjoint() * rho.matrix() * &w;
    let tr = mat.trace().re;
    if (tr - 1.0).abs() > 1e-8 {
        return Err(QcorrError::Numerical(format!(
            "support leakage under compression: trace {tr}"
        )));
    }
    mat /= C64::new(tr, 0.0);

    let mut labels: Vec<String> = rest.iter().map(|&q| rho.labels()[q].clone()).collect();
    let joined: String = block.iter().map(|&q| rho.labels()[q].as_str()).collect();
    labels.push(joined);

    let kept_positions = rest.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    Ok(CompressedState {
        state: DensityMatrix::from_valid_parts(mat, labels),
        map: LogicQubitMap {
            isometry,
            block: block.to_vec(),
        },
        kept_positions,
        logic_position: rest.len(),
    })
}

/// Purifies `rho` by appending ⌈log2 rank⌉ (at least one) environment qubits.
///
/// Tracing the appended environment out of the result recovers `rho`.
pub fn purify(rho: &DensityMatrix) -> Result<PureState> {
    let herm = (rho.matrix() + rho.matrix().adjoint()) * C64::new(0.5, 0.0);
    let eig = herm.symmetric_eigen();
    let mut order: Vec<usize> = (0..rho.dim()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).unwrap());
    let probs: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i].max(0.0)).collect();
    let rank = probs.iter().filter(|&&p| p > ENTROPY_CUTOFF).count().max(1);
    let env_qubits = if rank <= 2 {
        1
    } else {
        (usize::BITS - (rank - 1).leading_zeros()) as usize
    };
    let de = 1usize << env_qubits;

    let mut amps = DVector::<C64>::zeros(rho.dim() * de);
    for (k, &p) in probs.iter().take(rank.min(de)).enumerate() {
        if p <= ENTROPY_CUTOFF {
            continue;
        }
        let sqrt_p = p.sqrt();
        let v = eig.eigenvectors.column(order[k]);
        for i in 0..rho.dim() {
            amps[(i << env_qubits) | k] = v[i] * C64::new(sqrt_p, 0.0);
        }
    }

    let mut labels = rho.labels().to_vec();
    for e in 0..env_qubits {
        let mut name = if env_qubits == 1 {
            "E".to_string()
        } else {
            format!("E{e}")
        };
        while labels.contains(&name) {
            name.push('\'');
        }
        labels.push(name);
    }
    PureState::normalized(amps, labels)
}

/// Haar-random pure state on `n` qubits from a fixed seed.
pub fn random_pure_haar(n: usize, seed: u64) -> PureState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_pure_haar_with(n, &mut rng)
}

/// Haar-random pure state drawn from the supplied generator.
pub fn random_pure_haar_with<R: Rng>(n: usize, rng: &mut R) -> PureState {
    assert!(n >= 1, "need at least one qubit");
    let dim = 1usize << n;
    let amps = DVector::from_fn(dim, |_, _| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    PureState::normalized(amps, default_labels(n)).expect("gaussian vector is nonzero")
}

/// Haar-random 2x2 unitary (QR of a complex Ginibre matrix with phase fix).
pub fn random_unitary_2x2<R: Rng>(rng: &mut R) -> DMatrix<C64> {
    let g = DMatrix::<C64>::from_fn(2, 2, |_, _| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for c in 0..2 {
        let d = r[(c, c)];
        let phase = if d.norm() > 0.0 {
            d / C64::new(d.norm(), 0.0)
        } else {
            C64::new(1.0, 0.0)
        };
        for row in 0..2 {
            q[(row, c)] *= phase;
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn ket(amps: &[f64], labels: &[&str]) -> PureState {
        PureState::new(
            DVector::from_iterator(amps.len(), amps.iter().map(|&a| c(a, 0.0))),
            labels.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap()
    }

    fn bell() -> PureState {
        let s = 1.0 / 2f64.sqrt();
        ket(&[s, 0.0, 0.0, s], &["A", "B"])
    }

    #[test]
    fn tensor_basis_case() {
        let zero = ket(&[1.0, 0.0], &["A"]);
        let zero_b = ket(&[1.0, 0.0], &["B"]);
        let prod = zero.tensor(&zero_b).unwrap();
        assert_eq!(prod.amplitudes().as_slice()[0], c(1.0, 0.0));
        assert_eq!(prod.amplitudes().iter().skip(1).map(|a| a.norm()).sum::<f64>(), 0.0);
    }

    #[test]
    fn tensor_plus_zero() {
        let s = 1.0 / 2f64.sqrt();
        let plus = ket(&[s, s], &["A"]);
        let zero = ket(&[1.0, 0.0], &["B"]);
        let prod = plus.tensor(&zero).unwrap();
        let expect = [s, 0.0, s, 0.0];
        for (a, e) in prod.amplitudes().iter().zip(expect) {
            assert_abs_diff_eq!(a.re, e, epsilon = 1e-15);
        }
    }

    #[test]
    fn tensor_label_collision() {
        let zero = ket(&[1.0, 0.0], &["A"]);
        assert!(matches!(
            zero.tensor(&zero),
            Err(QcorrError::LabelCollision(_))
        ));
    }

    #[test]
    fn tensor_density_identity() {
        let half = DensityMatrix::new(
            DMatrix::from_diagonal_element(2, 2, c(0.5, 0.0)),
            vec!["A".into()],
        )
        .unwrap();
        let other = DensityMatrix::new(
            DMatrix::from_diagonal_element(2, 2, c(0.5, 0.0)),
            vec!["B".into()],
        )
        .unwrap();
        let prod = half.tensor(&other).unwrap();
        for i in 0..4 {
            assert_abs_diff_eq!(prod.matrix()[(i, i)].re, 0.25, epsilon = 1e-15);
        }
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let rho = bell().marginal(&[0]).unwrap();
        assert_abs_diff_eq!(rho.matrix()[(0, 0)].re, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(rho.matrix()[(1, 1)].re, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(rho.matrix()[(0, 1)].norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn product_marginal_keeps_factor() {
        let psi = ket(&[0.0, 1.0, 0.0, 0.0], &["A", "B"]); // |01>
        let rho = psi.marginal(&[1]).unwrap();
        assert_abs_diff_eq!(rho.matrix()[(1, 1)].re, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn empty_keep_rejected() {
        let rho = bell().density();
        assert!(rho.partial_trace(&[]).is_err());
    }

    #[test]
    fn entropy_values() {
        let mixed = DensityMatrix::new(
            DMatrix::from_diagonal_element(2, 2, c(0.5, 0.0)),
            vec!["A".into()],
        )
        .unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&mixed).unwrap(), 1.0, epsilon = 1e-12);

        let pure = bell().density();
        assert_abs_diff_eq!(von_neumann_entropy(&pure).unwrap(), 0.0, epsilon = 1e-10);

        // binary-entropy oracle for diag(0.25, 0.75)
        let diag = DensityMatrix::new(
            DMatrix::from_diagonal(&DVector::from_vec(vec![c(0.25, 0.0), c(0.75, 0.0)])),
            vec!["A".into()],
        )
        .unwrap();
        let h = binary_entropy(0.25).unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&diag).unwrap(), h, epsilon = 1e-12);
        assert_abs_diff_eq!(h, 0.8112781244591328, epsilon = 1e-14);
    }

    #[test]
    fn binary_entropy_edges() {
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(binary_entropy(0.5).unwrap(), 1.0, epsilon = 1e-15);
        // direct evaluation oracle at 0.11
        let direct = -0.11f64 * 0.11f64.log2() - 0.89 * 0.89f64.log2();
        assert_abs_diff_eq!(binary_entropy(0.11).unwrap(), direct, epsilon = 1e-15);
        assert!(binary_entropy(-0.01).is_err());
        assert!(binary_entropy(1.01).is_err());
    }

    #[test]
    fn haar_reproducible() {
        let a = random_pure_haar(3, 42);
        let b = random_pure_haar(3, 42);
        assert_eq!(a.amplitudes(), b.amplitudes());
        let d = random_pure_haar(1, 7);
        assert_eq!(d.dim(), 2);
        let norm2: f64 = d.amplitudes().iter().map(|x| x.norm_sqr()).sum();
        assert_abs_diff_eq!(norm2, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn haar_marginal_purity_matches_lubkin_average() {
        // Monte-Carlo oracle: E[Tr rho_A^2] for a 1-qubit marginal of a Haar
        // 3-qubit state is (dA + dB)/(dA*dB + 1) = 6/9 = 2/3.
        let mut rng = ChaCha8Rng::seed_from_u64(1234);
        let samples = 10_000;
        let mut acc = 0.0;
        for _ in 0..samples {
            let psi = random_pure_haar_with(3, &mut rng);
            acc += psi.marginal(&[0]).unwrap().purity();
        }
        let mean = acc / samples as f64;
        assert!((mean - 2.0 / 3.0).abs() < 0.01, "mean purity {mean}");
    }

    #[test]
    fn purify_round_trips() {
        // maximally mixed qubit -> a Bell-like state
        let mixed = DensityMatrix::new(
            DMatrix::from_diagonal_element(2, 2, c(0.5, 0.0)),
            vec!["A".into()],
        )
        .unwrap();
        let psi = purify(&mixed).unwrap();
        assert_eq!(psi.n(), 2);
        let back = psi.marginal(&[0]).unwrap();
        assert!((back.matrix() - mixed.matrix()).norm() < 1e-10);

        // pure state -> appended |0> environment
        let pure = bell().density();
        let psi = purify(&pure).unwrap();
        assert_eq!(psi.n(), 3);
        let back = psi.marginal(&[0, 1]).unwrap();
        assert!((back.matrix() - pure.matrix()).norm() < 1e-10);
    }

    #[test]
    fn compress_single_qubit_is_identity() {
        let rho = bell().density();
        let comp = compress_support(&rho, &[1]).unwrap();
        assert_eq!(comp.state.n(), 2);
        // entropy of the full state unchanged
        assert_abs_diff_eq!(
            von_neumann_entropy(&comp.state).unwrap(),
            von_neumann_entropy(&rho).unwrap(),
            epsilon = 1e-10
        );
    }

    #[test]
    fn compress_rejects_rank_overflow() {
        let rho = DensityMatrix::new(
            DMatrix::from_diagonal_element(4, 4, c(0.25, 0.0)),
            vec!["A".into(), "B".into()],
        )
        .unwrap();
        assert!(matches!(
            compress_support(&rho, &[0, 1]),
            Err(QcorrError::RankOverflow { .. })
        ));
    }

    #[test]
    fn partial_trace_keep_order_permutes() {
        let psi = ket(&[0.0, 1.0, 0.0, 0.0], &["A", "B"]); // |01>
        let swapped = psi.marginal(&[1, 0]).unwrap();
        // |01>_AB -> in (B, A) order the state is |10>
        assert_abs_diff_eq!(swapped.matrix()[(2, 2)].re, 1.0, epsilon = 1e-14);
        assert_eq!(swapped.labels(), &["B".to_string(), "A".to_string()]);
    }

    #[test]
    fn schmidt_marginal_entropies_match() {
        let psi = random_pure_haar(4, 99);
        let sa = von_neumann_entropy(&psi.marginal(&[0, 2]).unwrap()).unwrap();
        let sb = von_neumann_entropy(&psi.marginal(&[1, 3]).unwrap()).unwrap();
        assert_abs_diff_eq!(sa, sb, epsilon = 1e-10);
    }
}
