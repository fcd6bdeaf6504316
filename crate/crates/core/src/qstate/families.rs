//! Factories for the named few-qubit state families used throughout the crate.

use super::{C64, DensityMatrix, PureState};
use crate::error::{QcorrError, Result};
use nalgebra::{DMatrix, DVector};
use std::f64::consts::PI;

/// A pure or mixed state, as produced by the named-family factories.
#[derive(Debug, Clone)]
pub enum QuantumState {
    Pure(PureState),
    Mixed(DensityMatrix),
}

impl QuantumState {
    pub fn n(&self) -> usize {
        match self {
            QuantumState::Pure(p) => p.n(),
            QuantumState::Mixed(m) => m.n(),
        }
    }

    pub fn labels(&self) -> &[String] {
        match self {
            QuantumState::Pure(p) => p.labels(),
            QuantumState::Mixed(m) => m.labels(),
        }
    }

    /// Density-matrix view (projector for pure inputs).
    pub fn density(&self) -> DensityMatrix {
        match self {
            QuantumState::Pure(p) => p.density(),
            QuantumState::Mixed(m) => m.clone(),
        }
    }

    pub fn as_pure(&self) -> Option<&PureState> {
        match self {
            QuantumState::Pure(p) => Some(p),
            QuantumState::Mixed(_) => None,
        }
    }
}

fn labels3() -> Vec<String> {
    vec!["A".into(), "B".into(), "C".into()]
}

fn labels4() -> Vec<String> {
    vec!["A".into(), "B".into(), "C".into(), "D".into()]
}

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn check_unit(name: &str, v: f64) -> Result<()> {
    if !(-1e-12..=1.0 + 1e-12).contains(&v) {
        return Err(QcorrError::ParamRange(format!("{name} = {v} outside [0, 1]")));
    }
    Ok(())
}

/// sinθcosφ|011⟩ + sinθsinφ|101⟩ + cosθ|110⟩.
pub fn gen_w(theta: f64, phi: f64) -> PureState {
    let mut amps = DVector::zeros(8);
    amps[0b011] = c(theta.sin() * phi.cos());
    amps[0b101] = c(theta.sin() * phi.sin());
    amps[0b110] = c(theta.cos());
    PureState::normalized(amps, labels3()).expect("norm is 1 by trigonometry")
}

/// √(pε)|000⟩ + √(p(1−ε))|111⟩ + √((1−p)/2)(|101⟩+|110⟩).
pub fn two_param(p: f64, epsilon: f64) -> Result<PureState> {
    check_unit("p", p)?;
    check_unit("epsilon", epsilon)?;
    let p = p.clamp(0.0, 1.0);
    let epsilon = epsilon.clamp(0.0, 1.0);
    let mut amps = DVector::zeros(8);
    amps[0b000] = c((p * epsilon).sqrt());
    amps[0b111] = c((p * (1.0 - epsilon)).sqrt());
    let w = c(((1.0 - p) / 2.0).sqrt());
    amps[0b101] = w;
    amps[0b110] = w;
    PureState::normalized(amps, labels3())
}

/// Standard form of three-qubit pure states with spherical coefficients:
/// λ0|000⟩ + λ1·e^{iφ}|100⟩ + λ2|101⟩ + λ3|110⟩ + λ4|111⟩, where
/// λ0 = cosθ0, λ1 = sinθ0 cosθ1, λ2 = sinθ0 sinθ1 cosθ2,
/// λ3 = sinθ0 sinθ1 sinθ2 cosθ3, λ4 = sinθ0 sinθ1 sinθ2 sinθ3.
pub fn acin(thetas: [f64; 4], phi: f64) -> Result<PureState> {
    for (i, t) in thetas.iter().enumerate() {
        if !(-1e-12..=PI / 2.0 + 1e-9).contains(t) {
            return Err(QcorrError::ParamRange(format!(
                "theta{i} = {t} outside [0, pi/2]"
            )));
        }
    }
    if !(-1e-12..=PI + 1e-9).contains(&phi) {
        return Err(QcorrError::ParamRange(format!("phi = {phi} outside [0, pi]")));
    }
    let [t0, t1, t2, t3] = thetas;
    let l0 = t0.cos();
    let l1 = t0.sin() * t1.cos();
    let l2 = t0.sin() * t1.sin() * t2.cos();
    let l3 = t0.sin() * t1.sin() * t2.sin() * t3.cos();
    let l4 = t0.sin() * t1.sin() * t2.sin() * t3.sin();
    let mut amps = DVector::zeros(8);
    amps[0b000] = c(l0);
    amps[0b100] = C64::new(0.0, phi).exp() * l1;
    amps[0b101] = c(l2);
    amps[0b110] = c(l3);
    amps[0b111] = c(l4);
    PureState::normalized(amps, labels3())
}

/// α|000⟩ + √(1−α²)|111⟩.
pub fn ghz3(alpha: f64) -> Result<PureState> {
    check_unit("alpha", alpha)?;
    let alpha = alpha.clamp(0.0, 1.0);
    let mut amps = DVector::zeros(8);
    amps[0b000] = c(alpha);
    amps[0b111] = c((1.0 - alpha * alpha).sqrt());
    PureState::normalized(amps, labels3())
}

/// α|0000⟩ + √(1−α²)|1111⟩.
pub fn ghz4(alpha: f64) -> Result<PureState> {
    check_unit("alpha", alpha)?;
    let alpha = alpha.clamp(0.0, 1.0);
    let mut amps = DVector::zeros(16);
    amps[0b0000] = c(alpha);
    amps[0b1111] = c((1.0 - alpha * alpha).sqrt());
    PureState::normalized(amps, labels4())
}

/// a|001⟩ + b|010⟩ + c|100⟩, normalized.
pub fn w3(a: f64, b: f64, cc: f64) -> Result<PureState> {
    let mut amps = DVector::zeros(8);
    amps[0b001] = c(a);
    amps[0b010] = c(b);
    amps[0b100] = c(cc);
    PureState::normalized(amps, labels3())
}

/// (|0000⟩ − |0111⟩ − |1010⟩ + |1101⟩)/2.
pub fn cluster4() -> PureState {
    let mut amps = DVector::zeros(16);
    amps[0b0000] = c(0.5);
    amps[0b0111] = c(-0.5);
    amps[0b1010] = c(-0.5);
    amps[0b1101] = c(0.5);
    PureState::new(amps, labels4()).expect("normalized by construction")
}

/// Rank-2 W-class mixed state |ψ1⟩⟨ψ1| + |ψ2⟩⟨ψ2| (normalized by its trace),
/// with |ψ1⟩ = a|100⟩ + b|010⟩ + c|001⟩, |ψ2⟩ = d|000⟩ and spherical
/// coefficients a = cosθ1, b = sinθ1 sinθ2 cosθ3, c = sinθ1 sinθ2 sinθ3,
/// d = sinθ1 cosθ2.
pub fn rank2_w(theta1: f64, theta2: f64, theta3: f64) -> Result<DensityMatrix> {
    let a = theta1.cos();
    let b = theta1.sin() * theta2.sin() * theta3.cos();
    let cc = theta1.sin() * theta2.sin() * theta3.sin();
    let d = theta1.sin() * theta2.cos();

    let mut psi1 = DVector::<C64>::zeros(8);
    psi1[0b100] = c(a);
    psi1[0b010] = c(b);
    psi1[0b001] = c(cc);
    let mut psi2 = DVector::<C64>::zeros(8);
    psi2[0b000] = c(d);

    let mut mat = &psi1 * psi1.adjoint() + &psi2 * psi2.adjoint();
    let tr = mat.trace().re;
    if tr < 1e-12 {
        return Err(QcorrError::ParamRange(
            "rank2_w parameters give a zero-trace state".into(),
        ));
    }
    mat /= c(tr);
    DensityMatrix::new(mat, labels3())
}

const FAMILIES: &[(&str, &[&str], &[&str])] = &[
    // (family, parameter names, angle-valued parameter names)
    ("gen_w", &["theta", "phi"], &["theta", "phi"]),
    ("two_param", &["p", "epsilon"], &[]),
    (
        "acin",
        &["theta0", "theta1", "theta2", "theta3", "phi"],
        &["theta0", "theta1", "theta2", "theta3", "phi"],
    ),
    ("ghz3", &["alpha"], &[]),
    ("ghz4", &["alpha"], &[]),
    ("w3", &["a", "b", "c"], &[]),
    ("cluster4", &[], &[]),
    (
        "rank2_w",
        &["theta1", "theta2", "theta3"],
        &["theta1", "theta2", "theta3"],
    ),
];

/// Positional parameter names for a family, in `build_named_state` order.
pub fn family_param_names(family: &str) -> Result<&'static [&'static str]> {
    FAMILIES
        .iter()
        .find(|(f, _, _)| *f == family)
        .map(|(_, p, _)| *p)
        .ok_or_else(|| QcorrError::UnknownFamily(family.into()))
}

/// Parameters of a family that are angles (eligible for times-pi scaling).
pub fn family_angle_params(family: &str) -> Result<&'static [&'static str]> {
    FAMILIES
        .iter()
        .find(|(f, _, _)| *f == family)
        .map(|(_, _, a)| *a)
        .ok_or_else(|| QcorrError::UnknownFamily(family.into()))
}

/// Builds a named state from positional parameters.
pub fn build_named_state(family: &str, params: &[f64]) -> Result<QuantumState> {
    let expected = family_param_names(family)?.len();
    if params.len() != expected {
        return Err(QcorrError::ParamRange(format!(
            "family `{family}` takes {expected} parameters, got {}",
            params.len()
        )));
    }
    Ok(match family {
        "gen_w" => QuantumState::Pure(gen_w(params[0], params[1])),
        "two_param" => QuantumState::Pure(two_param(params[0], params[1])?),
        "acin" => QuantumState::Pure(acin(
            [params[0], params[1], params[2], params[3]],
            params[4],
        )?),
        "ghz3" => QuantumState::Pure(ghz3(params[0])?),
        "ghz4" => QuantumState::Pure(ghz4(params[0])?),
        "w3" => QuantumState::Pure(w3(params[0], params[1], params[2])?),
        "cluster4" => QuantumState::Pure(cluster4()),
        "rank2_w" => QuantumState::Mixed(rank2_w(params[0], params[1], params[2])?),
        _ => unreachable!("family validated above"),
    })
}
