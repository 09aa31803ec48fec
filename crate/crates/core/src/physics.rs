//! Two physical checkpoints expressed through maximum-entropy baselines:
//! the barometric pressure ratio (an exponential survival function in
//! altitude) and the Maxwell-Boltzmann speed density (a product of three
//! zero-mean normal densities, one per velocity component).

use crate::error::{Error, Result};

/// Molar gas constant, J / (mol K).
pub const GAS_CONSTANT_J_PER_MOL_K: f64 = 8.3144598;

/// Standard gravitational acceleration, m / s^2.
pub const STANDARD_GRAVITY_M_PER_S2: f64 = 9.80665;

/// Molar mass of dry air, kg / mol.
pub const MOLAR_MASS_DRY_AIR_KG_PER_MOL: f64 = 0.0289644;

/// Boltzmann constant, J / K.
pub const BOLTZMANN_J_PER_K: f64 = 1.38064852e-23;

fn check_positive(name: &str, v: f64) -> Result<()> {
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "{name} must be finite and positive, got {v}"
        )));
    }
    Ok(())
}

/// Pressure at altitude `height_m` relative to sea level for an isothermal
/// atmosphere at `temperature_k`:
/// `exp(-g M h / (R T))`, with the reference constants above.
///
/// This equals the survival function of an exponential distribution with
/// mean `R T / (g M)` evaluated at `h`.
pub fn barometric_pressure_ratio(height_m: f64, temperature_k: f64) -> Result<f64> {
    barometric_pressure_ratio_with(
        height_m,
        temperature_k,
        STANDARD_GRAVITY_M_PER_S2,
        MOLAR_MASS_DRY_AIR_KG_PER_MOL,
        GAS_CONSTANT_J_PER_MOL_K,
    )
}

/// What-if variant of [`barometric_pressure_ratio`] taking gravity, molar
/// mass, and the gas constant as arguments. Results are only standard when
/// called with the reference constants; use this for counterfactual
/// scenarios (another planet, another gas), not for reference values.
pub fn barometric_pressure_ratio_with(
    height_m: f64,
    temperature_k: f64,
    gravity: f64,
    molar_mass: f64,
    gas_constant: f64,
) -> Result<f64> {
    if !height_m.is_finite() || height_m < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "height must be finite and nonnegative, got {height_m}"
        )));
    }
    check_positive("temperature", temperature_k)?;
    check_positive("gravity", gravity)?;
    check_positive("molar mass", molar_mass)?;
    check_positive("gas constant", gas_constant)?;
    Ok((-gravity * molar_mass * height_m / (gas_constant * temperature_k)).exp())
}

/// Maxwell-Boltzmann velocity density at `velocity_m_per_s` for one
/// particle of mass `mass_kg` at temperature `temperature_k`:
/// `(m / (2 pi k T))^{3/2} exp(-m |v|^2 / (2 k T))`.
///
/// This factors as the product of three independent normal densities with
/// mean 0 and variance `k T / m`, one per velocity component.
pub fn maxwell_boltzmann_density(
    velocity_m_per_s: [f64; 3],
    mass_kg: f64,
    temperature_k: f64,
) -> Result<f64> {
    maxwell_boltzmann_density_with(velocity_m_per_s, mass_kg, temperature_k, BOLTZMANN_J_PER_K)
}

/// What-if variant of [`maxwell_boltzmann_density`] taking the Boltzmann
/// constant as an argument. Only the reference constant gives standard
/// results.
pub fn maxwell_boltzmann_density_with(
    velocity_m_per_s: [f64; 3],
    mass_kg: f64,
    temperature_k: f64,
    boltzmann: f64,
) -> Result<f64> {
    if velocity_m_per_s.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "velocity components must be finite, got {velocity_m_per_s:?}"
        )));
    }
    check_positive("mass", mass_kg)?;
    check_positive("temperature", temperature_k)?;
    check_positive("boltzmann constant", boltzmann)?;
    let kt = boltzmann * temperature_k;
    let speed_sq: f64 = velocity_m_per_s.iter().map(|v| v * v).sum();
    let norm = (mass_kg / (2.0 * std::f64::consts::PI * kt)).powf(1.5);
    Ok(norm * (-mass_kg * speed_sq / (2.0 * kt)).exp())
}
