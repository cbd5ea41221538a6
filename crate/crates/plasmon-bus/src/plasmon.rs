//! Quantized surface-plasmon mode structure of a cylindrical metal nanowire.
//!
//! The dispersion enters only through the product `x = k R`:
//!
//! `omega_{k,m}^2 = omega_p^2 * B / (eps1 + (eps_s - eps1) * B)`,
//! `B = x I'_m(x) K_m(x)`.
//!
//! For the fundamental mode `B -> 0` as `x -> 0` (no cutoff) and `B -> 1/2`
//! as `x -> inf`, so `omega` rises monotonically toward the surface-plasmon
//! asymptote `omega_p / sqrt(eps1 + eps_s)`.

use num_complex::Complex64;

use crate::specfun::{bessel_i_prime, bessel_k};
use crate::{Error, Result};

/// Cylindrical nanowire geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NanowireGeometry {
    /// Radius, m.
    pub radius: f64,
    /// Length, m.
    pub length: f64,
}

impl NanowireGeometry {
    pub fn new(radius: f64, length: f64) -> Result<Self> {
        if !(radius > 0.0) || !(length > 0.0) {
            return Err(Error::Domain(format!(
                "nanowire geometry must be positive, got R={radius}, L={length}"
            )));
        }
        Ok(Self { radius, length })
    }

    /// The analytical model assumes `L >> R`.
    pub fn aspect_warning(&self) -> Option<String> {
        (self.length < 10.0 * self.radius).then(|| {
            format!(
                "nanowire length {:.3e} m is below 10 R = {:.3e} m; the long-wire model is marginal",
                self.length,
                10.0 * self.radius
            )
        })
    }
}

/// Dielectric environment and metal response.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialParams {
    /// Surrounding dielectric constant.
    pub eps1: f64,
    /// Metal background dielectric constant.
    pub eps_s: f64,
    /// Full metal permittivity at the working wavelength.
    pub eps2: Complex64,
    /// Bulk plasma frequency, rad/s.
    pub omega_p: f64,
}

impl MaterialParams {
    /// Build from the quoted permittivities, deriving `omega_p` via the
    /// Drude inversion at the working frequency `omega` (rad/s).
    pub fn from_permittivities(
        eps1: f64,
        eps_s: f64,
        eps2: Complex64,
        omega: f64,
    ) -> Result<Self> {
        if !(eps1 > 0.0) || !(eps_s > 0.0) {
            return Err(Error::Domain(format!(
                "dielectric constants must be positive, got eps1={eps1}, eps_s={eps_s}"
            )));
        }
        if eps2.re >= 0.0 {
            return Err(Error::Domain(format!(
                "metal permittivity must have Re eps2 < 0, got {}",
                eps2.re
            )));
        }
        let omega_p = drude_plasma_frequency(eps2.re, eps_s, omega)?;
        Ok(Self {
            eps1,
            eps_s,
            eps2,
            omega_p,
        })
    }

    /// Large-`k` bound of the fundamental branch, rad/s.
    pub fn asymptote(&self) -> f64 {
        self.omega_p / (self.eps1 + self.eps_s).sqrt()
    }
}

/// One plasmon mode: azimuthal index, longitudinal wave vector, frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlasmonMode {
    pub m: u32,
    /// 1/m.
    pub k_par: f64,
    /// rad/s.
    pub omega0: f64,
}

/// Invert the Drude decomposition `eps2 = eps_s - omega_p^2 / omega^2`
/// for the plasma frequency. Returns `omega * sqrt(eps_s - eps2_re)`.
pub fn drude_plasma_frequency(eps2_re: f64, eps_s: f64, omega: f64) -> Result<f64> {
    if eps2_re >= eps_s {
        return Err(Error::Domain(format!(
            "Drude inversion requires Re eps2 < eps_s, got {eps2_re} >= {eps_s}"
        )));
    }
    if !(omega > 0.0) {
        return Err(Error::Domain(format!("omega must be positive, got {omega}")));
    }
    Ok(omega * (eps_s - eps2_re).sqrt())
}

/// The bracket `B = x I'_m(x) K_m(x)` of the dispersion relation.
pub fn dispersion_bracket(x: f64, m: u32) -> Result<f64> {
    Ok(x * bessel_i_prime(m, x)? * bessel_k(m, x)?)
}

/// Mode frequency `omega_{k,m}` (rad/s) for wave vector `k` (1/m).
pub fn dispersion_omega(
    k: f64,
    m: u32,
    geom: &NanowireGeometry,
    mat: &MaterialParams,
) -> Result<f64> {
    if !(k > 0.0) {
        return Err(Error::Domain(format!("wave vector must be positive, got {k}")));
    }
    let b = dispersion_bracket(k * geom.radius, m)?;
    let denom = mat.eps1 + (mat.eps_s - mat.eps1) * b;
    if denom <= 0.0 {
        return Err(Error::Domain(format!(
            "dispersion denominator {denom} is non-positive (unphysical parameter set)"
        )));
    }
    Ok(mat.omega_p * (b / denom).sqrt())
}

/// Solve the dispersion relation for the longitudinal wave vector at a
/// target frequency. Geometric bracketing over `kR` in `[1e-4, 100]`
/// followed by bisection; deterministic for the monotone `m = 0` branch.
pub fn solve_k_parallel(
    omega_target: f64,
    m: u32,
    geom: &NanowireGeometry,
    mat: &MaterialParams,
    rel_tol: f64,
) -> Result<f64> {
    let rel_tol = rel_tol.max(1e-14);
    let asymptote = mat.asymptote();
    if omega_target >= asymptote {
        return Err(Error::NoRoot {
            target: omega_target,
            asymptote,
            m,
        });
    }
    if !(omega_target > 0.0) {
        return Err(Error::Domain(format!(
            "target frequency must be positive, got {omega_target}"
        )));
    }
    let omega_at = |x: f64| dispersion_omega(x / geom.radius, m, geom, mat);

    // geometric bracketing on kR
    let mut lo = 1e-4;
    let mut hi = lo;
    let mut f_lo = omega_at(lo)? - omega_target;
    if f_lo > 0.0 {
        // target below the lowest sampled point: extend downward
        while f_lo > 0.0 && lo > 1e-12 {
            hi = lo;
            lo /= 4.0;
            f_lo = omega_at(lo)? - omega_target;
        }
        if f_lo > 0.0 {
            return Err(Error::NoRoot {
                target: omega_target,
                asymptote,
                m,
            });
        }
    } else {
        let mut f_hi = f_lo;
        while f_hi < 0.0 {
            hi *= 2.0;
            if hi > 100.0 {
                return Err(Error::NoRoot {
                    target: omega_target,
                    asymptote,
                    m,
                });
            }
            f_hi = omega_at(hi)? - omega_target;
        }
        lo = hi / 2.0;
    }

    // bisection on kR
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let f_mid = omega_at(mid)? - omega_target;
        if f_mid < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        let omega_mid = f_mid + omega_target;
        if (omega_mid - omega_target).abs() <= rel_tol * omega_target
            && (hi - lo) <= 1e-15 * hi
        {
            break;
        }
    }
    let x = 0.5 * (lo + hi);
    let achieved = omega_at(x)?;
    if (achieved - omega_target).abs() > rel_tol * omega_target {
        return Err(Error::Integrator(format!(
            "bisection stalled: |omega - target|/target = {:e}",
            (achieved - omega_target).abs() / omega_target
        )));
    }
    Ok(x / geom.radius)
}

/// Resolve the fundamental mode propagating at `omega_target`.
pub fn fundamental_mode(
    omega_target: f64,
    geom: &NanowireGeometry,
    mat: &MaterialParams,
) -> Result<PlasmonMode> {
    let k_par = solve_k_parallel(omega_target, 0, geom, mat, 1e-12)?;
    Ok(PlasmonMode {
        m: 0,
        k_par,
        omega0: omega_target,
    })
}

/// Propagation report for azimuthal orders `0..=m_max` at frequency `omega`.
///
/// In this non-retarded model the branch for `m >= 1` spans only a narrow
/// band just below the asymptote, so ordinary working frequencies leave all
/// higher orders cut off.
pub fn mode_cutoff_report(
    geom: &NanowireGeometry,
    mat: &MaterialParams,
    omega: f64,
    m_max: u32,
) -> Result<Vec<(u32, bool)>> {
    let mut out = Vec::with_capacity(m_max as usize + 1);
    for m in 0..=m_max {
        let propagating = if m == 0 {
            omega < mat.asymptote()
        } else {
            // root existence: scan omega(x) - omega for a sign change on a
            // log grid of kR
            let mut found = false;
            let mut prev: Option<f64> = None;
            for i in 0..=240 {
                let x = 1e-4 * f64::powf(1e6, i as f64 / 240.0);
                let f = dispersion_omega(x / geom.radius, m, geom, mat)? - omega;
                if let Some(p) = prev {
                    if p * f <= 0.0 {
                        found = true;
                        break;
                    }
                }
                prev = Some(f);
            }
            found
        };
        out.push((m, propagating));
    }
    Ok(out)
}
