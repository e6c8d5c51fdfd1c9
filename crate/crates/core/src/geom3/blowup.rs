use serde::{Deserialize, Serialize};

use super::Point3;
use crate::error::{Error, Result};

/// Which midpoint rule produces `alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlowupVariant {
    /// `alpha_j = (zeta_j + beta_j) / 2`
    Plain,
    /// `alpha_j = (omega_j + beta_j) / 2`
    Refined,
    /// `nu_j = (z2 + omega_j) / 2`, `alpha_j = (beta_{j-1} + nu_j) / 2`
    Bump,
}

/// Points placed for index `j`. Entries whose inputs are absent are `None`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlowupPoint {
    pub j: usize,
    pub beta: Option<Point3>,
    pub zeta: Option<Point3>,
    pub alpha: Point3,
    pub nu: Option<Point3>,
}

/// Midpoint placements for index `j`. `chi` and `omega` are 1-based in the
/// formulas: `chi[0]` is `chi_1`. So `beta_j = (z2 + chi_{j+1}) / 2` reads
/// `chi[j]`.
pub fn blowup_point(z2: Point3, chi: &[Point3], omega: &[Point3], variant: BlowupVariant, j: usize) -> Result<BlowupPoint> {
    let mid = |a: Point3, b: Point3| (a + b) * 0.5;
    let beta_at = |k: usize| chi.get(k).map(|&c| mid(z2, c));
    let omega_at = |k: usize| -> Result<Point3> {
        // omega_k with 1-based k
        k.checked_sub(1)
            .and_then(|i| omega.get(i).copied())
            .ok_or_else(|| Error::Bounds(format!("omega_{k} is not available ({} given)", omega.len())))
    };
    let beta = beta_at(j);
    let zeta = omega.get(j).map(|&w| mid(z2, w));
    let missing = |what: &str| Error::Bounds(format!("{what} is not available for j = {j}"));
    let (alpha, nu) = match variant {
        BlowupVariant::Plain => {
            let (b, z) = (beta.ok_or_else(|| missing("beta_j"))?, zeta.ok_or_else(|| missing("zeta_j"))?);
            (mid(z, b), None)
        }
        BlowupVariant::Refined => (mid(omega_at(j)?, beta.ok_or_else(|| missing("beta_j"))?), None),
        BlowupVariant::Bump => {
            let nu = mid(z2, omega_at(j)?);
            let prev = j.checked_sub(1).and_then(beta_at).ok_or_else(|| missing("beta_{j-1}"))?;
            (mid(prev, nu), Some(nu))
        }
    };
    Ok(BlowupPoint { j, beta, zeta, alpha, nu })
}

/// All indices for which `alpha_j` is defined, in increasing order.
pub fn blowup_points(z2: Point3, chi: &[Point3], omega: &[Point3], variant: BlowupVariant) -> Result<Vec<BlowupPoint>> {
    let out: Vec<BlowupPoint> = (0..=chi.len().max(omega.len()))
        .filter_map(|j| blowup_point(z2, chi, omega, variant, j).ok())
        .collect();
    if out.is_empty() {
        return Err(Error::Bounds(format!(
            "no index has enough input points ({} chi, {} omega)",
            chi.len(),
            omega.len()
        )));
    }
    Ok(out)
}
