use serde::{Deserialize, Serialize};

use crate::error::SeveriError;

/// Expected dimension `g - 1 - delta` of a regular component of the Severi
/// variety of `delta`-nodal curves in a genus-`g` linear system.
pub fn severi_regular_dim(g: i64, delta: i64) -> Result<i64, SeveriError> {
    if delta < 0 || delta >= g {
        return Err(SeveriError::DeltaOutOfRange { g, delta });
    }
    Ok(g - 1 - delta)
}

/// Dimensions of the logarithmic Severi varieties attached to one class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogSeveriDims {
    pub g: i64,
    pub lt: i64,
    pub m: i64,
    /// Tangency `sum m_i p_i` at fixed points: `g - 1 + L.T - sum m_i`.
    pub fixed_points: i64,
    /// Tangency `m p` at a moving point: `g + L.T - m`.
    pub moving_point: i64,
    /// Elliptic curves on the blown-up symmetric square: `L.T - m + 1`.
    pub elliptic_on_r: i64,
    /// Rational curves on the blown-up plane: `L.T - m`.
    pub rational_on_p: i64,
}

/// `fixed` lists the tangency orders at fixed points of `T`; their sum must
/// stay below `L.T`.
pub fn log_severi_dims(g: i64, lt: i64, m: i64, fixed: &[i64]) -> Result<LogSeveriDims, SeveriError> {
    if m < 1 || m > lt {
        return Err(SeveriError::TangencyOutOfRange { m, lt });
    }
    let sum: i64 = fixed.iter().sum();
    if sum >= lt {
        return Err(SeveriError::FixedTooLarge { sum, lt });
    }
    Ok(LogSeveriDims {
        g,
        lt,
        m,
        fixed_points: g - 1 + lt - sum,
        moving_point: g + lt - m,
        elliptic_on_r: lt - m + 1,
        rational_on_p: lt - m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rigid_means_zero_dimensional() {
        for g in 1..20 {
            assert_eq!(severi_regular_dim(g, g - 1).unwrap(), 0);
        }
        assert!(severi_regular_dim(3, 3).is_err());
        assert!(severi_regular_dim(3, -1).is_err());
    }

    #[test]
    fn full_tangency_elliptic() {
        let d = log_severi_dims(1, 9, 9, &[]).unwrap();
        assert_eq!(d.elliptic_on_r, 1);
        assert_eq!(d.rational_on_p, 0);
        assert_eq!(d.moving_point, 1);
    }

    #[test]
    fn fixed_points_one_short() {
        let d = log_severi_dims(0, 7, 1, &[3, 3]).unwrap();
        assert_eq!(d.fixed_points, 0);
        assert!(log_severi_dims(0, 6, 1, &[3, 3]).is_err());
        assert!(log_severi_dims(0, 6, 7, &[]).is_err());
        assert!(log_severi_dims(0, 6, 0, &[]).is_err());
    }
}
