use serde::{Deserialize, Serialize};

use crate::constants::PI;
use crate::error::domain;
use crate::Result;

const TWO_PI: f64 = 2.0 * PI;

/// An angle in radians together with its representative in (−π, π].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Angle {
    raw: f64,
    reduced: f64,
}

impl Angle {
    pub fn new(raw: f64) -> Self {
        Self {
            raw,
            reduced: reduce(raw),
        }
    }

    pub fn raw(self) -> f64 {
        self.raw
    }

    /// The representative in (−π, π].
    pub fn reduced(self) -> f64 {
        self.reduced
    }
}

impl From<f64> for Angle {
    fn from(raw: f64) -> Self {
        Angle::new(raw)
    }
}

fn reduce(x: f64) -> f64 {
    if x > -PI && x <= PI {
        return x;
    }
    let mut r = x - TWO_PI * (x / TWO_PI).round();
    if r <= -PI {
        r += TWO_PI;
    } else if r > PI {
        r -= TWO_PI;
    }
    r
}

/// The angle pπ/q in lowest terms with q > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalAngle {
    p: i64,
    q: i64,
}

impl RationalAngle {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(domain("rational angle with zero denominator"));
        }
        let g = gcd(p.unsigned_abs(), q.unsigned_abs()) as i64;
        let s = q.signum();
        Ok(Self {
            p: s * p / g,
            q: s * q / g,
        })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    pub fn radians(self) -> f64 {
        self.p as f64 * PI / self.q as f64
    }

    pub fn angle(self) -> Angle {
        Angle::new(self.radians())
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// The point r·e^{iθ} with r ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarPoint {
    r: f64,
    theta: Angle,
}

impl PolarPoint {
    pub fn new(r: f64, theta: impl Into<Angle>) -> Result<Self> {
        if !(r >= 0.0) || !r.is_finite() {
            return Err(domain(format!("polar radius must be finite and >= 0, got {r}")));
        }
        Ok(Self {
            r,
            theta: theta.into(),
        })
    }

    pub fn r(self) -> f64 {
        self.r
    }

    pub fn theta(self) -> Angle {
        self.theta
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_range() {
        for &x in &[0.0, PI, -PI, 3.0 * PI, -3.0 * PI, 7.5, -7.5, 1e6, -1e6] {
            let a = Angle::new(x);
            assert!(a.reduced() > -PI && a.reduced() <= PI, "{x} -> {}", a.reduced());
            let k = (x - a.reduced()) / TWO_PI;
            assert!((k - k.round()).abs() < 1e-9);
        }
        assert_eq!(Angle::new(-PI).reduced(), PI);
    }

    #[test]
    fn rational_canonical() {
        let a = RationalAngle::new(6, -9).unwrap();
        assert_eq!((a.p(), a.q()), (-2, 3));
        let z = RationalAngle::new(0, 5).unwrap();
        assert_eq!((z.p(), z.q()), (0, 1));
        assert!(RationalAngle::new(1, 0).is_err());
    }

    #[test]
    fn polar_rejects_negative_radius() {
        assert!(PolarPoint::new(-1.0, 0.0).is_err());
        assert!(PolarPoint::new(f64::NAN, 0.0).is_err());
        assert!(PolarPoint::new(0.0, 1.0).is_ok());
    }
}
