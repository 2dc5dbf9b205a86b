//! Mathematical constants used across the crate.
//!
//! Each constant is written with at least 30 significant digits. The digit
//! strings were checked against independent arbitrary-precision evaluation
//! (60 digits); the `f64` literals round to the nearest double.
#![allow(clippy::approx_constant)]

pub const PI: f64 = 3.141592653589793238462643383279502884197;
pub const LN_2: f64 = 0.6931471805599453094172321214581765680755;
/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.5772156649015328606065120900824024310422;
/// Apéry's constant ζ(3).
pub const ZETA_3: f64 = 1.202056903159594285399738161511449990765;
/// Catalan's constant G = Cl₂(π/2).
pub const CATALAN: f64 = 0.9159655941772190150546035149323841107741;
/// ζ(2) = π²/6.
pub const ZETA_2: f64 = 1.644934066848226436472415166646025189219;
pub const SQRT_PI: f64 = 1.772453850905516027298167483341145182798;
pub const SQRT_7: f64 = 2.645751311064590590501615753639260425710;
pub const SQRT_3: f64 = 1.732050807568877293527446341505872366943;
/// Li₃(1/2) = (7/8)ζ(3) − (π²/12) ln 2 + (ln³2)/6.
pub const LI3_HALF: f64 = 0.5372131936080402009406232255949658266704;

/// Identifiers for the constants that can appear in closed-form add-on terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstantId {
    One,
    Pi,
    PiSquared,
    PiLn2,
    PiSquaredLn2,
    PiLn2Squared,
    Ln2Cubed,
    Zeta3,
    Catalan,
    CatalanLn2,
    /// Im Li₃((1+i)/2); evaluated through the complex polylogarithm.
    ImLi3OnePlusIOver2,
}

impl ConstantId {
    /// Value of the constant. `ImLi3OnePlusIOver2` requires a polylogarithm
    /// evaluation and is the only fallible entry.
    pub fn value(self) -> crate::Result<f64> {
        use ConstantId::*;
        Ok(match self {
            One => 1.0,
            Pi => PI,
            PiSquared => PI * PI,
            PiLn2 => PI * LN_2,
            PiSquaredLn2 => PI * PI * LN_2,
            PiLn2Squared => PI * LN_2 * LN_2,
            Ln2Cubed => LN_2 * LN_2 * LN_2,
            Zeta3 => ZETA_3,
            Catalan => CATALAN,
            CatalanLn2 => CATALAN * LN_2,
            ImLi3OnePlusIOver2 => {
                let z = num_complex::Complex64::new(0.5, 0.5);
                crate::specfun::polylog_complex(3, z, 1e-15)?.value.im
            }
        })
    }

    pub fn name(self) -> &'static str {
        use ConstantId::*;
        match self {
            One => "1",
            Pi => "pi",
            PiSquared => "pi^2",
            PiLn2 => "pi*ln2",
            PiSquaredLn2 => "pi^2*ln2",
            PiLn2Squared => "pi*ln2^2",
            Ln2Cubed => "ln2^3",
            Zeta3 => "zeta(3)",
            Catalan => "G",
            CatalanLn2 => "G*ln2",
            ImLi3OnePlusIOver2 => "Im Li3((1+i)/2)",
        }
    }
}
