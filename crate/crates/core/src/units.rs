use std::fmt;
use std::str::FromStr;

/// Logarithm base for information quantities.
///
/// Bits use base 2 (the default throughout), nats base e, hartleys base 10.
/// Conversions are anchored on two exact factors:
/// `bits = nats / ln 2` and `hartleys = bits * log10(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InfoUnit {
    Bits,
    Nats,
    Hartleys,
}

impl Default for InfoUnit {
    fn default() -> Self {
        InfoUnit::Bits
    }
}

impl InfoUnit {
    /// Logarithm of `x` in this unit's base, using the dedicated
    /// intrinsic for each base rather than a ratio of natural logs.
    pub fn log(self, x: f64) -> f64 {
        match self {
            InfoUnit::Bits => x.log2(),
            InfoUnit::Nats => x.ln(),
            InfoUnit::Hartleys => x.log10(),
        }
    }

    /// Convert a quantity expressed in nats into this unit.
    pub fn from_nats(self, nats: f64) -> f64 {
        InfoUnit::Nats.convert(nats, self)
    }

    /// Convert `value` expressed in `self` into `to`.
    ///
    /// Routed through bits so that the two anchored factors are applied
    /// verbatim; infinities pass through unchanged.
    pub fn convert(self, value: f64, to: InfoUnit) -> f64 {
        use std::f64::consts::{LN_2, LOG10_2};
        let bits = match self {
            InfoUnit::Bits => value,
            InfoUnit::Nats => value / LN_2,
            InfoUnit::Hartleys => value / LOG10_2,
        };
        match to {
            InfoUnit::Bits => bits,
            InfoUnit::Nats => bits * LN_2,
            InfoUnit::Hartleys => bits * LOG10_2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            InfoUnit::Bits => "bits",
            InfoUnit::Nats => "nats",
            InfoUnit::Hartleys => "hartleys",
        }
    }
}

impl fmt::Display for InfoUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for InfoUnit {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bits" => Ok(InfoUnit::Bits),
            "nats" => Ok(InfoUnit::Nats),
            "hartleys" => Ok(InfoUnit::Hartleys),
            other => Err(format!(
                "unknown unit {other:?}, expected bits, nats, or hartleys"
            )),
        }
    }
}
