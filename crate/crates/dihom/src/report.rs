//! Two-sided bound reports with exact or guarded-float sides.

use std::fmt;

use num::rational::BigRational;
use num::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::ratio::{format_rational, rational_to_f64};

/// Relative guard band for comparisons whose right-hand side is only
/// available in binary64 (fractional Hölder exponents): 2^-30.
pub const REL_GUARD: f64 = 9.313225746154785e-10;

/// Whether two floats agree up to the guard band, relative to the larger
/// magnitude.
pub fn within_guard(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_GUARD * a.abs().max(b.abs())
}

/// One side of a bound: exact rational, or binary64 where fractional
/// exponents force it.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(BigRational),
    Approx(f64),
}

impl Value {
    pub fn from_uint(x: BigUint) -> Value {
        Value::Exact(BigRational::from_integer(x.into()))
    }

    pub fn from_usize(x: usize) -> Value {
        Value::Exact(BigRational::from_integer(x.into()))
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => rational_to_f64(r),
            Value::Approx(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Approx(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{}", format_rational(r)),
            Value::Approx(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            // decimal strings: counts overflow 53-bit floats quickly
            Value::Exact(r) => s.serialize_str(&format_rational(r)),
            Value::Approx(x) => {
                if x.is_finite() {
                    s.serialize_f64(*x)
                } else {
                    s.serialize_str(&x.to_string())
                }
            }
        }
    }
}

/// The outcome of evaluating both sides of one inequality on one instance.
///
/// `holds` reports `lhs <= rhs`; for the two Hölder-exponent checkers it is
/// the guarded verdict (exact certification inside the guard band), so the
/// sign of the raw float slack can disagree with it by at most the band.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub label: String,
    pub lhs: Value,
    pub rhs: Value,
    pub holds: bool,
}

impl BoundReport {
    /// Exact report: verdict computed from the rational sides.
    pub fn exact(label: impl Into<String>, lhs: BigRational, rhs: BigRational) -> Self {
        let holds = lhs <= rhs;
        BoundReport {
            label: label.into(),
            lhs: Value::Exact(lhs),
            rhs: Value::Exact(rhs),
            holds,
        }
    }

    pub fn exact_counts(label: impl Into<String>, lhs: BigUint, rhs: BigUint) -> Self {
        Self::exact(
            label,
            BigRational::from_integer(lhs.into()),
            BigRational::from_integer(rhs.into()),
        )
    }

    /// `rhs - lhs`; negative when the bound fails. Exact when both sides are.
    pub fn slack(&self) -> Value {
        match (&self.lhs, &self.rhs) {
            (Value::Exact(l), Value::Exact(r)) => Value::Exact(r - l),
            (l, r) => Value::Approx(r.as_f64() - l.as_f64()),
        }
    }
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundReport", 5)?;
        st.serialize_field("label", &self.label)?;
        st.serialize_field("lhs", &self.lhs)?;
        st.serialize_field("rhs", &self.rhs)?;
        st.serialize_field("holds", &self.holds)?;
        st.serialize_field("slack", &self.slack())?;
        st.end()
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: lhs={} rhs={} {}",
            self.label,
            self.lhs,
            self.rhs,
            if self.holds { "holds" } else { "VIOLATED" }
        )
    }
}
