use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// The class of a univariate Laurent polynomial modulo `J²`, stored as its
/// value and first derivative at `t = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JetAtOne {
    pub value: BigInt,
    pub slope: BigInt,
}

impl JetAtOne {
    pub fn new(value: BigInt, slope: BigInt) -> Self {
        JetAtOne { value, slope }
    }

    pub fn from_ints(value: i64, slope: i64) -> Self {
        JetAtOne::new(value.into(), slope.into())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero() && self.slope.is_zero()
    }

    /// Whether the class lies in the augmentation ideal `J`.
    pub fn in_augmentation_ideal(&self) -> bool {
        self.value.is_zero()
    }
}

impl Add for &JetAtOne {
    type Output = JetAtOne;
    fn add(self, rhs: &JetAtOne) -> JetAtOne {
        JetAtOne::new(&self.value + &rhs.value, &self.slope + &rhs.slope)
    }
}

impl Mul for &JetAtOne {
    type Output = JetAtOne;
    fn mul(self, rhs: &JetAtOne) -> JetAtOne {
        JetAtOne::new(
            &self.value * &rhs.value,
            &self.value * &rhs.slope + &rhs.value * &self.slope,
        )
    }
}

impl Neg for &JetAtOne {
    type Output = JetAtOne;
    fn neg(self) -> JetAtOne {
        JetAtOne::new(-&self.value, -&self.slope)
    }
}

impl fmt::Display for JetAtOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.value, self.slope)
    }
}

/// Serialized as a pair of decimal strings `["value", "slope"]`.
impl Serialize for JetAtOne {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.value.to_string(), self.slope.to_string()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for JetAtOne {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let (v, s) = <(String, String)>::deserialize(d)?;
        let parse = |x: &str| {
            x.parse::<BigInt>()
                .map_err(|_| D::Error::custom(format!("bad integer {x:?}")))
        };
        Ok(JetAtOne::new(parse(&v)?, parse(&s)?))
    }
}
