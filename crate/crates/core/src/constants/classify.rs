use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::LegendreChar;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OneMod8Sub {
    PlusMinusSevenMod24,
    PlusMinusOneMod24,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FiveMod24Sub {
    QEqualsFive,
    PlusMinus19Or29Mod120,
    PlusMinus43Or53Mod120,
}

/// Which asymptotic regime `q` falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    /// `q = 3`: the partial sums are exactly `floor(x^(1/3))`.
    Cubic,
    /// Main term of size `x log x`.
    PlusMinusOneMod8(OneMod8Sub),
    /// Main term of size `sqrt(x)`.
    PlusMinusElevenMod24,
    /// No main term; only upper bounds.
    PlusMinusFiveMod24(FiveMod24Sub),
}

impl Branch {
    pub fn label(&self) -> &'static str {
        match self {
            Branch::Cubic => "Q_EQUALS_3",
            Branch::PlusMinusOneMod8(OneMod8Sub::PlusMinusSevenMod24) => "PM1_MOD8/PM7_MOD24",
            Branch::PlusMinusOneMod8(OneMod8Sub::PlusMinusOneMod24) => "PM1_MOD8/PM1_MOD24",
            Branch::PlusMinusElevenMod24 => "PM11_MOD24",
            Branch::PlusMinusFiveMod24(FiveMod24Sub::QEqualsFive) => "PM5_MOD24/Q_EQUALS_5",
            Branch::PlusMinusFiveMod24(FiveMod24Sub::PlusMinus19Or29Mod120) => "PM5_MOD24/PM19_29_MOD120",
            Branch::PlusMinusFiveMod24(FiveMod24Sub::PlusMinus43Or53Mod120) => "PM5_MOD24/PM43_53_MOD120",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseClass {
    pub q: u64,
    pub branch: Branch,
    /// First exponent of `P_q`; present iff `q = +-1 mod 8`.
    pub c_q: Option<u32>,
    /// First exponent of the `q = +-3 mod 8` product; present iff `q = +-3 mod 8`.
    pub d_q: Option<u32>,
}

/// Smallest `m >= 2` with `((m+1)/q) != (m/q)`; always `<= q - 1`.
pub fn first_difference_index(chi: LegendreChar) -> u32 {
    (2..chi.modulus())
        .find(|&m| chi.eval(m as i64 + 1) != chi.eval(m as i64))
        .expect("((q)/q) = 0 differs from ((q-1)/q)") as u32
}

/// Smallest `m >= 2` with `((m+1)/q) + (m/q) != 0`.
pub fn first_sum_index(chi: LegendreChar) -> u32 {
    (2..chi.modulus())
        .find(|&m| chi.eval(m as i64 + 1) + chi.eval(m as i64) != 0)
        .expect("((q)/q) + ((q-1)/q) is nonzero") as u32
}

pub fn classify(q: u64) -> Result<CaseClass> {
    let chi = LegendreChar::new(q)?;
    let (branch, c_q, d_q) = match q % 8 {
        1 | 7 => {
            let c = first_difference_index(chi);
            let sub = if matches!(q % 24, 7 | 17) {
                if c != 2 {
                    return Err(Error::Invariant(format!("c_{q} = {c}, expected 2")));
                }
                OneMod8Sub::PlusMinusSevenMod24
            } else {
                if !(4..q as u32).contains(&c) {
                    return Err(Error::Invariant(format!("c_{q} = {c} outside [4, q)")));
                }
                OneMod8Sub::PlusMinusOneMod24
            };
            (Branch::PlusMinusOneMod8(sub), Some(c), None)
        }
        _ => {
            let (branch, d) = if q == 3 {
                (Branch::Cubic, 2)
            } else if matches!(q % 24, 11 | 13) {
                (Branch::PlusMinusElevenMod24, 3)
            } else {
                let sub = if q == 5 {
                    FiveMod24Sub::QEqualsFive
                } else if matches!(q % 120, 19 | 101 | 29 | 91) {
                    FiveMod24Sub::PlusMinus19Or29Mod120
                } else {
                    FiveMod24Sub::PlusMinus43Or53Mod120
                };
                (Branch::PlusMinusFiveMod24(sub), 2)
            };
            let found = first_sum_index(chi);
            if found != d {
                return Err(Error::Invariant(format!("d_{q} = {found}, expected {d}")));
            }
            (branch, None, Some(d))
        }
    };
    Ok(CaseClass { q, branch, c_q, d_q })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples() {
        let c7 = classify(7).unwrap();
        assert_eq!(c7.branch, Branch::PlusMinusOneMod8(OneMod8Sub::PlusMinusSevenMod24));
        assert_eq!(c7.c_q, Some(2));
        let c23 = classify(23).unwrap();
        assert_eq!(c23.branch, Branch::PlusMinusOneMod8(OneMod8Sub::PlusMinusOneMod24));
        assert_eq!(c23.c_q, Some(4));
        assert_eq!(classify(13).unwrap().branch, Branch::PlusMinusElevenMod24);
        assert_eq!(classify(13).unwrap().d_q, Some(3));
        assert_eq!(
            classify(43).unwrap().branch,
            Branch::PlusMinusFiveMod24(FiveMod24Sub::PlusMinus43Or53Mod120)
        );
        assert_eq!(
            classify(5).unwrap().branch,
            Branch::PlusMinusFiveMod24(FiveMod24Sub::QEqualsFive)
        );
        assert_eq!(classify(3).unwrap().branch, Branch::Cubic);
        assert_eq!(classify(3).unwrap().d_q, Some(2));
    }

    #[test]
    fn non_primes_are_rejected() {
        for q in [0, 1, 2, 4, 9, 25] {
            assert!(matches!(classify(q), Err(Error::Argument(_))));
        }
    }
}
