//! Named Coxeter systems.
//!
//! Conventions follow the diagrams used throughout the crate: `A_n` is the
//! path `s_1 - ... - s_n`; in `B_n` the bond 4 joins `s_1` and `s_2`; in `D_n`
//! both `s_1` and `s_3` hang off `s_2`, which continues as `s_2 - s_4 - ... -
//! s_n`.

use super::matrix::{Bond, CoxeterMatrix};
use super::system::{Caps, CoxeterSystem};
use crate::error::{Error, Result};

/// Names accepted by [`preset_matrix`], besides the general `An`, `Bn`, `Dn`
/// and `I2(m)` families.
pub const PRESET_NAMES: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "D5", "I2(3)", "I2(4)", "I2(5)", "I2(6)",
    "I2(7)", "I2(8)", "I2(9)", "I2(10)", "I2(11)", "I2(12)", "Atilde2", "U3", "I2inf",
];

pub fn type_a(n: usize) -> Result<CoxeterMatrix> {
    let bonds: Vec<_> = (1..n).map(|i| (i, i + 1, Some(3))).collect();
    CoxeterMatrix::from_bonds(n, &bonds)
}

pub fn type_b(n: usize) -> Result<CoxeterMatrix> {
    if n < 2 {
        return Err(Error::Parse("type B needs rank at least 2".into()));
    }
    let bonds: Vec<_> = (1..n)
        .map(|i| (i, i + 1, Some(if i == 1 { 4 } else { 3 })))
        .collect();
    CoxeterMatrix::from_bonds(n, &bonds)
}

pub fn type_d(n: usize) -> Result<CoxeterMatrix> {
    if n < 4 {
        return Err(Error::Parse("type D needs rank at least 4".into()));
    }
    let mut bonds = vec![(1, 2, Some(3)), (3, 2, Some(3)), (2, 4, Some(3))];
    bonds.extend((4..n).map(|i| (i, i + 1, Some(3))));
    CoxeterMatrix::from_bonds(n, &bonds)
}

pub fn dihedral(m: Bond) -> Result<CoxeterMatrix> {
    if m.is_some_and(|m| m < 2) {
        return Err(Error::Parse("I2(m) needs m >= 2".into()));
    }
    CoxeterMatrix::from_bonds(2, &[(1, 2, m)])
}

/// The affine group `Ã_2`: a triangle with all bonds 3.
pub fn affine_a2() -> Result<CoxeterMatrix> {
    CoxeterMatrix::from_bonds(3, &[(1, 2, Some(3)), (2, 3, Some(3)), (1, 3, Some(3))])
}

/// The universal Coxeter group of rank `n`: every bond is `∞`.
pub fn universal(n: usize) -> Result<CoxeterMatrix> {
    let mut bonds = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            bonds.push((i, j, None));
        }
    }
    CoxeterMatrix::from_bonds(n, &bonds)
}

pub fn preset_matrix(name: &str) -> Result<CoxeterMatrix> {
    let unknown = || Error::Parse(format!("unknown preset {name:?}"));
    match name {
        "Atilde2" => return affine_a2(),
        "U3" => return universal(3),
        "I2inf" | "I2(inf)" => return dihedral(None),
        _ => {}
    }
    if let Some(inner) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
        let m: u32 = inner.parse().map_err(|_| unknown())?;
        return dihedral(Some(m));
    }
    let (family, digits) = name.split_at(1.min(name.len()));
    let n: usize = digits.parse().map_err(|_| unknown())?;
    if n == 0 || n > 64 {
        return Err(unknown());
    }
    match family {
        "A" => type_a(n),
        "B" => type_b(n),
        "D" => type_d(n),
        _ => Err(unknown()),
    }
}

pub fn preset(name: &str) -> Result<CoxeterSystem> {
    preset_matrix(name).map(CoxeterSystem::new)
}

pub fn preset_with_caps(name: &str, caps: Caps) -> Result<CoxeterSystem> {
    preset_matrix(name).map(|m| CoxeterSystem::with_caps(m, caps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_preset_parses() {
        for name in PRESET_NAMES {
            assert!(preset(name).is_ok(), "{name}");
        }
    }

    #[test]
    fn unknown_presets() {
        for name in ["", "X3", "A0", "D3", "B1", "I2(1)", "I2(x)", "A"] {
            assert!(preset_matrix(name).is_err(), "{name}");
        }
    }

    #[test]
    fn orders() {
        let expect = [
            ("A1", 2u128),
            ("A2", 6),
            ("A3", 24),
            ("A4", 120),
            ("B2", 8),
            ("B3", 48),
            ("D4", 192),
            ("D5", 1920),
            ("I2(7)", 14),
        ];
        for (name, order) in expect {
            assert_eq!(preset(name).unwrap().order(), Some(order), "{name}");
        }
        assert_eq!(preset("Atilde2").unwrap().order(), None);
        assert_eq!(preset("I2inf").unwrap().order(), None);
    }
}
