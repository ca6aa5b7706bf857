//! Lisse and collapse verdicts for minimal W-algebras at a given level.

use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{LieError, Result};
use crate::rational::{q, qf, Q};
use crate::rootsys::{RootSystem, Series};

use super::deligne_level;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lisse {
    Yes,
    No,
    UnknownConjectural,
}

impl fmt::Display for Lisse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lisse::Yes => "yes",
            Lisse::No => "no",
            Lisse::UnknownConjectural => "unknown (conjectural)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub lisse: Lisse,
    pub collapses_to_trivial: bool,
    pub reason: String,
}

fn yes_no(b: bool) -> Lisse {
    if b {
        Lisse::Yes
    } else {
        Lisse::No
    }
}

/// `k = p/2` with `p` odd and `p >= min_p`.
fn half_odd_at_least(k: &Q, min_p: i64) -> bool {
    let p = k * q(2);
    p.is_integer() && p.numer().is_odd() && p >= q(min_p)
}

fn integer_at_least(k: &Q, min: i64) -> bool {
    k.is_integer() && *k >= q(min)
}

/// sl2: `k + 2 = p/q` with `p, q >= 2` coprime, or `k = -2`.
fn sl2_lisse(k: &Q) -> bool {
    let s = k + q(2);
    if s == q(0) {
        return true;
    }
    s.is_positive() && *s.numer() >= 2.into() && *s.denom() >= 2.into()
}

fn sl2_trivial(k: &Q) -> bool {
    let s = k + q(2);
    s == q(0) || s == qf(2, 3) || s == qf(3, 2)
}

fn is_sp(rs: &RootSystem) -> bool {
    let t = rs.simple_type();
    t.series() == Series::C || t.is(Series::B, 2)
}

/// True at the Deligne level of an exceptional-series type, or at `-1/2` for sp_2l.
pub fn collapse_verdict(rs: &RootSystem, k: &Q) -> Result<bool> {
    let t = rs.simple_type();
    if t.is(Series::A, 1) {
        return Err(LieError::Unsupported(
            "collapse criterion excludes A1; the sl2 case is the Virasoro algebra".into(),
        ));
    }
    if t.is_deligne() && *k == deligne_level(rs)? {
        return Ok(true);
    }
    Ok(is_sp(rs) && *k == qf(-1, 2))
}

pub fn lisse_verdict(rs: &RootSystem, k: &Q) -> ClassificationVerdict {
    let t = rs.simple_type();
    let l = t.rank();
    let collapses = if t.is(Series::A, 1) {
        sl2_trivial(k)
    } else {
        collapse_verdict(rs, k).unwrap_or(false)
    };
    let (lisse, reason): (Lisse, String) = match t.series() {
        Series::A if l == 1 => (
            yes_no(sl2_lisse(k)),
            "sl2 (Virasoro): k+2 = p/q with p,q >= 2 coprime, or k = -2".into(),
        ),
        Series::A if l == 2 && collapses => (Lisse::Yes, "collapses to the trivial algebra".into()),
        Series::A if l == 2 => (
            Lisse::UnknownConjectural,
            "sl3: conjecturally admissible with denominator 2, p >= -3".into(),
        ),
        Series::A => (Lisse::No, format!("sl{}: never lisse (n >= 4)", l + 1)),
        Series::C => (
            yes_no(half_odd_at_least(k, -1)),
            format!("sp{}: k = p/2 with p odd, p >= -1", 2 * l),
        ),
        Series::B if l == 2 => (
            yes_no(half_odd_at_least(k, -1)),
            "so5 = sp4: k = p/2 with p odd, p >= -1".into(),
        ),
        Series::B if l == 3 => (
            yes_no(half_odd_at_least(k, -3)),
            "so7: k = p/2 with p odd, p >= -3".into(),
        ),
        Series::B => (Lisse::No, format!("so{}: never lisse", 2 * l + 1)),
        Series::D if l == 3 => (Lisse::No, "so6 = sl4: never lisse".into()),
        Series::D => (
            yes_no(integer_at_least(k, -2)),
            format!("so{}: integer k >= -2", 2 * l),
        ),
        Series::F => (yes_no(half_odd_at_least(k, -5)), "F4: k = p/2 with p odd, p >= -5".into()),
        Series::E => {
            let min = match l {
                6 => -3,
                7 => -4,
                _ => -6,
            };
            (yes_no(integer_at_least(k, min)), format!("E{l}: integer k >= {min}"))
        }
        Series::G => {
            if collapses {
                (Lisse::Yes, "collapses to the trivial algebra".into())
            } else {
                (
                    Lisse::UnknownConjectural,
                    "G2: conjecturally admissible with denominator 3, or integer k >= -1".into(),
                )
            }
        }
    };
    ClassificationVerdict {
        lisse,
        collapses_to_trivial: collapses,
        reason,
    }
}

impl fmt::Display for ClassificationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lisse: {} ({})\ncollapses: {}",
            self.lisse,
            self.reason,
            if self.collapses_to_trivial { "yes" } else { "no" }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn verdict(t: &str, k: Q) -> ClassificationVerdict {
        lisse_verdict(&build_root_system(t.parse().unwrap()), &k)
    }

    #[test]
    fn sample_clauses() {
        assert_eq!(verdict("B3", qf(-3, 2)).lisse, Lisse::Yes);
        assert_eq!(verdict("B4", q(3)).lisse, Lisse::No);
        assert_eq!(verdict("E7", q(-5)).lisse, Lisse::No);
        assert_eq!(verdict("E7", q(-4)).lisse, Lisse::Yes);
        assert_eq!(verdict("G2", q(0)).lisse, Lisse::UnknownConjectural);
        assert_eq!(verdict("G2", qf(-5, 3)).lisse, Lisse::Yes);
    }

    #[test]
    fn collapse() {
        let rs = |t: &str| build_root_system(t.parse().unwrap());
        assert!(collapse_verdict(&rs("F4"), &qf(-5, 2)).unwrap());
        assert!(collapse_verdict(&rs("C3"), &qf(-1, 2)).unwrap());
        assert!(!collapse_verdict(&rs("E6"), &q(-2)).unwrap());
        assert!(collapse_verdict(&rs("A1"), &q(0)).is_err());
    }
}
