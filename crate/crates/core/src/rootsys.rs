//! Finite root systems in Bourbaki numbering.
//!
//! Roots live in simple-root coordinates (integers), weights in
//! fundamental-weight coordinates (rationals). The inner product is
//! normalized so that long roots have squared length 2.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{LieError, Result};
use crate::rational::{fmt_q, is_integer, q, qf, to_i64, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    series: Series,
    rank: usize,
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { series, rank })
        } else {
            Err(LieError::InvalidRank {
                series: series.letter(),
                rank,
            })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is(&self, series: Series, rank: usize) -> bool {
        self.series == series && self.rank == rank
    }

    /// A1, A2, G2, D4, F4, E6, E7, E8.
    pub fn is_deligne(&self) -> bool {
        matches!(
            (self.series, self.rank),
            (Series::A, 1 | 2) | (Series::G, 2) | (Series::D, 4) | (Series::F, 4) | (Series::E, _)
        )
    }

    /// Every type of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for series in [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(series, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = LieError;

    /// Accepts `E8`, `d4`, and the classical names `sl3`, `so7`, `so8`, `sp6`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let unknown = || LieError::UnknownType(s.to_string());
        let num = |rest: &str| rest.trim_start_matches('_').parse::<usize>().map_err(|_| unknown());
        if let Some(rest) = t.strip_prefix("sl") {
            let n = num(rest)?;
            return SimpleType::new(Series::A, n.checked_sub(1).ok_or_else(unknown)?);
        }
        if let Some(rest) = t.strip_prefix("sp") {
            let n = num(rest)?;
            if n % 2 != 0 {
                return Err(unknown());
            }
            return SimpleType::new(Series::C, n / 2);
        }
        if let Some(rest) = t.strip_prefix("so") {
            let n = num(rest)?;
            return if n % 2 == 1 {
                SimpleType::new(Series::B, n / 2)
            } else {
                SimpleType::new(Series::D, n / 2)
            };
        }
        let mut chars = t.chars();
        let series = match chars.next() {
            Some('a') => Series::A,
            Some('b') => Series::B,
            Some('c') => Series::C,
            Some('d') => Series::D,
            Some('e') => Series::E,
            Some('f') => Series::F,
            Some('g') => Series::G,
            _ => return Err(unknown()),
        };
        SimpleType::new(series, num(chars.as_str())?)
    }
}

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }
}

impl fmt::Display for Root {
    /// `(1211)` style when every coordinate is a single digit, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|c| (0..10).contains(c)) && self.0.len() < 10 {
            let s: String = self.0.iter().map(|c| c.to_string()).collect();
            write!(f, "({s})")
        } else {
            let s: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", s.join(","))
        }
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![Q::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Weight {
        Weight(v.iter().map(|&c| q(c)).collect())
    }

    /// `i` is 0-based.
    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut w = Weight::zero(rank);
        w.0[i] = Q::one();
        w
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.0.iter().all(|c| is_integer(c) && !c.is_negative())
    }

    /// Parses comma-separated coordinates such as `0,1,1/3`.
    pub fn parse(s: &str) -> Result<Weight> {
        let coords = s
            .split(',')
            .map(crate::rational::parse_q)
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight(coords))
    }

    /// `w1 + 1/3 w2` style, `0` for the zero weight.
    pub fn fmt_fundamental(&self) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() {
                String::new()
            } else if *c == -Q::one() {
                "-".to_string()
            } else {
                format!("{} ", fmt_q(c))
            };
            parts.push(format!("{coeff}w{}", i + 1));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(fmt_q).collect();
        write!(f, "[{}]", s.join(", "))
    }
}

/// Gram matrix of the simple roots with long roots of squared length 2.
fn gram_matrix(t: SimpleType) -> Vec<Vec<Q>> {
    let l = t.rank();
    let mut g = vec![vec![Q::zero(); l]; l];
    let link = |g: &mut Vec<Vec<Q>>, i: usize, j: usize, v: Q| {
        g[i][j] = v.clone();
        g[j][i] = v;
    };
    match t.series() {
        Series::A => {
            for i in 0..l {
                g[i][i] = q(2);
            }
            for i in 0..l.saturating_sub(1) {
                link(&mut g, i, i + 1, q(-1));
            }
        }
        Series::B => {
            for i in 0..l {
                g[i][i] = q(2);
            }
            g[l - 1][l - 1] = q(1);
            for i in 0..l - 1 {
                link(&mut g, i, i + 1, q(-1));
            }
        }
        Series::C => {
            for i in 0..l {
                g[i][i] = q(1);
            }
            g[l - 1][l - 1] = q(2);
            for i in 0..l - 2 {
                link(&mut g, i, i + 1, qf(-1, 2));
            }
            link(&mut g, l - 2, l - 1, q(-1));
        }
        Series::D => {
            for i in 0..l {
                g[i][i] = q(2);
            }
            for i in 0..l - 2 {
                link(&mut g, i, i + 1, q(-1));
            }
            link(&mut g, l - 3, l - 1, q(-1));
        }
        Series::E => {
            for i in 0..l {
                g[i][i] = q(2);
            }
            // 1-3-4-5-6(-7-8), 2 attached to 4
            link(&mut g, 0, 2, q(-1));
            link(&mut g, 1, 3, q(-1));
            for i in 2..l - 1 {
                link(&mut g, i, i + 1, q(-1));
            }
        }
        Series::F => {
            g[0][0] = q(2);
            g[1][1] = q(2);
            g[2][2] = q(1);
            g[3][3] = q(1);
            link(&mut g, 0, 1, q(-1));
            link(&mut g, 1, 2, q(-1));
            link(&mut g, 2, 3, qf(-1, 2));
        }
        Series::G => {
            g[0][0] = qf(2, 3);
            g[1][1] = q(2);
            link(&mut g, 0, 1, q(-1));
        }
    }
    g
}

fn known_dual_coxeter(t: SimpleType) -> i64 {
    let l = t.rank() as i64;
    match t.series() {
        Series::A => l + 1,
        Series::B => 2 * l - 1,
        Series::C => l + 1,
        Series::D => 2 * l - 2,
        Series::E => match l {
            6 => 12,
            7 => 18,
            _ => 30,
        },
        Series::F => 9,
        Series::G => 4,
    }
}

fn known_positive_root_count(t: SimpleType) -> usize {
    let l = t.rank();
    match t.series() {
        Series::A => l * (l + 1) / 2,
        Series::B | Series::C => l * l,
        Series::D => l * (l - 1),
        Series::E => match l {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Series::F => 24,
        Series::G => 6,
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: SimpleType,
    gram: Vec<Vec<Q>>,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i|alpha_j) / (alpha_j|alpha_j)`
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    index: HashMap<Root, usize>,
    rho: Weight,
    theta: Root,
    h_dual: i64,
}

/// Builds the root system; positive roots are sorted by height, then lexicographically.
pub fn build_root_system(t: SimpleType) -> RootSystem {
    let l = t.rank();
    let gram = gram_matrix(t);
    let cartan: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| to_i64(&(q(2) * &gram[i][j] / &gram[j][j])).expect("integral Cartan entry"))
                .collect()
        })
        .collect();

    // grow by height: beta + alpha_i is a root iff q > 0 where p - q = <beta, alpha_i^vee>
    let mut roots: Vec<Root> = (0..l).map(|i| Root::simple(l, i)).collect();
    let mut known: HashMap<Root, ()> = roots.iter().map(|r| (r.clone(), ())).collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..l {
                let alpha = Root::simple(l, i);
                if *beta == alpha {
                    continue;
                }
                let mut p = 0;
                let mut cur = beta.sub(&alpha);
                while known.contains_key(&cur) {
                    p += 1;
                    cur = cur.sub(&alpha);
                }
                let pairing: i64 = (0..l).map(|j| beta.0[j] * cartan[j][i]).sum();
                let qq = p - pairing;
                let cand = beta.add(&alpha);
                if qq > 0 && !known.contains_key(&cand) {
                    known.insert(cand.clone(), ());
                    next.push(cand);
                }
            }
        }
        next.sort();
        next.dedup();
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    assert_eq!(roots.len(), known_positive_root_count(t), "positive root count for {t}");

    let index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    let theta = roots.last().unwrap().clone();
    let rho = Weight(vec![Q::one(); l]);
    let mut rs = RootSystem {
        ty: t,
        gram,
        cartan,
        positive_roots: roots,
        index,
        rho,
        theta,
        h_dual: known_dual_coxeter(t),
    };
    let computed = rs.pairing_weight_coroot(&rs.rho, &rs.theta.clone()) + Q::one();
    assert_eq!(computed, q(rs.h_dual), "dual Coxeter number of {t}");
    rs.h_dual = to_i64(&computed).unwrap();
    rs
}

impl RootSystem {
    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    pub fn h_dual(&self) -> i64 {
        self.h_dual
    }

    /// `dim g = 2|R+| + l`
    pub fn dim(&self) -> usize {
        2 * self.positive_roots.len() + self.rank()
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// True for positive and negative roots.
    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r) || self.index.contains_key(&r.neg())
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        let mut acc = Q::zero();
        for (i, ai) in a.iter().enumerate() {
            if *ai == 0 {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if *bj == 0 || self.gram[i][j].is_zero() {
                    continue;
                }
                acc += &self.gram[i][j] * q(ai * bj);
            }
        }
        acc
    }

    pub fn norm2(&self, r: &Root) -> Q {
        self.inner(&r.0, &r.0)
    }

    /// `<beta, gamma^vee> = 2 (beta|gamma) / (gamma|gamma)`
    pub fn pairing(&self, beta: &Root, gamma: &Root) -> i64 {
        to_i64(&(q(2) * self.inner(&beta.0, &gamma.0) / self.norm2(gamma)))
            .expect("root pairings are integral")
    }

    /// Coordinates of `gamma^vee` in the basis of simple coroots.
    pub fn coroot_coords(&self, gamma: &Root) -> Vec<i64> {
        let n = self.norm2(gamma);
        gamma
            .0
            .iter()
            .enumerate()
            .map(|(j, c)| to_i64(&(q(*c) * &self.gram[j][j] / &n)).expect("integral coroot"))
            .collect()
    }

    /// `<lambda, gamma^vee>` for a weight given in fundamental coordinates.
    pub fn pairing_weight_coroot(&self, lam: &Weight, gamma: &Root) -> Q {
        self.coroot_coords(gamma)
            .iter()
            .zip(&lam.0)
            .map(|(c, m)| q(*c) * m)
            .sum()
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, r: &[i64]) -> Weight {
        let l = self.rank();
        Weight(
            (0..l)
                .map(|i| q((0..l).map(|j| r[j] * self.cartan[j][i]).sum()))
                .collect(),
        )
    }

    /// Rational simple-root coordinates of a weight (inverse Cartan matrix).
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Q> {
        // solve sum_j c_j cartan[j][i] = w_i
        let l = self.rank();
        let mut m: Vec<Vec<Q>> = (0..l)
            .map(|i| {
                let mut row: Vec<Q> = (0..l).map(|j| q(self.cartan[j][i])).collect();
                row.push(w.0[i].clone());
                row
            })
            .collect();
        for col in 0..l {
            let p = (col..l).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
            m.swap(col, p);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..l {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot_row = m[col].clone();
                    for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[l].clone()).collect()
    }

    /// Integral simple-root coordinates of a weight, if it lies in the root lattice.
    pub fn weight_to_root_lattice(&self, w: &Weight) -> Option<Vec<i64>> {
        self.weight_to_root_coords(w).iter().map(to_i64).collect()
    }

    /// Simple reflection `s_i` (0-based) on a weight.
    pub fn reflect(&self, i: usize, lam: &Weight) -> Weight {
        let m = lam.0[i].clone();
        Weight(
            lam.0
                .iter()
                .enumerate()
                .map(|(j, c)| c - &m * q(self.cartan[i][j]))
                .collect(),
        )
    }

    /// Acts by `w = s_{word[0]} s_{word[1]} ... s_{word[r-1]}` (1-based indices).
    /// As an operator the rightmost reflection is applied first.
    pub fn weyl_act(&self, word: &[usize], lam: &Weight) -> Result<Weight> {
        self.check_len(lam)?;
        let l = self.rank();
        for &i in word {
            if i == 0 || i > l {
                return Err(LieError::IndexOutOfRange { index: i, rank: l });
            }
        }
        let mut out = lam.clone();
        for &i in word.iter().rev() {
            out = self.reflect(i - 1, &out);
        }
        Ok(out)
    }

    fn check_len(&self, lam: &Weight) -> Result<()> {
        if lam.0.len() != self.rank() {
            return Err(LieError::WrongLength {
                expected: self.rank(),
                got: lam.0.len(),
            });
        }
        Ok(())
    }

    /// Highest root among the roots supported on the given simple roots (0-based).
    pub fn highest_root_of(&self, simple: &[usize]) -> Option<Root> {
        self.positive_roots
            .iter()
            .filter(|r| r.0.iter().enumerate().all(|(i, c)| *c == 0 || simple.contains(&i)))
            .max_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)))
            .cloned()
    }
}

pub fn dual_coxeter(rs: &RootSystem) -> i64 {
    let v = rs.pairing_weight_coroot(rs.rho(), rs.theta()) + Q::one();
    to_i64(&v).expect("integral dual Coxeter number")
}

/// `w(lam + rho) - rho`; with `lam = lambda_0 - rho` this is `w(lambda_0) - rho`.
pub fn shifted_weyl_action(rs: &RootSystem, word: &[usize], lam: &Weight) -> Result<Weight> {
    rs.check_len(lam)?;
    let moved = rs.weyl_act(word, &lam.add(rs.rho()))?;
    Ok(moved.sub(rs.rho()))
}

/// Weyl dimension formula `prod_{a>0} <lam+rho, a^vee> / <rho, a^vee>`.
pub fn weyl_dimension(rs: &RootSystem, lam: &Weight) -> Result<u128> {
    rs.check_len(lam)?;
    if !lam.is_dominant_integral() {
        return Err(LieError::NotDominant(lam.to_string()));
    }
    let shifted = lam.add(rs.rho());
    let mut acc = Q::one();
    for a in rs.positive_roots() {
        acc *= rs.pairing_weight_coroot(&shifted, a) / rs.pairing_weight_coroot(rs.rho(), a);
    }
    assert!(is_integer(&acc));
    Ok(acc.numer().try_into().expect("dimension fits in u128"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap())
    }

    #[test]
    fn parse_types() {
        assert_eq!("so7".parse::<SimpleType>().unwrap().to_string(), "B3");
        assert_eq!("so8".parse::<SimpleType>().unwrap().to_string(), "D4");
        assert_eq!("sp6".parse::<SimpleType>().unwrap().to_string(), "C3");
        assert_eq!("sl3".parse::<SimpleType>().unwrap().to_string(), "A2");
        assert_eq!("e8".parse::<SimpleType>().unwrap().to_string(), "E8");
        assert!("E9".parse::<SimpleType>().is_err());
        assert!("B1".parse::<SimpleType>().is_err());
        assert!("D2".parse::<SimpleType>().is_err());
        assert!("F5".parse::<SimpleType>().is_err());
        assert!("X3".parse::<SimpleType>().is_err());
    }

    #[test]
    fn highest_roots_and_dual_coxeter() {
        assert_eq!(rs("E8").h_dual(), 30);
        assert_eq!(rs("E7").h_dual(), 18);
        assert_eq!(rs("F4").h_dual(), 9);
        assert_eq!(rs("A1").h_dual(), 2);
        assert_eq!(rs("D4").theta(), &Root(vec![1, 2, 1, 1]));
        assert_eq!(rs("E6").theta(), &Root(vec![1, 2, 2, 3, 2, 1]));
        assert_eq!(rs("E7").theta(), &Root(vec![2, 2, 3, 4, 3, 2, 1]));
        assert_eq!(rs("E8").theta(), &Root(vec![2, 3, 4, 6, 5, 4, 3, 2]));
        assert_eq!(rs("G2").theta(), &Root(vec![3, 2]));
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots(), &[Root(vec![1])]);
        assert_eq!(a1.theta(), &Root(vec![1]));
    }

    #[test]
    fn cartan_matches_root_pairings() {
        for t in SimpleType::all_up_to_rank(8) {
            let r = build_root_system(t);
            let l = r.rank();
            for i in 0..l {
                for j in 0..l {
                    let p = r.pairing(&Root::simple(l, i), &Root::simple(l, j));
                    assert_eq!(p, r.cartan()[i][j], "{t} ({i},{j})");
                }
            }
            assert_eq!(dual_coxeter(&r), r.h_dual());
        }
    }

    #[test]
    fn theta_is_unique_max_height() {
        for t in SimpleType::all_up_to_rank(8) {
            let r = build_root_system(t);
            let top = r.theta().height();
            assert_eq!(r.positive_roots().iter().filter(|x| x.height() == top).count(), 1);
        }
    }

    #[test]
    fn shifted_action_examples() {
        let g2 = rs("G2");
        let lambda0 = Weight(vec![q(1), qf(1, 3)]);
        let start = lambda0.sub(g2.rho());
        assert_eq!(shifted_weyl_action(&g2, &[], &start).unwrap(), start);
        // s2(w1 + 1/3 w2) = 2 w1 - 1/3 w2 by hand
        let got = shifted_weyl_action(&g2, &[2], &start).unwrap();
        assert_eq!(got, Weight(vec![q(2), qf(-1, 3)]).sub(g2.rho()));

        let d4 = rs("D4");
        let lambda0 = Weight::from_ints(&[1, 0, 1, 1]);
        let got = shifted_weyl_action(&d4, &[1], &lambda0.sub(d4.rho())).unwrap();
        let a1 = Root::simple(4, 0);
        assert_eq!(
            d4.pairing_weight_coroot(&got.add(d4.rho()), &a1),
            -d4.pairing_weight_coroot(&lambda0, &a1)
        );
        assert_eq!(got.add(d4.rho()), Weight::from_ints(&[-1, 1, 1, 1]));
        assert!(matches!(
            shifted_weyl_action(&d4, &[5], &lambda0),
            Err(LieError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn reflections_are_involutions() {
        let e6 = rs("E6");
        let lam = Weight(vec![q(1), qf(-2, 3), q(0), q(5), qf(1, 2), q(-1)]);
        for i in 1..=6 {
            assert_eq!(shifted_weyl_action(&e6, &[i, i], &lam).unwrap(), lam);
        }
    }

    #[test]
    fn weyl_dimensions() {
        let d4 = rs("D4");
        assert_eq!(weyl_dimension(&d4, &Weight::zero(4)).unwrap(), 1);
        assert_eq!(weyl_dimension(&d4, &Weight::from_ints(&[0, 2, 0, 0])).unwrap(), 300);
        let c2 = rs("C2");
        assert_eq!(weyl_dimension(&c2, &Weight::from_ints(&[0, 1])).unwrap(), 5);
        assert!(weyl_dimension(&c2, &Weight::from_ints(&[-1, 1])).is_err());
        for t in SimpleType::all_up_to_rank(8) {
            let r = build_root_system(t);
            let theta = r.root_to_weight(&r.theta().0);
            assert_eq!(weyl_dimension(&r, &theta).unwrap() as usize, r.dim(), "{t}");
        }
    }

    #[test]
    fn weight_root_conversion_round_trip() {
        let f4 = rs("F4");
        for r in f4.positive_roots() {
            let w = f4.root_to_weight(&r.0);
            assert_eq!(f4.weight_to_root_lattice(&w).unwrap(), r.0);
        }
        assert!(f4.weight_to_root_lattice(&Weight::fundamental(4, 0)).is_some());
        let a2 = rs("A2");
        assert!(a2.weight_to_root_lattice(&Weight::fundamental(2, 0)).is_none());
    }
}
