//! The symmetric square S^2(g) as a g-module.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::chevalley::{AlgElement, LieAlgebra};
use crate::error::{LieError, Result};
use crate::linalg::{self, SparseRow};
use crate::minimal_data::{g_natural, SummandKind};
use crate::rational::{fmt_q, q, Q};
use crate::rootsys::{weyl_dimension, Root, Series, Weight};

/// Element of S^2(g) as a polynomial: coefficient of the monomial `x_a x_b`, `a <= b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymElement(BTreeMap<(usize, usize), Q>);

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl SymElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(a: usize, b: usize) -> Self {
        let mut s = Self::zero();
        s.add_term(a, b, &Q::one());
        s
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: &Q) {
        if c.is_zero() {
            return;
        }
        let key = ordered(a, b);
        let e = self.0.entry(key).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn coeff(&self, a: usize, b: usize) -> Q {
        self.0.get(&ordered(a, b)).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficient of `x_a (x) x_b` in the symmetric tensor representing the element.
    pub fn tensor_coeff(&self, a: usize, b: usize) -> Q {
        let c = self.coeff(a, b);
        if a == b {
            c
        } else {
            c / q(2)
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Q)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, c: &Q) -> SymElement {
        let mut out = SymElement::zero();
        for ((a, b), v) in self.iter() {
            out.add_term(a, b, &(v * c));
        }
        out
    }

    /// Product of two elements of g.
    pub fn product(x: &AlgElement, y: &AlgElement) -> SymElement {
        let mut out = SymElement::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_term(a, b, &(ca * cb));
            }
        }
        out
    }

    pub fn render(&self, lie: &LieAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.iter()
            .map(|((a, b), c)| format!("{}*{}.{}", fmt_q(c), lie.render(a), lie.render(b)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `ad b_x` acting as a derivation on S^2(g).
pub fn ad_sym(lie: &LieAlgebra, x: usize, w: &SymElement) -> SymElement {
    let mut out = SymElement::zero();
    for ((a, b), c) in w.iter() {
        for (t, n) in lie.bracket_basis(x, a) {
            out.add_term(*t as usize, b, &(c * q(*n)));
        }
        for (t, n) in lie.bracket_basis(x, b) {
            out.add_term(a, *t as usize, &(c * q(*n)));
        }
    }
    out
}

/// `sum_a x_a x^a` over dual bases for the normalized form.
pub fn casimir(lie: &LieAlgebra) -> SymElement {
    let rs = lie.root_system();
    let l = rs.rank();
    let mut out = SymElement::zero();
    for r in rs.positive_roots() {
        // e_r f_r |r|^2/2 + f_r e_r |r|^2/2
        out.add_term(lie.e(r), lie.f(r), &rs.norm2(r));
    }
    // dual basis of the Cartan subalgebra: inverse of (h_i|h_j)
    let cartan: Vec<usize> = (0..lie.dim()).filter(|&i| lie.is_cartan(i)).collect();
    let gram: Vec<Vec<Q>> = cartan
        .iter()
        .map(|&a| cartan.iter().map(|&b| lie.form_basis(a, b)).collect())
        .collect();
    let inv = invert(&gram);
    for i in 0..l {
        for j in 0..l {
            out.add_term(cartan[i], cartan[j], &inv[i][j]);
        }
    }
    out
}

fn invert(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible");
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pr = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Unordered pairs of positive roots summing to `theta - theta_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairList {
    pub target: Root,
    pub pairs: Vec<(Root, Root)>,
}

impl fmt::Display for PairList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "target {}", self.target)?;
        for (b, d) in &self.pairs {
            writeln!(f, "{b} {d}")?;
        }
        Ok(())
    }
}

/// `theta_i` of a simple summand (1-based index).
pub fn summand_theta(lie: &LieAlgebra, i: usize) -> Result<Root> {
    let summands = g_natural(lie)?;
    summands
        .get(i)
        .filter(|s| i > 0 && matches!(s.kind, SummandKind::Simple(_)))
        .and_then(|s| s.theta_i.clone())
        .ok_or_else(|| LieError::NoSuchSummand {
            ty: lie.root_system().simple_type().to_string(),
            index: i,
        })
}

pub fn theta_pairs(lie: &LieAlgebra, i: usize) -> Result<PairList> {
    let rs = lie.root_system();
    let target = rs.theta().sub(&summand_theta(lie, i)?);
    let mut pairs = Vec::new();
    for b in rs.positive_roots() {
        let d = target.sub(b);
        if b.0 <= d.0 && rs.index_of(&d).is_some() {
            pairs.push((b.clone(), d));
        }
    }
    pairs.sort_by(|x, y| x.0 .0.cmp(&y.0 .0));
    Ok(PairList { target, pairs })
}

/// Monomials `x_a x_b` (`a <= b`) of weight `mu`.
pub fn weight_space(lie: &LieAlgebra, mu: &Weight) -> Vec<(usize, usize)> {
    let Some(target) = lie.root_system().weight_to_root_lattice(mu) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for a in 0..lie.dim() {
        let need: Vec<i64> = target.iter().zip(lie.weight(a)).map(|(t, w)| t - w).collect();
        if need.iter().all(|c| *c == 0) {
            for b in a..lie.dim() {
                if lie.is_cartan(b) {
                    out.push((a, b));
                }
            }
        } else if let Some(b) = lie.root_vector(&Root(need)) {
            if a <= b {
                out.push((a, b));
            }
        }
    }
    out.sort_unstable();
    out
}

/// The g-highest vector of weight `mu` in S^2(g), unique up to scale.
pub fn solve_highest_weight_vector(lie: &LieAlgebra, mu: &Weight) -> Result<SymElement> {
    let basis = weight_space(lie, mu);
    let mut rows: BTreeMap<(usize, usize), SparseRow> = BTreeMap::new();
    for s in 0..lie.rank() {
        for (col, &(a, b)) in basis.iter().enumerate() {
            let img = ad_sym(lie, lie.simple_e(s), &SymElement::monomial(a, b));
            for (key, c) in img.iter() {
                // distinct simple roots land in distinct weight spaces, so keys never collide
                rows.entry(key).or_default().insert(col, c.clone());
            }
        }
    }
    let ns = linalg::nullspace(rows.into_values(), basis.len());
    if ns.len() != 1 {
        return Err(LieError::SolutionSpace {
            expected: 1,
            got: ns.len(),
        });
    }
    let v = &ns[0];
    let et = lie.e_theta();
    let rs = lie.root_system();
    let pivot = rs
        .weight_to_root_lattice(mu)
        .map(|t| Root(t).sub(rs.theta()))
        .and_then(|r| lie.root_vector(&r))
        .and_then(|x| basis.iter().position(|m| *m == ordered(et, x)))
        .filter(|&p| !v[p].is_zero())
        .or_else(|| v.iter().position(|c| !c.is_zero()))
        .expect("nonzero solution");
    let norm = v[pivot].recip();
    let mut out = SymElement::zero();
    for (c, &(a, b)) in v.iter().zip(&basis) {
        out.add_term(a, b, &(c * &norm));
    }
    Ok(out)
}

/// Weight `theta + theta_i` in fundamental coordinates.
pub fn w_weight(lie: &LieAlgebra, i: usize) -> Result<Weight> {
    let rs = lie.root_system();
    let sum = rs.theta().add(&summand_theta(lie, i)?);
    Ok(rs.root_to_weight(&sum.0))
}

/// Highest weight vector `w_i` generating `L(theta + theta_i)` in S^2(g).
pub fn w_vector(lie: &LieAlgebra, i: usize) -> Result<SymElement> {
    solve_highest_weight_vector(lie, &w_weight(lie, i)?)
}

#[derive(Clone, Debug)]
pub struct S2Report {
    pub ty: String,
    pub dim_s2: u128,
    /// (highest weight, dimension) of every predicted summand
    pub parts: Vec<(Weight, u128)>,
}

impl S2Report {
    pub fn total(&self) -> u128 {
        self.parts.iter().map(|(_, d)| d).sum()
    }

    pub fn holds(&self) -> bool {
        self.total() == self.dim_s2
    }
}

impl fmt::Display for S2Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rhs: Vec<String> = self
            .parts
            .iter()
            .map(|(w, d)| format!("{d} [{}]", w.fmt_fundamental()))
            .collect();
        write!(
            f,
            "{}: dim S2 = {} {} {}",
            self.ty,
            self.dim_s2,
            if self.holds() { "=" } else { "!=" },
            rhs.join(" + ")
        )
    }
}

/// `S^2 g = L(2 theta) + L(0) + sum_i L(theta + theta_i)` (plus `L((theta+theta_1)/2)` for sp_2l).
pub fn s2_decomposition_check(lie: &LieAlgebra) -> Result<S2Report> {
    let rs = lie.root_system();
    let t = rs.simple_type();
    if t.series() == Series::A {
        return Err(LieError::Unsupported(format!("S2 decomposition for type {t}")));
    }
    let n = lie.dim() as u128;
    let two_theta = rs.root_to_weight(&rs.theta().add(rs.theta()).0);
    let mut parts = vec![
        (two_theta.clone(), weyl_dimension(rs, &two_theta)?),
        (Weight::zero(rs.rank()), 1),
    ];
    let summands = g_natural(lie)?;
    for s in summands.iter().filter(|s| s.index > 0) {
        let w = w_weight(lie, s.index)?;
        parts.push((w.clone(), weyl_dimension(rs, &w)?));
    }
    if t.series() == Series::C || t.is(Series::B, 2) {
        let half = w_weight(lie, 1)?.scale(&(q(1) / q(2)));
        parts.push((half.clone(), weyl_dimension(rs, &half)?));
    }
    Ok(S2Report {
        ty: t.to_string(),
        dim_s2: n * (n + 1) / 2,
        parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::build_lie_algebra;
    use crate::rootsys::{build_root_system, SimpleType};

    fn lie(s: &str) -> LieAlgebra {
        build_lie_algebra(&build_root_system(s.parse::<SimpleType>().unwrap()))
    }

    #[test]
    fn sl2_casimir() {
        let g = lie("A1");
        let c = casimir(&g);
        assert_eq!(c.coeff(1, 1), q(1) / q(2));
        assert_eq!(c.coeff(0, 2), q(2));
        assert_eq!(c.tensor_coeff(2, 0), q(1));
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn casimir_is_invariant() {
        for t in ["D4", "G2", "B3"] {
            let g = lie(t);
            let c = casimir(&g);
            for x in 0..g.dim() {
                assert!(ad_sym(&g, x, &c).is_zero(), "{t}");
            }
            assert_eq!(c.tensor_coeff(g.e_theta(), g.f_theta()), q(1));
        }
    }

    #[test]
    fn d4_pairs() {
        let g = lie("D4");
        let p = theta_pairs(&g, 1).unwrap();
        let s: Vec<String> = p.pairs.iter().map(|(b, d)| format!("{b}{d}")).collect();
        assert_eq!(s, vec!["(0100)(0111)", "(0101)(0110)"]);
        assert!(matches!(theta_pairs(&g, 4), Err(LieError::NoSuchSummand { .. })));
    }

    #[test]
    fn weight_spaces() {
        let g = lie("D4");
        let rs = g.root_system();
        let top = rs.root_to_weight(&rs.theta().add(rs.theta()).0);
        assert_eq!(weight_space(&g, &top), vec![(g.e_theta(), g.e_theta())]);
        assert_eq!(weight_space(&g, &w_weight(&g, 1).unwrap()).len(), 3);
    }

    #[test]
    fn highest_weight_vectors() {
        let g = lie("D4");
        let w = w_vector(&g, 1).unwrap();
        assert_eq!(w.len(), 3);
        for (_, c) in w.iter() {
            assert!(*c == q(1) || *c == q(-1));
        }
        for s in 0..g.rank() {
            assert!(ad_sym(&g, s, &w).is_zero());
        }
        assert!(w_vector(&lie("B3"), 2).is_ok());
        let sp4 = lie("C2");
        let w = w_weight(&sp4, 1).unwrap();
        assert_eq!(w, Weight::from_ints(&[0, 2]));
        assert!(solve_highest_weight_vector(&sp4, &w).is_ok());
    }

    #[test]
    fn decompositions() {
        let r = s2_decomposition_check(&lie("D4")).unwrap();
        assert_eq!((r.dim_s2, r.total()), (406, 406));
        assert_eq!(r.parts.iter().map(|p| p.1).collect::<Vec<_>>(), vec![300, 1, 35, 35, 35]);
        assert!(s2_decomposition_check(&lie("C2")).unwrap().holds());
        assert!(s2_decomposition_check(&lie("E6")).unwrap().holds());
        assert!(matches!(s2_decomposition_check(&lie("A3")), Err(LieError::Unsupported(_))));
    }
}
