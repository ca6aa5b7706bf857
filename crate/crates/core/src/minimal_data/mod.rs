//! Minimal nilpotent grading, the centralizer g^natural and its induced levels.

mod verdict;

pub use verdict::{collapse_verdict, lisse_verdict, ClassificationVerdict, Lisse};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::chevalley::{ad_trace_on_subspace, normalized_form, AlgElement, LieAlgebra};
use crate::error::{LieError, Result};
use crate::linalg::{self, SparseRow};
use crate::rational::{q, qf, LevelPoly, Q};
use crate::rootsys::{Root, RootSystem, Series, SimpleType};

/// Eigenspaces of `ad h_theta`, keyed by the (integer) eigenvalue `2j`.
#[derive(Clone, Debug)]
pub struct MinimalGrading {
    pub pieces: BTreeMap<i32, Vec<usize>>,
    pub e_theta: AlgElement,
    pub h_theta: AlgElement,
    pub f_theta: AlgElement,
}

impl MinimalGrading {
    pub fn piece(&self, key: i32) -> &[usize] {
        self.pieces.get(&key).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Dimensions of g(-1), g(-1/2), g(0), g(1/2), g(1).
    pub fn dims(&self) -> [usize; 5] {
        [-2, -1, 0, 1, 2].map(|k| self.piece(k).len())
    }
}

pub fn minimal_grading(lie: &LieAlgebra) -> MinimalGrading {
    let rs = lie.root_system();
    let theta = rs.theta().clone();
    let mut pieces: BTreeMap<i32, Vec<usize>> = [-2, -1, 0, 1, 2].into_iter().map(|k| (k, Vec::new())).collect();
    for i in 0..lie.dim() {
        let key = if lie.is_cartan(i) {
            0
        } else {
            rs.pairing(&Root(lie.weight(i).to_vec()), &theta) as i32
        };
        pieces.get_mut(&key).expect("grading in -2..=2").push(i);
    }
    MinimalGrading {
        pieces,
        e_theta: AlgElement::basis(lie.e_theta()),
        h_theta: lie.h_theta(),
        f_theta: AlgElement::basis(lie.f_theta()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SummandKind {
    Center,
    Simple(SimpleType),
}

impl fmt::Display for SummandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SummandKind::Center => write!(f, "center"),
            SummandKind::Simple(t) => write!(f, "{t}"),
        }
    }
}

/// A summand of g^natural: index 0 is the center, simple summands count from 1.
#[derive(Clone, Debug)]
pub struct NaturalSummand {
    pub index: usize,
    pub kind: SummandKind,
    pub basis: Vec<AlgElement>,
    /// 0-based simple roots of g spanning the summand (empty for the center)
    pub simple_roots: Vec<usize>,
    pub theta_i: Option<Root>,
    pub level_poly: LevelPoly,
}

impl NaturalSummand {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Connected components of the simple roots orthogonal to theta, ordered by smallest index.
pub fn orthogonal_components(rs: &RootSystem) -> Vec<Vec<usize>> {
    let l = rs.rank();
    let theta = rs.theta();
    let perp: Vec<usize> = (0..l)
        .filter(|&i| rs.pairing(&Root::simple(l, i), theta) == 0)
        .collect();
    let mut seen = vec![false; l];
    let mut comps = Vec::new();
    for &start in &perp {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &perp {
                if !seen[w] && rs.cartan()[v][w] != 0 {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Identifies the type of a connected sub-diagram of the Dynkin diagram.
pub fn component_type(rs: &RootSystem, comp: &[usize]) -> SimpleType {
    let n = comp.len();
    let c = |a: usize, b: usize| rs.cartan()[comp[a]][comp[b]];
    let norm = |a: usize| rs.gram()[comp[a]][comp[a]].clone();
    let mk = |s, r| SimpleType::new(s, r).expect("valid component type");
    if n == 1 {
        return mk(Series::A, 1);
    }
    let mut degree = vec![0usize; n];
    let mut multi = None;
    for a in 0..n {
        for b in a + 1..n {
            let m = c(a, b) * c(b, a);
            if m > 0 {
                degree[a] += 1;
                degree[b] += 1;
            }
            if m > 1 {
                multi = Some((a, b, m));
            }
        }
    }
    match multi {
        Some((_, _, 3)) => mk(Series::G, 2),
        Some((a, b, _)) => {
            if n == 2 {
                // B2 = C2; follow the labelling in which the first node is the short one for C2
                return mk(if norm(0) < norm(1) { Series::C } else { Series::B }, 2);
            }
            if n == 4 && degree[a] == 2 && degree[b] == 2 {
                return mk(Series::F, 4);
            }
            let (end, other) = if degree[a] == 1 { (a, b) } else { (b, a) };
            if norm(end) < norm(other) {
                mk(Series::B, n)
            } else {
                mk(Series::C, n)
            }
        }
        None => match (0..n).find(|&v| degree[v] == 3) {
            None => mk(Series::A, n),
            Some(branch) => {
                let leaves = (0..n)
                    .filter(|&v| c(branch, v) != 0 && v != branch && degree[v] == 1)
                    .count();
                if leaves >= 2 {
                    mk(Series::D, n)
                } else {
                    mk(Series::E, n)
                }
            }
        },
    }
}

fn root_in_span(r: &[i64], comp: &[usize]) -> bool {
    r.iter().enumerate().all(|(j, c)| *c == 0 || comp.contains(&j))
}

/// Cartan elements orthogonal to `h_theta` and to every summand coroot.
fn center_basis(lie: &LieAlgebra, comps: &[Vec<usize>]) -> Vec<AlgElement> {
    let l = lie.rank();
    let cartan: Vec<usize> = (0..lie.dim()).filter(|&i| lie.is_cartan(i)).collect();
    let mut constraints: Vec<AlgElement> = vec![lie.h_theta()];
    for comp in comps {
        for &s in comp {
            constraints.push(lie.coroot(&Root::simple(l, s)));
        }
    }
    let rows: Vec<SparseRow> = constraints
        .iter()
        .map(|x| {
            cartan
                .iter()
                .enumerate()
                .filter_map(|(col, &ci)| {
                    let v = normalized_form(lie, x, &AlgElement::basis(ci));
                    (!v.is_zero()).then_some((col, v))
                })
                .collect()
        })
        .collect();
    linalg::nullspace(rows, l)
        .into_iter()
        .map(|v| {
            let mut x = AlgElement::zero();
            for (col, c) in v.iter().enumerate() {
                x.add_term(cartan[col], c);
            }
            x
        })
        .collect()
}

/// `(x|y)^natural / (x|y)` as an affine polynomial in k.
fn level_ratio(lie: &LieAlgebra, g0: &[usize], x: &AlgElement, y: &AlgElement) -> Result<LevelPoly> {
    let form = normalized_form(lie, x, y);
    let tr = ad_trace_on_subspace(lie, x, y, g0)?;
    let hd = q(lie.root_system().h_dual());
    Ok(LevelPoly::affine(Q::one(), hd / q(2) - tr / (q(4) * form)))
}

fn summand_level(lie: &LieAlgebra, g0: &[usize], index: usize, pairs: &[(AlgElement, AlgElement)], scale: &Q) -> Result<LevelPoly> {
    let mut found: Option<LevelPoly> = None;
    for (x, y) in pairs {
        let p = level_ratio(lie, g0, x, y)?.scale(&scale.recip());
        match &found {
            None => found = Some(p),
            Some(prev) if *prev != p => {
                return Err(LieError::InconsistentLevel {
                    summand: index,
                    detail: format!("{prev} vs {p}"),
                })
            }
            _ => {}
        }
    }
    found.ok_or(LieError::InconsistentLevel {
        summand: index,
        detail: "no basis pair".into(),
    })
}

/// Center (index 0, possibly zero-dimensional) followed by the simple summands.
pub fn g_natural(lie: &LieAlgebra) -> Result<Vec<NaturalSummand>> {
    let rs = lie.root_system();
    let l = rs.rank();
    let grading = minimal_grading(lie);
    let g0 = grading.piece(0).to_vec();
    let comps = orthogonal_components(rs);

    let mut out = Vec::new();
    let center = center_basis(lie, &comps);
    let center_level = match center.first() {
        Some(h) => summand_level(lie, &g0, 0, &[(h.clone(), h.clone())], &Q::one())?,
        None => LevelPoly::zero(),
    };
    out.push(NaturalSummand {
        index: 0,
        kind: SummandKind::Center,
        basis: center,
        simple_roots: Vec::new(),
        theta_i: None,
        level_poly: center_level,
    });

    for (n, comp) in comps.iter().enumerate() {
        let index = n + 1;
        let theta_i = rs.highest_root_of(comp).expect("component has roots");
        let mut basis = Vec::new();
        for (j, r) in rs.positive_roots().iter().enumerate() {
            if root_in_span(&r.0, comp) {
                basis.push(AlgElement::basis(j));
                basis.push(AlgElement::basis(lie.f(r)));
            }
        }
        for &s in comp {
            basis.push(lie.coroot(&Root::simple(l, s)));
        }
        let et = AlgElement::basis(lie.e(&theta_i));
        let ft = AlgElement::basis(lie.f(&theta_i));
        let ht = lie.coroot(&theta_i);
        let mut pairs = vec![(ht.clone(), ht), (et, ft)];
        for &s in comp {
            let h = lie.coroot(&Root::simple(l, s));
            pairs.push((h.clone(), h));
        }
        let scale = rs.norm2(&theta_i) / q(2);
        let level_poly = summand_level(lie, &g0, index, &pairs, &scale)?;
        out.push(NaturalSummand {
            index,
            kind: SummandKind::Simple(component_type(rs, comp)),
            basis,
            simple_roots: comp.clone(),
            theta_i: Some(theta_i),
            level_poly,
        });
    }
    Ok(out)
}

/// Induced level `k_i^natural`; `i = 0` is the center.
pub fn k_natural(lie: &LieAlgebra, i: usize) -> Result<LevelPoly> {
    let summands = g_natural(lie)?;
    match summands.get(i) {
        Some(s) if s.dim() > 0 => Ok(s.level_poly.clone()),
        _ => Err(LieError::NoSuchSummand {
            ty: lie.root_system().simple_type().to_string(),
            index: i,
        }),
    }
}

/// `c(k) = k dim g / (k + h^vee) - 6k + h^vee - 4`
pub fn central_charge(rs: &RootSystem, k: &Q) -> Result<Q> {
    let hd = q(rs.h_dual());
    if *k == -hd.clone() {
        return Err(LieError::CriticalLevel(format!("-{}", rs.h_dual())));
    }
    let dim = q(rs.dim() as i64);
    Ok(k * dim / (k + &hd) - q(6) * k + hd - q(4))
}

/// `-h^vee/6 - 1` for the Deligne exceptional series.
pub fn deligne_level(rs: &RootSystem) -> Result<Q> {
    let t = rs.simple_type();
    if !t.is_deligne() {
        return Err(LieError::NonDeligneType(t.to_string()));
    }
    Ok(-qf(rs.h_dual(), 6) - q(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{build_lie_algebra, centralizer_dim};
    use crate::rootsys::build_root_system;

    fn lie(s: &str) -> LieAlgebra {
        build_lie_algebra(&build_root_system(s.parse::<SimpleType>().unwrap()))
    }

    #[test]
    fn grading_dims() {
        assert_eq!(minimal_grading(&lie("A1")).dims(), [1, 0, 1, 0, 1]);
        assert_eq!(minimal_grading(&lie("C2")).piece(1).len(), 2);
        assert_eq!(minimal_grading(&lie("E8")).dims(), [1, 56, 134, 56, 1]);
    }

    #[test]
    fn grading_is_compatible_with_bracket() {
        for t in ["D4", "F4", "G2", "C3"] {
            let g = lie(t);
            let gr = minimal_grading(&g);
            let key: BTreeMap<usize, i32> = gr
                .pieces
                .iter()
                .flat_map(|(k, v)| v.iter().map(move |i| (*i, *k)))
                .collect();
            for a in 0..g.dim() {
                for b in 0..g.dim() {
                    for (c, _) in g.bracket_basis(a, b) {
                        assert_eq!(key[&(*c as usize)], key[&a] + key[&b]);
                    }
                }
            }
        }
    }

    #[test]
    fn natural_summand_types() {
        let kinds = |t: &str| {
            g_natural(&lie(t))
                .unwrap()
                .iter()
                .filter(|s| s.dim() > 0)
                .map(|s| s.kind.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(kinds("E7"), vec!["D6"]);
        assert_eq!(kinds("D4"), vec!["A1", "A1", "A1"]);
        assert_eq!(kinds("A2"), vec!["center"]);
        assert_eq!(kinds("F4"), vec!["C3"]);
        assert_eq!(kinds("E8"), vec!["E7"]);
        assert_eq!(kinds("E6"), vec!["A5"]);
        assert_eq!(kinds("B5"), vec!["A1", "B3"]);
        assert_eq!(kinds("A4"), vec!["center", "A2"]);
    }

    #[test]
    fn induced_levels_small() {
        let g = lie("B3");
        assert_eq!(k_natural(&g, 2).unwrap().to_string(), "2k + 4");
        assert_eq!(k_natural(&g, 1).unwrap().to_string(), "k + 3/2");
        assert_eq!(k_natural(&lie("G2"), 1).unwrap().to_string(), "3k + 5");
        assert_eq!(k_natural(&lie("C3"), 1).unwrap().to_string(), "k + 1/2");
        assert_eq!(k_natural(&lie("A2"), 0).unwrap().to_string(), "k + 3/2");
        assert!(matches!(k_natural(&lie("G2"), 0), Err(LieError::NoSuchSummand { .. })));
    }

    #[test]
    fn centralizer_of_f_theta() {
        assert_eq!(centralizer_dim(&lie("E8"), &AlgElement::basis(lie("E8").f_theta())), 190);
    }

    #[test]
    fn central_charge_values() {
        assert_eq!(central_charge(&build_root_system("D4".parse().unwrap()), &q(-2)).unwrap(), q(0));
        assert_eq!(central_charge(&build_root_system("E8".parse().unwrap()), &q(-6)).unwrap(), q(0));
        assert_eq!(central_charge(&build_root_system("A1".parse().unwrap()), &q(1)).unwrap(), q(-7));
        assert!(matches!(
            central_charge(&build_root_system("A1".parse().unwrap()), &q(-2)),
            Err(LieError::CriticalLevel(_))
        ));
    }

    #[test]
    fn deligne_levels() {
        let d = |t: &str| deligne_level(&build_root_system(t.parse().unwrap()));
        assert_eq!(d("E6").unwrap(), q(-3));
        assert_eq!(d("G2").unwrap(), qf(-5, 3));
        assert_eq!(d("D4").unwrap(), q(-2));
        assert!(matches!(d("B3"), Err(LieError::NonDeligneType(_))));
    }
}
