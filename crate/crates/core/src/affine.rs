//! Degree-truncated vacuum module V^k(g) with a symbolic level k.
//!
//! States are linear combinations of PBW monomials `x_1(-m_1) ... x_r(-m_r)|0>`
//! with factors in canonical order: deeper modes first, ties broken by basis index.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::chevalley::LieAlgebra;
use crate::error::{LieError, Result};
use crate::linalg::{self, SparseRow};
use crate::rational::{fmt_q, q, LevelPoly, Q};
use crate::rootsys::{Root, Series, Weight};
use crate::symmod::SymElement;

pub const DEFAULT_BUDGET: usize = 8;

/// Limits on the size of PBW computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// maximal PBW degree of any intermediate state
    pub degree: usize,
    /// largest power exponent n checked for E-types
    pub e_type_max_power: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            degree: DEFAULT_BUDGET,
            e_type_max_power: 1,
        }
    }
}

impl Budget {
    pub fn with_degree(degree: usize) -> Self {
        Budget {
            degree,
            e_type_max_power: if degree > DEFAULT_BUDGET { usize::MAX } else { 1 },
        }
    }

    /// Reads `MINVERT_BUDGET`, falling back to the default.
    pub fn from_env() -> Self {
        std::env::var("MINVERT_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Budget::with_degree)
            .unwrap_or_default()
    }
}

/// `x(-depth)` for the basis vector `x = idx`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub depth: u16,
    pub idx: u16,
}

impl Factor {
    pub fn new(idx: usize, depth: usize) -> Self {
        Factor {
            depth: depth as u16,
            idx: idx as u16,
        }
    }

    pub fn mode(&self) -> i64 {
        -(self.depth as i64)
    }
}

impl Ord for Factor {
    fn cmp(&self, other: &Self) -> Ordering {
        other.depth.cmp(&self.depth).then(self.idx.cmp(&other.idx))
    }
}

impl PartialOrd for Factor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sorted list of factors; the empty monomial is the vacuum.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PBWMonomial(pub Vec<Factor>);

impl PBWMonomial {
    pub fn vacuum() -> Self {
        Self::default()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|f| f.depth as usize).sum()
    }

    pub fn render(&self, lie: &LieAlgebra) -> String {
        if self.0.is_empty() {
            return "|0>".into();
        }
        self.0
            .iter()
            .map(|f| format!("{}({})", lie.render(f.idx as usize), f.mode()))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Homogeneous element of V^k(g) with coefficients in Q[k].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PBWVector {
    terms: BTreeMap<PBWMonomial, LevelPoly>,
}

impl PBWVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::monomial(PBWMonomial::vacuum(), LevelPoly::constant(Q::one()))
    }

    pub fn monomial(m: PBWMonomial, c: LevelPoly) -> Self {
        let mut v = Self::zero();
        v.add_term(m, &c);
        v
    }

    /// `x(-depth)|0>`
    pub fn generator(idx: usize, depth: usize) -> Self {
        Self::monomial(PBWMonomial(vec![Factor::new(idx, depth)]), LevelPoly::constant(Q::one()))
    }

    pub fn add_term(&mut self, m: PBWMonomial, c: &LevelPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                e.add_assign_ref(c);
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, other: &PBWVector) -> PBWVector {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &PBWVector) -> PBWVector {
        self.add(&other.scale(&LevelPoly::constant(q(-1))))
    }

    pub fn scale(&self, c: &LevelPoly) -> PBWVector {
        let mut out = PBWVector::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), &(x * c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PBWMonomial, &LevelPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PBWMonomial) -> LevelPoly {
        self.terms.get(m).cloned().unwrap_or_else(LevelPoly::zero)
    }

    /// Common degree of the monomials (None for the zero vector).
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(PBWMonomial::degree)
    }

    /// Substitutes a value for k.
    pub fn at_level(&self, k: &Q) -> PBWVector {
        let mut out = PBWVector::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &LevelPoly::constant(c.eval(k)));
        }
        out
    }

    /// One line per monomial, in monomial order: `(<coeff>) <factors>`.
    pub fn render(&self, lie: &LieAlgebra) -> String {
        if self.is_zero() {
            return "0\n".into();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            out.push_str(&format!("({}) {}\n", c, m.render(lie)));
        }
        out
    }
}

type MulResult = Rc<Vec<(PBWMonomial, Q)>>;
type ActResult = Rc<Vec<(PBWMonomial, LevelPoly)>>;

/// Memoizing engine for normal ordering and the mode action.
pub struct VacuumModule<'a> {
    lie: &'a LieAlgebra,
    mul_memo: HashMap<(Factor, PBWMonomial), MulResult>,
    act_memo: HashMap<(u16, u16, PBWMonomial), ActResult>,
}

fn accumulate<C: Clone>(
    acc: &mut HashMap<PBWMonomial, C>,
    m: PBWMonomial,
    c: C,
    add: impl Fn(&mut C, &C),
) {
    match acc.get_mut(&m) {
        Some(e) => add(e, &c),
        None => {
            acc.insert(m, c);
        }
    }
}

impl<'a> VacuumModule<'a> {
    pub fn new(lie: &'a LieAlgebra) -> Self {
        VacuumModule {
            lie,
            mul_memo: HashMap::new(),
            act_memo: HashMap::new(),
        }
    }

    pub fn lie(&self) -> &LieAlgebra {
        self.lie
    }

    /// `f * m` reordered, for a sorted monomial `m`. No central terms occur
    /// since all modes are negative.
    fn left_mul(&mut self, f: Factor, m: &PBWMonomial) -> MulResult {
        if m.0.first().is_none_or(|first| f <= *first) {
            let mut v = Vec::with_capacity(m.0.len() + 1);
            v.push(f);
            v.extend_from_slice(&m.0);
            return Rc::new(vec![(PBWMonomial(v), Q::one())]);
        }
        let key = (f, m.clone());
        if let Some(r) = self.mul_memo.get(&key) {
            return r.clone();
        }
        let w1 = m.0[0];
        let rest = PBWMonomial(m.0[1..].to_vec());
        let mut acc: HashMap<PBWMonomial, Q> = HashMap::new();
        // f w1 rest = w1 (f rest) + [f, w1] rest
        let inner = self.left_mul(f, &rest);
        for (mono, c) in inner.iter() {
            let outer = self.left_mul(w1, mono);
            for (mm, cc) in outer.iter() {
                accumulate(&mut acc, mm.clone(), c * cc, |e, x| *e += x);
            }
        }
        let br: Vec<(u32, i64)> = self.lie.bracket_basis(f.idx as usize, w1.idx as usize).to_vec();
        for (z, n) in br {
            let zf = Factor {
                depth: f.depth + w1.depth,
                idx: z as u16,
            };
            let part = self.left_mul(zf, &rest);
            for (mm, cc) in part.iter() {
                accumulate(&mut acc, mm.clone(), cc * q(n), |e, x| *e += x);
            }
        }
        let mut out: Vec<(PBWMonomial, Q)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        let out = Rc::new(out);
        self.mul_memo.insert(key, out.clone());
        out
    }

    /// `x(n) m|0>` for `n >= 0`.
    fn act(&mut self, x: u16, n: u16, m: &PBWMonomial) -> ActResult {
        if m.0.is_empty() {
            return Rc::new(Vec::new());
        }
        let key = (x, n, m.clone());
        if let Some(r) = self.act_memo.get(&key) {
            return r.clone();
        }
        let w1 = m.0[0];
        let rest = PBWMonomial(m.0[1..].to_vec());
        let mut acc: HashMap<PBWMonomial, LevelPoly> = HashMap::new();
        let add = |e: &mut LevelPoly, c: &LevelPoly| e.add_assign_ref(c);
        // x(n) w1 rest = w1 x(n) rest + [x(n), w1] rest
        let inner = self.act(x, n, &rest);
        for (mono, c) in inner.iter() {
            let outer = self.left_mul(w1, mono);
            for (mm, cc) in outer.iter() {
                accumulate(&mut acc, mm.clone(), c.scale(cc), add);
            }
        }
        let br: Vec<(u32, i64)> = self.lie.bracket_basis(x as usize, w1.idx as usize).to_vec();
        for (z, nz) in br {
            if n < w1.depth {
                let zf = Factor {
                    depth: w1.depth - n,
                    idx: z as u16,
                };
                let part = self.left_mul(zf, &rest);
                for (mm, cc) in part.iter() {
                    accumulate(&mut acc, mm.clone(), LevelPoly::constant(cc * q(nz)), add);
                }
            } else {
                let part = self.act(z as u16, n - w1.depth, &rest);
                for (mm, cc) in part.iter() {
                    accumulate(&mut acc, mm.clone(), cc.scale(&q(nz)), add);
                }
            }
        }
        if n == w1.depth {
            let form = self.lie.form_basis(x as usize, w1.idx as usize);
            if !form.is_zero() {
                let c = LevelPoly::affine(q(n as i64) * form, Q::zero());
                accumulate(&mut acc, rest.clone(), c, add);
            }
        }
        let mut out: Vec<(PBWMonomial, LevelPoly)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        let out = Rc::new(out);
        self.act_memo.insert(key, out.clone());
        out
    }

    /// Normal-ordered product `m1 * m2`.
    fn mul_monomials(&mut self, m1: &PBWMonomial, m2: &PBWMonomial) -> Vec<(PBWMonomial, Q)> {
        let mut cur: Vec<(PBWMonomial, Q)> = vec![(m2.clone(), Q::one())];
        for f in m1.0.iter().rev() {
            let mut acc: HashMap<PBWMonomial, Q> = HashMap::new();
            for (m, c) in &cur {
                for (mm, cc) in self.left_mul(*f, m).iter() {
                    accumulate(&mut acc, mm.clone(), c * cc, |e, x| *e += x);
                }
            }
            cur = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        cur
    }

    pub fn multiply(&mut self, u: &PBWVector, v: &PBWVector) -> PBWVector {
        let mut out = PBWVector::zero();
        for (mu, cu) in u.iter() {
            for (mv, cv) in v.iter() {
                let c = cu * cv;
                for (m, x) in self.mul_monomials(mu, mv) {
                    out.add_term(m, &c.scale(&x));
                }
            }
        }
        out
    }

    pub fn power(&mut self, v: &PBWVector, n: usize) -> PBWVector {
        let mut out = PBWVector::vacuum();
        for _ in 0..n {
            out = self.multiply(&out, v);
        }
        out
    }

    /// `x(n) v` for the basis vector `x`; negative `n` multiplies on the left.
    pub fn apply_mode(&mut self, x: usize, n: i64, v: &PBWVector) -> PBWVector {
        let mut out = PBWVector::zero();
        for (m, c) in v.iter() {
            if n < 0 {
                for (mm, cc) in self.left_mul(Factor::new(x, (-n) as usize), m).iter() {
                    out.add_term(mm.clone(), &c.scale(cc));
                }
            } else {
                for (mm, cc) in self.act(x as u16, n as u16, m).iter() {
                    out.add_term(mm.clone(), &(c * cc));
                }
            }
        }
        out
    }

    /// Symmetrization `x y -> (x(-1)y(-1) + y(-1)x(-1))/2`, normal ordered.
    pub fn sigma(&mut self, w: &SymElement) -> PBWVector {
        let mut out = PBWVector::zero();
        let half = q(1) / q(2);
        for ((a, b), c) in w.iter() {
            let (fa, fb) = (Factor::new(a, 1), Factor::new(b, 1));
            let ma = PBWMonomial(vec![fa]);
            let mb = PBWMonomial(vec![fb]);
            for (m, x) in self.left_mul(fa, &mb).iter() {
                out.add_term(m.clone(), &LevelPoly::constant(&half * x * c));
            }
            for (m, x) in self.left_mul(fb, &ma).iter() {
                out.add_term(m.clone(), &LevelPoly::constant(&half * x * c));
            }
        }
        out
    }

    /// Checks `e_s(0) v = 0` for all simple roots.
    pub fn is_g_highest(&mut self, v: &PBWVector) -> bool {
        (0..self.lie.rank()).all(|s| {
            let e = self.lie.simple_e(s);
            self.apply_mode(e, 0, v).is_zero()
        })
    }
}

/// A level (or every level) at which a vector is singular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularSolution {
    /// `None` means singular for all k
    pub level: Option<Q>,
    pub vector: PBWVector,
}

impl SingularSolution {
    pub fn level_string(&self) -> String {
        self.level.as_ref().map(fmt_q).unwrap_or_else(|| "all k".into())
    }
}

pub fn sigma_embed(lie: &LieAlgebra, w: &SymElement) -> PBWVector {
    VacuumModule::new(lie).sigma(w)
}

pub fn pbw_multiply(lie: &LieAlgebra, u: &PBWVector, v: &PBWVector) -> PBWVector {
    VacuumModule::new(lie).multiply(u, v)
}

pub fn apply_mode(lie: &LieAlgebra, x: usize, n: i64, v: &PBWVector) -> PBWVector {
    VacuumModule::new(lie).apply_mode(x, n, v)
}

fn common_roots(polys: impl Iterator<Item = LevelPoly>) -> Result<Option<Vec<Q>>> {
    let mut g = LevelPoly::zero();
    for p in polys {
        g = g.gcd(&p);
    }
    if g.is_zero() {
        return Ok(None);
    }
    Ok(Some(if g.degree() == Some(0) { Vec::new() } else { g.rational_roots()? }))
}

/// Levels at which `f_theta(1) v` vanishes, for a g-highest vector `v`.
pub fn is_affine_singular(lie: &LieAlgebra, v: &PBWVector) -> Result<Vec<SingularSolution>> {
    let mut vm = VacuumModule::new(lie);
    if !vm.is_g_highest(v) {
        return Err(LieError::NotHighestWeight(v.render(lie)));
    }
    let img = vm.apply_mode(lie.f_theta(), 1, v);
    Ok(match common_roots(img.iter().map(|(_, c)| c.clone()))? {
        None => vec![SingularSolution {
            level: None,
            vector: v.clone(),
        }],
        Some(roots) => roots
            .into_iter()
            .map(|k| SingularSolution {
                level: Some(k.clone()),
                vector: v.at_level(&k),
            })
            .collect(),
    })
}

fn sym_weight(lie: &LieAlgebra, w: &SymElement) -> Option<Root> {
    let ((a, b), _) = w.iter().next()?;
    Some(Root(lie.weight(a).iter().zip(lie.weight(b)).map(|(x, y)| x + y).collect()))
}

/// Outcome of the power identity `f_theta(1) s^(n+1) = c(k) s^n e_{theta_i}(-1)`.
#[derive(Clone, Debug)]
pub struct PowerIdentity {
    pub n: usize,
    pub scalar: LevelPoly,
    pub level: Q,
    /// number of monomials in `s^n e_{theta_i}(-1)`
    pub support: usize,
}

impl fmt::Display for PowerIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "f_theta(1) sigma(w)^{} = ({}) sigma(w)^{} e_theta_i(-1)  [{} monomials]\nlevel k = {}",
            self.n + 1,
            self.scalar,
            self.n,
            self.support,
            fmt_q(&self.level)
        )
    }
}

pub fn singular_level_of_power(lie: &LieAlgebra, w: &SymElement, n: usize) -> Result<PowerIdentity> {
    singular_level_of_power_with(lie, w, n, &Budget::from_env())
}

pub fn singular_level_of_power_with(lie: &LieAlgebra, w: &SymElement, n: usize, budget: &Budget) -> Result<PowerIdentity> {
    let degree = 2 * (n + 1);
    let t = lie.root_system().simple_type();
    if degree > budget.degree || (t.series() == Series::E && n > budget.e_type_max_power) {
        return Err(LieError::BudgetExceeded {
            degree,
            budget: budget.degree,
        });
    }
    let theta_i = sym_weight(lie, w)
        .map(|r| r.sub(lie.root_system().theta()))
        .and_then(|r| lie.root_vector(&r))
        .ok_or_else(|| LieError::NotHighestWeight("weight is not theta + root".into()))?;
    let mut vm = VacuumModule::new(lie);
    let s = vm.sigma(w);
    if !vm.is_g_highest(&s) {
        return Err(LieError::NotHighestWeight(s.render(lie)));
    }
    let sn = vm.power(&s, n);
    let top = vm.multiply(&sn, &s);
    let image = vm.apply_mode(lie.f_theta(), 1, &top);
    let predicted = vm.multiply(&sn, &PBWVector::generator(theta_i, 1));
    let Some((m0, p0)) = predicted.iter().next() else {
        return Err(LieError::Proportionality("predicted vector vanishes".into()));
    };
    let p0 = p0.as_constant().expect("products of negative modes are k-free");
    let scalar = image.coeff(m0).scale(&p0.recip());
    let diff = image.sub(&predicted.scale(&scalar));
    if !diff.is_zero() {
        return Err(LieError::Proportionality(format!(
            "{} monomials differ, first: {}",
            diff.len(),
            diff.iter().next().map(|(m, c)| format!("({c}) {}", m.render(lie))).unwrap_or_default()
        )));
    }
    if scalar.degree() != Some(1) {
        return Err(LieError::Proportionality(format!("scalar {scalar} is not affine in k")));
    }
    let level = -scalar.coeff(0) / scalar.coeff(1);
    Ok(PowerIdentity {
        n,
        scalar,
        level,
        support: predicted.len(),
    })
}

/// Monomials of degree `d` and weight `target` (simple-root coordinates).
pub fn monomial_basis(lie: &LieAlgebra, target: &[i64], d: usize) -> Vec<PBWMonomial> {
    fn rec(
        lie: &LieAlgebra,
        remaining: usize,
        weight: &mut Vec<i64>,
        target: &[i64],
        min: Option<Factor>,
        cur: &mut Vec<Factor>,
        out: &mut Vec<PBWMonomial>,
    ) {
        if remaining == 0 {
            if weight.as_slice() == target {
                out.push(PBWMonomial(cur.clone()));
            }
            return;
        }
        for depth in (1..=remaining).rev() {
            for idx in 0..lie.dim() {
                let f = Factor::new(idx, depth);
                if min.is_some_and(|m| f < m) {
                    continue;
                }
                // a single remaining factor must hit the target exactly
                if depth == remaining {
                    let hit = weight
                        .iter()
                        .zip(lie.weight(idx))
                        .zip(target)
                        .all(|((w, x), t)| w + x == *t);
                    if !hit {
                        continue;
                    }
                }
                for (w, x) in weight.iter_mut().zip(lie.weight(idx)) {
                    *w += x;
                }
                cur.push(f);
                rec(lie, remaining - depth, weight, target, Some(f), cur, out);
                cur.pop();
                for (w, x) in weight.iter_mut().zip(lie.weight(idx)) {
                    *w -= x;
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut weight = vec![0; lie.rank()];
    rec(lie, d, &mut weight, target, None, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// General solver: g-highest vectors of weight `mu` and degree `d` killed by `f_theta(1)`,
/// reported at the levels where the solution space jumps.
pub fn solve_affine_singular(lie: &LieAlgebra, mu: &Weight, d: usize) -> Result<Vec<SingularSolution>> {
    solve_affine_singular_with(lie, mu, d, &Budget::from_env())
}

pub fn solve_affine_singular_with(lie: &LieAlgebra, mu: &Weight, d: usize, budget: &Budget) -> Result<Vec<SingularSolution>> {
    if d > budget.degree {
        return Err(LieError::BudgetExceeded {
            degree: d,
            budget: budget.degree,
        });
    }
    let Some(target) = lie.root_system().weight_to_root_lattice(mu) else {
        return Ok(Vec::new());
    };
    let basis = monomial_basis(lie, &target, d);
    let mut vm = VacuumModule::new(lie);

    // g-highest part: k-independent
    let mut rows: BTreeMap<(usize, PBWMonomial), SparseRow> = BTreeMap::new();
    for s in 0..lie.rank() {
        for (col, m) in basis.iter().enumerate() {
            let img = vm.apply_mode(lie.simple_e(s), 0, &PBWVector::monomial(m.clone(), LevelPoly::constant(Q::one())));
            for (mm, c) in img.iter() {
                let c = c.as_constant().expect("zero modes produce no k");
                rows.entry((s, mm.clone())).or_default().insert(col, c);
            }
        }
    }
    let highest = linalg::nullspace(rows.into_values(), basis.len());
    let vectors: Vec<PBWVector> = highest
        .iter()
        .map(|v| {
            let mut out = PBWVector::zero();
            for (c, m) in v.iter().zip(&basis) {
                out.add_term(m.clone(), &LevelPoly::constant(c.clone()));
            }
            out
        })
        .collect();
    if vectors.is_empty() {
        return Ok(Vec::new());
    }

    // f_theta(1) images as a polynomial matrix
    let images: Vec<PBWVector> = vectors.iter().map(|v| vm.apply_mode(lie.f_theta(), 1, v)).collect();
    let mut out_rows: BTreeMap<PBWMonomial, Vec<LevelPoly>> = BTreeMap::new();
    for (j, img) in images.iter().enumerate() {
        for (m, c) in img.iter() {
            out_rows
                .entry(m.clone())
                .or_insert_with(|| vec![LevelPoly::zero(); vectors.len()])[j] = c.clone();
        }
    }
    let matrix: Vec<Vec<LevelPoly>> = out_rows.into_values().collect();
    let pk = linalg::poly_kernel(&matrix, vectors.len())?;

    let combine = |coeffs: &[Q]| {
        let mut out = PBWVector::zero();
        for (c, v) in coeffs.iter().zip(&vectors) {
            out = out.add(&v.scale(&LevelPoly::constant(c.clone())));
        }
        out
    };
    let mut solutions = Vec::new();
    for kv in &pk.generic_kernel {
        let mut out = PBWVector::zero();
        for (c, v) in kv.iter().zip(&vectors) {
            out = out.add(&v.scale(c));
        }
        solutions.push(SingularSolution {
            level: None,
            vector: out,
        });
    }
    for k0 in &pk.jumps {
        for ns in linalg::nullspace_at(&matrix, vectors.len(), k0) {
            solutions.push(SingularSolution {
                level: Some(k0.clone()),
                vector: combine(&ns),
            });
        }
    }
    Ok(solutions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::build_lie_algebra;
    use crate::rational::qf;
    use crate::rootsys::{build_root_system, SimpleType};
    use crate::symmod::{casimir, w_vector};

    fn lie(s: &str) -> LieAlgebra {
        build_lie_algebra(&build_root_system(s.parse::<SimpleType>().unwrap()))
    }

    #[test]
    fn factor_order_is_deepest_first() {
        let a = Factor::new(5, 2);
        let b = Factor::new(0, 1);
        assert!(a < b);
        assert!(Factor::new(0, 1) < Factor::new(1, 1));
    }

    #[test]
    fn commutator_of_generators() {
        let g = lie("A1");
        let mut vm = VacuumModule::new(&g);
        let (e, h, f) = (0, 1, 2);
        let x = PBWVector::generator(e, 1);
        let y = PBWVector::generator(f, 1);
        let c = vm.multiply(&x, &y).sub(&vm.multiply(&y, &x));
        assert_eq!(c, PBWVector::generator(h, 2));
        assert_eq!(vm.multiply(&PBWVector::vacuum(), &x), x);
    }

    #[test]
    fn mode_action_on_generator() {
        let g = lie("A1");
        let mut vm = VacuumModule::new(&g);
        let (e, h, f) = (0, 1, 2);
        // e(1) f(-1)|0> = h(0)|0> + k|0> = k|0>
        let v = vm.apply_mode(e, 1, &PBWVector::generator(f, 1));
        assert_eq!(v, PBWVector::monomial(PBWMonomial::vacuum(), LevelPoly::k()));
        // h(1) h(-1)|0> = 2k|0>
        let v = vm.apply_mode(h, 1, &PBWVector::generator(h, 1));
        assert_eq!(v, PBWVector::monomial(PBWMonomial::vacuum(), LevelPoly::affine(q(2), q(0))));
    }

    #[test]
    fn sigma_of_casimir_sl2() {
        let g = lie("A1");
        let s = sigma_embed(&g, &casimir(&g));
        let txt = s.render(&g);
        assert!(txt.contains("(-1) h1(-2)"), "{txt}");
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn d4_deligne_level() {
        let g = lie("D4");
        let s = sigma_embed(&g, &w_vector(&g, 1).unwrap());
        let sols = is_affine_singular(&g, &s).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].level, Some(q(-2)));
        let id = singular_level_of_power(&g, &w_vector(&g, 1).unwrap(), 1).unwrap();
        assert_eq!(id.level, q(-1));
    }

    #[test]
    fn sp4_power_zero() {
        let g = lie("C2");
        let id = singular_level_of_power(&g, &w_vector(&g, 1).unwrap(), 0).unwrap();
        assert_eq!(id.level, qf(-1, 2));
    }

    #[test]
    fn budget_is_enforced() {
        let g = lie("D4");
        let w = w_vector(&g, 1).unwrap();
        let err = singular_level_of_power_with(&g, &w, 4, &Budget::default()).unwrap_err();
        assert_eq!(err, LieError::BudgetExceeded { degree: 10, budget: 8 });
    }

    #[test]
    fn non_highest_vector_is_rejected() {
        let g = lie("A1");
        let v = PBWVector::generator(2, 1);
        assert!(matches!(is_affine_singular(&g, &v), Err(LieError::NotHighestWeight(_))));
    }

    #[test]
    fn theta_generator_is_not_singular() {
        let g = lie("A2");
        let rs = g.root_system();
        let mu = rs.root_to_weight(&rs.theta().0);
        // no solution for generic k; e_theta(-1)|0> is singular only at k = 0
        let sols = solve_affine_singular(&g, &mu, 1).unwrap();
        let levels: Vec<_> = sols.iter().map(|s| s.level.clone()).collect();
        assert_eq!(levels, vec![Some(q(0))]);
    }
}
