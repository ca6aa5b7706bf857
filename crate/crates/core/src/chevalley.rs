//! Chevalley basis `{h_i, e_a, f_a}` with integral structure constants.
//!
//! Signs of `N_{a,b}` come from the extraspecial-pair algorithm: for every
//! non-simple positive root the extraspecial pair gets `N = +(p+1)` and all
//! other constants follow from the quadratic relations between them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{LieError, Result};
use crate::linalg::{self, SparseRow};
use crate::rational::{fmt_q, q, to_i64, Q};
use crate::rootsys::{Root, RootSystem};

/// Position of a basis vector. Derived order matches the global index order:
/// positive root vectors, then Cartan elements, then negative root vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisIndex {
    /// `e_a` for the a-th positive root
    Pos(usize),
    /// `h_i` = i-th simple coroot (0-based)
    Cartan(usize),
    /// `f_a = e_{-a}`
    Neg(usize),
}

/// Sparse element of g with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgElement(BTreeMap<usize, Q>);

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement(BTreeMap::new())
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, Q::one())
    }

    pub fn term(i: usize, c: Q) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(i, c);
        }
        AlgElement(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.0.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn add_term(&mut self, i: usize, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(i).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&i);
        }
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_term(i, c);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> AlgElement {
        if c.is_zero() {
            return AlgElement::zero();
        }
        AlgElement(self.0.iter().map(|(i, x)| (*i, x * c)).collect())
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn to_row(&self) -> SparseRow {
        self.0.clone()
    }
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    rs: RootSystem,
    dim: usize,
    n_pos: usize,
    /// `[b_a, b_b]` at `a * dim + b`, as `(index, integer coefficient)` terms
    table: Vec<Vec<(u32, i64)>>,
    /// nonzero entries of the normalized form, per row
    form: Vec<Vec<(usize, Q)>>,
    /// weight of each basis vector in simple-root coordinates
    weights: Vec<Vec<i64>>,
}

/// Structure constants `N_{a,b}` for pairs of positive roots with `a + b` a root.
struct StructureConstants<'a> {
    rs: &'a RootSystem,
    pos: HashMap<(usize, usize), i64>,
}

impl<'a> StructureConstants<'a> {
    fn compute(rs: &'a RootSystem) -> Self {
        let mut sc = StructureConstants {
            rs,
            pos: HashMap::new(),
        };
        let roots = rs.positive_roots();
        for (xi_idx, xi) in roots.iter().enumerate() {
            if xi.height() == 1 {
                continue;
            }
            // special pairs (a, b), a before b in the fixed order, a + b = xi
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for (ai, a) in roots.iter().enumerate().take(xi_idx) {
                if let Some(bi) = rs.index_of(&xi.sub(a)) {
                    if ai < bi {
                        pairs.push((ai, bi));
                    }
                }
            }
            let (gi, di) = pairs[0];
            let n_extra = sc.string_p(&roots[gi], &roots[di]) + 1;
            sc.pos.insert((gi, di), n_extra);
            sc.pos.insert((di, gi), -n_extra);
            let gamma = roots[gi].clone();
            let delta = roots[di].clone();
            let xi_norm = rs.norm2(xi);
            for &(ai, bi) in &pairs[1..] {
                let a = &roots[ai];
                let b = &roots[bi];
                let mut acc = Q::zero();
                let b_minus_g = b.sub(&gamma);
                if rs.is_root(&b_minus_g) {
                    acc += q(sc.n(b, &gamma.neg()) * sc.n(a, &delta.neg())) / rs.norm2(&b_minus_g);
                }
                let a_minus_g = a.sub(&gamma);
                if rs.is_root(&a_minus_g) {
                    acc += q(sc.n(&gamma.neg(), a) * sc.n(b, &delta.neg())) / rs.norm2(&a_minus_g);
                }
                let val = to_i64(&(acc * &xi_norm / q(n_extra))).expect("integral structure constant");
                debug_assert_eq!(val.abs(), sc.string_p(a, b) + 1);
                sc.pos.insert((ai, bi), val);
                sc.pos.insert((bi, ai), -val);
            }
        }
        sc
    }

    /// Largest p with `b - p a` a root.
    fn string_p(&self, a: &Root, b: &Root) -> i64 {
        let mut p = 0;
        let mut cur = b.sub(a);
        while self.rs.is_root(&cur) {
            p += 1;
            cur = cur.sub(a);
        }
        p
    }

    /// `N_{a,b}` for arbitrary roots with `a + b` a root.
    fn n(&self, a: &Root, b: &Root) -> i64 {
        let rs = self.rs;
        let (ap, bp) = (a.is_positive(), b.is_positive());
        if ap && bp {
            let ai = rs.index_of(a).unwrap();
            let bi = rs.index_of(b).unwrap();
            return self.pos[&(ai, bi)];
        }
        if !ap && !bp {
            return -self.n(&a.neg(), &b.neg());
        }
        // a + b + g = 0: N_{a,b}/|g|^2 = N_{b,g}/|a|^2 = N_{g,a}/|b|^2
        let g = a.add(b).neg();
        let gp = g.is_positive();
        let val = if ap == gp {
            // g and a share a sign
            q(self.n(&g, a)) * rs.norm2(&g) / rs.norm2(b)
        } else {
            // b and g share a sign
            q(self.n(b, &g)) * rs.norm2(&g) / rs.norm2(a)
        };
        to_i64(&val).expect("integral structure constant")
    }
}

pub fn build_lie_algebra(rs: &RootSystem) -> LieAlgebra {
    let rs = rs.clone();
    let l = rs.rank();
    let n_pos = rs.positive_roots().len();
    let dim = 2 * n_pos + l;
    let sc = StructureConstants::compute(&rs);

    let mut weights = vec![vec![0i64; l]; dim];
    let mut root_of: Vec<Option<Root>> = vec![None; dim];
    for (j, r) in rs.positive_roots().iter().enumerate() {
        weights[j] = r.0.clone();
        weights[n_pos + l + j] = r.neg().0;
        root_of[j] = Some(r.clone());
        root_of[n_pos + l + j] = Some(r.neg());
    }
    let index_of_root = |r: &Root| -> usize {
        if let Some(i) = rs.index_of(r) {
            i
        } else {
            n_pos + l + rs.index_of(&r.neg()).expect("root")
        }
    };

    let mut table = vec![Vec::new(); dim * dim];
    for a in 0..dim {
        for b in 0..dim {
            let entry: Vec<(u32, i64)> = match (&root_of[a], &root_of[b]) {
                (None, None) => Vec::new(),
                (None, Some(rb)) => {
                    let c = rs.pairing(rb, &Root::simple(l, a - n_pos));
                    if c == 0 {
                        Vec::new()
                    } else {
                        vec![(b as u32, c)]
                    }
                }
                (Some(ra), None) => {
                    let c = rs.pairing(ra, &Root::simple(l, b - n_pos));
                    if c == 0 {
                        Vec::new()
                    } else {
                        vec![(a as u32, -c)]
                    }
                }
                (Some(ra), Some(rb)) => {
                    let sum = ra.add(rb);
                    if sum.is_zero() {
                        // [e_r, e_{-r}] = h_r
                        let (pos, sign) = if ra.is_positive() { (ra.clone(), 1) } else { (ra.neg(), -1) };
                        rs.coroot_coords(&pos)
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| **c != 0)
                            .map(|(i, c)| ((n_pos + i) as u32, sign * c))
                            .collect()
                    } else if rs.is_root(&sum) {
                        vec![(index_of_root(&sum) as u32, sc.n(ra, rb))]
                    } else {
                        Vec::new()
                    }
                }
            };
            table[a * dim + b] = entry;
        }
    }

    // (h_i|h_j) = (a_i^vee|a_j^vee), (e_r|e_{-r}) = 2/|r|^2
    let mut form = vec![Vec::new(); dim];
    let g = rs.gram();
    for i in 0..l {
        for j in 0..l {
            if !g[i][j].is_zero() {
                let v = q(4) * &g[i][j] / (&g[i][i] * &g[j][j]);
                form[n_pos + i].push((n_pos + j, v));
            }
        }
    }
    for (j, r) in rs.positive_roots().iter().enumerate() {
        let v = q(2) / rs.norm2(r);
        form[j].push((n_pos + l + j, v.clone()));
        form[n_pos + l + j].push((j, v));
    }

    LieAlgebra {
        rs,
        dim,
        n_pos,
        table,
        form,
        weights,
    }
}

impl LieAlgebra {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn index(&self, b: BasisIndex) -> usize {
        match b {
            BasisIndex::Pos(j) => j,
            BasisIndex::Cartan(i) => self.n_pos + i,
            BasisIndex::Neg(j) => self.n_pos + self.rank() + j,
        }
    }

    pub fn basis_index(&self, i: usize) -> BasisIndex {
        let l = self.rank();
        if i < self.n_pos {
            BasisIndex::Pos(i)
        } else if i < self.n_pos + l {
            BasisIndex::Cartan(i - self.n_pos)
        } else {
            BasisIndex::Neg(i - self.n_pos - l)
        }
    }

    pub fn is_cartan(&self, i: usize) -> bool {
        matches!(self.basis_index(i), BasisIndex::Cartan(_))
    }

    /// Weight of a basis vector in simple-root coordinates (zero for Cartan elements).
    pub fn weight(&self, i: usize) -> &[i64] {
        &self.weights[i]
    }

    /// Basis index of the root vector `e_r` (r positive or negative).
    pub fn root_vector(&self, r: &Root) -> Option<usize> {
        if let Some(j) = self.rs.index_of(r) {
            Some(j)
        } else {
            self.rs
                .index_of(&r.neg())
                .map(|j| self.index(BasisIndex::Neg(j)))
        }
    }

    pub fn e(&self, r: &Root) -> usize {
        self.root_vector(r).expect("positive root")
    }

    pub fn f(&self, r: &Root) -> usize {
        self.root_vector(&r.neg()).expect("positive root")
    }

    pub fn e_theta(&self) -> usize {
        self.e(self.rs.theta())
    }

    pub fn f_theta(&self) -> usize {
        self.f(self.rs.theta())
    }

    /// `h_r = [e_r, e_{-r}]` as an element of the Cartan subalgebra.
    pub fn coroot(&self, r: &Root) -> AlgElement {
        let mut out = AlgElement::zero();
        for (i, c) in self.rs.coroot_coords(r).iter().enumerate() {
            out.add_term(self.n_pos + i, &q(*c));
        }
        out
    }

    pub fn h_theta(&self) -> AlgElement {
        self.coroot(self.rs.theta())
    }

    /// Simple raising operators `e_{alpha_s}`.
    pub fn simple_e(&self, s: usize) -> usize {
        s
    }

    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(u32, i64)] {
        &self.table[a * self.dim + b]
    }

    pub fn bracket(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let cab = ca * cb;
                for (c, n) in self.bracket_basis(a, b) {
                    out.add_term(*c as usize, &(&cab * q(*n)));
                }
            }
        }
        out
    }

    /// `[b_a, y]`
    pub fn ad_basis(&self, a: usize, y: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (b, cb) in y.iter() {
            for (c, n) in self.bracket_basis(a, b) {
                out.add_term(*c as usize, &(cb * q(*n)));
            }
        }
        out
    }

    pub fn form_basis(&self, a: usize, b: usize) -> Q {
        self.form[a]
            .iter()
            .find(|(j, _)| *j == b)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Q::zero)
    }

    /// Basis vectors pairing nontrivially with `b_a`.
    pub fn form_row(&self, a: usize) -> &[(usize, Q)] {
        &self.form[a]
    }

    /// Line format: `<a> <b> -> <coeff> <c>`, one line per nonzero constant.
    pub fn dump_bracket_table(&self) -> String {
        let mut out = String::new();
        for a in 0..self.dim {
            for b in 0..self.dim {
                for (c, n) in self.bracket_basis(a, b) {
                    let _ = writeln!(
                        out,
                        "{} {} -> {} {}",
                        self.render(a),
                        self.render(b),
                        n,
                        self.render(*c as usize)
                    );
                }
            }
        }
        out
    }

    /// `e(1211)`, `f(0100)`, `h3`.
    pub fn render(&self, i: usize) -> String {
        match self.basis_index(i) {
            BasisIndex::Pos(j) => format!("e{}", self.rs.positive_roots()[j]),
            BasisIndex::Neg(j) => format!("f{}", self.rs.positive_roots()[j]),
            BasisIndex::Cartan(c) => format!("h{}", c + 1),
        }
    }

    pub fn render_element(&self, x: &AlgElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.iter()
            .map(|(i, c)| format!("{}*{}", fmt_q(c), self.render(i)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g({}) of dimension {}", self.rs.simple_type(), self.dim)
    }
}

pub fn bracket(lie: &LieAlgebra, x: &AlgElement, y: &AlgElement) -> AlgElement {
    lie.bracket(x, y)
}

/// The invariant form with `(theta|theta) = 2`, i.e. Killing form / 2h^vee.
pub fn normalized_form(lie: &LieAlgebra, x: &AlgElement, y: &AlgElement) -> Q {
    let mut acc = Q::zero();
    for (a, ca) in x.iter() {
        for (b, v) in lie.form_row(a) {
            let cb = y.coeff(*b);
            if !cb.is_zero() {
                acc += ca * v * cb;
            }
        }
    }
    acc
}

/// Trace of `ad x . ad y` restricted to the span of the basis vectors `subspace`.
pub fn ad_trace_on_subspace(
    lie: &LieAlgebra,
    x: &AlgElement,
    y: &AlgElement,
    subspace: &[usize],
) -> Result<Q> {
    let inside = |z: &AlgElement| z.support().all(|i| subspace.contains(&i));
    let mut trace = Q::zero();
    for &s in subspace {
        let bs = AlgElement::basis(s);
        let ys = lie.bracket(y, &bs);
        if !inside(&ys) {
            return Err(LieError::UnstableSubspace(lie.render_element(y)));
        }
        if !inside(&lie.bracket(x, &bs)) {
            return Err(LieError::UnstableSubspace(lie.render_element(x)));
        }
        trace += lie.bracket(x, &ys).coeff(s);
    }
    Ok(trace)
}

/// `dim ker(ad x)` by exact rank computation.
pub fn centralizer_dim(lie: &LieAlgebra, x: &AlgElement) -> usize {
    let cols = (0..lie.dim()).map(|b| lie.bracket(x, &AlgElement::basis(b)).to_row());
    lie.dim() - linalg::rank(cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, SimpleType};

    fn lie(s: &str) -> LieAlgebra {
        build_lie_algebra(&build_root_system(s.parse::<SimpleType>().unwrap()))
    }

    #[test]
    fn sl2_relations() {
        let g = lie("A1");
        let (e, h, f) = (0, 1, 2);
        let b = |x, y| g.bracket(&AlgElement::basis(x), &AlgElement::basis(y));
        assert_eq!(b(e, f), AlgElement::basis(h));
        assert_eq!(b(h, e), AlgElement::term(e, q(2)));
        assert_eq!(b(h, f), AlgElement::term(f, q(-2)));
        assert_eq!(g.render(e), "e(1)");
        assert_eq!(g.render(f), "f(1)");
    }

    #[test]
    fn alternating_and_theta_relations() {
        for t in ["D4", "G2", "F4", "C3"] {
            let g = lie(t);
            for a in 0..g.dim() {
                let x = AlgElement::basis(a);
                assert!(g.bracket(&x, &x).is_zero());
            }
            let et = AlgElement::basis(g.e_theta());
            let ft = AlgElement::basis(g.f_theta());
            let ht = g.h_theta();
            assert_eq!(g.bracket(&ht, &et), et.scale(&q(2)));
            assert_eq!(g.bracket(&et, &ft), ht);
            assert_eq!(normalized_form(&g, &et, &ft), q(1));
            assert_eq!(normalized_form(&g, &ht, &ht), q(2));
        }
    }

    #[test]
    fn d4_dimension_and_table2_bracket() {
        let g = lie("D4");
        assert_eq!(g.dim(), 28);
        let rs = g.root_system();
        let e = |c: [i64; 4]| AlgElement::basis(g.e(&Root(c.to_vec())));
        let inner = g.bracket(&e([0, 1, 0, 0]), &e([1, 0, 0, 0]));
        let outer = g.bracket(&e([0, 1, 1, 1]), &inner);
        let et = g.e_theta();
        assert_eq!(outer.support().collect::<Vec<_>>(), vec![et]);
        assert_eq!(outer.coeff(et).numer().magnitude().to_string(), "1");
        assert_eq!(rs.theta(), &Root(vec![1, 2, 1, 1]));
    }

    #[test]
    fn g2_has_long_strings() {
        let g = lie("G2");
        let mut mags = std::collections::BTreeSet::new();
        for a in 0..g.dim() {
            for b in 0..g.dim() {
                if g.is_cartan(a) || g.is_cartan(b) {
                    continue;
                }
                for (_, n) in g.bracket_basis(a, b) {
                    mags.insert(n.abs());
                }
            }
        }
        assert!(mags.contains(&2) && mags.contains(&3));
    }

    #[test]
    fn centralizer_dims() {
        let g = lie("D4");
        assert_eq!(centralizer_dim(&g, &AlgElement::zero()), 28);
        assert_eq!(centralizer_dim(&g, &AlgElement::basis(g.f_theta())), 18);
    }

    #[test]
    fn trace_on_subspace_checks_stability() {
        let g = lie("A2");
        let x = AlgElement::basis(0);
        assert!(ad_trace_on_subspace(&g, &AlgElement::zero(), &AlgElement::zero(), &[0, 1]).unwrap().is_zero());
        assert!(matches!(
            ad_trace_on_subspace(&g, &x, &x, &[1]),
            Err(LieError::UnstableSubspace(_))
        ));
    }

    #[test]
    fn bracket_dump_is_line_per_constant() {
        let g = lie("A1");
        let dump = g.dump_bracket_table();
        assert!(dump.contains("e(1) f(1) -> 1 h1\n"));
        assert!(dump.contains("h1 e(1) -> 2 e(1)\n"));
        assert_eq!(dump.lines().count(), 6);
    }

    fn jacobi_holds(g: &LieAlgebra, a: usize, b: usize, c: usize) -> bool {
        let (x, y, z) = (AlgElement::basis(a), AlgElement::basis(b), AlgElement::basis(c));
        let t1 = g.bracket(&x, &g.bracket(&y, &z));
        let t2 = g.bracket(&y, &g.bracket(&z, &x));
        let t3 = g.bracket(&z, &g.bracket(&x, &y));
        t1.add(&t2).add(&t3).is_zero()
    }

    fn invariant(g: &LieAlgebra, a: usize, b: usize, c: usize) -> bool {
        let (x, y, z) = (AlgElement::basis(a), AlgElement::basis(b), AlgElement::basis(c));
        normalized_form(g, &g.bracket(&x, &y), &z) == normalized_form(g, &x, &g.bracket(&y, &z))
    }

    #[test]
    fn jacobi_and_invariance_exhaustive_small_rank() {
        for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "A4", "B4", "C4", "F4"] {
            let g = lie(t);
            let n = g.dim();
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        assert!(jacobi_holds(&g, a, b, c), "Jacobi fails in {t} at {a} {b} {c}");
                    }
                    for c in 0..n {
                        assert!(invariant(&g, a, b, c), "form not invariant in {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_sampled_e_types() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for t in ["E6", "E7", "E8"] {
            let g = lie(t);
            let n = g.dim();
            for _ in 0..20_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                assert!(jacobi_holds(&g, a, b, c), "Jacobi fails in {t}");
                assert!(invariant(&g, a, b, c), "form not invariant in {t}");
            }
        }
    }
}
