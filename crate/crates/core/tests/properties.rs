//! Property tests against independent oracles.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use minvert::affine::{Factor, PBWMonomial, PBWVector, VacuumModule};
use minvert::chevalley::{build_lie_algebra, normalized_form, AlgElement, LieAlgebra};
use minvert::minimal_data::minimal_grading;
use minvert::rational::{q, qf, LevelPoly, Q};
use minvert::rootsys::{build_root_system, SimpleType, Weight};
use minvert::symmod::{casimir, weight_space, SymElement};
use num_traits::{One, Zero};
use proptest::prelude::*;

const SMALL: [&str; 8] = ["A1", "A2", "B2", "G2", "A3", "C3", "B3", "D4"];

fn algebras() -> &'static Vec<LieAlgebra> {
    static CELL: OnceLock<Vec<LieAlgebra>> = OnceLock::new();
    CELL.get_or_init(|| {
        SMALL
            .iter()
            .map(|n| build_lie_algebra(&build_root_system(n.parse().unwrap())))
            .collect()
    })
}

fn algebra(name: &str) -> &'static LieAlgebra {
    &algebras()[SMALL.iter().position(|n| *n == name).unwrap()]
}

/// `tr(ad a ad b)` straight from the structure constants.
fn killing(g: &LieAlgebra, a: usize, b: usize) -> Q {
    (0..g.dim())
        .map(|c| {
            let bc = g.ad_basis(b, &AlgElement::basis(c));
            g.ad_basis(a, &bc).coeff(c)
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn killing_is_2h_times_normalized_form(t in 0..SMALL.len(), a in 0usize..1000, b in 0usize..1000) {
        let g = &algebras()[t];
        let (a, b) = (a % g.dim(), b % g.dim());
        let h = q(g.root_system().h_dual());
        prop_assert_eq!(killing(g, a, b), q(2) * h * g.form_basis(a, b));
    }

    #[test]
    fn bracket_bilinear_and_antisymmetric(t in 0..SMALL.len(), xs in prop::collection::vec((0usize..1000, -3i64..4), 1..4), ys in prop::collection::vec((0usize..1000, -3i64..4), 1..4)) {
        let g = &algebras()[t];
        let mk = |v: &[(usize, i64)]| {
            let mut e = AlgElement::zero();
            for (i, c) in v {
                e.add_term(i % g.dim(), &q(*c));
            }
            e
        };
        let (x, y) = (mk(&xs), mk(&ys));
        prop_assert_eq!(g.bracket(&x, &y).add(&g.bracket(&y, &x)), AlgElement::zero());
        prop_assert_eq!(normalized_form(g, &x, &y), normalized_form(g, &y, &x));
    }

    #[test]
    fn pbw_product_associative(t in 0usize..3, seeds in prop::collection::vec((0usize..1000, 1usize..3), 0..6), cut in (0usize..7, 0usize..7)) {
        let g = algebra(["A2", "C3", "G2"][t]);
        let mut vm = VacuumModule::new(g);
        let fs: Vec<Factor> = seeds.iter().map(|(i, d)| Factor::new(i % g.dim(), *d)).collect();
        let (i, j) = (cut.0.min(fs.len()), cut.1.min(fs.len()));
        let (i, j) = (i.min(j), i.max(j));
        let part = |s: &[Factor]| {
            let mut v = s.to_vec();
            v.sort();
            PBWVector::monomial(PBWMonomial(v), LevelPoly::constant(Q::one()))
        };
        let (u, v, w) = (part(&fs[..i]), part(&fs[i..j]), part(&fs[j..]));
        let uv = vm.multiply(&u, &v);
        let vw = vm.multiply(&v, &w);
        prop_assert_eq!(vm.multiply(&uv, &w), vm.multiply(&u, &vw));
    }

    #[test]
    fn mode_commutator(t in 0usize..3, x in 0usize..1000, y in 0usize..1000, n in -2i64..3, m in -2i64..3, seeds in prop::collection::vec((0usize..1000, 1usize..3), 0..3)) {
        let g = algebra(["A1", "A2", "B2"][t]);
        let (x, y) = (x % g.dim(), y % g.dim());
        let mut vm = VacuumModule::new(g);
        let mut fs: Vec<Factor> = seeds.iter().map(|(i, d)| Factor::new(i % g.dim(), *d)).collect();
        fs.sort();
        let v = PBWVector::monomial(PBWMonomial(fs), LevelPoly::constant(Q::one()));
        let ym = vm.apply_mode(y, m, &v);
        let xn = vm.apply_mode(x, n, &v);
        let lhs = vm.apply_mode(x, n, &ym).sub(&vm.apply_mode(y, m, &xn));
        let mut rhs = PBWVector::zero();
        for (z, c) in g.bracket_basis(x, y).to_vec() {
            rhs = rhs.add(&vm.apply_mode(z as usize, n + m, &v).scale(&LevelPoly::constant(q(c))));
        }
        if n + m == 0 {
            rhs = rhs.add(&v.scale(&LevelPoly::affine(q(n) * g.form_basis(x, y), Q::zero())));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sigma_of_monomial_is_symmetrized(t in 0..SMALL.len(), a in 0usize..1000, b in 0usize..1000) {
        let g = &algebras()[t];
        let (a, b) = ((a % g.dim()).min(b % g.dim()), (a % g.dim()).max(b % g.dim()));
        let mut vm = VacuumModule::new(g);
        // a(-1) b(-1) is already ordered for a <= b; the other order differs by [a,b](-2).
        let mut expected = PBWVector::zero();
        expected.add_term(PBWMonomial(vec![Factor::new(a, 1), Factor::new(b, 1)]), &LevelPoly::constant(Q::one()));
        for (z, c) in g.bracket_basis(a, b) {
            expected.add_term(PBWMonomial(vec![Factor::new(*z as usize, 2)]), &LevelPoly::constant(qf(-*c, 2)));
        }
        prop_assert_eq!(vm.sigma(&SymElement::monomial(a, b)), expected);
    }

    #[test]
    fn reflections_are_involutions(t in 0..SMALL.len(), i in 0usize..8, lam in prop::collection::vec(-4i64..5, 4)) {
        let rs = algebras()[t].root_system();
        let l = rs.rank();
        let i = i % l + 1;
        let w = Weight::from_ints(&lam[..l.min(4)].iter().cloned().chain(std::iter::repeat(0)).take(l).collect::<Vec<_>>());
        let once = rs.weyl_act(&[i], &w).unwrap();
        prop_assert_eq!(rs.weyl_act(&[i], &once).unwrap(), w.clone());
        let coords = |x: &Weight| rs.weight_to_root_coords(x);
        let norm = |x: &Weight| {
            let c = coords(x);
            let mut s = Q::zero();
            for a in 0..l {
                for b in 0..l {
                    s += &c[a] * &c[b] * &rs.gram()[a][b];
                }
            }
            s
        };
        prop_assert_eq!(norm(&once), norm(&w));
    }
}

fn invert(m: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("nondegenerate");
        a.swap(col, p);
        let inv = Q::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

#[test]
fn casimir_matches_dense_dual_basis() {
    for g in algebras() {
        let n = g.dim();
        let form: Vec<Vec<Q>> = (0..n).map(|a| (0..n).map(|b| g.form_basis(a, b)).collect()).collect();
        let dual = invert(form);
        let c = casimir(g);
        for a in 0..n {
            for b in 0..n {
                assert_eq!(c.tensor_coeff(a, b), dual[a][b], "{} ({a},{b})", g.root_system().simple_type());
            }
        }
    }
}

#[test]
fn grading_dims_match_root_count() {
    for t in SimpleType::all_up_to_rank(7) {
        let rs = build_root_system(t);
        let g = build_lie_algebra(&rs);
        let theta = rs.theta().clone();
        let count = |v: i64| rs.positive_roots().iter().filter(|r| rs.pairing(r, &theta) == v).count();
        let (c0, c1) = (count(0), count(1));
        assert_eq!(count(2), 1, "{t}");
        assert_eq!(minimal_grading(&g).dims(), [1, c1, 2 * c0 + rs.rank(), c1, 1], "{t}");
    }
}

#[test]
fn weight_space_matches_brute_force() {
    for g in algebras() {
        let rs = g.root_system();
        let targets: BTreeSet<Vec<i64>> = (0..g.dim())
            .flat_map(|a| (a..g.dim()).map(move |b| (a, b)))
            .map(|(a, b)| g.weight(a).iter().zip(g.weight(b)).map(|(x, y)| x + y).collect())
            .collect();
        for t in targets.iter().step_by(7) {
            let mut brute: Vec<(usize, usize)> = (0..g.dim())
                .flat_map(|a| (a..g.dim()).map(move |b| (a, b)))
                .filter(|&(a, b)| g.weight(a).iter().zip(g.weight(b)).map(|(x, y)| x + y).eq(t.iter().cloned()))
                .collect();
            brute.sort();
            let mut got = weight_space(g, &rs.root_to_weight(t));
            got.sort();
            assert_eq!(got, brute, "{} at {t:?}", rs.simple_type());
        }
    }
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn weyl_dimension_known_cases() {
    for t in SimpleType::all_up_to_rank(8) {
        let rs = build_root_system(t);
        let adj = rs.root_to_weight(&rs.theta().0);
        assert_eq!(minvert::rootsys::weyl_dimension(&rs, &adj).unwrap(), rs.dim() as u128, "{t}");
    }
    for l in 1..=7usize {
        let rs = build_root_system(format!("A{l}").parse().unwrap());
        for i in 1..=l {
            let w = Weight::fundamental(l, i - 1);
            assert_eq!(minvert::rootsys::weyl_dimension(&rs, &w).unwrap(), binom(l as u128 + 1, i as u128));
        }
    }
    // spin representations of so_{2l+1} and so_{2l}
    for l in 2..=7usize {
        let b = build_root_system(format!("B{l}").parse().unwrap());
        assert_eq!(minvert::rootsys::weyl_dimension(&b, &Weight::fundamental(l, l - 1)).unwrap(), 1 << l);
        if l >= 4 {
            let d = build_root_system(format!("D{l}").parse().unwrap());
            assert_eq!(minvert::rootsys::weyl_dimension(&d, &Weight::fundamental(l, l - 1)).unwrap(), 1 << (l - 1));
        }
    }
}

#[test]
fn hand_computed_reflections() {
    // G2: alpha1 short, alpha1 = 2w1 - w2, alpha2 = -3w1 + 2w2
    let g2 = build_root_system("G2".parse().unwrap());
    let w1 = Weight::fundamental(2, 0);
    assert_eq!(g2.weyl_act(&[1], &w1).unwrap(), Weight::from_ints(&[-1, 1]));
    let w2 = Weight::fundamental(2, 1);
    assert_eq!(g2.weyl_act(&[2], &w2).unwrap(), Weight::from_ints(&[3, -1]));
    // D4: s2 w2 = w2 - alpha2 = w1 - w2 + w3 + w4
    let d4 = build_root_system("D4".parse().unwrap());
    assert_eq!(
        d4.weyl_act(&[2], &Weight::fundamental(4, 1)).unwrap(),
        Weight::from_ints(&[1, -1, 1, 1])
    );
}
