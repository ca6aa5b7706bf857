//! The acceptance suite: one report per criterion, shared by the test target
//! and `minvert check-all`.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::affine::{
    is_affine_singular, sigma_embed, singular_level_of_power_with, solve_affine_singular_with, Budget,
    PBWMonomial, PBWVector, VacuumModule,
};
use crate::chevalley::{build_lie_algebra, centralizer_dim, normalized_form, AlgElement, LieAlgebra};
use crate::error::LieError;
use crate::minimal_data::{
    central_charge, collapse_verdict, deligne_level, g_natural, k_natural, lisse_verdict, Lisse,
};
use crate::rational::{fmt_q, q, qf, LevelPoly, Q};
use crate::rootsys::{build_root_system, Root, RootSystem, SimpleType, Weight};
use crate::symmod::{ad_sym, s2_decomposition_check, theta_pairs, w_vector, w_weight, SymElement};

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2}: {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64()
        )
    }
}

impl CriterionReport {
    /// Summary line followed by the indented detail lines.
    pub fn render(&self) -> String {
        let mut out = format!("{self}\n");
        for d in &self.details {
            out.push_str(&format!("    {d}\n"));
        }
        out
    }
}

struct Checker {
    ok: bool,
    details: Vec<String>,
    start: Instant,
}

impl Checker {
    fn new() -> Self {
        Checker {
            ok: true,
            details: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(&mut self, cond: bool, msg: impl Into<String>) {
        let msg = msg.into();
        self.details.push(format!("{} {msg}", if cond { "ok  " } else { "FAIL" }));
        self.ok &= cond;
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.details.push(format!("     {}", msg.into()));
    }

    fn finish(mut self, id: u8, title: &'static str, limit: Option<Duration>) -> CriterionReport {
        let elapsed = self.start.elapsed();
        if let Some(limit) = limit {
            self.check(elapsed <= limit, format!("runtime {:.2}s within {}s", elapsed.as_secs_f64(), limit.as_secs()));
        }
        CriterionReport {
            id,
            title,
            passed: self.ok,
            details: self.details,
            elapsed,
        }
    }
}

fn lie(name: &str) -> LieAlgebra {
    build_lie_algebra(&rs(name))
}

fn rs(name: &str) -> RootSystem {
    build_root_system(name.parse::<SimpleType>().expect("built-in type"))
}

fn root(digits: &str) -> Root {
    Root(digits.bytes().map(|b| (b - b'0') as i64).collect())
}

/// Level forced on a singular vector of weight `mu` (simple-root coordinates) in degree `d`
/// by the Sugawara relation `(mu|mu + 2 rho) = 2 d (k + h^vee)`.
pub fn sugawara_level(rs: &RootSystem, mu: &[i64], d: usize) -> Q {
    let two_rho: Q = mu
        .iter()
        .enumerate()
        .map(|(i, c)| q(*c) * &rs.gram()[i][i])
        .sum();
    (rs.inner(mu, mu) + two_rho) / q(2 * d as i64) - q(rs.h_dual())
}

// Expected pairs. For E6 the only root completing (010110) to theta - theta1 = (021210) is (011100).
const TABLE2: [(&str, &[(&str, &str)]); 4] = [
    ("D4", &[("0100", "0111"), ("0101", "0110")]),
    ("E6", &[("010000", "011210"), ("010100", "011110"), ("010110", "011100")]),
    (
        "E7",
        &[
            ("1000000", "1122100"),
            ("1010000", "1112100"),
            ("1011000", "1111100"),
            ("1011100", "1111000"),
        ],
    ),
    (
        "E8",
        &[
            ("00000001", "01122221"),
            ("00000011", "01122211"),
            ("00000111", "01122111"),
            ("00001111", "01121111"),
            ("00011111", "01111111"),
            ("01011111", "00111111"),
        ],
    ),
];

fn unordered(a: Root, b: Root) -> (Root, Root) {
    if a.0 <= b.0 {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn criterion_1() -> CriterionReport {
    let mut c = Checker::new();
    for (name, pairs) in TABLE2 {
        let g = lie(name);
        let expected: BTreeSet<(Root, Root)> = pairs.iter().map(|(a, b)| unordered(root(a), root(b))).collect();
        match theta_pairs(&g, 1) {
            Ok(pl) => {
                let got: BTreeSet<(Root, Root)> = pl.pairs.iter().cloned().collect();
                let count = qf(g.root_system().h_dual(), 6) + q(1);
                c.check(got == expected, format!("{name}: pair set matches ({} pairs)", got.len()));
                c.check(q(got.len() as i64) == count, format!("{name}: count = h/6+1 = {}", fmt_q(&count)));
            }
            Err(e) => c.check(false, format!("{name}: {e}")),
        }
    }
    c.finish(1, "Table 2 pairs", Some(Duration::from_secs(5)))
}

fn check_sigma_level(c: &mut Checker, name: &str, i: usize, expected: Q) {
    let g = lie(name);
    let res = w_vector(&g, i).and_then(|w| is_affine_singular(&g, &sigma_embed(&g, &w)));
    match res {
        Ok(sols) => {
            let levels: Vec<String> = sols.iter().map(|s| s.level_string()).collect();
            c.check(
                sols.len() == 1 && sols[0].level.as_ref() == Some(&expected),
                format!("{name} w{i}: levels {levels:?}, expected {}", fmt_q(&expected)),
            );
        }
        Err(e) => c.check(false, format!("{name} w{i}: {e}")),
    }
}

pub fn criterion_2() -> CriterionReport {
    let mut c = Checker::new();
    for i in 1..=3 {
        check_sigma_level(&mut c, "D4", i, q(-2));
    }
    for (name, level) in [("E6", q(-3)), ("E7", q(-4)), ("E8", q(-6)), ("G2", qf(-5, 3)), ("F4", qf(-5, 2))] {
        let d = deligne_level(&rs(name)).expect("Deligne type");
        c.check(d == level, format!("{name}: -h/6-1 = {}", fmt_q(&d)));
        check_sigma_level(&mut c, name, 1, level);
    }
    c.finish(2, "sigma(w_i) singular exactly at the Deligne level", Some(Duration::from_secs(60)))
}

fn check_power(c: &mut Checker, g: &LieAlgebra, i: usize, n: usize, expected: Q, budget: &Budget) {
    let name = g.root_system().simple_type();
    let res = w_vector(g, i).and_then(|w| singular_level_of_power_with(g, &w, n, budget));
    match res {
        Ok(id) => {
            let root_ok = id.scalar.eval(&id.level).is_zero() && !id.scalar.coeff(1).is_zero();
            c.check(
                id.level == expected && root_ok,
                format!(
                    "{name} w{i} n={n}: f(1) s^{} = ({}) s^{n} e(-1), level {} (expected {})",
                    n + 1,
                    id.scalar,
                    fmt_q(&id.level),
                    fmt_q(&expected)
                ),
            );
        }
        Err(e) => {
            c.check(false, format!("{name} w{i} n={n}: {e} (expected level {})", fmt_q(&expected)));
            if matches!(e, LieError::Proportionality(_)) {
                if let Ok(mu) = w_weight(g, i) {
                    let rs = g.root_system();
                    let r = rs.weight_to_root_lattice(&mu).expect("root lattice");
                    let top: Vec<i64> = r.iter().map(|x| x * (n as i64 + 1)).collect();
                    c.note(format!(
                        "a singular vector of weight {} in degree {} needs k = {} by the Sugawara relation",
                        Root(top.clone()),
                        2 * (n + 1),
                        fmt_q(&sugawara_level(rs, &top, 2 * (n + 1)))
                    ));
                }
            }
        }
    }
}

pub fn criterion_3(budget: &Budget) -> CriterionReport {
    let mut c = Checker::new();
    let d4 = lie("D4");
    for n in 0..=2 {
        check_power(&mut c, &d4, 1, n, q(n as i64 - 2), budget);
    }
    let e6 = lie("E6");
    for n in 0..=1 {
        check_power(&mut c, &e6, 1, n, q(n as i64 - 3), budget);
    }
    c.finish(3, "powers sigma(w_1)^(n+1), D4 and E6", Some(Duration::from_secs(600)))
}

pub fn criterion_4(budget: &Budget) -> CriterionReport {
    let mut c = Checker::new();
    for (name, l) in [("B3", 3), ("B4", 4)] {
        let g = lie(name);
        check_power(&mut c, &g, 1, 0, -q(l) + qf(3, 2), budget);
        for n in 0..=1 {
            check_power(&mut c, &g, 2, n, q(n as i64 - 2), budget);
        }
    }
    c.finish(4, "so7 and so9: w_1 at n=0, w_2 at n=0,1", None)
}

pub fn criterion_5(budget: &Budget) -> CriterionReport {
    let mut c = Checker::new();
    for name in ["C2", "C3"] {
        let g = lie(name);
        for n in 0..=1 {
            check_power(&mut c, &g, 1, n, q(n as i64) - qf(1, 2), budget);
        }
    }
    c.finish(5, "sp4 and sp6: w_1 at n=0,1", None)
}

pub fn criterion_6(budget: &Budget) -> CriterionReport {
    let mut c = Checker::new();
    let g = lie("D5");
    check_power(&mut c, &g, 1, 0, q(-3), budget);
    for n in 0..=1 {
        check_power(&mut c, &g, 2, n, q(n as i64 - 2), budget);
    }
    c.finish(6, "so10: w_1 at n=0, w_2 at n=0,1", None)
}

/// Support of the expected sp6 vector of weight theta0 in degree 2.
fn expected_support(g: &LieAlgebra) -> BTreeSet<PBWMonomial> {
    use crate::affine::Factor;
    let e = |s: &str| g.e(&root(s));
    let m = |fs: Vec<(usize, usize)>| {
        let mut v: Vec<Factor> = fs.into_iter().map(|(i, d)| Factor::new(i, d)).collect();
        v.sort();
        PBWMonomial(v)
    };
    let h1 = g.index(crate::chevalley::BasisIndex::Cartan(0));
    let f1 = g.f(&root("100"));
    [
        m(vec![(e("221"), 1), (f1, 1)]),
        m(vec![(h1, 1), (e("121"), 1)]),
        m(vec![(e("121"), 2)]),
        m(vec![(e("100"), 1), (e("021"), 1)]),
        m(vec![(e("110"), 1), (e("011"), 1)]),
        m(vec![(e("010"), 1), (e("111"), 1)]),
    ]
    .into_iter()
    .collect()
}

pub fn criterion_7(budget: &Budget) -> CriterionReport {
    let mut c = Checker::new();
    let g = lie("C3");
    let theta0 = root("121");
    let mu = g.root_system().root_to_weight(&theta0.0);
    let expected = qf(-9, 2);
    match solve_affine_singular_with(&g, &mu, 2, budget) {
        Ok(sols) => {
            let levels: Vec<String> = sols.iter().map(|s| s.level_string()).collect();
            c.note(format!("solutions found at levels {levels:?}"));
            let support = expected_support(&g);
            for s in &sols {
                let got: BTreeSet<PBWMonomial> = s.vector.iter().map(|(m, _)| m.clone()).collect();
                c.note(format!(
                    "level {}: support {} the expected one ({} monomials)",
                    s.level_string(),
                    if got == support { "matches" } else { "differs from" },
                    got.len()
                ));
            }
            let hit = sols
                .iter()
                .find(|s| s.level.as_ref() == Some(&expected));
            c.check(hit.is_some(), format!("solution at k = {}", fmt_q(&expected)));
            c.note(format!(
                "Sugawara relation for weight {theta0} in degree 2 forces k = {}",
                fmt_q(&sugawara_level(g.root_system(), &theta0.0, 2))
            ));
        }
        Err(e) => c.check(false, format!("solver: {e}")),
    }
    c.finish(7, "sp6 vector of weight theta0 in degree 2", None)
}

fn expect_levels(c: &mut Checker, name: &str, expected: &[(usize, &str, LevelPoly)]) {
    let g = lie(name);
    let summands = match g_natural(&g) {
        Ok(s) => s,
        Err(e) => return c.check(false, format!("{name}: {e}")),
    };
    let nonempty: Vec<usize> = summands.iter().filter(|s| s.dim() > 0).map(|s| s.index).collect();
    let want: Vec<usize> = expected.iter().map(|e| e.0).collect();
    c.check(nonempty == want, format!("{name}: summands {nonempty:?}"));
    for (i, ty, poly) in expected {
        let kind = summands.get(*i).map(|s| s.kind.to_string()).unwrap_or_default();
        match k_natural(&g, *i) {
            Ok(p) => c.check(
                p == *poly && kind == *ty,
                format!("{name}: g{i} = {kind}, k{i} = {p} (expected {ty}, {poly})"),
            ),
            Err(e) => c.check(false, format!("{name} g{i}: {e}")),
        }
    }
}

fn kp(a: Q, b: Q) -> LevelPoly {
    LevelPoly::affine(a, b)
}

/// Type of so_m as produced by the summand classifier.
fn so_type(m: usize) -> String {
    match m {
        3 => "A1".into(),
        5 => "B2".into(),
        6 => "A3".into(),
        _ if m % 2 == 1 => format!("B{}", m / 2),
        _ => format!("D{}", m / 2),
    }
}

pub fn criterion_8() -> CriterionReport {
    let mut c = Checker::new();
    let one = q(1);
    expect_levels(&mut c, "A2", &[(0, "center", kp(one.clone(), qf(3, 2)))]);
    for l in 3..=7usize {
        let sub = if l == 3 { "A1".to_string() } else { format!("A{}", l - 2) };
        expect_levels(
            &mut c,
            &format!("A{l}"),
            &[
                (0, "center", kp(one.clone(), qf(l as i64 + 1, 2))),
                (1, sub.as_str(), kp(one.clone(), q(1))),
            ],
        );
    }
    for l in 2..=6usize {
        let sub = if l == 2 { "A1".to_string() } else { format!("C{}", l - 1) };
        expect_levels(&mut c, &format!("C{l}"), &[(1, sub.as_str(), kp(one.clone(), qf(1, 2)))]);
    }
    expect_levels(
        &mut c,
        "B3",
        &[(1, "A1", kp(one.clone(), qf(3, 2))), (2, "A1", kp(q(2), q(4)))],
    );
    expect_levels(
        &mut c,
        "D4",
        &[
            (1, "A1", kp(one.clone(), q(2))),
            (2, "A1", kp(one.clone(), q(2))),
            (3, "A1", kp(one.clone(), q(2))),
        ],
    );
    for n in 9..=16usize {
        let name = if n % 2 == 1 { format!("B{}", n / 2) } else { format!("D{}", n / 2) };
        let sub = so_type(n - 4);
        expect_levels(
            &mut c,
            &name,
            &[
                (1, "A1", kp(one.clone(), qf(n as i64, 2) - q(2))),
                (2, sub.as_str(), kp(one.clone(), q(2))),
            ],
        );
    }
    for (name, ty, poly) in [
        ("G2", "A1", kp(q(3), q(5))),
        ("F4", "C3", kp(one.clone(), qf(5, 2))),
        ("E6", "A5", kp(one.clone(), q(3))),
        ("E7", "D6", kp(one.clone(), q(4))),
        ("E8", "E7", kp(one.clone(), q(6))),
    ] {
        expect_levels(&mut c, name, &[(1, ty, poly)]);
    }
    c.finish(8, "induced levels from the trace formula", None)
}

/// `-6 (k + h/6 + 1)((h/6 + 1) k - (h - 4) h / 6) / ((k + h)(h/6 + 1))`
fn deligne_factored(h: &Q, k: &Q) -> Q {
    let a = h / q(6) + q(1);
    -q(6) * (k + &a) * (&a * k - (h - q(4)) * h / q(6)) / ((k + h) * a)
}

pub fn criterion_9() -> CriterionReport {
    let mut c = Checker::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for name in ["A1", "A2", "G2", "D4", "F4", "E6", "E7", "E8"] {
        let r = rs(name);
        let h = q(r.h_dual());
        let d = deligne_level(&r).expect("Deligne type");
        let at = central_charge(&r, &d);
        c.check(at.as_ref().is_ok_and(|x| x.is_zero()), format!("{name}: c({}) = 0", fmt_q(&d)));
        let mut agree = 0;
        let mut tried = 0;
        while tried < 20 {
            let k = qf(rng.gen_range(-500..500), rng.gen_range(1..60));
            if k == -h.clone() {
                continue;
            }
            tried += 1;
            if central_charge(&r, &k).ok() == Some(deligne_factored(&h, &k)) {
                agree += 1;
            }
        }
        c.check(agree == 20, format!("{name}: factored form agrees at {agree}/20 random levels"));
    }
    c.finish(9, "central charge at and around the Deligne level", None)
}

pub fn criterion_10() -> CriterionReport {
    let mut c = Checker::new();
    let mut bad = Vec::new();
    let types = SimpleType::all_up_to_rank(8);
    for t in &types {
        let g = build_lie_algebra(&build_root_system(*t));
        let orbit = g.dim() - centralizer_dim(&g, &AlgElement::basis(g.f_theta()));
        if orbit as i64 != 2 * g.root_system().h_dual() - 2 {
            bad.push(format!("{t}: {orbit}"));
        }
    }
    c.check(bad.is_empty(), format!("dim O_min = 2h - 2 for {} types {bad:?}", types.len()));
    c.finish(10, "minimal orbit dimension", None)
}

pub fn criterion_11() -> CriterionReport {
    let mut c = Checker::new();
    for name in ["G2", "D4", "F4", "E6", "E7", "E8", "B3", "B4", "B5", "C2", "C3", "C4", "D5", "D6"] {
        match s2_decomposition_check(&lie(name)) {
            Ok(r) => c.check(r.holds(), r.to_string()),
            Err(e) => c.check(false, format!("{name}: {e}")),
        }
    }
    for (name, fw) in [("B3", vec![0, 0, 2]), ("B4", vec![0, 0, 0, 2]), ("B5", vec![0, 0, 0, 1, 0]), ("D5", vec![0, 0, 0, 1, 1]), ("D6", vec![0, 0, 0, 1, 0, 0])] {
        let w = w_weight(&lie(name), 2);
        c.check(
            w.as_ref().ok() == Some(&Weight::from_ints(&fw)),
            format!("{name}: theta + theta2 = {}", w.map(|x| x.fmt_fundamental()).unwrap_or_default()),
        );
    }
    c.finish(11, "S2 decomposition dimensions", None)
}

/// `(type, level, lisse, collapses)`; collapse is `None` where the criterion does not apply.
pub const CLASSIFICATION_CASES: [(&str, &str, Lisse, Option<bool>); 40] = [
    ("C2", "-1/2", Lisse::Yes, Some(true)),
    ("C2", "1/2", Lisse::Yes, Some(false)),
    ("C2", "-3/2", Lisse::No, Some(false)),
    ("C2", "0", Lisse::No, Some(false)),
    ("C3", "-1/2", Lisse::Yes, Some(true)),
    ("C3", "5/2", Lisse::Yes, Some(false)),
    ("C3", "1", Lisse::No, Some(false)),
    ("C4", "-1/2", Lisse::Yes, Some(true)),
    ("B2", "-1/2", Lisse::Yes, Some(true)),
    ("B3", "-3/2", Lisse::Yes, Some(false)),
    ("B3", "-5/2", Lisse::No, Some(false)),
    ("B3", "1/2", Lisse::Yes, Some(false)),
    ("B3", "-2", Lisse::No, Some(false)),
    ("B4", "-5/2", Lisse::No, Some(false)),
    ("B4", "0", Lisse::No, Some(false)),
    ("B5", "3", Lisse::No, Some(false)),
    ("D4", "-2", Lisse::Yes, Some(true)),
    ("D4", "-3", Lisse::No, Some(false)),
    ("D4", "0", Lisse::Yes, Some(false)),
    ("D4", "-3/2", Lisse::No, Some(false)),
    ("D5", "-2", Lisse::Yes, Some(false)),
    ("D5", "-3", Lisse::No, Some(false)),
    ("D6", "4", Lisse::Yes, Some(false)),
    ("F4", "-5/2", Lisse::Yes, Some(true)),
    ("F4", "-7/2", Lisse::No, Some(false)),
    ("F4", "-3/2", Lisse::Yes, Some(false)),
    ("F4", "-2", Lisse::No, Some(false)),
    ("E6", "-3", Lisse::Yes, Some(true)),
    ("E6", "-4", Lisse::No, Some(false)),
    ("E6", "-2", Lisse::Yes, Some(false)),
    ("E6", "-5/2", Lisse::No, Some(false)),
    ("E7", "-4", Lisse::Yes, Some(true)),
    ("E7", "-5", Lisse::No, Some(false)),
    ("E7", "0", Lisse::Yes, Some(false)),
    ("E8", "-6", Lisse::Yes, Some(true)),
    ("E8", "-7", Lisse::No, Some(false)),
    ("E8", "-11/2", Lisse::No, Some(false)),
    ("G2", "-5/3", Lisse::Yes, Some(true)),
    ("A2", "-3/2", Lisse::Yes, Some(true)),
    ("A1", "-1/2", Lisse::Yes, None),
];

pub fn criterion_12() -> CriterionReport {
    let mut c = Checker::new();
    let mut matched = 0;
    for (name, level, lisse, collapse) in CLASSIFICATION_CASES {
        let r = rs(name);
        let k = crate::rational::parse_q(level).expect("case level");
        let v = lisse_verdict(&r, &k);
        let col = collapse_verdict(&r, &k).ok();
        let ok = v.lisse == lisse && col == collapse && (col != Some(true) || v.lisse == Lisse::Yes);
        if ok {
            matched += 1;
        } else {
            c.check(false, format!("{name} at k = {level}: lisse {}, collapse {col:?}", v.lisse));
        }
    }
    c.check(matched == CLASSIFICATION_CASES.len(), format!("{matched}/{} cases match", CLASSIFICATION_CASES.len()));
    c.finish(12, "lisse and collapse verdicts", None)
}

fn jacobi_and_invariance(g: &LieAlgebra, a: usize, b: usize, cc: usize) -> bool {
    let (x, y, z) = (AlgElement::basis(a), AlgElement::basis(b), AlgElement::basis(cc));
    let j = g
        .bracket(&x, &g.bracket(&y, &z))
        .add(&g.bracket(&y, &g.bracket(&z, &x)))
        .add(&g.bracket(&z, &g.bracket(&x, &y)));
    j.is_zero() && normalized_form(g, &g.bracket(&x, &y), &z) == normalized_form(g, &x, &g.bracket(&y, &z))
}

fn random_monomial(rng: &mut ChaCha8Rng, dim: usize, max_factors: usize) -> PBWVector {
    use crate::affine::Factor;
    let n = rng.gen_range(0..=max_factors);
    let mut f: Vec<Factor> = (0..n)
        .map(|_| Factor::new(rng.gen_range(0..dim), rng.gen_range(1..=2)))
        .collect();
    f.sort();
    PBWVector::monomial(PBWMonomial(f), LevelPoly::constant(q(rng.gen_range(1..4))))
}

/// Deterministic sampled version of the property suites.
pub fn criterion_13() -> CriterionReport {
    let mut c = Checker::new();
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D3", "D4", "G2", "F4"] {
        let g = lie(name);
        let n = g.dim();
        let mut ok = true;
        for a in 0..n {
            for b in a + 1..n {
                for cc in b + 1..n {
                    ok &= jacobi_and_invariance(&g, a, b, cc);
                }
            }
        }
        c.check(ok, format!("{name}: Jacobi and invariance on all basis triples"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for name in ["E6", "E7", "E8"] {
        let g = lie(name);
        let n = g.dim();
        let ok = (0..100_000).all(|_| {
            let (a, b, cc) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            jacobi_and_invariance(&g, a, b, cc)
        });
        c.check(ok, format!("{name}: Jacobi and invariance on 100000 random triples"));
    }
    for name in ["A1", "A2", "C2"] {
        let g = lie(name);
        let mut vm = VacuumModule::new(&g);
        let mut ok = true;
        for a in 0..g.dim() {
            for b in a..g.dim() {
                let w = SymElement::monomial(a, b);
                let s = vm.sigma(&w);
                for x in 0..g.dim() {
                    ok &= vm.apply_mode(x, 0, &s) == vm.sigma(&ad_sym(&g, x, &w));
                }
            }
        }
        c.check(ok, format!("{name}: x(0) sigma(w) = sigma(x.w) for all basis x and monomials w"));

        let mut comm_ok = true;
        let mut assoc_ok = true;
        for _ in 0..200 {
            let v = random_monomial(&mut rng, g.dim(), 2);
            let (x, y) = (rng.gen_range(0..g.dim()), rng.gen_range(0..g.dim()));
            let (n, m) = (rng.gen_range(-2i64..=2), rng.gen_range(-2i64..=2));
            let xy = vm.apply_mode(y, m, &v);
            let lhs = vm.apply_mode(x, n, &xy);
            let yx = vm.apply_mode(x, n, &v);
            let lhs = lhs.sub(&vm.apply_mode(y, m, &yx));
            let mut rhs = PBWVector::zero();
            for (z, nz) in g.bracket_basis(x, y).to_vec() {
                rhs = rhs.add(&vm.apply_mode(z as usize, n + m, &v).scale(&LevelPoly::constant(q(nz))));
            }
            if n + m == 0 {
                let central = LevelPoly::affine(q(n) * g.form_basis(x, y), Q::zero());
                rhs = rhs.add(&v.scale(&central));
            }
            comm_ok &= lhs == rhs;

            let (u, w) = (random_monomial(&mut rng, g.dim(), 2), random_monomial(&mut rng, g.dim(), 2));
            let uv = vm.multiply(&u, &v);
            let vw = vm.multiply(&v, &w);
            assoc_ok &= vm.multiply(&uv, &w) == vm.multiply(&u, &vw);
        }
        c.check(comm_ok, format!("{name}: [x(n), y(m)] = [x,y](n+m) + n (x|y) delta k on 200 samples"));
        c.check(assoc_ok, format!("{name}: PBW product associative on 200 samples"));
    }
    c.finish(13, "property suites", None)
}

/// Runs every criterion, concurrently, returning reports in criterion order.
pub fn run_all(budget: &Budget) -> Vec<CriterionReport> {
    let b = *budget;
    let jobs: Vec<Box<dyn FnOnce() -> CriterionReport + Send>> = vec![
        Box::new(criterion_1),
        Box::new(criterion_2),
        Box::new(move || criterion_3(&b)),
        Box::new(move || criterion_4(&b)),
        Box::new(move || criterion_5(&b)),
        Box::new(move || criterion_6(&b)),
        Box::new(move || criterion_7(&b)),
        Box::new(criterion_8),
        Box::new(criterion_9),
        Box::new(criterion_10),
        Box::new(criterion_11),
        Box::new(criterion_12),
        Box::new(criterion_13),
    ];
    std::thread::scope(|s| {
        let handles: Vec<_> = jobs.into_iter().map(|job| s.spawn(job)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion thread panicked"))
            .collect()
    })
}
