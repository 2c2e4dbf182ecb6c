//! Worked examples reproduced as golden checks.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use schurlang_core::local_factors::{additivity_check, local_l_factor, UnramifiedParameter};
use schurlang_core::lr::{lr_coefficient, pieri_expand};
use schurlang_core::partition::dim_schur;
use schurlang_core::poly::Poly;
use schurlang_core::rep_ring::{decompose_sum, dimension_of, residual, virtual_difference, SchurSum};
use schurlang_core::scalar::{rational, real, Scalar};
use schurlang_core::vinberg::{
    a_type_cartan, cartan_matrix, center_character, gl2_sym_monoid_contains, gl2_sym_unit_iso,
    gl2_sym_unit_iso_inverse, mat2_det, mat2_scale, unit_group, weight_check, Mat2, Presentation, UnitElement,
};
use schurlang_core::young::{
    apply_to_basis, column_group, row_group, schur_image_dim, symmetrizer, GroupAlgebraElement, Permutation,
};
use schurlang_core::Partition;

use crate::report::Render;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl Render for VerifyReport {
    fn text(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        let mut s = String::new();
        for c in &self.checks {
            let pad = width - c.name.chars().count();
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{status}  {}{}  {}", c.name, " ".repeat(pad), c.detail);
        }
        let _ = writeln!(s, "{} passed, {} failed", self.passed, self.failed);
        s
    }
}

pub const C21: &str = "c_(2,1) = 1 + (12) - (13) - (132)";
pub const C21_IMAGE: &str = "c_(2,1) on v1⊗v2⊗v3";
pub const FOUR_TWO_PAIRS: &str = "S_(4,2)(V+W): listed pairs have multiplicity 1";
pub const FOUR_TWO_EXCLUDED: &str = "S_(4,2)(V+W): (1,1)x(4) and (4)x(1,1) absent";
pub const FOUR_TWO_COUNT: &str = "S_(4,2)(V+W): exactly 9 terms";
pub const FOUR_TWO_RESIDUAL: &str = "R_(4,2)(V,W): 7 tensor products";

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

fn q(n: i64, d: i64) -> Scalar {
    real(rational(n, d))
}

/// The nine pairs of the worked `S_(4,2)(V⊕W)` example.
pub fn listed_four_two_pairs() -> Vec<(Partition, Partition)> {
    let e = Partition::empty();
    vec![
        (p(&[4, 2]), e.clone()),
        (p(&[3, 2]), p(&[1])),
        (p(&[2, 2]), p(&[2])),
        (p(&[2, 1]), p(&[3])),
        (p(&[2, 1]), p(&[2, 1])),
        (p(&[3]), p(&[2, 1])),
        (p(&[2]), p(&[2, 2])),
        (p(&[1]), p(&[3, 2])),
        (e, p(&[4, 2])),
    ]
}

struct Checks {
    items: Vec<CheckResult>,
}

impl Checks {
    fn add(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckResult { name: name.to_string(), passed, detail: detail.into() });
    }

    fn eq<T: PartialEq>(&mut self, name: &str, got: T, want: T, show: impl Fn(&T) -> String) {
        let passed = got == want;
        let detail = if passed { show(&got) } else { format!("got {}, expected {}", show(&got), show(&want)) };
        self.add(name, passed, detail);
    }
}

fn perms(v: &Vec<Permutation>) -> String {
    let names: Vec<String> = v.iter().map(Permutation::to_string).collect();
    format!("{{{}}}", names.join(", "))
}

fn perm(m: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(m, cycles).expect("literal cycles")
}

fn sum_of(terms: &[(Vec<Partition>, i64)]) -> SchurSum {
    let mut s = SchurSum::zero(terms[0].0.len());
    for (f, m) in terms {
        s.add(f.clone(), *m);
    }
    s
}

fn random_parameter(rng: &mut ChaCha8Rng, n: usize, q_card: u64) -> UnramifiedParameter {
    let eig = (0..n)
        .map(|_| {
            let num = [-4, -3, -2, -1, 1, 2, 3, 4, 5][rng.gen_range(0..9)];
            q(num, rng.gen_range(1..=5))
        })
        .collect();
    UnramifiedParameter::new(eig, q_card).expect("nonzero eigenvalues")
}

fn random_mat(rng: &mut ChaCha8Rng) -> Mat2 {
    loop {
        let mut e = || q(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        let m = [[e(), e()], [e(), e()]];
        if !mat2_det(&m).is_zero() {
            return m;
        }
    }
}

fn young_checks(c: &mut Checks) {
    let m = 3;
    let mut want = GroupAlgebraElement::one(m);
    want.add_term(perm(m, &[&[1, 2]]), BigRational::one());
    want.add_term(perm(m, &[&[1, 3]]), -BigRational::one());
    want.add_term(perm(m, &[&[1, 3, 2]]), -BigRational::one());
    let got = symmetrizer(&p(&[2, 1]));
    c.add(C21, got == want, got.to_string());

    let image = apply_to_basis(&got, &[0, 1, 2]);
    let one = BigRational::one;
    let want_image = vec![
        (vec![0, 1, 2], one()),
        (vec![1, 0, 2], one()),
        (vec![2, 0, 1], -one()),
        (vec![2, 1, 0], -one()),
    ];
    c.add(
        C21_IMAGE,
        image == want_image,
        "v1⊗v2⊗v3 + v2⊗v1⊗v3 - v3⊗v2⊗v1 - v3⊗v1⊗v2",
    );

    c.eq("row group of (2,1)", row_group(&p(&[2, 1])), vec![Permutation::identity(3), perm(3, &[&[1, 2]])], perms);
    c.eq("column group of (2,1)", column_group(&p(&[2, 1])), vec![Permutation::identity(3), perm(3, &[&[1, 3]])], perms);
    let all: Vec<_> = schurlang_core::young::all_permutations(3);
    c.eq("row group of (3) is S_3", row_group(&p(&[3])).len(), all.len(), |n| format!("{n} elements"));
    c.eq("row group of (1,1,1) is trivial", row_group(&p(&[1, 1, 1])), vec![Permutation::identity(3)], perms);
    let c3 = symmetrizer(&p(&[3]));
    let sum_all = all.iter().all(|g| c3.coefficient(g).is_one()) && c3.len() == 6;
    c.add("c_(3) is the sum of all e_g", sum_all, c3.to_string());
    c.eq("dim Sym^2(C^2) via tensor image", schur_image_dim(&p(&[2]), 2).ok(), Some(3), |d| format!("{d:?}"));
}

fn dimension_checks(c: &mut Checks) {
    let ok = (1..=8u64).all(|n| {
        dim_schur(&p(&[1, 1]), n as usize) == n * (n - 1) / 2 && dim_schur(&p(&[2]), n as usize) == n * (n + 1) / 2
    });
    c.add("dim Λ² = n(n-1)/2, dim Sym² = n(n+1)/2", ok, "n = 1..8; n = 4 gives 6 and 10");
    let coords_ok = (0..=6u32).all(|m| p(&[m]).to_fundamental(2).map(|f| f.a) == Ok(vec![m]));
    c.add("(m) for GL_2 has fundamental coordinates (m)", coords_ok, "m = 0..6");
}

fn lr_checks(c: &mut Checks) {
    c.eq("N((2,1),(2,1),(4,2)) = 1", lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[4, 2])), 1, u64::to_string);
    c.eq("N((1,1),(4),(4,2)) = 0", lr_coefficient(&p(&[1, 1]), &p(&[4]), &p(&[4, 2])), 0, u64::to_string);
    let e = Partition::empty();
    let lam = p(&[3, 1]);
    let units = [
        lr_coefficient(&lam, &e, &lam),
        lr_coefficient(&e, &lam, &lam),
        lr_coefficient(&lam, &e, &p(&[4])),
    ];
    c.eq("unit laws N(λ,0,λ) = N(0,λ,λ) = 1", units, [1, 1, 0], |u| format!("{u:?}"));
    let pieri = pieri_expand(&p(&[1, 1]), 4, None);
    c.add(
        "(4,2) is not a (4)-expansion of (1,1)",
        !pieri.contains(&p(&[4, 2])),
        format!("{} expansions", pieri.len()),
    );
}

fn decomposition_checks(c: &mut Checks) {
    let e = Partition::empty;
    let (one, wedge2, wedge3) = (p(&[1]), p(&[1, 1]), p(&[1, 1, 1]));
    let want = sum_of(&[
        (vec![wedge2.clone(), e()], 1),
        (vec![e(), wedge2.clone()], 1),
        (vec![one.clone(), one.clone()], 1),
    ]);
    c.eq("Λ²(V+W) = Λ²V + Λ²W + V⊗W", decompose_sum(&wedge2, 2), want, SchurSum::to_string);
    let want = sum_of(&[
        (vec![wedge3.clone(), e()], 1),
        (vec![wedge2.clone(), one.clone()], 1),
        (vec![one.clone(), wedge2.clone()], 1),
        (vec![e(), wedge3.clone()], 1),
    ]);
    c.eq("Λ³(V+W) has the four summands", decompose_sum(&wedge3, 2), want, SchurSum::to_string);

    let s = decompose_sum(&p(&[4, 2]), 2);
    let pairs = listed_four_two_pairs();
    let listed_ok = pairs.iter().all(|(a, b)| s.multiplicity(&[a.clone(), b.clone()]) == 1);
    c.add(FOUR_TWO_PAIRS, listed_ok, format!("{} pairs", pairs.len()));
    let excluded = [s.multiplicity(&[wedge2.clone(), p(&[4])]), s.multiplicity(&[p(&[4]), wedge2.clone()])];
    c.eq(FOUR_TWO_EXCLUDED, excluded, [0, 0], |m| format!("multiplicities {m:?}"));
    let extra: Vec<String> = s
        .terms()
        .filter(|(f, _)| !pairs.iter().any(|(a, b)| f[0] == *a && f[1] == *b))
        .map(|(f, _)| format!("{}x{}", f[0], f[1]))
        .collect();
    c.add(
        FOUR_TWO_COUNT,
        s.len() == 9,
        format!(
            "{} terms, dimension {} at ranks (2,2) vs dim S_(4,2)(C^4) = {}; also present: {}",
            s.len(),
            dimension_of(&s, &[2, 2]).unwrap_or(-1),
            dim_schur(&p(&[4, 2]), 4),
            extra.join(" ")
        ),
    );
    let r = residual(&p(&[4, 2]), 2);
    c.add(FOUR_TWO_RESIDUAL, r.len() == 7, format!("{} terms", r.len()));

    c.eq(
        "R_(1,1)(V,W) = V⊗W",
        residual(&wedge2, 2),
        sum_of(&[(vec![one.clone(), one.clone()], 1)]),
        SchurSum::to_string,
    );
    c.eq(
        "R_(1,1,1)(V,W) = Λ²V⊗W + V⊗Λ²W",
        residual(&wedge3, 2),
        sum_of(&[(vec![wedge2.clone(), one.clone()], 1), (vec![one.clone(), wedge2.clone()], 1)]),
        SchurSum::to_string,
    );

    // ρ_2⊗ρ_2 enters as Sym² + Λ² on the second slot
    let literal = sum_of(&[
        (vec![wedge2.clone(), e()], 1),
        (vec![e(), wedge2.clone()], -1),
        (vec![one.clone(), one.clone()], -1),
        (vec![e(), p(&[2])], 1),
        (vec![e(), wedge2.clone()], 1),
    ]);
    let v = virtual_difference(&wedge2);
    let dim_ok = v.as_ref().map(|v| dimension_of(v, &[3, 1]).ok() == Some(1)).unwrap_or(false);
    c.add(
        "Λ²(V-W) = Λ²V - Λ²W - V⊗W + W⊗W",
        v.as_ref() == Ok(&literal) && dim_ok,
        "dimension 1 at ranks (3,1)",
    );
}

fn local_factor_checks(c: &mut Checks, rng: &mut ChaCha8Rng) {
    let ones = UnramifiedParameter::new(vec![q(1, 1); 4], 3).expect("valid");
    let want = (0..6).fold(Poly::one(), |acc, _| &acc * &Poly::one_minus(q(1, 1)));
    c.eq("L(Λ², identity of GL_4) = (1-t)^-6", local_l_factor(&ones, &p(&[1, 1])).reciprocal, want, |r| {
        format!("1/L = {}", crate::poly_text(r.coeffs()))
    });

    for (name, nu) in [("L-factor additivity for Λ²", p(&[1, 1])), ("L-factor additivity for Λ³", p(&[1, 1, 1]))] {
        let mut ok = true;
        for _ in 0..10 {
            let (n1, n2) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let a = random_parameter(rng, n1, 5);
            let b = random_parameter(rng, n2, 5);
            ok &= additivity_check(&a, &b, &nu) == Ok(true);
        }
        c.add(name, ok, "10 random parameter pairs");
    }
}

fn vinberg_checks(c: &mut Checks, rng: &mut ChaCha8Rng) {
    c.eq(
        "center acts on Λ² by ξ -> ξ²",
        center_character(&p(&[1, 1]), 4).map(|x| x.exponent),
        Ok(2),
        |e| format!("{e:?}"),
    );
    let gl = |lam: &Partition, n: usize| unit_group(lam, n).map(|d| d.presentation == Presentation::GlN);
    let std_ok = (1..=8).all(|n| {
        unit_group(&p(&[1]), n).map(|d| d.kernel_order == 1 && d.presentation == Presentation::GlN) == Ok(true)
    });
    c.add("standard representation: G = GL_n", std_ok, "n = 1..8");
    let odd_ok = [3, 5, 7].iter().all(|&n| gl(&p(&[1, 1]), n) == Ok(true) && gl(&p(&[2]), n) == Ok(true));
    c.add("Λ², Sym², n odd: G = GL_n", odd_ok, "n = 3, 5, 7");
    let even_ok = [2, 4, 6, 8].iter().all(|&n| {
        [p(&[1, 1]), p(&[2])].iter().all(|lam| {
            unit_group(lam, n).map(|d| d.kernel_order == 2 && d.presentation != Presentation::GlN) == Ok(true)
        })
    });
    c.add("Λ², Sym², n even: kernel {±1}", even_ok, "n = 2, 4, 6, 8");
    let cube_ok = [3, 6, 9].iter().all(|&n| unit_group(&p(&[1, 1, 1]), n).map(|d| d.kernel_order) == Ok(3))
        && [4, 5, 7].iter().all(|&n| gl(&p(&[1, 1, 1]), n) == Ok(true));
    c.add("Λ³: kernel of order 3 iff 3 | n", cube_ok, "n = 3..9");
    let prime_ok = [2u32, 3, 5, 7].iter().all(|&pr| {
        (pr as usize..=12).all(|n| {
            let coprime = n % pr as usize != 0;
            gl(&p(&[pr]), n) == Ok(coprime) && gl(&Partition::column(pr as usize), n) == Ok(coprime)
        })
    });
    c.add("Sym^p, Λ^p, p prime: G = GL_n iff p ∤ n", prime_ok, "p = 2, 3, 5, 7");

    let a = q(5, 3);
    let g1 = [[q(2, 1), q(1, 1)], [q(1, 1), q(1, 1)]];
    let img = gl2_sym_unit_iso(2, &UnitElement { a: a.clone(), g: g1.clone() });
    let ok2 = img.as_ref().is_ok_and(|e| e.m == mat2_scale(&g1, &a) && gl2_sym_monoid_contains(e));
    c.add("n = 2: (a, g1) -> (a, a·g1)", ok2, "det(a·g1) = a²");
    let g = [[q(2, 1), q(1, 1)], [q(0, 1), q(3, 1)]];
    let d = mat2_det(&g);
    let img = gl2_sym_unit_iso(3, &UnitElement { a: d.clone(), g: g.clone() });
    let ok3 = img.as_ref().is_ok_and(|e| e.m == mat2_scale(&g, &d) && gl2_sym_monoid_contains(e));
    c.add("n = 3: g -> (det g, det g·g)", ok3, "det(d·g) = d³");
    let img = gl2_sym_unit_iso(1, &UnitElement { a: d.clone(), g: g.clone() });
    c.add("n = 1: G_1 = GL_2", img.as_ref().is_ok_and(|e| e.m == g && e.a == d), "identity on GL_2");

    let mut hom_ok = true;
    for n in 1..=6u32 {
        for _ in 0..10 {
            let unit = |rng: &mut ChaCha8Rng| {
                let m = random_mat(rng);
                let det = mat2_det(&m);
                if n % 2 == 1 {
                    UnitElement { a: det, g: m }
                } else {
                    let g = [[m[0][0].clone() / det.clone(), m[0][1].clone() / det], m[1].clone()];
                    UnitElement { a: q(rng.gen_range(1..=7), rng.gen_range(1..=4)), g }
                }
            };
            let (x, y) = (unit(rng), unit(rng));
            let ok = (|| {
                let fx = gl2_sym_unit_iso(n, &x).ok()?;
                let fy = gl2_sym_unit_iso(n, &y).ok()?;
                let fxy = gl2_sym_unit_iso(n, &x.mul(&y)).ok()?;
                Some(fxy == fx.mul(&fy).ok()? && gl2_sym_unit_iso_inverse(&fx).ok()? == x)
            })();
            hom_ok &= ok == Some(true);
        }
    }
    c.add("G_n -> M_n is a homomorphism with inverse", hom_ok, "n = 1..6, both parities");

    let wc = (1..=6u32).all(|m| {
        cartan_matrix(&a_type_cartan(1), &[m as i64])
            .and_then(|cm| weight_check(&cm, &p(&[m]), 2))
            .unwrap_or(false)
    });
    c.add("Sym^m of GL_2: -c_12 = m", wc, "m = 1..6");
}

pub fn run_all(seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Checks { items: Vec::new() };
    young_checks(&mut c);
    dimension_checks(&mut c);
    lr_checks(&mut c);
    decomposition_checks(&mut c);
    local_factor_checks(&mut c, &mut rng);
    vinberg_checks(&mut c, &mut rng);
    let passed = c.items.iter().filter(|x| x.passed).count();
    let failed = c.items.len() - passed;
    VerifyReport { seed, checks: c.items, passed, failed }
}
