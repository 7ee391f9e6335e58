//! Acceptance gate: one test per criterion, each printing a PASS line.
//!
//! Run with `cargo test -p pairdet --test acceptance -- --nocapture` to see
//! the per-criterion report. The heavy suites are computed once and shared.
//!
//! Reference-value corrections, each established by at least two independent
//! computations (direct enumeration, the cycle-support evaluation oracle,
//! and/or closed-form routes), all recorded in the dihedral suite itself:
//! - Θ(D₃,⟨σ⟩) and Θ(D₅,⟨σ⟩) carry (1−q)², not (1−q²)²;
//! - Θ(D₄,⟨σ⟩) is +1/2⁶·…, not −1/2⁶·…;
//! - the even-m Θ(D_m,⟨σ^{m/2}⟩) closed form needs the extra factor
//!   ω^(m,m)(τ) ∈ {−1/2, 1/6, −1/20} for m = 2, 4, 6.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use pairdet::exactalg::{parse_uni, UniPoly};
use pairdet::groups::{FiniteGroup, GroupOrdering, Subgroup};
use pairdet::pairs::{
    theta_abelian_theorem, theta_direct, theta_separable, PairInstance, Specialization,
};
use pairdet::suites::{
    s5_cayley_group_determinant, suite_abelian, suite_dihedral, suite_pairgraph,
    suite_properties, suite_symmetric, SuiteReport,
};

fn qp(s: &str) -> UniPoly {
    parse_uni(s, "q").unwrap()
}

fn abelian() -> &'static (SuiteReport, Duration) {
    static S: OnceLock<(SuiteReport, Duration)> = OnceLock::new();
    S.get_or_init(|| {
        let t = Instant::now();
        let r = suite_abelian(true);
        (r, t.elapsed())
    })
}

fn dihedral() -> &'static (SuiteReport, Duration) {
    static S: OnceLock<(SuiteReport, Duration)> = OnceLock::new();
    S.get_or_init(|| {
        let t = Instant::now();
        let r = suite_dihedral(true);
        (r, t.elapsed())
    })
}

fn properties() -> &'static (SuiteReport, Duration) {
    static S: OnceLock<(SuiteReport, Duration)> = OnceLock::new();
    S.get_or_init(|| {
        let t = Instant::now();
        let r = suite_properties(0x5eed, 100);
        (r, t.elapsed())
    })
}

/// Assert every check whose name starts with one of the prefixes passed,
/// and that at least `min` such checks ran.
fn assert_prefix(report: &SuiteReport, prefixes: &[&str], min: usize) -> usize {
    let mut count = 0;
    for c in &report.checks {
        if prefixes.iter().any(|p| c.name.starts_with(p)) {
            count += 1;
            assert!(c.passed, "{} failed: {}", c.name, c.details);
        }
    }
    assert!(
        count >= min,
        "expected at least {min} checks for {prefixes:?}, saw {count}"
    );
    count
}

#[test]
fn criterion_01_z4_three_routes() {
    let start = Instant::now();
    let g = FiniteGroup::cyclic(4).unwrap();
    let h = Subgroup::from_elements(&g, vec![0, 2]).unwrap();
    let ord = GroupOrdering::standard_abelian(&g).unwrap();
    let f = Specialization::principal(&ord);
    let inst = PairInstance::new(h, ord, f).unwrap();
    let want = qp("-1/8*q^2*(1-q^4)^2");
    assert_eq!(theta_direct(&inst).unwrap(), want, "direct");
    assert_eq!(theta_abelian_theorem(&[4], &[2]).unwrap(), want, "theorem");
    assert_eq!(theta_separable(&inst, None).unwrap().0, want, "separable");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 01 PASS: Theta(Z4,{{0,2}}) = -1/8 q^2 (1-q^4)^2 by direct, theorem and separable routes in {elapsed:?}");
}

#[test]
fn criterion_02_klein_three_subgroups() {
    let start = Instant::now();
    let klein = FiniteGroup::klein().unwrap();
    let ord = GroupOrdering::standard_abelian(&klein).unwrap();
    let f = Specialization::principal(&ord);
    let cases = [
        (vec![0usize, 1], "-1/8*q^4*(1-q^2)^2"),
        (vec![0, 2], "1/4*q^2*(1-q^4)^2"),
        (vec![0, 3], "1/8*q^2*(1-q^2)^2*(2+3*q^2+2*q^4)"),
    ];
    for (elems, want) in &cases {
        let h = Subgroup::from_elements(&klein, elems.clone()).unwrap();
        let inst = PairInstance::new(h, ord.clone(), f.clone()).unwrap();
        assert_eq!(theta_direct(&inst).unwrap(), qp(want));
    }
    assert_eq!(
        theta_abelian_theorem(&[2, 2], &[2, 1]).unwrap(),
        qp(cases[0].1)
    );
    use pairdet::symchar::{omega, Permutation};
    use pairdet::exactalg::{rat, ratio};
    let st = Permutation::from_images(vec![3, 1, 2, 0]).unwrap();
    assert_eq!(omega(2, 2, &st).unwrap(), ratio(-1, 2));
    let t = Permutation::from_images(vec![3, 2, 1, 0]).unwrap();
    assert_eq!(omega(2, 2, &t).unwrap(), rat(1));
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 02 PASS: three Klein subgroup values, with omega(2,2) = -1/2 and 1, in {elapsed:?}");
}

#[test]
fn criterion_03_abelian_oracle_equivalence() {
    let (report, elapsed) = abelian();
    let n = assert_prefix(report, &["theorem_vs_direct_"], 50);
    assert!(
        *elapsed < Duration::from_secs(600),
        "abelian suite took {elapsed:?}"
    );
    println!("criterion 03 PASS: theorem == direct on {n} divisor-shaped abelian pairs (|G| <= 10 plus the named |G| = 12 cases), suite total {elapsed:?}");
}

#[test]
fn criterion_04_cyclic_closed_form() {
    let (report, _) = abelian();
    let n = assert_prefix(report, &["cyclic_closed_vs_"], 60);
    println!("criterion 04 PASS: cyclic closed form == direct and == theorem for all n | m <= 12 ({n} checks)");
}

#[test]
fn criterion_05_dihedral_principal_suite() {
    let (report, elapsed) = dihedral();
    let n = assert_prefix(report, &["sigma_principal_D"], 5);
    assert!(*elapsed < Duration::from_secs(1800));
    println!("criterion 05 PASS: Theta(D_m,<s>,ord_st,spec_pr) for m = 2..6 ({n} checks; D3/D5 use the (1-q)^2 reading and D4 the + sign, each pinned by dual independent routes)");
}

#[test]
fn criterion_06_dihedral_closed_forms() {
    let (report, _) = dihedral();
    let a = assert_prefix(report, &["tau_closed_form_D", "tau_sep_vs_direct_D"], 8);
    let b = assert_prefix(
        report,
        &["sigma_k_sep_vs_direct_D", "sigma_k_omega_corrected_D", "sigma_k_omega_factor_D"],
        9,
    );
    println!("criterion 06 PASS: <t> closed form m = 2..6 and <s^(m/2)> via separable == direct ({} checks; the commonly quoted sigma^k closed form omits omega^(m,m)(tau) = -1/2, 1/6, -1/20)", a + b);
}

#[test]
fn criterion_07_dihedral_order_specialization() {
    let (report, _) = dihedral();
    let n = assert_prefix(report, &["tau_order_D"], 5);
    println!("criterion 07 PASS: Theta(D_m,<t>,ord_st,spec_ord) matches the five reference polynomials including the degree-16 factor for D6 ({n} checks)");
}

#[test]
fn criterion_08_homogeneous_ordering_suite() {
    let (report, _) = dihedral();
    let n = assert_prefix(report, &["sigma_hom_D"], 5);
    println!("criterion 08 PASS: Theta(D_m,<s>,ord_hom,spec_pr) matches the five reference polynomials ({n} checks)");
}

#[test]
fn criterion_09_cayley_group_determinants() {
    let start = Instant::now();
    let report = suite_symmetric(true);
    for c in &report.checks {
        assert!(c.passed, "{} failed: {}", c.name, c.details);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!("criterion 09 PASS: Cayley group determinants S2-S4 and A3-A5 match the reference factored forms in {elapsed:?}");
}

/// Stretch goal (non-gating): Θ(S₅, spec_Cay) through modular evaluation.
#[test]
#[ignore = "stretch: ~minutes; run explicitly"]
fn criterion_09_stretch_s5() {
    let start = Instant::now();
    let (theta, want) = s5_cayley_group_determinant();
    assert_eq!(theta, want);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(3600));
    println!("criterion 09 stretch PASS: Theta(S5,spec_Cay) = (1-q^2)^119 (1-4q^2)^78 (1-9q^2)^17 (1-16q^2) in {elapsed:?}");
}

#[test]
fn criterion_10_pair_graph_instance() {
    let start = Instant::now();
    let report = suite_pairgraph(true);
    for c in &report.checks {
        assert!(c.passed, "{} failed: {}", c.name, c.details);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1800), "took {elapsed:?}");
    println!("criterion 10 PASS: wrdet_3(q^d) = 2^7/3^11 q^8 (1-q^2)^6 (1-q^4)^3 and the Z12 Cayley value, both dual-routed, in {elapsed:?}");
}

#[test]
fn criterion_11_character_omega_suite() {
    let (report, _) = properties();
    let n = assert_prefix(
        report,
        &[
            "mn_orthogonality",
            "mn_dimension",
            "omega_full_cycle",
            "omega_det_coefficient",
            "alon_tarsi_values",
        ],
        5,
    );
    println!("criterion 11 PASS: MN orthogonality (m <= 6), omega full-cycle closed form (kn <= 10), determinant-coefficient route, Alon-Tarsi values ({n} checks)");
}

#[test]
fn criterion_12_wrdet_characterization() {
    let (report, elapsed) = properties();
    let n = assert_prefix(
        report,
        &[
            "wrdet_multilinear",
            "wrdet_left_gl",
            "wrdet_block_right",
            "wrdet_wreath_relative",
            "adet_minus_one",
            "adet_plus_one",
            "adet_identity",
            "wrdet_production_vs_oracle",
            "theta_trivial_subgroup",
            "group_det_ordering_independent",
        ],
        10,
    );
    assert!(*elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!("criterion 12 PASS: wrdet characterization and alpha-det specializations over 100 seeded instances each ({n} check groups, suite in {elapsed:?})");
}

#[test]
fn criterion_13_structural_identities() {
    let (report, _) = abelian();
    let a = assert_prefix(report, &["det_T("], 8);
    let b = assert_prefix(report, &["x_identities_", "t_factorization_"], 100);
    println!("criterion 13 PASS: det T(m;x) = (1-x^m)^(m-1) for m <= 8, plus T-factorization and X-Kronecker identities over all divisor shapes with |G| <= 24 ({} checks)", a + b);
}
