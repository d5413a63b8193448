use hypharm_core::combinatorics::{binomial_int, harmonic, HarmonicCache};
use hypharm_core::identities::{
    check_identity, entry4_closed, lookup, registry, xi, xi_via_omega, RecordKind,
};
use hypharm_core::{rat, Error, Rational};

fn grid_cells(id: &str) -> Vec<(Vec<i64>, i64)> {
    let rec = lookup(id).unwrap();
    let mut out = Vec::new();
    for p in rec.param_grid(rec.param_max) {
        for n in rec.n_min..=rec.n_max {
            out.push((p.clone(), n));
        }
    }
    out
}

#[test]
fn theorems_hold_on_their_grids() {
    let cache = HarmonicCache::new();
    for rec in registry().into_iter().filter(|r| r.kind == RecordKind::Theorem) {
        let mut cells = 0;
        for (p, n) in grid_cells(rec.id) {
            let res = rec.check(&cache, &p, n).unwrap();
            assert!(res.equal, "{} {:?} n={n}: {} != {}", rec.id, p, res.lhs, res.rhs);
            cells += 1;
        }
        assert!(cells > 0, "{}", rec.id);
    }
}

#[test]
fn printed_table_one_fails_only_at_known_misprints() {
    let cache = HarmonicCache::new();
    let mut failing = Vec::new();
    for rec in registry().into_iter().filter(|r| r.kind == RecordKind::TableOne) {
        for n in rec.n_min..=8 {
            if !rec.check(&cache, &[], n).unwrap().equal {
                failing.push(rec.id);
                break;
            }
        }
    }
    assert_eq!(failing, ["t1e5", "t1e6", "t1e7", "t1e22"]);
}

#[test]
fn errata_readings_hold() {
    let cache = HarmonicCache::new();
    for id in ["t1e5", "t1e6", "t1e7", "t1e22"] {
        let rec = lookup(id).unwrap();
        for n in 0..=8 {
            let res = rec.check_erratum(&cache, &[], n).unwrap().unwrap();
            assert!(res.equal, "{id} n={n}");
        }
    }
}

#[test]
fn misprint_factor_is_binom_3n_n() {
    // Printed left side over corrected left side.
    let cache = HarmonicCache::new();
    for id in ["t1e5", "t1e6", "t1e7"] {
        let rec = lookup(id).unwrap();
        for n in 1..=6 {
            let printed = rec.lhs_value(&cache, &[], n).unwrap();
            let fixed = rec.check_erratum(&cache, &[], n).unwrap().unwrap().lhs;
            if fixed.is_zero() {
                continue;
            }
            assert_eq!(printed.checked_div(&fixed).unwrap(), binomial_int(3 * n, n), "{id} {n}");
        }
    }
}

#[test]
fn table_two_holds() {
    let cache = HarmonicCache::new();
    for rec in registry().into_iter().filter(|r| r.kind == RecordKind::TableTwo) {
        for n in rec.n_min..=6 {
            let res = rec.check(&cache, &[], n).unwrap();
            assert!(res.equal, "{} n={n}: {} != {}", rec.id, res.lhs, res.rhs);
        }
    }
}

#[test]
fn auxiliary_records_hold() {
    for id in ["wench", "wench_lam0", "t2e4_closed"] {
        for (p, n) in grid_cells(id) {
            assert!(check_identity(id, &p, n).unwrap().equal, "{id} {p:?} {n}");
        }
    }
}

#[test]
fn specialisation_chain() {
    for n in 0..=8 {
        for lam in 0..=3 {
            let t1 = check_identity("thm1", &[lam, 0], n).unwrap();
            let w = check_identity("wench", &[lam], n).unwrap();
            assert_eq!(t1.lhs, w.lhs);
            assert_eq!(t1.rhs, w.rhs);
        }
        let w = check_identity("wench", &[0], n).unwrap();
        let w0 = check_identity("wench_lam0", &[], n).unwrap();
        assert_eq!(w.lhs, w0.lhs);
        assert_eq!(w.rhs, w0.rhs);
    }
}

#[test]
fn xi_matches_table_left_sides() {
    for n in 0..=8u32 {
        let ni = i64::from(n);
        for (lambda, id) in [(1, "t1e8"), (2, "t1e9"), (3, "t1e16"), (4, "t1e17")] {
            if id == "t1e9" && n == 0 {
                continue;
            }
            assert_eq!(xi(lambda, n).unwrap(), check_identity(id, &[], ni).unwrap().lhs);
        }
        if n <= 6 {
            for (lambda, id) in [(5, "t2e16"), (6, "t2e17")] {
                assert_eq!(xi(lambda, n).unwrap(), check_identity(id, &[], ni).unwrap().lhs);
            }
        }
    }
}

#[test]
fn xi_from_omega() {
    for lambda in 1..=6 {
        for n in 0..=8 {
            assert_eq!(xi_via_omega(lambda, n).unwrap(), xi(lambda, n).unwrap(), "{lambda} {n}");
        }
    }
}

/// Hand-written closed values of `Ξ_λ(n)` for `λ = 1..4`.
#[test]
fn xi_closed_values() {
    for n in 0..=8u32 {
        let ni = i64::from(n);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(xi(1, n).unwrap(), Rational::from(1));
        assert_eq!(xi(2, n).unwrap(), Rational::from(i64::from(n == 0)));
        assert_eq!(xi(3, n).unwrap(), Rational::from(sign));
        assert_eq!(xi(4, n).unwrap(), Rational::from(sign) * binomial_int(2 * ni, ni));
    }
}

#[test]
fn entry4_closed_form_matches_sum() {
    for n in 0..=8u32 {
        let lhs = check_identity("t2e4", &[], i64::from(n)).unwrap().lhs;
        assert_eq!(lhs, entry4_closed(n), "n={n}");
    }
    assert_eq!(entry4_closed(2), rat(-1, 6).unwrap());
    // m = 2: (6!/2!^3) / binom(8,4)^2 = 90/4900
    assert_eq!(entry4_closed(4), rat(9, 490).unwrap());
}

/// Values computed independently with Python `fractions`.
#[test]
fn frozen_values() {
    assert_eq!(check_identity("thm1", &[0, 0], 1).unwrap().lhs, Rational::from(1));
    assert_eq!(
        check_identity("t1e1", &[], 2).unwrap().rhs,
        Rational::from(2 * 36) * (harmonic(4).unwrap() - harmonic(2).unwrap())
    );
    assert_eq!(check_identity("t1e20", &[], 3).unwrap().rhs, rat(25, 3).unwrap());
    assert_eq!(check_identity("t1e25", &[], 2).unwrap().rhs, rat(9, 2).unwrap());
}

#[test]
fn domain_errors_name_the_constraint() {
    let err = check_identity("thm3", &[2, 1, 0], 1).unwrap_err();
    assert_eq!(
        err,
        Error::Domain {
            constraint: "lambda > 1 + mu + nu".into()
        }
    );
    let err = check_identity("t2e14", &[], 0).unwrap_err();
    assert_eq!(err, Error::Domain { constraint: "n > 0".into() });
}
