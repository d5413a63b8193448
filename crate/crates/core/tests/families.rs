use hypharm_core::combinatorics::harmonic;
use hypharm_core::identities::{check_identity, derive_via_d0, families, family, lookup};
use hypharm_core::{rat, Dual, Rational};

#[test]
fn every_family_derives_on_its_grid() {
    let mut cells = 0;
    for fam in families() {
        for p in fam.param_grid(fam.param_max) {
            for n in 0..=fam.n_max {
                let d = fam.derive(&p, n).unwrap();
                assert!(d.value_match && d.deriv_match, "{} {p:?} n={n}", fam.id);
                cells += 1;
            }
        }
    }
    assert!(cells > 2000);
}

#[test]
fn families_hold_away_from_zero() {
    let points = [
        Dual::variable(rat(1, 2).unwrap()),
        Dual::variable(rat(-1, 3).unwrap()),
    ];
    for fam in families() {
        let n_max = fam.n_max.min(5);
        for p in fam.param_grid(fam.param_max) {
            for n in 0..=n_max {
                for x in &points {
                    let res = fam.check(&p, n, x).unwrap();
                    assert!(res.equal, "{} {p:?} n={n} x={x}", fam.id);
                }
                let r = fam.check(&p, n, &rat(2, 7).unwrap()).unwrap();
                assert!(r.equal, "{} {p:?} n={n}", fam.id);
            }
        }
    }
}

#[test]
fn derived_theorems_exist() {
    assert_eq!(families().len(), 12);
    for fam in families() {
        let thm = lookup(fam.derived_theorem).unwrap();
        assert_eq!(thm.params, fam.params, "{}", fam.id);
    }
}

/// `D0 Σ binom(n+μn,k) binom(x+λn+n,n-k) = Σ ... (H_{λn+n} - H_{λn+k})`, so
/// the derivative part splits into the value part times `H_{λn+n}` minus the
/// Theorem 1 left side.
#[test]
fn chu_derivative_splits_into_theorem_one() {
    for n in 0..=6i64 {
        for (l, m) in [(0, 0), (1, 2), (3, 1)] {
            let d = derive_via_d0("chu", &[l, m], n).unwrap();
            let thm = check_identity("thm1", &[l, m], n).unwrap();
            let h = harmonic(l * n + n).unwrap();
            assert_eq!(d.lhs.deriv(), &(d.lhs.value() * &h - &thm.lhs));
            assert_eq!(d.rhs.deriv(), &(d.rhs.value() * &h - &thm.rhs));
        }
    }
}

#[test]
fn documented_examples() {
    let d = derive_via_d0("chu", &[0, 0], 2).unwrap();
    assert_eq!(d.lhs.value(), &Rational::from(6));
    let d = derive_via_d0("chu", &[0, 0], 0).unwrap();
    assert!(d.value_match && d.deriv_match);
    assert!(family("wh_5").unwrap().derive(&[0, 0, 0, 0], 1).unwrap().deriv_match);
}
