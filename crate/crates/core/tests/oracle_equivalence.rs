//! Closed-form combinatorics checked against exact matrix models.

use std::collections::BTreeSet;

use nilorbit::complex_orbits::{
    centralizer_dim, enumerate_orbits, gen_descent_complex, theta_lift_complex, ComplexOrbit,
};
use nilorbit::diagrams::{EpsSign, Partition};
use nilorbit::oracle::{
    centralizer_dim_oracle, k_orbit_models, round_trip_failures, LiftSampler, OracleConfig,
};
use nilorbit::real_orbits::{enumerate_k_orbits, GroupFamily, RealForm, SignedDiagram, SpaceKind};

const EPS: [EpsSign; 2] = [EpsSign::Plus, EpsSign::Minus];

fn forms_of_rank_at_most(rank: usize) -> Vec<RealForm> {
    let mut out = Vec::new();
    for fam in [
        GroupFamily::RealOrthogonal,
        GroupFamily::QuaternionicOrthogonal,
        GroupFamily::QuaternionicSymplectic,
        GroupFamily::RealSymplectic,
    ] {
        let kind = SpaceKind::of_family(fam);
        let top = if fam == GroupFamily::RealOrthogonal { 2 * rank + 1 } else { 2 * rank };
        for n in 1..=top {
            out.extend(RealForm::all_of(kind, n));
        }
    }
    out
}

#[test]
fn jordan_models_round_trip_up_to_ten() {
    for n in 0..=10 {
        for eps in EPS {
            assert_eq!(round_trip_failures(eps, n), Vec::<Partition>::new(), "eps {eps} size {n}");
        }
    }
}

#[test]
fn k_orbits_match_matrix_models_rank_three() {
    let cfg = OracleConfig::default();
    for form in forms_of_rank_at_most(3) {
        let formula: BTreeSet<SignedDiagram> = enumerate_orbits(form.kind.eps, form.dim())
            .iter()
            .flat_map(|o| enumerate_k_orbits(&form, o).unwrap())
            .map(|k| k.diagram)
            .collect();
        let models = k_orbit_models(&form, 4, &cfg).unwrap();
        assert_eq!(formula, models, "{form}");
    }
}

#[test]
fn theta_lift_matches_sampled_closure() {
    let cfg = OracleConfig::default();
    let mut checked = 0;
    for eps in EPS {
        for n in 0..=8 {
            for m in 0..=8 {
                let Ok(sampler) = LiftSampler::new(eps, n, m, 32, &cfg) else { continue };
                for o_prime in enumerate_orbits(eps.neg(), m) {
                    let formula = theta_lift_complex(&o_prime, n).unwrap();
                    let sampled = sampler.lift(&o_prime).unwrap();
                    assert_eq!(formula.columns, sampled, "lift of {o_prime} to size {n}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 400);
}

#[test]
fn generalized_descent_matches_closed_orbit_samples() {
    let cfg = OracleConfig::default();
    for eps in EPS {
        for n in 1..=6 {
            for m in 0..=6 {
                let Ok(sampler) = LiftSampler::new(eps, n, m, 16, &cfg) else { continue };
                for o in enumerate_orbits(eps, n) {
                    let found = sampler.gen_descents(&o);
                    match gen_descent_complex(&o, m) {
                        Ok(d) => assert_eq!(found, BTreeSet::from([d.columns]), "{o} to size {m}"),
                        Err(_) => assert!(found.is_empty(), "{o} to size {m}: {found:?}"),
                    }
                }
            }
        }
    }
}

#[test]
fn centralizer_formula_matches_ad_rank() {
    for n in 1..=8 {
        for eps in EPS {
            for o in enumerate_orbits(eps, n) {
                assert_eq!(centralizer_dim(&o), centralizer_dim_oracle(&o), "{o}");
            }
        }
    }
    let sp4_22 = ComplexOrbit::new(EpsSign::Minus, Partition::new(vec![2, 2]).unwrap()).unwrap();
    assert_eq!(centralizer_dim_oracle(&sp4_22), 4);
}

fn orbit(eps: EpsSign, cols: &[usize]) -> ComplexOrbit {
    ComplexOrbit::new(eps, Partition::new(cols.to_vec()).unwrap()).unwrap()
}

#[test]
fn frozen_sampled_values() {
    let cfg = OracleConfig::default();
    let zero_sp2 = orbit(EpsSign::Minus, &[2]);
    let s = LiftSampler::new(EpsSign::Plus, 4, 2, 32, &cfg).unwrap();
    assert_eq!(s.lift(&zero_sp2).unwrap().parts(), &[2, 2]);

    let sp4_22 = orbit(EpsSign::Minus, &[2, 2]);
    let s = LiftSampler::new(EpsSign::Plus, 3, 4, 32, &cfg).unwrap();
    assert_eq!(s.lift(&sp4_22).unwrap().parts(), &[1, 1, 1]);

    let s = LiftSampler::new(EpsSign::Minus, 4, 4, 32, &cfg).unwrap();
    let found: Vec<Partition> = s.gen_descents(&sp4_22).into_iter().collect();
    assert_eq!(found, vec![Partition::new(vec![4]).unwrap()]);
}
