//! Randomized invariants of orbits, signed diagrams and admissible data.

use proptest::prelude::*;

use nilorbit::complex_orbits::{
    centralizer_dim, enumerate_orbits, gen_descent_complex, infinitesimal_character,
    lie_algebra_dim, orbit_dimension, prepend_column, theta_lift_complex, ComplexOrbit,
};
use nilorbit::diagrams::{transpose, EpsSign};
use nilorbit::isotropy::{admissible_data, component_group};
use nilorbit::real_orbits::{
    enumerate_k_orbits, is_realizable, GroupFamily, KOrbit, RealForm, SignedDiagram, SpaceKind,
};
use nilorbit::unipotent::{chain_datum, count_unipotent, enumerate_eta, DescentChain};

const FAMILIES: [GroupFamily; 4] = [
    GroupFamily::RealOrthogonal,
    GroupFamily::QuaternionicOrthogonal,
    GroupFamily::QuaternionicSymplectic,
    GroupFamily::RealSymplectic,
];

fn eps_of(b: bool) -> EpsSign {
    if b {
        EpsSign::Plus
    } else {
        EpsSign::Minus
    }
}

fn orbit_strategy(max: usize) -> impl Strategy<Value = ComplexOrbit> {
    (any::<bool>(), 0..=max, any::<prop::sample::Index>()).prop_filter_map("no orbits", |(e, n, i)| {
        let list = enumerate_orbits(eps_of(e), n);
        (!list.is_empty()).then(|| list[i.index(list.len())].clone())
    })
}

fn korbit_strategy(max: usize) -> impl Strategy<Value = KOrbit> {
    (0..4usize, 0..=max, any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_filter_map(
        "no K-orbits",
        |(f, n, i, j)| {
            let forms = RealForm::all_of(SpaceKind::of_family(FAMILIES[f]), n);
            if forms.is_empty() {
                return None;
            }
            let form = forms[i.index(forms.len())];
            let kos: Vec<KOrbit> = enumerate_orbits(form.kind.eps, n)
                .iter()
                .flat_map(|o| enumerate_k_orbits(&form, o).unwrap())
                .collect();
            (!kos.is_empty()).then(|| kos[j.index(kos.len())].clone())
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn orbit_dimension_is_even(o in orbit_strategy(14)) {
        prop_assert_eq!(orbit_dimension(&o) % 2, 0);
        prop_assert!(centralizer_dim(&o) <= lie_algebra_dim(o.eps, o.dim_v));
    }

    #[test]
    fn lift_is_monotone_under_closure(a in orbit_strategy(8), extra in 0..8usize, j in any::<prop::sample::Index>()) {
        let same: Vec<ComplexOrbit> = enumerate_orbits(a.eps, a.dim_v)
            .into_iter()
            .filter(|b| transpose(&a.columns).dominates(&transpose(&b.columns)))
            .collect();
        let b = &same[j.index(same.len())];
        let n = a.dim_v + extra;
        if let (Ok(la), Ok(lb)) = (theta_lift_complex(&a, n), theta_lift_complex(b, n)) {
            prop_assert!(transpose(&la.columns).dominates(&transpose(&lb.columns)));
        }
    }

    #[test]
    fn lift_prepends_a_long_column(o in orbit_strategy(8), extra in 0..10usize) {
        let n = o.dim_v + extra;
        if let Some(p) = prepend_column(&o, n) {
            prop_assert_eq!(theta_lift_complex(&o, n).unwrap(), p);
        }
    }

    #[test]
    fn generalized_descent_has_requested_size(o in orbit_strategy(12), m in 0..14usize) {
        if let Ok(d) = gen_descent_complex(&o, m) {
            prop_assert_eq!(d.dim_v, m);
            prop_assert_eq!(d.eps, o.eps.neg());
            let rest: Vec<usize> = o.columns.parts().iter().skip(2).copied().collect();
            prop_assert_eq!(d.columns.parts().iter().skip(1).copied().collect::<Vec<_>>(), rest);
        }
    }

    #[test]
    fn character_has_half_rank(o in orbit_strategy(14)) {
        prop_assert_eq!(infinitesimal_character(&o).rank(), o.dim_v / 2);
    }

    #[test]
    fn k_orbit_invariants(ko in korbit_strategy(10)) {
        let d = &ko.diagram;
        prop_assert_eq!(d.total_signature(), ko.form.signature);
        prop_assert!(is_realizable(d, ko.form.kind));
        let back: SignedDiagram = d.to_string().parse().unwrap();
        prop_assert_eq!(&back, d);
        let down = ko.descent();
        prop_assert_eq!(down.form.signature, d.tail_signature(1));
        prop_assert_eq!(down.complex_orbit(), ko.complex_orbit().descent());
    }

    #[test]
    fn admissible_data_are_the_characters(ko in korbit_strategy(10)) {
        let order = component_group(&ko).order();
        prop_assert!(order.is_power_of_two());
        let data = admissible_data(&ko);
        prop_assert_eq!(data.len(), order);
        let distinct: std::collections::BTreeSet<_> = data.iter().map(|x| x.bits.clone()).collect();
        prop_assert_eq!(distinct.len(), order);
    }

    #[test]
    fn chains_reach_the_top_orbit(ko in korbit_strategy(8)) {
        let chain = DescentChain::from_korbit(&ko);
        for eta in enumerate_eta(&chain) {
            if let Some(datum) = chain_datum(&chain, &eta).unwrap() {
                prop_assert_eq!(&datum.orbit, &ko);
            }
        }
    }

    #[test]
    fn count_sums_component_groups(ko in korbit_strategy(10), parity in 0..2u8) {
        if let Ok(row) = count_unipotent(&ko.form, &ko.complex_orbit(), parity) {
            let sum: usize = row.k_orbits.iter().map(|(_, a)| a).sum();
            prop_assert_eq!(row.total, sum);
            prop_assert!(row.k_orbits.iter().any(|(k, _)| k == &ko));
        }
    }

    #[test]
    fn form_names_round_trip(f in 0..4usize, n in 0..12usize) {
        for form in RealForm::all_of(SpaceKind::of_family(FAMILIES[f]), n) {
            let back: RealForm = form.to_string().parse().unwrap();
            prop_assert_eq!(back, form);
        }
    }
}
