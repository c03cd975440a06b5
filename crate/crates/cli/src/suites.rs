//! Exhaustive consistency checks, one per acceptance criterion.
//!
//! Each suite walks a bounded family of inputs, counts the cases it checked
//! and collects a message for every mismatch.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use nilorbit::complex_orbits::{
    bv_dual, enumerate_nil_p, enumerate_orbits, gen_descent_complex, induce_complex,
    infinitesimal_character, theta_lift_complex, ComplexOrbit,
};
use nilorbit::diagrams::{EpsSign, Partition};
use nilorbit::isotropy::{admissible_data, group_characters, lift_admissible};
use nilorbit::oracle::{k_orbit_models, round_trip_failures, LiftSampler, OracleConfig};
use nilorbit::real_orbits::{
    enumerate_k_orbits, gen_descent_signed, induce_real, is_realizable, is_signed_diagram,
    signed_descent, GroupFamily, KOrbit, RealForm, Signature, SignedDiagram, SpaceKind,
};
use nilorbit::unipotent::{
    build_descent_chain, chain_in_convergent_range, count_unipotent, dim_circ, DescentChain,
};

use crate::dispatch;

pub const FAMILIES: [GroupFamily; 4] = [
    GroupFamily::RealOrthogonal,
    GroupFamily::QuaternionicOrthogonal,
    GroupFamily::QuaternionicSymplectic,
    GroupFamily::RealSymplectic,
];

const EPS: [EpsSign; 2] = [EpsSign::Plus, EpsSign::Minus];

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub id: u8,
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0 && self.elapsed <= self.limit
    }

    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {:>2} {:<22} {status}  checked={} mismatches={} time={:.3}s limit={}s",
            self.id,
            self.name,
            self.checked,
            self.failures.len(),
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        );
        if let Some(first) = self.failures.first() {
            s.push_str(&format!("  first: {first}"));
        }
        s
    }
}

/// Suite names accepted by `oracle-check`, in criterion order.
pub const SUITE_NAMES: [&str; 10] = [
    "oscillator",
    "quaternionic",
    "double-lift",
    "bv",
    "oracle",
    "adjunction",
    "gen-descent",
    "admchar",
    "chains",
    "induction",
];

pub fn run_suite(name: &str, cfg: &OracleConfig, trials: usize) -> Option<SuiteReport> {
    let report = match name {
        "oscillator" => oscillator_count(),
        "quaternionic" => quaternionic_counting(12),
        "double-lift" => double_lift(10),
        "bv" => bv_consistency(12),
        "oracle" => oracle_equivalence(8, 3, trials, cfg),
        "adjunction" => descent_lift_adjunction(12),
        "gen-descent" => generalized_descent(10),
        "admchar" => character_lift_surjectivity(8),
        "chains" => chain_inequalities(10),
        "induction" => induction_bookkeeping(8),
        _ => return None,
    };
    Some(report)
}

fn timed(id: u8, name: &'static str, limit_secs: u64, body: impl FnOnce(&mut Vec<String>) -> usize) -> SuiteReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let checked = body(&mut failures);
    SuiteReport {
        id,
        name,
        checked,
        failures,
        elapsed: start.elapsed(),
        limit: Duration::from_secs(limit_secs),
    }
}

fn forms_up_to(kind: SpaceKind, max_dim: usize) -> Vec<RealForm> {
    (0..=max_dim).flat_map(|n| RealForm::all_of(kind, n)).collect()
}

fn all_forms_up_to(max_dim: usize) -> Vec<RealForm> {
    FAMILIES
        .iter()
        .flat_map(|&f| forms_up_to(SpaceKind::of_family(f), max_dim))
        .collect()
}

/// Every K-orbit of a form, over all complex orbits of its dimension.
fn all_k_orbits(form: &RealForm) -> Vec<KOrbit> {
    enumerate_orbits(form.kind.eps, form.dim())
        .iter()
        .flat_map(|o| enumerate_k_orbits(form, o).expect("matching type and dimension"))
        .collect()
}

/// `count Sp(2,R) [1,1] --parity 1` through the command-line front end.
pub fn oscillator_count() -> SuiteReport {
    timed(1, "oscillator-count", 1, |fail| {
        let argv = ["nilorbit", "--format", "json", "count", "Sp(2,R)", "[1,1]", "--parity", "1"];
        let out = dispatch(argv.iter().map(|s| s.to_string()));
        if out.code != 0 {
            fail.push(format!("exit code {}: {}", out.code, out.stderr.trim()));
            return 1;
        }
        let v: serde_json::Value = match serde_json::from_str(&out.stdout) {
            Ok(v) => v,
            Err(e) => {
                fail.push(format!("unparsable output: {e}"));
                return 1;
            }
        };
        if v["total"] != 4 {
            fail.push(format!("total {} instead of 4", v["total"]));
        }
        let orders: Vec<u64> = v["k_orbits"]
            .as_array()
            .map(|a| a.iter().filter_map(|k| k["component_group_order"].as_u64()).collect())
            .unwrap_or_default();
        if orders != [2, 2] {
            fail.push(format!("component group orders {orders:?} instead of [2, 2]"));
        }
        1
    })
}

/// Quaternionic forms: every K-orbit over a preferred orbit carries exactly one datum.
pub fn quaternionic_counting(max_dim: usize) -> SuiteReport {
    timed(2, "quaternionic-counting", 60, |fail| {
        let mut checked = 0;
        for fam in [GroupFamily::QuaternionicOrthogonal, GroupFamily::QuaternionicSymplectic] {
            for form in forms_up_to(SpaceKind::of_family(fam), max_dim) {
                for parity in [0, 1] {
                    for o in enumerate_nil_p(form.kind.eps, form.dim(), parity) {
                        let row = count_unipotent(&form, &o, parity).expect("preferred orbit");
                        checked += 1;
                        if row.total != row.k_orbits.len() {
                            fail.push(format!(
                                "{form} {o} parity {parity}: total {} but {} K-orbits",
                                row.total,
                                row.k_orbits.len()
                            ));
                        }
                    }
                }
            }
        }
        checked
    })
}

fn delta(fam: GroupFamily) -> isize {
    match fam {
        GroupFamily::RealOrthogonal => 1,
        GroupFamily::RealSymplectic => -1,
        _ => 0,
    }
}

/// Columns of the double lift predicted for each family.
fn displayed_double_lift(fam: GroupFamily, c: &Partition) -> Partition {
    let c0 = c.get(0);
    let mut cols: Vec<usize> = match fam {
        GroupFamily::RealOrthogonal => vec![c0 + 2, c0],
        GroupFamily::RealSymplectic => vec![c0 - 1, c0 - 1],
        _ => vec![c0, c0],
    };
    cols.extend(c.parts().iter().skip(1));
    Partition::from_unsorted(cols)
}

/// One case of the double-lift setting: the family of `G`, a preferred orbit
/// of the `(-eps)`-space `V'`, the descended orbit in `V` and `l = c_0 + delta`.
pub struct DoubleLiftCase {
    pub fam: GroupFamily,
    pub o_prime: ComplexOrbit,
    pub o: ComplexOrbit,
    pub l: usize,
}

/// Cases with `dim V' <= max_size` and `dim° V' > 0`.
pub fn double_lift_cases(max_size: usize) -> Vec<DoubleLiftCase> {
    let mut out = Vec::new();
    for fam in FAMILIES {
        let kind = SpaceKind::of_family(fam);
        for m in 1..=max_size {
            if let Some(vp) = kind.opposite().legal_signatures(m).first() {
                let form_p = RealForm::new(kind.opposite(), *vp).expect("legal signature");
                if dim_circ(&form_p) <= 0 {
                    continue;
                }
            } else {
                continue;
            }
            for parity in [0, 1] {
                for o_prime in enumerate_nil_p(kind.eps.neg(), m, parity) {
                    let c0 = o_prime.columns.get(0) as isize;
                    let l = c0 + delta(fam);
                    if l < 0 {
                        continue;
                    }
                    out.push(DoubleLiftCase {
                        fam,
                        o: o_prime.descent(),
                        o_prime,
                        l: l as usize,
                    });
                }
            }
        }
    }
    out
}

pub fn double_lift(max_size: usize) -> SuiteReport {
    timed(3, "double-lift", 60, |fail| {
        let mut checked = 0;
        for case in double_lift_cases(max_size) {
            checked += 1;
            let DoubleLiftCase { fam, o_prime, o, l } = &case;
            let tag = format!("{} O'={o_prime}", fam.name());
            if *l < o.columns.get(0) {
                fail.push(format!("{tag}: l={l} < c_1"));
                continue;
            }
            let expected = displayed_double_lift(*fam, &o_prime.columns);
            let dim_perp = o.dim_v + 2 * l;
            let first = theta_lift_complex(o, o_prime.dim_v);
            if first.as_ref() != Ok(o_prime) {
                fail.push(format!("{tag}: lift of the descent is {first:?}"));
                continue;
            }
            match theta_lift_complex(o_prime, dim_perp) {
                Ok(x) if x.columns == expected => {}
                other => fail.push(format!("{tag}: double lift {other:?}, expected {expected}")),
            }
            match induce_complex(o, *l, SpaceKind::of_family(*fam)) {
                Ok(x) if x.columns == expected => {}
                other => fail.push(format!("{tag}: induced {other:?}, expected {expected}")),
            }
        }
        checked
    })
}

/// Half the neutral element of the dual orbit against the orbit's own character.
pub fn bv_consistency(max_size: usize) -> SuiteReport {
    timed(4, "bv-consistency", 60, |fail| {
        let mut checked = 0;
        for eps in EPS {
            for n in 1..=max_size {
                for o in enumerate_nil_p(eps, n, (n % 2) as u8) {
                    checked += 1;
                    let lambda = infinitesimal_character(&o);
                    match bv_dual(&o) {
                        Ok(d) if d.half_h.equivalent(&lambda) && d.checked => {}
                        Ok(d) => fail.push(format!(
                            "eps {eps} {o}: half h {} vs lambda {lambda}",
                            d.half_h
                        )),
                        Err(e) => fail.push(format!("eps {eps} {o}: {e}")),
                    }
                }
            }
        }
        checked
    })
}

/// Closed forms against the exact matrix oracle.
pub fn oracle_equivalence(max_lift_dim: usize, max_rank: usize, trials: usize, cfg: &OracleConfig) -> SuiteReport {
    timed(5, "oracle-equivalence", 300, |fail| {
        let mut checked = 0;
        for eps in EPS {
            for n in 0..=max_lift_dim {
                for m in 0..=max_lift_dim {
                    let Ok(sampler) = LiftSampler::new(eps, n, m, trials, cfg) else { continue };
                    for o_prime in enumerate_orbits(eps.neg(), m) {
                        checked += 1;
                        let formula = theta_lift_complex(&o_prime, n).map(|o| o.columns);
                        let sampled = sampler.lift(&o_prime);
                        if formula != sampled {
                            fail.push(format!("lift of {o_prime} to {n}: {formula:?} vs oracle {sampled:?}"));
                        }
                    }
                }
            }
        }
        for fam in FAMILIES {
            let kind = SpaceKind::of_family(fam);
            let top = if fam == GroupFamily::RealOrthogonal { 2 * max_rank + 1 } else { 2 * max_rank };
            for form in forms_up_to(kind, top) {
                checked += 1;
                let formula: BTreeSet<SignedDiagram> = all_k_orbits(&form).into_iter().map(|k| k.diagram).collect();
                match k_orbit_models(&form, 4, cfg) {
                    Ok(models) if models == formula => {}
                    Ok(models) => fail.push(format!(
                        "{form}: only formula {:?}, only oracle {:?}",
                        formula.difference(&models).map(ToString::to_string).collect::<Vec<_>>(),
                        models.difference(&formula).map(ToString::to_string).collect::<Vec<_>>()
                    )),
                    Err(e) => fail.push(format!("{form}: {e}")),
                }
            }
        }
        for eps in EPS {
            for n in 0..=10 {
                checked += 1;
                for p in round_trip_failures(eps, n) {
                    fail.push(format!("round trip of {p} (eps {eps})"));
                }
            }
        }
        checked
    })
}

/// Lift after descent returns the orbit; signed descent stays realizable.
pub fn descent_lift_adjunction(max_size: usize) -> SuiteReport {
    timed(6, "descent-lift-adjunction", 60, |fail| {
        let mut checked = 0;
        for eps in EPS {
            for n in 1..=max_size {
                for o in enumerate_orbits(eps, n) {
                    checked += 1;
                    match theta_lift_complex(&o.descent(), n) {
                        Ok(x) if x == o => {}
                        other => fail.push(format!("eps {eps} {o}: lift of descent {other:?}")),
                    }
                }
            }
        }
        for form in all_forms_up_to(max_size) {
            for ko in all_k_orbits(&form) {
                checked += 1;
                let d = signed_descent(&ko.diagram);
                if !is_signed_diagram(d.cols()) || !is_realizable(&d, form.kind.opposite()) {
                    fail.push(format!("{form} {}: descent {d} invalid", ko.diagram));
                }
            }
        }
        checked
    })
}

/// Generalized descent against the column formula, realizability and the
/// complex shape.
pub fn generalized_descent(max_size: usize) -> SuiteReport {
    timed(7, "generalized-descent", 60, |fail| {
        let mut checked = 0;
        for form in all_forms_up_to(max_size) {
            let target_kind = form.kind.opposite();
            for ko in all_k_orbits(&form) {
                let d = ko.diagram.cols();
                let tail = ko.diagram.tail_signature(1);
                for m in tail.size()..=max_size {
                    for sig in target_kind.legal_signatures(m) {
                        let Some(s) = sig.checked_sub(tail) else { continue };
                        checked += 1;
                        let tag = format!("{form} {} -> ({sig})", ko.diagram);
                        let out = match gen_descent_signed(&ko.diagram, sig) {
                            Ok(x) => x,
                            Err(e) => {
                                fail.push(format!("{tag}: {e}"));
                                continue;
                            }
                        };
                        let mut expected: Vec<Signature> = d.iter().skip(1).copied().collect();
                        match expected.first_mut() {
                            Some(first) => *first = *first + s,
                            None if !s.is_zero() => expected.push(s),
                            None => {}
                        }
                        if out.cols() != expected.as_slice() {
                            fail.push(format!("{tag}: got {out}"));
                        }
                        if !is_realizable(&out, target_kind) {
                            fail.push(format!("{tag}: {out} not realizable"));
                        }
                        if s.is_zero() && out != signed_descent(&ko.diagram) {
                            fail.push(format!("{tag}: s = 0 but differs from descent"));
                        }
                        match gen_descent_complex(&ko.complex_orbit(), m) {
                            Ok(c) if c.columns == out.underlying_partition() => {}
                            other => fail.push(format!("{tag}: complex shape {other:?} vs {out}")),
                        }
                    }
                }
            }
        }
        checked
    })
}

/// The lift of admissible data from every descent pair reaches every datum.
pub fn character_lift_surjectivity(max_size: usize) -> SuiteReport {
    timed(8, "character-lift-surjective", 60, |fail| {
        let mut checked = 0;
        for form in all_forms_up_to(max_size) {
            for ko in all_k_orbits(&form) {
                if ko.diagram.is_empty() {
                    continue;
                }
                checked += 1;
                let kp = ko.descent();
                let mut hit = BTreeSet::new();
                for dp in admissible_data(&kp) {
                    for chi in group_characters(&form) {
                        match lift_admissible(&ko, &dp, chi) {
                            Ok(d) => {
                                hit.insert(d.bits);
                            }
                            Err(e) => fail.push(format!("{form} {}: {e}", ko.diagram)),
                        }
                    }
                }
                let want: BTreeSet<Vec<u8>> = admissible_data(&ko).into_iter().map(|d| d.bits).collect();
                if hit != want {
                    fail.push(format!("{form} {}: reached {} of {}", ko.diagram, hit.len(), want.len()));
                }
            }
        }
        checked
    })
}

/// Chains built from preferred orbits satisfy the stable-range inequalities.
pub fn chain_inequalities(max_size: usize) -> SuiteReport {
    timed(9, "chain-inequalities", 60, |fail| {
        let mut checked = 0;
        for form in all_forms_up_to(max_size) {
            for parity in [0, 1] {
                for o in enumerate_nil_p(form.kind.eps, form.dim(), parity) {
                    for ko in enumerate_k_orbits(&form, &o).expect("matching type and dimension") {
                        checked += 1;
                        match build_descent_chain(&form, &ko, parity) {
                            Ok(c) if chain_in_convergent_range(&c) => {}
                            Ok(_) => fail.push(format!("{form} {} parity {parity}: out of range", ko.diagram)),
                            Err(e) => fail.push(format!("{form} {}: {e}", ko.diagram)),
                        }
                    }
                }
            }
        }
        let bad = KOrbit::new("O(2,2)".parse().expect("valid form"), "1,1|1,1".parse().expect("valid diagram"))
            .expect("realizable");
        checked += 1;
        if chain_in_convergent_range(&DescentChain::from_korbit(&bad)) {
            fail.push("O(2,2) 1,1|1,1 accepted although outside the preferred set".into());
        }
        checked
    })
}

type Pair = (SignedDiagram, SignedDiagram);

/// Induced side: `(d, O_perp)` pairs weighted by component-group index.
fn induced_pairs(form: &RealForm, kos: &[KOrbit], l: usize) -> Result<BTreeMap<Pair, usize>, String> {
    let mult = match form.family() {
        GroupFamily::RealSymplectic => 2,
        _ => 1,
    };
    let mut out = BTreeMap::new();
    for ko in kos {
        let list = induce_real(&ko.diagram, l, form.kind).map_err(|e| format!("{}: {e}", ko.diagram))?;
        for (perp, index) in list {
            *out.entry((ko.diagram.clone(), perp)).or_insert(0) += mult * index as usize;
        }
    }
    Ok(out)
}

/// Theta side: `(descent of generalized descent, O_perp)` summed over the
/// spaces `V'` and the sign twists.
fn theta_pairs(form: &RealForm, o: &ComplexOrbit, c0: usize, l: usize) -> Result<BTreeMap<Pair, usize>, String> {
    let kind = form.kind;
    let twists = if form.family() == GroupFamily::RealOrthogonal { 2 } else { 1 };
    let perp_form = RealForm::new(kind, form.signature + Signature::new(l, l)).map_err(|e| e.to_string())?;
    let perp_orbit = induce_complex(o, l, kind).map_err(|e| e.to_string())?;
    let mut out = BTreeMap::new();
    for perp in enumerate_k_orbits(&perp_form, &perp_orbit).map_err(|e| e.to_string())? {
        for sig in kind.opposite().legal_signatures(form.dim() + c0) {
            let Ok(mid) = gen_descent_signed(&perp.diagram, sig) else { continue };
            if !is_realizable(&mid, kind.opposite()) {
                continue;
            }
            let back = signed_descent(&mid);
            if back.total_signature() != form.signature
                || back.underlying_partition() != o.columns
                || !is_realizable(&back, kind)
            {
                continue;
            }
            *out.entry((back, perp.diagram.clone())).or_insert(0) += twists;
        }
    }
    Ok(out)
}

/// Induced K-orbits with their multiplicities against the pairs matched by a
/// double generalized descent.
pub fn induction_bookkeeping(max_size: usize) -> SuiteReport {
    timed(10, "induction-bookkeeping", 60, |fail| {
        let mut checked = 0;
        for fam in FAMILIES {
            let kind = SpaceKind::of_family(fam);
            for form in forms_up_to(kind, max_size) {
                for o in enumerate_orbits(kind.eps, form.dim()) {
                    let kos = enumerate_k_orbits(&form, &o).expect("matching type and dimension");
                    if kos.is_empty() {
                        continue;
                    }
                    let c1 = o.columns.get(0);
                    for l in c1.max(1)..=max_size {
                        let Some(c0) = l.checked_add_signed(-delta(fam)) else { continue };
                        let perp_sig = form.signature + Signature::new(l, l);
                        if !kind.is_legal(perp_sig) || induce_complex(&o, l, kind).is_err() {
                            continue;
                        }
                        checked += 1;
                        let tag = format!("{form} {o} l={l}");
                        let induced = induced_pairs(&form, &kos, l);
                        let theta = theta_pairs(&form, &o, c0, l);
                        match (induced, theta) {
                            (Ok(a), Ok(b)) if a == b => {}
                            (Ok(a), Ok(b)) => fail.push(format!("{tag}: induced {a:?} vs theta {b:?}")),
                            (a, b) => fail.push(format!("{tag}: {:?} / {:?}", a.err(), b.err())),
                        }
                    }
                }
            }
        }
        checked
    })
}
