//! Descent chains and unipotent counts.
//!
//! A K-orbit over a preferred complex orbit is peeled column by column into a
//! chain of spaces of alternating kind. Characters of the component groups
//! along the chain produce the admissible data of the top orbit, and the
//! number of unipotent representations attached to a complex orbit is the
//! total number of such data over its K-orbits.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::complex_orbits::{enumerate_nil_p, infinitesimal_character, ComplexOrbit, InfinitesimalCharacter};
use crate::diagrams::nil_p_violation;
use crate::error::{Error, Result};
use crate::isotropy::{
    component_group, group_characters, lift_admissible, terminal_datum, AdmissibleDatum,
    GroupCharacter,
};
use crate::real_orbits::{enumerate_k_orbits, GroupFamily, KOrbit, RealForm};

/// Dimension minus 0, 1, 2 or 3 for real symplectic, quaternionic
/// symplectic, real orthogonal and quaternionic orthogonal forms.
pub fn dim_circ(form: &RealForm) -> i64 {
    let shift = match form.family() {
        GroupFamily::RealSymplectic => 0,
        GroupFamily::QuaternionicSymplectic => 1,
        GroupFamily::RealOrthogonal => 2,
        GroupFamily::QuaternionicOrthogonal => 3,
    };
    form.dim() as i64 - shift
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentChain {
    /// `(V_j, O_j)` for `j = 0..=k`; the space after the last step is zero.
    pub steps: Vec<KOrbit>,
}

impl DescentChain {
    /// Chain obtained by iterated descent, with no condition on the orbit.
    pub fn from_korbit(ko: &KOrbit) -> Self {
        let mut steps = Vec::new();
        let mut cur = ko.clone();
        while !cur.diagram.is_empty() {
            let next = cur.descent();
            steps.push(cur);
            cur = next;
        }
        DescentChain { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn forms(&self) -> Vec<RealForm> {
        self.steps.iter().map(|s| s.form).collect()
    }
}

pub fn build_descent_chain(form: &RealForm, ko: &KOrbit, parity: u8) -> Result<DescentChain> {
    if ko.form != *form {
        return Err(Error::Dimension(format!(
            "K-orbit lives in {} but the chain starts at {form}",
            ko.form
        )));
    }
    let cols = ko.diagram.underlying_partition();
    if let Some(reason) = nil_p_violation(&cols, form.kind.eps, parity) {
        return Err(Error::NotInNilP {
            columns: cols.into_parts(),
            parity,
            reason,
        });
    }
    Ok(DescentChain::from_korbit(ko))
}

pub fn chain_in_convergent_range(chain: &DescentChain) -> bool {
    let k = chain.len();
    let dim = |j: usize| chain.steps.get(j).map_or(0, |s| s.form.dim()) as i64;
    let positive = (0..k.saturating_sub(1)).all(|j| dim_circ(&chain.steps[j].form) > 0);
    let stable = (1..k).all(|j| dim(j + 1) + dim(j - 1) > 2 * dim_circ(&chain.steps[j].form));
    positive && stable
}

/// One component-group character per step of a chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterTuple {
    pub chis: Vec<GroupCharacter>,
}

pub fn enumerate_eta(chain: &DescentChain) -> Vec<CharacterTuple> {
    let mut out = vec![CharacterTuple { chis: Vec::new() }];
    for step in &chain.steps {
        let chars = group_characters(&step.form);
        out = out
            .into_iter()
            .flat_map(|t| {
                chars.iter().map(move |&c| {
                    let mut chis = t.chis.clone();
                    chis.push(c);
                    CharacterTuple { chis }
                })
            })
            .collect();
    }
    out
}

/// Admissible datum on the top orbit produced by a character tuple.
pub fn chain_datum(chain: &DescentChain, eta: &CharacterTuple) -> Result<Option<AdmissibleDatum>> {
    if eta.chis.len() != chain.len() {
        return Err(Error::Dimension(format!(
            "character tuple of length {} for a chain of length {}",
            eta.chis.len(),
            chain.len()
        )));
    }
    let Some(last) = chain.steps.last() else { return Ok(None) };
    let k = chain.len() - 1;
    let mut datum = terminal_datum(last, eta.chis[k]);
    for j in (0..k).rev() {
        datum = lift_admissible(&chain.steps[j], &datum, eta.chis[j])?;
    }
    Ok(Some(datum))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRow {
    pub form: RealForm,
    pub parity: u8,
    pub orbit: ComplexOrbit,
    pub k_orbits: Vec<(KOrbit, usize)>,
    pub total: usize,
    pub inf_char: InfinitesimalCharacter,
    /// Real symplectic rows of odd parity count genuine representations of
    /// the metaplectic cover.
    pub genuine: bool,
}

impl Serialize for ClassificationRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            diagram: &'a crate::real_orbits::SignedDiagram,
            component_group_order: usize,
        }
        let entries: Vec<Entry> = self
            .k_orbits
            .iter()
            .map(|(k, a)| Entry {
                diagram: &k.diagram,
                component_group_order: *a,
            })
            .collect();
        let mut st = s.serialize_struct("ClassificationRow", 7)?;
        st.serialize_field("form", &self.form)?;
        st.serialize_field("parity", &self.parity)?;
        st.serialize_field("genuine", &self.genuine)?;
        st.serialize_field("orbit", &self.orbit)?;
        st.serialize_field("inf_char", &self.inf_char)?;
        st.serialize_field("k_orbits", &entries)?;
        st.serialize_field("total", &self.total)?;
        st.end()
    }
}

pub fn count_unipotent(form: &RealForm, o: &ComplexOrbit, parity: u8) -> Result<ClassificationRow> {
    if let Some(reason) = nil_p_violation(&o.columns, o.eps, parity) {
        return Err(Error::NotInNilP {
            columns: o.columns.parts().to_vec(),
            parity,
            reason,
        });
    }
    let k_orbits: Vec<(KOrbit, usize)> = enumerate_k_orbits(form, o)?
        .into_iter()
        .map(|k| {
            let a = component_group(&k).order();
            (k, a)
        })
        .collect();
    let total = k_orbits.iter().map(|(_, a)| a).sum();
    Ok(ClassificationRow {
        form: *form,
        parity,
        orbit: o.clone(),
        k_orbits,
        total,
        inf_char: infinitesimal_character(o),
        genuine: form.family() == GroupFamily::RealSymplectic && parity == 1,
    })
}

pub fn classify(form: &RealForm, parity: u8) -> Vec<ClassificationRow> {
    let orbits = enumerate_nil_p(form.kind.eps, form.dim(), parity);
    let mut rows: Vec<ClassificationRow> = std::thread::scope(|s| {
        let handles: Vec<_> = orbits
            .iter()
            .map(|o| s.spawn(move || count_unipotent(form, o, parity)))
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .expect("counting thread panicked")
                    .expect("preferred orbits of the right size")
            })
            .collect()
    });
    rows.sort_by(|a, b| b.orbit.columns.cmp(&a.orbit.columns));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{EpsSign, Partition};

    fn ko(form: &str, d: &str) -> KOrbit {
        KOrbit::new(form.parse().unwrap(), d.parse().unwrap()).unwrap()
    }

    fn orb(eps: i64, cols: &[usize]) -> ComplexOrbit {
        ComplexOrbit::new(EpsSign::from_int(eps).unwrap(), Partition::new(cols.to_vec()).unwrap())
            .unwrap()
    }

    #[test]
    fn dim_circ_examples() {
        assert_eq!(dim_circ(&"Sp(4,R)".parse().unwrap()), 4);
        assert_eq!(dim_circ(&"O(3,2)".parse().unwrap()), 3);
        assert_eq!(dim_circ(&"O*(4)".parse().unwrap()), 1);
    }

    #[test]
    fn chain_examples() {
        let x = ko("Sp(2,R)", "1,0|0,1");
        let c = build_descent_chain(&x.form, &x, 1).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.steps[1].form.alias(), "O(0,1)");
        assert!(chain_in_convergent_range(&c));
        assert_eq!(enumerate_eta(&c).len(), 2);

        let z = ko("O(2,1)", "2,1");
        assert_eq!(build_descent_chain(&z.form, &z, 1).unwrap().len(), 1);

        let y = ko("Sp(4,R)", "1,1|1,1");
        let c = build_descent_chain(&y.form, &y, 0).unwrap();
        assert_eq!(c.steps[1].form.alias(), "O(1,1)");
        assert_eq!(enumerate_eta(&c).len(), 4);

        let bad = ko("O(2,2)", "1,1|1,1");
        assert!(build_descent_chain(&bad.form, &bad, 0).is_err());
        assert!(!chain_in_convergent_range(&DescentChain::from_korbit(&bad)));
    }

    #[test]
    fn count_examples() {
        let sp2: RealForm = "Sp(2,R)".parse().unwrap();
        let row = count_unipotent(&sp2, &orb(-1, &[1, 1]), 1).unwrap();
        assert_eq!(row.total, 4);
        assert!(row.genuine);
        let sp4: RealForm = "Sp(4,R)".parse().unwrap();
        let row = count_unipotent(&sp4, &orb(-1, &[2, 2]), 0).unwrap();
        assert_eq!(row.total, 8);
        let totals: Vec<usize> = row.k_orbits.iter().map(|(_, a)| *a).collect();
        assert_eq!(totals, vec![2, 4, 2]);
        assert!(count_unipotent(&sp4, &orb(-1, &[3, 1]), 0).is_err());
    }

    #[test]
    fn classify_examples() {
        let rows = classify(&"Sp(4,R)".parse().unwrap(), 0);
        let cols: Vec<Vec<usize>> = rows.iter().map(|r| r.orbit.columns.parts().to_vec()).collect();
        assert_eq!(cols, vec![vec![4], vec![2, 2]]);

        let rows = classify(&"O(3,0)".parse().unwrap(), 1);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].k_orbits.len(), 1);

        for r in classify(&"Sp(1,1)".parse().unwrap(), 0) {
            assert!(r.k_orbits.iter().all(|(_, a)| *a == 1));
        }
    }
}
