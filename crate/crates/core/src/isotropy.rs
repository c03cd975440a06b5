//! Isotropy data at a K-orbit: Levi factors of the stabilizer, its component
//! group, admissible orbit data and the maps relating data on an orbit and on
//! its descent.
//!
//! Admissible data form a torsor under the character group of the component
//! group. They are recorded as bit vectors relative to the datum produced by
//! the descent chain with trivial characters.

use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};
use crate::real_orbits::{signed_descent, GroupFamily, KOrbit, RealForm, Signature, SpaceKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeviFactor {
    pub level: usize,
    pub kind: SpaceKind,
    pub signature: Signature,
}

pub fn levi_factors(ko: &KOrbit) -> Vec<LeviFactor> {
    ko.diagram
        .multiplicity_signatures()
        .into_iter()
        .enumerate()
        .map(|(level, signature)| LeviFactor {
            level,
            kind: ko.form.kind.shifted(level),
            signature,
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn swap(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

/// One `O(1)`-type generator: the determinant of one orthogonal slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub level: usize,
    pub side: Side,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::Plus => '+',
            Side::Minus => '-',
        };
        write!(f, "l{}{}", self.level, s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentGroup {
    pub generators: Vec<Generator>,
}

impl ComponentGroup {
    pub fn order(&self) -> usize {
        1usize << self.generators.len()
    }

    pub fn position(&self, g: Generator) -> Option<usize> {
        self.generators.iter().position(|&h| h == g)
    }
}

pub fn component_group(ko: &KOrbit) -> ComponentGroup {
    let mut generators = Vec::new();
    for f in levi_factors(ko) {
        if f.kind.family() != GroupFamily::RealOrthogonal {
            continue;
        }
        if f.signature.plus > 0 {
            generators.push(Generator {
                level: f.level,
                side: Side::Plus,
            });
        }
        if f.signature.minus > 0 {
            generators.push(Generator {
                level: f.level,
                side: Side::Minus,
            });
        }
    }
    ComponentGroup { generators }
}

/// Character of the component group of a K-orbit, as one bit per generator.
pub type Bits = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleDatum {
    pub orbit: KOrbit,
    pub bits: Bits,
    pub genuine_parity: u8,
}

impl AdmissibleDatum {
    pub fn group(&self) -> ComponentGroup {
        component_group(&self.orbit)
    }
}

impl Serialize for AdmissibleDatum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct BitMap<'a>(&'a [Generator], &'a [u8]);
        impl Serialize for BitMap<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (g, b) in self.0.iter().zip(self.1) {
                    m.serialize_entry(&g.to_string(), b)?;
                }
                m.end()
            }
        }
        let group = self.group();
        let mut st = s.serialize_struct("AdmissibleDatum", 3)?;
        st.serialize_field("orbit", &self.orbit.diagram)?;
        st.serialize_field("bits", &BitMap(&group.generators, &self.bits))?;
        st.serialize_field("genuine_parity", &self.genuine_parity)?;
        st.end()
    }
}

/// 1 for real symplectic forms carrying orbits with odd columns, whose data
/// live on the metaplectic cover; 0 otherwise.
pub fn genuine_parity(ko: &KOrbit) -> u8 {
    let odd = ko.diagram.cols().first().is_some_and(|d| d.size() % 2 == 1);
    u8::from(ko.form.family() == GroupFamily::RealSymplectic && odd)
}

pub fn admissible_data(ko: &KOrbit) -> Vec<AdmissibleDatum> {
    let g = component_group(ko).generators.len();
    let genuine_parity = genuine_parity(ko);
    (0..1usize << g)
        .map(|mask| AdmissibleDatum {
            orbit: ko.clone(),
            bits: (0..g).map(|i| ((mask >> (g - 1 - i)) & 1) as u8).collect(),
            genuine_parity,
        })
        .collect()
}

/// Character `det^{eta+} x det^{eta-}` of the component group of `O(p,q)`;
/// trivial for the other families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupCharacter {
    pub plus: u8,
    pub minus: u8,
}

impl GroupCharacter {
    pub const TRIVIAL: GroupCharacter = GroupCharacter { plus: 0, minus: 0 };
}

/// Distinct characters of the component group of the isometry group.
pub fn group_characters(form: &RealForm) -> Vec<GroupCharacter> {
    if form.family() != GroupFamily::RealOrthogonal {
        return vec![GroupCharacter::TRIVIAL];
    }
    let ps: &[u8] = if form.signature.plus > 0 { &[0, 1] } else { &[0] };
    let ms: &[u8] = if form.signature.minus > 0 { &[0, 1] } else { &[0] };
    ps.iter()
        .flat_map(|&plus| ms.iter().map(move |&minus| GroupCharacter { plus, minus }))
        .collect()
}

/// Restriction of a group character to the component group of the orbit.
pub fn restrict_character(ko: &KOrbit, chi: GroupCharacter) -> Bits {
    let real_orth = ko.form.family() == GroupFamily::RealOrthogonal;
    component_group(ko)
        .generators
        .iter()
        .map(|g| match (real_orth && g.level % 2 == 0, g.side) {
            (false, _) => 0,
            (true, Side::Plus) => chi.plus,
            (true, Side::Minus) => chi.minus,
        })
        .collect()
}

fn check_descent_pair(ko: &KOrbit, ko_prime: &KOrbit) -> Result<()> {
    let expected = signed_descent(&ko.diagram);
    if ko_prime.diagram != expected || ko_prime.form.kind != ko.form.kind.opposite() {
        return Err(Error::NotDescentPair(format!(
            "{} in {} is not the descent of {} in {}",
            ko_prime.diagram, ko_prime.form, ko.diagram, ko.form
        )));
    }
    Ok(())
}

/// Pulls a character of the descent's component group back along the level
/// shift `l -> l-1`. The identification of multiplicity spaces dualizes their
/// signatures, so the two orthogonal slots trade places.
pub fn alpha_pullback(ko: &KOrbit, ko_prime: &KOrbit, chi_prime: &[u8]) -> Result<Bits> {
    check_descent_pair(ko, ko_prime)?;
    let gp = component_group(ko_prime);
    if chi_prime.len() != gp.generators.len() {
        return Err(Error::NotDescentPair(format!(
            "character has {} bits but the descent's component group has {} generators",
            chi_prime.len(),
            gp.generators.len()
        )));
    }
    component_group(ko)
        .generators
        .iter()
        .map(|g| {
            if g.level == 0 {
                return Ok(0);
            }
            let src = Generator {
                level: g.level - 1,
                side: g.side.swap(),
            };
            gp.position(src).map(|i| chi_prime[i]).ok_or_else(|| {
                Error::NotDescentPair(format!("generator {g} has no counterpart {src}"))
            })
        })
        .collect()
}

pub fn lift_admissible(
    ko: &KOrbit,
    datum_prime: &AdmissibleDatum,
    chi: GroupCharacter,
) -> Result<AdmissibleDatum> {
    let pulled = alpha_pullback(ko, &datum_prime.orbit, &datum_prime.bits)?;
    let restricted = restrict_character(ko, chi);
    let bits = pulled.iter().zip(&restricted).map(|(a, b)| a ^ b).collect();
    Ok(AdmissibleDatum {
        orbit: ko.clone(),
        bits,
        genuine_parity: genuine_parity(ko),
    })
}

/// Datum on an orbit of the zero space or on a zero orbit reached at the end
/// of a descent chain: the restriction of the group character.
pub fn terminal_datum(ko: &KOrbit, chi: GroupCharacter) -> AdmissibleDatum {
    AdmissibleDatum {
        orbit: ko.clone(),
        bits: restrict_character(ko, chi),
        genuine_parity: genuine_parity(ko),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ko(form: &str, d: &str) -> KOrbit {
        KOrbit::new(form.parse().unwrap(), d.parse().unwrap()).unwrap()
    }

    #[test]
    fn levi_examples() {
        let f = levi_factors(&ko("Sp(2,R)", "1,0|0,1"));
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].kind.family(), GroupFamily::RealSymplectic);
        assert_eq!(f[0].signature, Signature::new(0, 0));
        assert_eq!(f[1].kind.family(), GroupFamily::RealOrthogonal);
        assert_eq!(f[1].signature, Signature::new(1, 0));

        let f = levi_factors(&ko("O(3,2)", "3,2"));
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].kind.family(), GroupFamily::RealOrthogonal);
        assert_eq!(f[0].signature, Signature::new(3, 2));

        let f = levi_factors(&ko("Sp(1,1)", "2,2"));
        assert_eq!(f[0].kind.family(), GroupFamily::QuaternionicSymplectic);
        assert_eq!(f[0].signature, Signature::new(2, 2));
    }

    #[test]
    fn component_group_examples() {
        assert_eq!(component_group(&ko("Sp(2,R)", "1,0|0,1")).order(), 2);
        assert_eq!(component_group(&ko("Sp(4,R)", "1,1|1,1")).order(), 4);
        assert_eq!(component_group(&ko("Sp(1,1)", "1,1|1,1")).order(), 1);
        assert_eq!(admissible_data(&ko("Sp(2,R)", "1,0|0,1")).len(), 2);
        assert_eq!(admissible_data(&ko("Sp(1,1)", "1,1|1,1")).len(), 1);
        assert_eq!(admissible_data(&ko("Sp(4,R)", "1,1|1,1")).len(), 4);
    }

    #[test]
    fn pullback_shifts_levels() {
        let x = ko("Sp(2,R)", "1,0|0,1");
        let xp = x.descent();
        assert_eq!(xp.form.alias(), "O(0,1)");
        assert_eq!(component_group(&xp).generators, vec![Generator { level: 0, side: Side::Minus }]);
        assert_eq!(alpha_pullback(&x, &xp, &[1]).unwrap(), vec![1]);
        assert_eq!(alpha_pullback(&x, &xp, &[0]).unwrap(), vec![0]);
        let other = ko("Sp(2,R)", "0,1|1,0");
        assert!(alpha_pullback(&other, &xp, &[0]).is_err());
    }

    #[test]
    fn sign_character_flips_even_plus_slots() {
        let x = ko("O(2,1)", "2,1");
        let base = terminal_datum(&x, GroupCharacter::TRIVIAL);
        assert_eq!(base.bits, vec![0, 0]);
        let d = terminal_datum(&x, GroupCharacter { plus: 1, minus: 0 });
        assert_eq!(d.bits, vec![1, 0]);
    }

    #[test]
    fn lift_is_surjective_on_sp4_middle_orbit() {
        let x = ko("Sp(4,R)", "1,1|1,1");
        let xp = x.descent();
        let mut hit: Vec<Bits> = Vec::new();
        for dp in admissible_data(&xp) {
            for chi in group_characters(&x.form) {
                hit.push(lift_admissible(&x, &dp, chi).unwrap().bits);
            }
        }
        hit.sort();
        hit.dedup();
        assert_eq!(hit.len(), 4);
    }

    #[test]
    fn datum_json() {
        let d = &admissible_data(&ko("Sp(2,R)", "1,0|0,1"))[1];
        let s = serde_json::to_string(d).unwrap();
        assert_eq!(s, r#"{"orbit":[[1,0],[0,1]],"bits":{"l1+":1},"genuine_parity":1}"#);
    }
}
