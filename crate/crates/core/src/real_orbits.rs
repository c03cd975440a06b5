//! Real forms, signed column diagrams and K-orbits.
//!
//! A K-orbit on the nilpotent cone of `p` is labelled by the signatures
//! `[d_0, ..., d_k]` of the kernel subquotients `Ker X^{l+1} / Ker X^l`.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use crate::complex_orbits::ComplexOrbit;
use crate::diagrams::{EpsSign, Partition};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
}

impl Signature {
    pub const ZERO: Signature = Signature { plus: 0, minus: 0 };

    pub fn new(plus: usize, minus: usize) -> Self {
        Signature { plus, minus }
    }

    pub fn dual(self) -> Self {
        Signature::new(self.minus, self.plus)
    }

    pub fn size(self) -> usize {
        self.plus + self.minus
    }

    pub fn is_zero(self) -> bool {
        self.size() == 0
    }

    pub fn geq(self, other: Signature) -> bool {
        signature_geq(self, other)
    }

    pub fn checked_sub(self, other: Signature) -> Option<Signature> {
        Some(Signature::new(
            self.plus.checked_sub(other.plus)?,
            self.minus.checked_sub(other.minus)?,
        ))
    }
}

impl Add for Signature {
    type Output = Signature;
    fn add(self, o: Signature) -> Signature {
        Signature::new(self.plus + o.plus, self.minus + o.minus)
    }
}

impl Sub for Signature {
    type Output = Signature;
    fn sub(self, o: Signature) -> Signature {
        self.checked_sub(o).expect("signature subtraction underflow")
    }
}

impl std::iter::Sum for Signature {
    fn sum<I: Iterator<Item = Signature>>(iter: I) -> Signature {
        iter.fold(Signature::ZERO, Add::add)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.plus, self.minus)
    }
}

pub fn signature_geq(a: Signature, b: Signature) -> bool {
    a.plus >= b.plus && a.minus >= b.minus
}

/// The four real classical groups attached to an (eps, eps_dot)-space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupFamily {
    RealOrthogonal,
    QuaternionicOrthogonal,
    QuaternionicSymplectic,
    RealSymplectic,
}

impl GroupFamily {
    pub fn name(self) -> &'static str {
        match self {
            GroupFamily::RealOrthogonal => "real orthogonal",
            GroupFamily::QuaternionicOrthogonal => "quaternionic orthogonal",
            GroupFamily::QuaternionicSymplectic => "quaternionic symplectic",
            GroupFamily::RealSymplectic => "real symplectic",
        }
    }

    pub fn is_quaternionic(self) -> bool {
        matches!(
            self,
            GroupFamily::QuaternionicOrthogonal | GroupFamily::QuaternionicSymplectic
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceKind {
    pub eps: EpsSign,
    pub eps_dot: EpsSign,
}

impl SpaceKind {
    pub fn new(eps: EpsSign, eps_dot: EpsSign) -> Self {
        SpaceKind { eps, eps_dot }
    }

    pub fn of_family(f: GroupFamily) -> Self {
        use EpsSign::*;
        match f {
            GroupFamily::RealOrthogonal => SpaceKind::new(Plus, Plus),
            GroupFamily::QuaternionicOrthogonal => SpaceKind::new(Plus, Minus),
            GroupFamily::QuaternionicSymplectic => SpaceKind::new(Minus, Plus),
            GroupFamily::RealSymplectic => SpaceKind::new(Minus, Minus),
        }
    }

    pub fn family(self) -> GroupFamily {
        use EpsSign::*;
        match (self.eps, self.eps_dot) {
            (Plus, Plus) => GroupFamily::RealOrthogonal,
            (Plus, Minus) => GroupFamily::QuaternionicOrthogonal,
            (Minus, Plus) => GroupFamily::QuaternionicSymplectic,
            (Minus, Minus) => GroupFamily::RealSymplectic,
        }
    }

    pub fn opposite(self) -> Self {
        SpaceKind::new(self.eps.neg(), self.eps_dot.neg())
    }

    /// Kind of the level-`l` multiplicity space: `((-1)^l eps, (-1)^l eps_dot)`.
    pub fn shifted(self, l: usize) -> Self {
        if l % 2 == 0 {
            self
        } else {
            self.opposite()
        }
    }

    pub fn signature_violation(self, s: Signature) -> Option<&'static str> {
        match self.family() {
            GroupFamily::RealOrthogonal => None,
            GroupFamily::RealSymplectic | GroupFamily::QuaternionicOrthogonal => {
                (s.plus != s.minus).then_some("components must be equal")
            }
            GroupFamily::QuaternionicSymplectic => {
                (s.plus % 2 == 1 || s.minus % 2 == 1).then_some("components must be even")
            }
        }
    }

    pub fn is_legal(self, s: Signature) -> bool {
        self.signature_violation(s).is_none()
    }

    /// All legal signatures of spaces of this kind with dimension `n`,
    /// in decreasing order of the plus component.
    pub fn legal_signatures(self, n: usize) -> Vec<Signature> {
        (0..=n)
            .rev()
            .map(|p| Signature::new(p, n - p))
            .filter(|&s| self.is_legal(s))
            .collect()
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family().name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealForm {
    pub kind: SpaceKind,
    pub signature: Signature,
}

impl RealForm {
    pub fn new(kind: SpaceKind, signature: Signature) -> Result<Self> {
        if let Some(reason) = kind.signature_violation(signature) {
            return Err(Error::IllegalSignature {
                plus: signature.plus,
                minus: signature.minus,
                form: kind.family().name().to_string(),
                reason,
            });
        }
        Ok(RealForm { kind, signature })
    }

    pub fn dim(&self) -> usize {
        self.signature.size()
    }

    pub fn family(&self) -> GroupFamily {
        self.kind.family()
    }

    /// All forms of a kind and dimension.
    pub fn all_of(kind: SpaceKind, n: usize) -> Vec<RealForm> {
        kind.legal_signatures(n)
            .into_iter()
            .map(|signature| RealForm { kind, signature })
            .collect()
    }

    /// Human-readable name: O(p,q), Sp(2n,R), O*(2n) or Sp(p,q).
    pub fn alias(&self) -> String {
        let s = self.signature;
        match self.family() {
            GroupFamily::RealOrthogonal => format!("O({},{})", s.plus, s.minus),
            GroupFamily::RealSymplectic => format!("Sp({},R)", s.size()),
            GroupFamily::QuaternionicOrthogonal => format!("O*({})", s.size()),
            GroupFamily::QuaternionicSymplectic => format!("Sp({},{})", s.plus / 2, s.minus / 2),
        }
    }
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.alias())
    }
}

impl FromStr for RealForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Kind(format!("unknown form `{s}`; expected O(p,q), Sp(2n,R), O*(2n) or Sp(p,q)"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = |prefix: &str| -> Option<Vec<String>> {
            let rest = t.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(rest.split(',').map(str::to_string).collect())
        };
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        if let Some(args) = inner("O*") {
            let [n] = args.as_slice() else { return Err(bad()) };
            let n = num(n)?;
            if n % 2 == 1 {
                return Err(Error::IllegalSignature {
                    plus: n,
                    minus: 0,
                    form: "O*".into(),
                    reason: "dimension must be even",
                });
            }
            let kind = SpaceKind::of_family(GroupFamily::QuaternionicOrthogonal);
            return RealForm::new(kind, Signature::new(n / 2, n / 2));
        }
        if let Some(args) = inner("Sp") {
            return match args.as_slice() {
                [n, r] if r == "R" => {
                    let n = num(n)?;
                    if n % 2 == 1 {
                        return Err(Error::IllegalSignature {
                            plus: n,
                            minus: 0,
                            form: "Sp(2n,R)".into(),
                            reason: "dimension must be even",
                        });
                    }
                    let kind = SpaceKind::of_family(GroupFamily::RealSymplectic);
                    RealForm::new(kind, Signature::new(n / 2, n / 2))
                }
                [p, q] => {
                    let kind = SpaceKind::of_family(GroupFamily::QuaternionicSymplectic);
                    RealForm::new(kind, Signature::new(2 * num(p)?, 2 * num(q)?))
                }
                _ => Err(bad()),
            };
        }
        if let Some(args) = inner("O") {
            let [p, q] = args.as_slice() else { return Err(bad()) };
            let kind = SpaceKind::of_family(GroupFamily::RealOrthogonal);
            return RealForm::new(kind, Signature::new(num(p)?, num(q)?));
        }
        Err(bad())
    }
}

impl Serialize for RealForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RealForm", 4)?;
        st.serialize_field("name", &self.alias())?;
        st.serialize_field("eps", &self.kind.eps.value())?;
        st.serialize_field("eps_dot", &self.kind.eps_dot.value())?;
        st.serialize_field("signature", &[self.signature.plus, self.signature.minus])?;
        st.end()
    }
}

pub fn is_signed_diagram(cols: &[Signature]) -> bool {
    cols.iter().all(|d| !d.is_zero()) && cols.windows(2).all(|w| w[0].geq(w[1].dual()))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedDiagram {
    cols: Vec<Signature>,
}

impl SignedDiagram {
    pub fn new(cols: Vec<Signature>) -> Result<Self> {
        if !is_signed_diagram(&cols) {
            let shown: Vec<String> = cols.iter().map(|s| s.to_string()).collect();
            return Err(Error::NotSignedDiagram(format!(
                "[{}] violates d_l >= dual(d_(l+1)) or has a zero column",
                shown.join("|")
            )));
        }
        Ok(SignedDiagram { cols })
    }

    pub fn empty() -> Self {
        SignedDiagram { cols: Vec::new() }
    }

    pub fn cols(&self) -> &[Signature] {
        &self.cols
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn depth(&self) -> isize {
        self.cols.len() as isize - 1
    }

    pub fn underlying_partition(&self) -> Partition {
        Partition::new(self.cols.iter().map(|d| d.size()).collect())
            .expect("signed diagrams have weakly decreasing column sizes")
    }

    pub fn total_signature(&self) -> Signature {
        self.cols.iter().copied().sum()
    }

    /// Sum of the columns with index at least `i`.
    pub fn tail_signature(&self, i: usize) -> Signature {
        self.cols.iter().skip(i).copied().sum()
    }

    /// Signature of the multiplicity space at each level `0..=k`.
    pub fn multiplicity_signatures(&self) -> Vec<Signature> {
        let at = |i: usize| self.cols.get(i).copied().unwrap_or(Signature::ZERO);
        (0..self.cols.len())
            .map(|l| {
                if l % 2 == 0 {
                    at(l) - at(l + 1).dual()
                } else {
                    at(l).dual() - at(l + 1)
                }
            })
            .collect()
    }
}

impl fmt::Display for SignedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.cols.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", shown.join("|"))
    }
}

impl FromStr for SignedDiagram {
    type Err = Error;

    /// Parses `p,m|p,m|...`; the empty string is the empty diagram.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SignedDiagram::empty());
        }
        let cols = s
            .split('|')
            .map(|c| {
                let parts: Vec<&str> = c.split(',').map(str::trim).collect();
                match parts.as_slice() {
                    [p, m] => match (p.parse(), m.parse()) {
                        (Ok(p), Ok(m)) => Ok(Signature::new(p, m)),
                        _ => Err(Error::NotSignedDiagram(format!("bad column `{c}`"))),
                    },
                    _ => Err(Error::NotSignedDiagram(format!("bad column `{c}`, expected p,m"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SignedDiagram::new(cols)
    }
}

impl Serialize for SignedDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<[usize; 2]> = self.cols.iter().map(|d| [d.plus, d.minus]).collect();
        v.serialize(s)
    }
}

/// Multiplicity signatures paired with their level, for display and tests.
pub fn multiplicity_signatures(d: &SignedDiagram) -> Vec<(usize, Signature)> {
    d.multiplicity_signatures().into_iter().enumerate().collect()
}

/// First level whose multiplicity signature is illegal for its kind.
pub fn realizability_violation(d: &SignedDiagram, kind: SpaceKind) -> Option<String> {
    d.multiplicity_signatures()
        .into_iter()
        .enumerate()
        .find_map(|(l, s)| {
            let lk = kind.shifted(l);
            lk.signature_violation(s)
                .map(|why| format!("level {l} multiplicity signature {s} for {lk} kind: {why}"))
        })
}

pub fn is_realizable(d: &SignedDiagram, kind: SpaceKind) -> bool {
    realizability_violation(d, kind).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KOrbit {
    pub form: RealForm,
    pub diagram: SignedDiagram,
}

impl KOrbit {
    pub fn new(form: RealForm, diagram: SignedDiagram) -> Result<Self> {
        if diagram.total_signature() != form.signature {
            return Err(Error::Dimension(format!(
                "diagram {diagram} has total signature {} but {form} has {}",
                diagram.total_signature(),
                form.signature
            )));
        }
        if let Some(why) = realizability_violation(&diagram, form.kind) {
            return Err(Error::NotRealizable(why));
        }
        Ok(KOrbit { form, diagram })
    }

    pub fn complex_orbit(&self) -> ComplexOrbit {
        ComplexOrbit::new(self.form.kind.eps, self.diagram.underlying_partition())
            .expect("realizable diagrams have type-eps shape")
    }

    /// The descended orbit inside the space of the opposite kind whose
    /// signature is the sum of `d_1, d_2, ...`.
    pub fn descent(&self) -> KOrbit {
        let diagram = signed_descent(&self.diagram);
        let form = RealForm::new(self.form.kind.opposite(), diagram.total_signature())
            .expect("descent of a realizable diagram has a legal signature");
        KOrbit { form, diagram }
    }
}

impl Serialize for KOrbit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("KOrbit", 2)?;
        st.serialize_field("form", &self.form)?;
        st.serialize_field("diagram", &self.diagram)?;
        st.end()
    }
}

/// Rebuilds the columns from multiplicity signatures, top level first.
fn diagram_from_multiplicities(m: &[Signature]) -> Vec<Signature> {
    let k = m.len();
    let mut cols = vec![Signature::ZERO; k];
    let mut next = Signature::ZERO;
    for l in (0..k).rev() {
        cols[l] = if l % 2 == 0 {
            m[l] + next.dual()
        } else {
            (m[l] + next).dual()
        };
        next = cols[l];
    }
    cols
}

pub fn enumerate_k_orbits(form: &RealForm, o: &ComplexOrbit) -> Result<Vec<KOrbit>> {
    if form.kind.eps != o.eps {
        return Err(Error::Kind(format!(
            "orbit of type {} cannot lie in {form} of type {}",
            o.eps, form.kind.eps
        )));
    }
    if form.dim() != o.dim_v {
        return Err(Error::Dimension(format!(
            "orbit of size {} does not fit {form} of dimension {}",
            o.dim_v,
            form.dim()
        )));
    }
    let c = &o.columns;
    let k = c.len();
    let choices: Vec<Vec<Signature>> = (0..k)
        .map(|l| form.kind.shifted(l).legal_signatures(c.get(l) - c.get(l + 1)))
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![Signature::ZERO; k];
    fn rec(
        l: usize,
        choices: &[Vec<Signature>],
        pick: &mut Vec<Signature>,
        form: &RealForm,
        out: &mut Vec<KOrbit>,
    ) {
        if l == choices.len() {
            let cols = diagram_from_multiplicities(pick);
            if cols.iter().copied().sum::<Signature>() == form.signature {
                let diagram = SignedDiagram { cols };
                debug_assert!(is_signed_diagram(diagram.cols()));
                out.push(KOrbit {
                    form: *form,
                    diagram,
                });
            }
            return;
        }
        for &s in &choices[l] {
            pick[l] = s;
            rec(l + 1, choices, pick, form, out);
        }
    }
    rec(0, &choices, &mut pick, form, &mut out);
    out.sort_by(|a, b| b.diagram.cmp(&a.diagram));
    Ok(out)
}

pub fn signed_descent(d: &SignedDiagram) -> SignedDiagram {
    SignedDiagram {
        cols: d.cols.iter().skip(1).copied().collect(),
    }
}

pub fn gen_descent_signed(d: &SignedDiagram, sig_v_prime: Signature) -> Result<SignedDiagram> {
    let tail = d.tail_signature(1);
    let Some(s) = sig_v_prime.checked_sub(tail) else {
        return Err(Error::NoGeneralizedDescent(format!(
            "sign V' = ({sig_v_prime}) does not dominate d_1+...+d_k = ({tail})"
        )));
    };
    let mut cols: Vec<Signature> = d.cols.iter().skip(1).copied().collect();
    match cols.first_mut() {
        Some(first) => *first = *first + s,
        None if !s.is_zero() => cols.push(s),
        None => {}
    }
    Ok(SignedDiagram { cols })
}

/// Induced K-orbits `[d_1+s(+(1,1)), dual(d_1)+dual(s), d_1, ..., d_k]`
/// together with the index of the component-group map.
pub fn induce_real(
    d: &SignedDiagram,
    l: usize,
    ambient: SpaceKind,
) -> Result<Vec<(SignedDiagram, u8)>> {
    if let Some(why) = realizability_violation(d, ambient) {
        return Err(Error::NotRealizable(why));
    }
    let d1 = d.cols.first().copied().unwrap_or(Signature::ZERO);
    let c1 = d1.size();
    if l == 0 || l < c1 {
        return Err(Error::Induction(format!("requires l >= c_1 and l > 0, got l={l}, c_1={c1}")));
    }
    let build = |first: Signature, second: Signature| {
        let mut cols = vec![first, second];
        cols.extend(d.cols.iter().copied());
        cols.retain(|c| !c.is_zero());
        SignedDiagram::new(cols)
    };
    if ambient.family() == GroupFamily::RealOrthogonal {
        if (l - c1) % 2 == 0 {
            return Err(Error::Induction(format!(
                "real orthogonal ambient needs l - c_1 odd, got l={l}, c_1={c1}"
            )));
        }
        let h = (l - c1 - 1) / 2;
        let s = Signature::new(h, h);
        let out = build(d1 + s + Signature::new(1, 1), d1.dual() + s.dual())?;
        return Ok(vec![(out, 2)]);
    }
    let svals = ambient.opposite().legal_signatures(l - c1);
    if svals.is_empty() {
        return Err(Error::Induction(format!(
            "no legal signature of dimension l - c_1 = {} for the {} kind",
            l - c1,
            ambient.opposite()
        )));
    }
    let mut out = svals
        .into_iter()
        .map(|s| build(d1 + s, d1.dual() + s.dual()).map(|x| (x, 1)))
        .collect::<Result<Vec<_>>>()?;
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, m: usize) -> Signature {
        Signature::new(p, m)
    }

    fn dg(s: &str) -> SignedDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn geq_examples() {
        assert!(signature_geq(sig(2, 1), sig(1, 1)));
        assert!(!signature_geq(sig(2, 0), sig(1, 1)));
        assert!(signature_geq(sig(0, 0), sig(0, 0)));
    }

    #[test]
    fn signed_diagram_examples() {
        assert!(is_signed_diagram(&[sig(1, 0), sig(0, 1)]));
        assert!(!is_signed_diagram(&[sig(1, 0), sig(1, 0)]));
        assert!(is_signed_diagram(&[]));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(dg("1,0|0,1").multiplicity_signatures(), vec![sig(0, 0), sig(1, 0)]);
        assert_eq!(dg("2,1").multiplicity_signatures(), vec![sig(2, 1)]);
        assert_eq!(dg("1,1|1,1").multiplicity_signatures(), vec![sig(0, 0), sig(1, 1)]);
    }

    #[test]
    fn realizable_examples() {
        let rs = SpaceKind::of_family(GroupFamily::RealSymplectic);
        let qs = SpaceKind::of_family(GroupFamily::QuaternionicSymplectic);
        assert!(is_realizable(&dg("1,0|0,1"), rs));
        assert!(!is_realizable(&dg("1,0"), qs));
    }

    #[test]
    fn form_aliases_round_trip() {
        for s in ["O(3,2)", "Sp(4,R)", "O*(4)", "Sp(1,1)", "O(0,0)"] {
            let f: RealForm = s.parse().unwrap();
            assert_eq!(f.alias(), s);
        }
        assert!("Sp(3,R)".parse::<RealForm>().is_err());
        assert!("U(2,1)".parse::<RealForm>().is_err());
        let f: RealForm = "Sp(1,1)".parse().unwrap();
        assert_eq!(f.signature, sig(2, 2));
    }

    #[test]
    fn k_orbit_examples() {
        let sp2: RealForm = "Sp(2,R)".parse().unwrap();
        let o = ComplexOrbit::new(EpsSign::Minus, Partition::new(vec![1, 1]).unwrap()).unwrap();
        let ks: Vec<String> = enumerate_k_orbits(&sp2, &o)
            .unwrap()
            .iter()
            .map(|k| k.diagram.to_string())
            .collect();
        assert_eq!(ks, ["1,0|0,1", "0,1|1,0"]);

        let sp4: RealForm = "Sp(4,R)".parse().unwrap();
        let o = ComplexOrbit::new(EpsSign::Minus, Partition::new(vec![2, 2]).unwrap()).unwrap();
        let ks: Vec<String> = enumerate_k_orbits(&sp4, &o)
            .unwrap()
            .iter()
            .map(|k| k.diagram.to_string())
            .collect();
        assert_eq!(ks, ["2,0|0,2", "1,1|1,1", "0,2|2,0"]);

        let o32: RealForm = "O(3,2)".parse().unwrap();
        let z = ComplexOrbit::zero(EpsSign::Plus, 5).unwrap();
        let ks = enumerate_k_orbits(&o32, &z).unwrap();
        assert_eq!(ks.len(), 1);
        assert_eq!(ks[0].diagram.to_string(), "3,2");
    }

    #[test]
    fn descent_examples() {
        assert_eq!(signed_descent(&dg("1,0|0,1")), dg("0,1"));
        assert_eq!(signed_descent(&dg("2,1")), dg(""));
        assert_eq!(signed_descent(&dg("2,0|0,2|1,0")), dg("0,2|1,0"));
        assert_eq!(gen_descent_signed(&dg("1,0|0,1"), sig(2, 1)).unwrap(), dg("2,1"));
        assert_eq!(gen_descent_signed(&dg("1,0|0,1"), sig(0, 1)).unwrap(), dg("0,1"));
        assert_eq!(gen_descent_signed(&dg("2,1"), sig(1, 1)).unwrap(), dg("1,1"));
        assert!(gen_descent_signed(&dg("1,0|0,1"), sig(1, 0)).is_err());
    }

    #[test]
    fn induce_examples() {
        let rs = SpaceKind::of_family(GroupFamily::RealSymplectic);
        let ro = SpaceKind::of_family(GroupFamily::RealOrthogonal);
        let qs = SpaceKind::of_family(GroupFamily::QuaternionicSymplectic);
        let got = induce_real(&dg("1,1"), 3, rs).unwrap();
        assert_eq!(got, vec![(dg("2,1|1,2|1,1"), 1), (dg("1,2|2,1|1,1"), 1)]);
        let got = induce_real(&dg("1,0"), 2, ro).unwrap();
        assert_eq!(got, vec![(dg("2,1|0,1|1,0"), 2)]);
        let got = induce_real(&dg("2,0"), 2, qs).unwrap();
        assert_eq!(got, vec![(dg("2,0|0,2|2,0"), 1)]);
        assert!(induce_real(&dg("1,0"), 3, ro).is_err());
    }
}
