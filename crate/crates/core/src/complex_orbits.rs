//! Complex nilpotent orbits of orthogonal and symplectic Lie algebras.
//!
//! An orbit of the isometry group of an eps-symmetric space of dimension `n`
//! is labelled by a type-eps column partition of `n`.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use std::fmt;

use crate::diagrams::{
    column_descent, in_nil_p, is_type_partition, nil_p_violation, partitions_of,
    require_type_partition, transpose, type_collapse, CollapseKind, EpsSign, Partition,
};
use crate::error::{Error, Result};
use crate::real_orbits::{GroupFamily, SpaceKind};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplexOrbit {
    pub eps: EpsSign,
    pub dim_v: usize,
    pub columns: Partition,
}

impl ComplexOrbit {
    pub fn new(eps: EpsSign, columns: Partition) -> Result<Self> {
        require_type_partition(&columns, eps)?;
        Ok(ComplexOrbit {
            eps,
            dim_v: columns.size(),
            columns,
        })
    }

    pub fn zero(eps: EpsSign, n: usize) -> Result<Self> {
        let cols = if n == 0 { vec![] } else { vec![n] };
        ComplexOrbit::new(eps, Partition::new(cols)?)
    }

    pub fn depth(&self) -> isize {
        self.columns.len() as isize - 1
    }

    /// Orbit of the descent, living in the space of the opposite type.
    pub fn descent(&self) -> ComplexOrbit {
        let columns = column_descent(&self.columns);
        ComplexOrbit {
            eps: self.eps.neg(),
            dim_v: columns.size(),
            columns,
        }
    }
}

impl Serialize for ComplexOrbit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ComplexOrbit", 3)?;
        st.serialize_field("eps", &self.eps.value())?;
        st.serialize_field("dim", &self.dim_v)?;
        st.serialize_field("columns", &self.columns)?;
        st.end()
    }
}

impl fmt::Display for ComplexOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.columns)
    }
}

/// A half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn abs(self) -> HalfInt {
        HalfInt(self.0.abs())
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Element of the dual Cartan, taken modulo permutations and sign changes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InfinitesimalCharacter {
    pub entries: Vec<HalfInt>,
}

impl InfinitesimalCharacter {
    /// Dominant representative: absolute values in decreasing order.
    pub fn canonical(&self) -> Vec<HalfInt> {
        let mut v: Vec<HalfInt> = self.entries.iter().map(|h| h.abs()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn equivalent(&self, other: &InfinitesimalCharacter) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.canonical().iter().map(|h| h.to_string()).collect()
    }
}

impl Serialize for InfinitesimalCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl fmt::Display for InfinitesimalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

/// All type-eps partitions of `n`, in decreasing lexicographic order of columns.
pub fn enumerate_orbits(eps: EpsSign, n: usize) -> Vec<ComplexOrbit> {
    partitions_of(n)
        .into_iter()
        .filter(|p| is_type_partition(p, eps))
        .map(|columns| ComplexOrbit {
            eps,
            dim_v: n,
            columns,
        })
        .collect()
}

pub fn enumerate_nil_p(eps: EpsSign, n: usize, parity: u8) -> Vec<ComplexOrbit> {
    enumerate_orbits(eps, n)
        .into_iter()
        .filter(|o| nil_p_violation(&o.columns, eps, parity).is_none())
        .collect()
}

pub fn is_nil_p(o: &ComplexOrbit, parity: u8) -> bool {
    in_nil_p(&o.columns, o.eps, parity).unwrap_or(false)
}

/// `rho^{sign}_r` as twice-values.
fn rho(sign: EpsSign, r: usize) -> Vec<HalfInt> {
    let r = r as i64;
    let len = match sign {
        EpsSign::Plus => r / 2,
        EpsSign::Minus => (r + 1) / 2,
    };
    let top = match sign {
        EpsSign::Plus => r - 2,
        EpsSign::Minus => r,
    };
    (0..len).map(|i| HalfInt(top - 2 * i)).collect()
}

pub fn infinitesimal_character(o: &ComplexOrbit) -> InfinitesimalCharacter {
    let entries = o
        .columns
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(l, &c)| rho(o.eps.shifted(l), c))
        .collect();
    InfinitesimalCharacter { entries }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BvDual {
    pub dual: ComplexOrbit,
    pub half_h: InfinitesimalCharacter,
    /// `true` when the input lies in the preferred set for the parity of its
    /// dimension, the range on which `half_h` must match the orbit's character.
    pub checked: bool,
}

/// Half of the neutral element of an orbit with the given rows, written in
/// coordinates of a Cartan of rank `rank`.
pub fn half_neutral(rows: &Partition, rank: usize) -> InfinitesimalCharacter {
    let mut weights: Vec<i64> = rows
        .parts()
        .iter()
        .flat_map(|&r| {
            let r = r as i64;
            (0..r).map(move |i| r - 1 - 2 * i)
        })
        .collect();
    weights.sort_unstable_by(|a, b| b.cmp(a));
    InfinitesimalCharacter {
        entries: weights.into_iter().take(rank).map(HalfInt).collect(),
    }
}

pub fn bv_dual(o: &ComplexOrbit) -> Result<BvDual> {
    let n = o.dim_v;
    let cols = o.columns.clone();
    let (dual_eps, dual_rows) = match CollapseKind::for_space(o.eps, n) {
        CollapseKind::C => {
            let mut r = cols.into_parts();
            if r.is_empty() {
                r.push(1);
            } else {
                r[0] += 1;
            }
            (EpsSign::Plus, type_collapse(&Partition::new(r)?, CollapseKind::B)?)
        }
        CollapseKind::B => {
            let mut r = cols.into_parts();
            let last = r.len() - 1;
            r[last] -= 1;
            (
                EpsSign::Minus,
                type_collapse(&Partition::from_unsorted(r), CollapseKind::C)?,
            )
        }
        CollapseKind::D => (EpsSign::Plus, type_collapse(&cols, CollapseKind::D)?),
    };
    let dual = ComplexOrbit::new(dual_eps, transpose(&dual_rows))?;
    let half_h = half_neutral(&dual_rows, n / 2);
    let checked = is_nil_p(o, (n % 2) as u8);
    Ok(BvDual {
        dual,
        half_h,
        checked,
    })
}

/// Column-level collapse: the largest type-eps orbit whose rows are dominated
/// by the rows of `columns`.
pub fn column_collapse(columns: &Partition, eps: EpsSign) -> Result<Partition> {
    let kind = CollapseKind::for_space(eps, columns.size());
    Ok(transpose(&type_collapse(&transpose(columns), kind)?))
}

/// Theta lift of an orbit of the (-eps)-space `V'` to an eps-space of
/// dimension `dim_v`.
///
/// `M(M'^{-1}(closure of O'))` is the union of the orbits `O` of `V` that lie
/// in the image of `M` and whose generalized descent lies in the closure of
/// `O'`, because the generalized descent is the smallest orbit of
/// `M'(M^{-1}(O))`. The lift is the unique maximal such `O`. When
/// `dim_v - dim V' >= c'_0` this is `O'` with a new first column of that length.
pub fn theta_lift_complex(o_prime: &ComplexOrbit, dim_v: usize) -> Result<ComplexOrbit> {
    let eps = o_prime.eps.neg();
    let m = o_prime.dim_v;
    if eps == EpsSign::Minus && dim_v % 2 == 1 {
        return Err(Error::NoLift(format!(
            "a skew-symmetric space cannot have odd dimension {dim_v}"
        )));
    }
    let target_rows = transpose(&o_prime.columns);
    let candidates: Vec<Partition> = enumerate_orbits(eps, dim_v)
        .into_iter()
        .filter(|o| {
            gen_descent_complex(o, m)
                .is_ok_and(|d| target_rows.dominates(&transpose(&d.columns)))
        })
        .map(|o| transpose(&o.columns))
        .collect();
    let top = candidates
        .iter()
        .find(|r| candidates.iter().all(|c| r.dominates(c)))
        .ok_or_else(|| {
            Error::NoLift(format!(
                "no unique maximal orbit of dimension {dim_v} over {}",
                o_prime.columns
            ))
        })?;
    ComplexOrbit::new(eps, transpose(top))
}

/// Lift by prepending `dim_v - dim V'` as a new column, valid when that
/// number is at least `c'_0`.
pub fn prepend_column(o_prime: &ComplexOrbit, dim_v: usize) -> Option<ComplexOrbit> {
    let a = dim_v.checked_sub(o_prime.dim_v)?;
    if a < o_prime.columns.get(0) {
        return None;
    }
    let mut cols = o_prime.columns.parts().to_vec();
    cols.insert(0, a);
    ComplexOrbit::new(o_prime.eps.neg(), Partition::from_unsorted(cols)).ok()
}

pub fn gen_descent_complex(o: &ComplexOrbit, dim_v_prime: usize) -> Result<ComplexOrbit> {
    let tail = o.columns.tail_sum(1);
    if dim_v_prime < tail {
        return Err(Error::NoGeneralizedDescent(format!(
            "dim V' = {dim_v_prime} is smaller than the sum {tail} of c_1, c_2, ..."
        )));
    }
    let mut cols: Vec<usize> = o.columns.parts().iter().skip(1).copied().collect();
    let surplus = dim_v_prime - tail;
    if cols.is_empty() {
        cols.push(surplus);
    } else {
        cols[0] += surplus;
    }
    let eps = o.eps.neg();
    let cols = Partition::from_unsorted(cols);
    if !is_type_partition(&cols, eps) {
        return Err(Error::NoGeneralizedDescent(format!(
            "{cols} is not of type {eps} for dim V' = {dim_v_prime}"
        )));
    }
    ComplexOrbit::new(eps, cols)
}

pub fn good_for_gen_descent(o: &ComplexOrbit) -> bool {
    o.columns.len() >= 2 && o.columns.get(0) == o.columns.get(1)
}

/// Orbit induced from `o` (columns `[c_1, ..., c_k]`) through the parabolic
/// stabilizing an isotropic subspace of dimension `l`.
pub fn induce_complex(o: &ComplexOrbit, l: usize, ambient: SpaceKind) -> Result<ComplexOrbit> {
    if ambient.eps != o.eps {
        return Err(Error::Kind(format!(
            "orbit of type {} induced inside a form of type {}",
            o.eps, ambient.eps
        )));
    }
    let c1 = o.columns.get(0);
    if l == 0 || l < c1 {
        return Err(Error::Induction(format!("requires l >= c_1 and l > 0, got l={l}, c_1={c1}")));
    }
    let mut cols = o.columns.parts().to_vec();
    if ambient.family() == GroupFamily::RealOrthogonal {
        if (l - c1) % 2 == 0 {
            return Err(Error::Induction(format!(
                "real orthogonal ambient needs l - c_1 odd, got l={l}, c_1={c1}"
            )));
        }
        cols.insert(0, l - 1);
        cols.insert(0, l + 1);
    } else {
        cols.insert(0, l);
        cols.insert(0, l);
    }
    ComplexOrbit::new(o.eps, Partition::from_unsorted(cols))
}

/// Dimension of the Lie algebra of the isometry group of an eps-space.
pub fn lie_algebra_dim(eps: EpsSign, n: usize) -> usize {
    match eps {
        EpsSign::Plus => n * n.saturating_sub(1) / 2,
        EpsSign::Minus => n * (n + 1) / 2,
    }
}

/// Centralizer dimension from the column lengths and the number of odd rows.
pub fn centralizer_dim(o: &ComplexOrbit) -> usize {
    let sq: usize = o.columns.parts().iter().map(|c| c * c).sum();
    let odd_rows: usize = transpose(&o.columns)
        .parts()
        .iter()
        .filter(|r| *r % 2 == 1)
        .count();
    match o.eps {
        EpsSign::Plus => (sq - odd_rows) / 2,
        EpsSign::Minus => (sq + odd_rows) / 2,
    }
}

pub fn orbit_dimension(o: &ComplexOrbit) -> usize {
    lie_algebra_dim(o.eps, o.dim_v) - centralizer_dim(o)
}
