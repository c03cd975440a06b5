//! Young-diagram primitives.
//!
//! A [`Partition`] is stored as its column lengths `[c_0, ..., c_k]`. Rows are
//! obtained with [`transpose`]. Collapses act on row partitions, as is
//! customary for the B/C/D conditions.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&c| c == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts the entries decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&c| c > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `c_i`, or 0 past the end.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Sum of the parts with index at least `i`.
    pub fn tail_sum(&self, i: usize) -> usize {
        self.0.iter().skip(i).sum()
    }

    /// `true` when every partial sum of `self` is at least the matching partial
    /// sum of `other` (both of the same size).
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..n {
            a += self.get(i);
            b += other.get(i);
            if a < b {
                return false;
            }
        }
        a == b
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Sign of an epsilon-symmetric form: `Plus` is symmetric, `Minus` skew.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EpsSign {
    Plus,
    Minus,
}

impl EpsSign {
    pub fn from_int(v: i64) -> Option<Self> {
        match v {
            1 => Some(EpsSign::Plus),
            -1 => Some(EpsSign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            EpsSign::Plus => 1,
            EpsSign::Minus => -1,
        }
    }

    pub fn neg(self) -> Self {
        match self {
            EpsSign::Plus => EpsSign::Minus,
            EpsSign::Minus => EpsSign::Plus,
        }
    }

    /// `eps * (-1)^l`.
    pub fn shifted(self, l: usize) -> Self {
        if l % 2 == 0 {
            self
        } else {
            self.neg()
        }
    }
}

impl fmt::Display for EpsSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Target family of a row collapse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CollapseKind {
    /// odd orthogonal: even rows occur an even number of times, odd size
    B,
    /// symplectic: odd rows occur an even number of times, even size
    C,
    /// even orthogonal: even rows occur an even number of times, even size
    D,
}

impl CollapseKind {
    /// Collapse family of an eps-symmetric space of dimension `n`.
    pub fn for_space(eps: EpsSign, n: usize) -> Self {
        match (eps, n % 2) {
            (EpsSign::Minus, _) => CollapseKind::C,
            (EpsSign::Plus, 1) => CollapseKind::B,
            (EpsSign::Plus, _) => CollapseKind::D,
        }
    }

    fn letter(self) -> char {
        match self {
            CollapseKind::B => 'B',
            CollapseKind::C => 'C',
            CollapseKind::D => 'D',
        }
    }

    /// Parity (0 even, 1 odd) of the rows whose multiplicity must be even.
    fn restricted_parity(self) -> usize {
        match self {
            CollapseKind::C => 1,
            CollapseKind::B | CollapseKind::D => 0,
        }
    }

    fn size_ok(self, n: usize) -> bool {
        match self {
            CollapseKind::B => n % 2 == 1,
            CollapseKind::C | CollapseKind::D => n % 2 == 0,
        }
    }
}

pub fn transpose(p: &Partition) -> Partition {
    let first = p.get(0);
    let parts = (1..=first)
        .map(|j| p.parts().iter().take_while(|&&c| c >= j).count())
        .collect();
    Partition(parts)
}

/// Row-length multiplicities of the diagram with columns `p`: entry `j` is the
/// number of rows of length `j` (index 0 unused).
pub fn row_multiplicities(p: &Partition) -> Vec<usize> {
    let k = p.len();
    let mut m = vec![0; k + 1];
    for (j, slot) in m.iter_mut().enumerate().skip(1) {
        *slot = p.get(j - 1) - p.get(j);
    }
    m
}

/// Rows of the parity that must have even multiplicity for type `eps`:
/// even rows when `eps = +1`, odd rows when `eps = -1`.
fn restricted_row_parity(eps: EpsSign) -> usize {
    match eps {
        EpsSign::Plus => 0,
        EpsSign::Minus => 1,
    }
}

pub fn is_type_partition(p: &Partition, eps: EpsSign) -> bool {
    let bad = restricted_row_parity(eps);
    row_multiplicities(p)
        .iter()
        .enumerate()
        .skip(1)
        .all(|(j, &m)| j % 2 != bad || m % 2 == 0)
}

fn type_error(p: &Partition, eps: EpsSign) -> Error {
    Error::NotTypePartition {
        columns: p.parts().to_vec(),
        eps: eps.value(),
        parity: if restricted_row_parity(eps) == 0 { "even" } else { "odd" },
    }
}

pub fn require_type_partition(p: &Partition, eps: EpsSign) -> Result<()> {
    if is_type_partition(p, eps) {
        Ok(())
    } else {
        Err(type_error(p, eps))
    }
}

/// First violated condition of the preferred set, if any.
pub fn nil_p_violation(p: &Partition, eps: EpsSign, parity: u8) -> Option<String> {
    let par = usize::from(parity & 1);
    if let Some(i) = p.parts().iter().position(|c| c % 2 != par) {
        return Some(format!("c_{i} = {} does not have parity {parity}", p.get(i)));
    }
    for l in 0..p.len().saturating_sub(1) {
        if eps.shifted(l) == EpsSign::Plus && p.get(l) < p.get(l + 1) + 2 {
            return Some(format!(
                "fails c_l >= c_(l+1)+2 at l={l} with eps_l=+1 ({} < {}+2)",
                p.get(l),
                p.get(l + 1)
            ));
        }
    }
    None
}

pub fn in_nil_p(p: &Partition, eps: EpsSign, parity: u8) -> Result<bool> {
    require_type_partition(p, eps)?;
    Ok(nil_p_violation(p, eps, parity).is_none())
}

pub fn column_descent(p: &Partition) -> Partition {
    Partition(p.parts().iter().skip(1).copied().collect())
}

pub fn depth(p: &Partition) -> isize {
    p.len() as isize - 1
}

/// Largest row partition of the requested family dominated by `rows`.
pub fn type_collapse(rows: &Partition, kind: CollapseKind) -> Result<Partition> {
    let n = rows.size();
    if !kind.size_ok(n) {
        return Err(Error::CollapseSize {
            kind: kind.letter(),
            size: n,
        });
    }
    let bad = kind.restricted_parity();
    let mut r = rows.parts().to_vec();
    loop {
        let offender = r
            .iter()
            .copied()
            .filter(|&q| q % 2 == bad && r.iter().filter(|&&x| x == q).count() % 2 == 1)
            .max();
        let Some(q) = offender else { break };
        let i = r.iter().rposition(|&x| x == q).expect("offender is present");
        r[i] -= 1;
        match (i + 1..r.len()).find(|&j| r[j] < q - 1) {
            Some(j) => r[j] += 1,
            None => r.push(1),
        }
        r.retain(|&x| x > 0);
    }
    Ok(Partition(r))
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for c in (1..=rem.min(max)).rev() {
            cur.push(c);
            rec(rem - c, c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
