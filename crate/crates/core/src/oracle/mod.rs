//! Exact matrix models of nilpotent elements.
//!
//! Every space is written in a basis adapted to its form: basis vectors are
//! paired by a signed permutation Gram matrix, and for real forms they are
//! eigenvectors of the Cartan involution `L`. The eigenvalue of `L` on a basis
//! vector is recorded as a sign, which stands for `+1/-1` when `L^2 = 1` and
//! for `+i/-i` when `L^2 = -1`. With these choices every matrix that occurs
//! has integer entries, so ranks are computed exactly over the integers.

mod arith;
mod graded;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::complex_orbits::{enumerate_orbits, ComplexOrbit};
use crate::diagrams::{is_type_partition, transpose, EpsSign, Partition};
use crate::error::{Error, Result};
use crate::real_orbits::{RealForm, Signature, SignedDiagram};

use arith::{kernel_dims, kernel_profile, IMat};
pub use graded::{k_orbit_models, LiftSample, LiftSampler};

/// Seeded sampling parameters shared by the randomized checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Random entries are drawn uniformly from `[-bound, bound]`.
    pub bound: i64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            bound: 5,
            seed: 20_240_601,
        }
    }
}

/// A rational matrix together with the Gram matrix of the form it respects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    pub entries: Vec<Vec<BigRational>>,
    pub gram: Vec<Vec<BigRational>>,
}

fn to_rational_rows(m: &IMat) -> Vec<Vec<BigRational>> {
    (0..m.rows)
        .map(|i| {
            (0..m.cols)
                .map(|j| BigRational::from_integer(BigInt::from(*m.get(i, j))))
                .collect()
        })
        .collect()
}

/// Integer matrix proportional to a rational one (same kernels and ranks).
fn scaled_integer(rows: &[Vec<BigRational>]) -> Result<IMat> {
    let n = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != c) {
        return Err(Error::Oracle("ragged matrix".into()));
    }
    let lcm = rows
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out = IMat::zeros(n, c);
    let mut big = false;
    let mut data = Vec::with_capacity(n * c);
    for x in rows.iter().flatten() {
        let v = x.numer() * (&lcm / x.denom());
        data.push(v);
    }
    for (k, v) in data.iter().enumerate() {
        match i128::try_from(v) {
            Ok(s) => out.data[k] = s,
            Err(_) => big = true,
        }
    }
    if big {
        return Err(Error::Oracle("matrix entries exceed 128 bits".into()));
    }
    Ok(out)
}

impl ExactMatrix {
    pub(crate) fn from_int(entries: &IMat, gram: &IMat) -> Self {
        ExactMatrix {
            entries: to_rational_rows(entries),
            gram: to_rational_rows(gram),
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// `X^t G + G X = 0`.
    pub fn is_form_compatible(&self) -> bool {
        let n = self.size();
        if self.gram.len() != n {
            return false;
        }
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut s = BigRational::zero();
                for k in 0..n {
                    s += &self.entries[k][i] * &self.gram[k][j];
                    s += &self.gram[i][k] * &self.entries[k][j];
                }
                s.is_zero()
            })
        })
    }

    pub(crate) fn integer_entries(&self) -> Result<IMat> {
        scaled_integer(&self.entries)
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings = |m: &Vec<Vec<BigRational>>| -> Vec<Vec<String>> {
            m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
        };
        let mut st = s.serialize_struct("ExactMatrix", 2)?;
        st.serialize_field("entries", &strings(&self.entries))?;
        st.serialize_field("gram", &strings(&self.gram))?;
        st.end()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Nilpotent element of the split form-compatible algebra with the given
/// column partition.
///
/// A row of length `r` becomes one Jordan block with the form
/// `<e_i, e_j> = (-1)^i [i + j = r + 1]` when that form has the right
/// symmetry, and otherwise two rows of length `r` become a block pair with
/// `<e_i, f_j> = (-1)^i [i + j = r + 1]` and `<f_j, e_i> = eps <e_i, f_j>`.
pub fn jordan_model(eps: EpsSign, columns: &Partition) -> Result<ExactMatrix> {
    if !is_type_partition(columns, eps) {
        return Err(Error::NotTypePartition {
            columns: columns.parts().to_vec(),
            eps: eps.value(),
            parity: if eps == EpsSign::Plus { "even" } else { "odd" },
        });
    }
    let (x, g) = jordan_model_int(eps, columns);
    Ok(ExactMatrix::from_int(&x, &g))
}

pub(crate) fn jordan_model_int(eps: EpsSign, columns: &Partition) -> (IMat, IMat) {
    let rows = transpose(columns);
    let n = columns.size();
    let mut x = IMat::zeros(n, n);
    let mut g = IMat::zeros(n, n);
    let e = eps.value() as i128;
    let sign = |i: usize| if i % 2 == 0 { 1 } else { -1 };
    let single_ok = |r: usize| (eps == EpsSign::Plus) == (r % 2 == 1);
    let mut start = 0;
    let mut parts = rows.parts().iter().copied().peekable();
    while let Some(r) = parts.next() {
        for i in 0..r.saturating_sub(1) {
            x.set(start + i + 1, start + i, 1);
        }
        if single_ok(r) {
            for i in 0..r {
                g.set(start + i, start + r - 1 - i, sign(i + 1));
            }
            start += r;
        } else {
            let other = parts.next();
            debug_assert_eq!(other, Some(r), "type partitions pair these rows");
            let f = start + r;
            for i in 0..r.saturating_sub(1) {
                x.set(f + i + 1, f + i, 1);
            }
            for i in 0..r {
                let j = r - 1 - i;
                g.set(start + i, f + j, sign(i + 1));
                g.set(f + j, start + i, e * sign(i + 1));
            }
            start += 2 * r;
        }
    }
    (x, g)
}

fn columns_from_kernel_dims(dims: &[usize]) -> Partition {
    let parts: Vec<usize> = dims.windows(2).map(|w| w[1] - w[0]).filter(|&c| c > 0).collect();
    Partition::new(parts).expect("kernel increments of a nilpotent map decrease")
}

pub(crate) fn partition_of_int(x: &IMat) -> Option<Partition> {
    kernel_dims(x).map(|d| columns_from_kernel_dims(&d))
}

/// Columns `c_l = dim Ker X^(l+1) - dim Ker X^l` of a nilpotent matrix.
pub fn partition_from_matrix(x: &ExactMatrix) -> Result<Partition> {
    let m = x.integer_entries()?;
    if m.rows != m.cols {
        return Err(Error::Oracle("matrix is not square".into()));
    }
    partition_of_int(&m).ok_or_else(|| Error::Oracle("matrix is not nilpotent".into()))
}

/// Cartan involution of a real form, diagonal in the model basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanForm {
    pub eps_dot: EpsSign,
    /// `+1` or `-1` per basis vector, labelling the two eigenspaces.
    pub signs: Vec<i8>,
}

impl CartanForm {
    pub fn signature(&self) -> Signature {
        let plus = self.signs.iter().filter(|&&s| s > 0).count();
        Signature::new(plus, self.signs.len() - plus)
    }

    fn indices(&self, sign: i8) -> Vec<usize> {
        (0..self.signs.len()).filter(|&i| self.signs[i] == sign).collect()
    }
}

/// Signed diagram of `X` in `p`: `d_l` is the signature of `Ker X^(l+1) / Ker X^l`
/// measured by the eigenspaces of `L`.
pub fn signed_diagram_from_matrix(x: &ExactMatrix, cartan: &CartanForm) -> Result<SignedDiagram> {
    let m = x.integer_entries()?;
    if m.rows != cartan.signs.len() || m.cols != m.rows {
        return Err(Error::Oracle("matrix and Cartan form sizes differ".into()));
    }
    signed_diagram_of_int(&m, cartan)
}

pub(crate) fn signed_diagram_of_int(m: &IMat, cartan: &CartanForm) -> Result<SignedDiagram> {
    let n = m.rows;
    for i in 0..n {
        for j in 0..n {
            if *m.get(i, j) != 0 && cartan.signs[i] == cartan.signs[j] {
                return Err(Error::Oracle(format!(
                    "entry ({i},{j}) preserves an eigenspace of L, so X is not in p"
                )));
            }
        }
    }
    let subsets = [cartan.indices(1), cartan.indices(-1)];
    let prof = kernel_profile(m, &subsets).ok_or_else(|| Error::Oracle("matrix is not nilpotent".into()))?;
    let cols: Vec<Signature> = prof
        .windows(2)
        .map(|w| Signature::new(w[1][0] - w[0][0], w[1][1] - w[0][1]))
        .filter(|s| !s.is_zero())
        .collect();
    SignedDiagram::new(cols)
}

/// Zero element of `p` for the standard model of a real form.
pub fn zero_model(form: &RealForm) -> (ExactMatrix, CartanForm) {
    let space = graded::real_space(form, &[(0, form.signature.plus, form.signature.minus)])
        .expect("degree-zero model exists for every legal form");
    let n = form.dim();
    (
        ExactMatrix::from_int(&IMat::zeros(n, n), &space.gram),
        space.cartan_with(form.kind.eps_dot),
    )
}

/// Dimension of the centralizer of a Jordan model, from the exact rank of `ad X`.
pub fn centralizer_dim_oracle(o: &ComplexOrbit) -> usize {
    let (x, g) = jordan_model_int(o.eps, &o.columns);
    let basis = graded::lie_algebra_basis(o.eps, &g);
    let n = o.dim_v;
    let mut ad = IMat::zeros(n * n, basis.len());
    for (k, z) in basis.iter().enumerate() {
        let xz = x.mul(z).expect("small entries");
        let zx = z.mul(&x).expect("small entries");
        for (idx, (a, b)) in xz.data.iter().zip(&zx.data).enumerate() {
            ad.set(idx, k, a - b);
        }
    }
    basis.len() - ad.rank()
}

/// Partition of the generic element of `T^* T` over `T` with `T T^*` in the
/// closure of `o_prime`, maximized over seeded trials.
pub fn lift_closure_sample(o_prime: &ComplexOrbit, dim_v: usize, trials: usize) -> Result<Partition> {
    lift_closure_sample_with(o_prime, dim_v, trials, &OracleConfig::default())
}

pub fn lift_closure_sample_with(
    o_prime: &ComplexOrbit,
    dim_v: usize,
    trials: usize,
    cfg: &OracleConfig,
) -> Result<Partition> {
    LiftSampler::new(o_prime.eps.neg(), dim_v, o_prime.dim_v, trials, cfg)?.lift(o_prime)
}

/// Partitions met by `T T^*` over `T` realizing `o` with non-degenerate image.
pub fn gen_descent_sample(o: &ComplexOrbit, dim_v_prime: usize, trials: usize) -> Result<BTreeSet<Partition>> {
    let sampler = LiftSampler::new(o.eps, o.dim_v, dim_v_prime, trials, &OracleConfig::default())?;
    Ok(sampler.gen_descents(o))
}

/// Every type-eps orbit of size `n`, each realized by its Jordan model.
pub fn round_trip_failures(eps: EpsSign, n: usize) -> Vec<Partition> {
    enumerate_orbits(eps, n)
        .into_iter()
        .filter(|o| {
            let m = jordan_model(eps, &o.columns).expect("enumerated orbits have type shape");
            !m.is_form_compatible() || partition_from_matrix(&m).ok().as_ref() != Some(&o.columns)
        })
        .map(|o| o.columns)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn jordan_models_small() {
        let m = jordan_model(EpsSign::Minus, &p(&[1, 1])).unwrap();
        assert!(m.is_form_compatible());
        assert_eq!(partition_from_matrix(&m).unwrap(), p(&[1, 1]));
        let z = jordan_model(EpsSign::Plus, &p(&[3])).unwrap();
        assert!(z.entries.iter().flatten().all(Zero::is_zero));
        let m = jordan_model(EpsSign::Minus, &p(&[2, 2])).unwrap();
        let x = m.integer_entries().unwrap();
        assert_eq!(kernel_dims(&x).unwrap(), vec![0, 2, 4]);
        assert!(jordan_model(EpsSign::Minus, &p(&[2, 1])).is_err());
    }

    #[test]
    fn round_trips_up_to_eight() {
        for n in 0..=8 {
            for eps in [EpsSign::Plus, EpsSign::Minus] {
                assert!(round_trip_failures(eps, n).is_empty(), "eps {eps} n {n}");
            }
        }
    }

    #[test]
    fn zero_and_nonnilpotent() {
        let id = ExactMatrix::from_int(&IMat::from_i64(2, 2, &[1, 0, 0, 1]), &IMat::from_i64(2, 2, &[1, 0, 0, 1]));
        assert!(partition_from_matrix(&id).is_err());
        let form: RealForm = "O(2,1)".parse().unwrap();
        let (x, l) = zero_model(&form);
        assert_eq!(signed_diagram_from_matrix(&x, &l).unwrap().to_string(), "2,1");
    }

    #[test]
    fn centralizer_small() {
        let o = ComplexOrbit::new(EpsSign::Minus, p(&[2, 2])).unwrap();
        assert_eq!(centralizer_dim_oracle(&o), 4);
        let o = ComplexOrbit::new(EpsSign::Minus, p(&[1, 1])).unwrap();
        assert_eq!(centralizer_dim_oracle(&o), 1);
    }
}
