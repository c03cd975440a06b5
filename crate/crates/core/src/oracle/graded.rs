//! Graded models and generic sampling.
//!
//! A grading puts integer degrees on basis vectors so that the form pairs
//! degree `D` with degree `-D`. Elements raising the degree by two form a
//! space on which the group of degree-preserving isometries has an open
//! orbit, and every nilpotent orbit is the open orbit of some grading. Random
//! integer elements of these spaces therefore reach every orbit, while every
//! individual sample is a genuine element, so the sampled sets can only fall
//! short, never overshoot.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::arith::IMat;
use super::{partition_of_int, signed_diagram_of_int, CartanForm, OracleConfig};
use crate::complex_orbits::ComplexOrbit;
use crate::diagrams::{transpose, EpsSign, Partition};
use crate::error::{Error, Result};
use crate::real_orbits::{RealForm, SignedDiagram};

/// Basis vector label: degree, eigen-sign of `L`, index within its block.
type Label = (i32, i8, usize);

#[derive(Debug, Clone)]
pub(crate) struct GradedSpace {
    pub labels: Vec<Label>,
    pub gram: IMat,
    /// Index of the basis vector paired with each basis vector.
    pub partner: Vec<usize>,
}

impl GradedSpace {
    pub fn cartan_with(&self, eps_dot: EpsSign) -> CartanForm {
        CartanForm {
            eps_dot,
            signs: self.labels.iter().map(|l| l.1).collect(),
        }
    }

    fn degree(&self, i: usize) -> i32 {
        self.labels[i].0
    }

    fn len(&self) -> usize {
        self.labels.len()
    }
}

/// Builds the signed-permutation Gram matrix for the given block sizes.
///
/// With `flip` false a vector pairs with the vector of opposite degree and the
/// same sign; with `flip` true it pairs with opposite degree and opposite
/// sign. Returns `None` when the dimensions are not symmetric or a
/// degree-zero skew block is odd.
fn graded_space(eps: EpsSign, flip: bool, dims: &BTreeMap<(i32, i8), usize>) -> Option<GradedSpace> {
    let mut labels = Vec::new();
    for (&(d, s), &k) in dims {
        for i in 0..k {
            labels.push((d, s, i));
        }
    }
    let index: BTreeMap<Label, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let n = labels.len();
    let mut gram = IMat::zeros(n, n);
    let mut partner = vec![0; n];
    let e = eps.value() as i128;
    for (a, &(d, s, i)) in labels.iter().enumerate() {
        let ps = if flip { -s } else { s };
        let pi = if !flip && d == 0 && eps == EpsSign::Minus { i ^ 1 } else { i };
        let b = *index.get(&(-d, ps, pi))?;
        partner[a] = b;
        let v = if a == b || (d, s, i) < (-d, ps, pi) { 1 } else { e };
        gram.set(a, b, v);
    }
    Some(GradedSpace { labels, gram, partner })
}

/// Model of a real form with blocks `(degree, plus, minus)`.
pub(crate) fn real_space(form: &RealForm, blocks: &[(i32, usize, usize)]) -> Option<GradedSpace> {
    let mut dims = BTreeMap::new();
    for &(d, p, m) in blocks {
        if p > 0 {
            dims.insert((d, 1), p);
        }
        if m > 0 {
            dims.insert((d, -1), m);
        }
    }
    graded_space(form.kind.eps, form.kind.eps_dot == EpsSign::Minus, &dims)
}

/// Basis of the Lie algebra `{G^t Y : Y^t = -eps Y}` of a signed permutation form.
pub(crate) fn lie_algebra_basis(eps: EpsSign, gram: &IMat) -> Vec<IMat> {
    let n = gram.rows;
    let gt = gram.transpose();
    let mut out = Vec::new();
    for i in 0..n {
        let lo = if eps == EpsSign::Minus { i } else { i + 1 };
        for j in lo..n {
            let mut y = IMat::zeros(n, n);
            y.set(i, j, 1);
            let back = if eps == EpsSign::Minus { 1 } else { -1 };
            if i == j {
                y.set(i, i, 2);
            } else {
                y.set(j, i, back);
            }
            out.push(gt.mul(&y).expect("small entries"));
        }
    }
    out
}

/// Random element of `p` raising degree by two: `X = G^t Y` with `Y` of the
/// symmetry `Y^t = -eps Y` supported where `X` may be nonzero.
fn sample_p2(space: &GradedSpace, eps: EpsSign, rng: &mut ChaCha8Rng, bound: i64) -> IMat {
    let n = space.len();
    let allowed = |c: usize, b: usize| {
        let a = space.partner[c];
        space.degree(a) == space.degree(b) + 2 && space.labels[a].1 != space.labels[b].1
    };
    let mut y = IMat::zeros(n, n);
    for c in 0..n {
        for b in c..n {
            if !allowed(c, b) {
                continue;
            }
            if c == b && eps == EpsSign::Plus {
                continue;
            }
            let v = rng.gen_range(-bound..=bound) as i128;
            y.set(c, b, v);
            if c != b {
                y.set(b, c, if eps == EpsSign::Minus { v } else { -v });
            }
        }
    }
    space.gram.transpose().mul(&y).expect("small entries")
}

/// All ways to write `total = d0 + 2 * (a_1 + ... + a_top)`, as maps from
/// positive degree to multiplicity, with the degree-zero part first.
fn symmetric_splits(total: usize, top: i32, zero_even: bool) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    for d0 in (0..=total).rev() {
        if (total - d0) % 2 == 1 || (zero_even && d0 % 2 == 1) {
            continue;
        }
        let rest = (total - d0) / 2;
        for comp in compositions(rest, top.max(0) as usize) {
            out.push((d0, comp));
        }
    }
    out
}

/// Weak compositions of `n` into `k` parts.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut tail in compositions(n - first, k - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Gradings of a real form, as maps `(degree, sign) -> dimension`.
fn real_gradings(form: &RealForm) -> Vec<BTreeMap<(i32, i8), usize>> {
    let n = form.dim();
    let top = n.saturating_sub(1) as i32;
    let (p, q) = (form.signature.plus, form.signature.minus);
    let mut out = Vec::new();
    if form.kind.eps_dot == EpsSign::Plus {
        let zero_even = form.kind.eps == EpsSign::Minus;
        let sp = symmetric_splits(p, top, zero_even);
        let sm = symmetric_splits(q, top, zero_even);
        for (p0, pa) in &sp {
            for (m0, ma) in &sm {
                let mut dims = BTreeMap::new();
                let mut put = |d: i32, s: i8, k: usize| {
                    if k > 0 {
                        dims.insert((d, s), k);
                    }
                };
                put(0, 1, *p0);
                put(0, -1, *m0);
                for (i, (&a, &b)) in pa.iter().zip(ma).enumerate() {
                    let d = i as i32 + 1;
                    put(d, 1, a);
                    put(-d, 1, a);
                    put(d, -1, b);
                    put(-d, -1, b);
                }
                out.push(dims);
            }
        }
    } else {
        let width = (2 * top + 1) as usize;
        for comp in compositions(p, width) {
            let mut dims = BTreeMap::new();
            for (i, &a) in comp.iter().enumerate() {
                if a > 0 {
                    let d = i as i32 - top;
                    dims.insert((d, 1), a);
                    dims.insert((-d, -1), a);
                }
            }
            out.push(dims);
        }
    }
    out
}

/// Signed diagrams of sampled elements of `p` over all gradings of a form.
pub fn k_orbit_models(form: &RealForm, trials: usize, cfg: &OracleConfig) -> Result<BTreeSet<SignedDiagram>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let flip = form.kind.eps_dot == EpsSign::Minus;
    let mut out = BTreeSet::new();
    for dims in real_gradings(form) {
        let space = graded_space(form.kind.eps, flip, &dims)
            .ok_or_else(|| Error::Oracle(format!("grading {dims:?} has no form")))?;
        let cartan = space.cartan_with(form.kind.eps_dot);
        let n = space.len();
        out.insert(signed_diagram_of_int(&IMat::zeros(n, n), &cartan)?);
        for _ in 0..trials {
            let x = sample_p2(&space, form.kind.eps, &mut rng, cfg.bound);
            out.insert(signed_diagram_of_int(&x, &cartan)?);
        }
    }
    Ok(out)
}

/// One sampled `T` with the partitions of `T^* T` and `T T^*`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LiftSample {
    pub x: Partition,
    pub x_prime: Partition,
    /// Whether the image of `T` is a non-degenerate subspace.
    pub image_nondegenerate: bool,
}

/// Samples of the pair of moment maps for spaces of dimensions `n` (type
/// `eps`) and `m` (type `-eps`), over every grading coming from an
/// alternating-string diagram.
#[derive(Debug, Clone)]
pub struct LiftSampler {
    pub eps: EpsSign,
    pub n: usize,
    pub m: usize,
    pub samples: BTreeSet<LiftSample>,
}

/// Doubled positions of a string of length `len` starting on `first`
/// (`true` for the `n`-dimensional space).
fn string_positions(first: bool, len: usize) -> Vec<(bool, i32)> {
    (0..len)
        .map(|i| (first == (i % 2 == 0), -(len as i32 - 1) + 2 * i as i32))
        .collect()
}

/// Degree multisets of `(V, V')` from all multisets of strings with `n`
/// letters of one kind and `m` of the other.
fn string_gradings(n: usize, m: usize) -> BTreeSet<(Vec<i32>, Vec<i32>)> {
    let mut types = Vec::new();
    for len in 1..=(n + m) {
        for first in [true, false] {
            let pos = string_positions(first, len);
            let a = pos.iter().filter(|p| p.0).count();
            let b = len - a;
            if a <= n && b <= m {
                types.push((a, b, pos));
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(
        t: usize,
        n: usize,
        m: usize,
        types: &[(usize, usize, Vec<(bool, i32)>)],
        cur: &mut Vec<usize>,
        out: &mut BTreeSet<(Vec<i32>, Vec<i32>)>,
    ) {
        if n == 0 && m == 0 {
            let mut va = Vec::new();
            let mut vb = Vec::new();
            for &k in cur.iter() {
                for &(is_a, d) in &types[k].2 {
                    if is_a {
                        va.push(d);
                    } else {
                        vb.push(d);
                    }
                }
            }
            va.sort_unstable();
            vb.sort_unstable();
            out.insert((va, vb));
            return;
        }
        for k in t..types.len() {
            let (a, b, _) = types[k];
            if a <= n && b <= m {
                cur.push(k);
                rec(k, n - a, m - b, types, cur, out);
                cur.pop();
            }
        }
    }
    rec(0, n, m, &types, &mut cur, &mut out);
    out
}

fn complex_space(eps: EpsSign, degs: &[i32]) -> Option<GradedSpace> {
    let mut dims = BTreeMap::new();
    for &d in degs {
        *dims.entry((d, 1i8)).or_insert(0) += 1;
    }
    graded_space(eps, false, &dims)
}

impl LiftSampler {
    pub fn new(eps: EpsSign, n: usize, m: usize, trials: usize, cfg: &OracleConfig) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ ((n as u64) << 32) ^ ((m as u64) << 40) ^ eps_bits(eps));
        let mut samples = BTreeSet::new();
        for (va, vb) in string_gradings(n, m) {
            let (Some(sv), Some(sw)) = (complex_space(eps, &va), complex_space(eps.neg(), &vb)) else {
                continue;
            };
            for t in 0..=trials {
                let tm = if t == 0 {
                    IMat::zeros(m, n)
                } else {
                    let mut tm = IMat::zeros(m, n);
                    for r in 0..m {
                        for c in 0..n {
                            if sw.degree(r) == sv.degree(c) + 2 {
                                tm.set(r, c, rng.gen_range(-cfg.bound..=cfg.bound) as i128);
                            }
                        }
                    }
                    tm
                };
                samples.insert(moment_pair(&sv, &sw, &tm));
            }
        }
        if samples.is_empty() {
            return Err(Error::Oracle(format!(
                "no space of type {eps} and dimension {n} paired with dimension {m}"
            )));
        }
        Ok(LiftSampler { eps, n, m, samples })
    }

    /// Largest `T^* T` over samples whose `T T^*` lies in the closure of `o_prime`.
    pub fn lift(&self, o_prime: &ComplexOrbit) -> Result<Partition> {
        let bound = transpose(&o_prime.columns);
        let found: BTreeSet<Partition> = self
            .samples
            .iter()
            .filter(|s| bound.dominates(&transpose(&s.x_prime)))
            .map(|s| transpose(&s.x))
            .collect();
        let top = found
            .iter()
            .find(|r| found.iter().all(|c| r.dominates(c)))
            .ok_or_else(|| Error::Oracle(format!("sampled image over {o_prime} has no largest orbit")))?;
        Ok(transpose(top))
    }

    /// Partitions of `T T^*` over samples with `T^* T` in `o` and non-degenerate image.
    pub fn gen_descents(&self, o: &ComplexOrbit) -> BTreeSet<Partition> {
        self.samples
            .iter()
            .filter(|s| s.image_nondegenerate && s.x == o.columns)
            .map(|s| s.x_prime.clone())
            .collect()
    }
}

fn eps_bits(eps: EpsSign) -> u64 {
    if eps == EpsSign::Plus {
        1 << 50
    } else {
        0
    }
}

fn moment_pair(sv: &GradedSpace, sw: &GradedSpace, t: &IMat) -> LiftSample {
    let tt = t.transpose();
    let t_star = sv
        .gram
        .transpose()
        .mul(&tt)
        .and_then(|a| a.mul(&sw.gram))
        .expect("small entries");
    let x = t_star.mul(t).expect("small entries");
    let x_prime = t.mul(&t_star).expect("small entries");
    let restricted = tt.mul(&sw.gram).and_then(|a| a.mul(t)).expect("small entries");
    LiftSample {
        x: partition_of_int(&x).expect("moment map images are nilpotent"),
        x_prime: partition_of_int(&x_prime).expect("moment map images are nilpotent"),
        image_nondegenerate: restricted.rank() == t.rank(),
    }
}
