//! Finite-dimensional shadows of the truncated-shift operators.
//!
//! The space is a finite truncation of Δ: all pairs `(a, x)` with
//! `length(a) ≤ n` and `x` a right divisor of `a`. On its `ℓ²` span the
//! generator `J_p` sends `δ_x^a` to `δ_{px}^a` when `px` still right-divides
//! `a`, and to `0` otherwise; its adjoint strips `p`. All matrices here are
//! 0/1 partial permutations, so every identity is checked with exact
//! integers. No floating point and no tolerances anywhere.
//!
//! For free and grid instances each block `{a} × I_a` is finite and closed
//! under every `J_p`, so operator identities hold exactly on the truncation.
//! For self-similar instances `I_a` is infinite; a group-exponent window is
//! imposed and columns whose image leaves the window are reported as
//! boundary columns and excluded from exact assertions.

use std::collections::BTreeMap;

use crate::constructible::{cs_member, ConstructibleSet, DeltaPair};
use crate::error::Result;
use crate::isg::{make_triple, Triple};
use crate::monoid::{LcmMonoid, Side};

/// Sparse integer matrix with deterministic entry order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOp {
    pub dim: usize,
    entries: BTreeMap<(u32, u32), i64>,
}

impl SparseOp {
    pub fn zero(dim: usize) -> Self {
        SparseOp {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = BTreeMap::new();
        for i in 0..dim as u32 {
            entries.insert((i, i), 1);
        }
        SparseOp { dim, entries }
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        if value == 0 {
            self.entries.remove(&(row as u32, col as u32));
        } else {
            self.entries.insert((row as u32, col as u32), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        *self.entries.get(&(row as u32, col as u32)).unwrap_or(&0)
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn triplets(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    pub fn transpose(&self) -> SparseOp {
        let mut out = SparseOp::zero(self.dim);
        for (&(r, c), &v) in &self.entries {
            out.entries.insert((c, r), v);
        }
        out
    }

    /// Entrywise diagonal extraction: keep exactly the `(i, i)` entries.
    pub fn diagonal(&self) -> SparseOp {
        let mut out = SparseOp::zero(self.dim);
        for (&(r, c), &v) in &self.entries {
            if r == c {
                out.entries.insert((r, c), v);
            }
        }
        out
    }

    pub fn mul(&self, other: &SparseOp) -> SparseOp {
        assert_eq!(self.dim, other.dim);
        // index self by column once
        let mut by_col: BTreeMap<u32, Vec<(u32, i64)>> = BTreeMap::new();
        for (&(r, c), &v) in &self.entries {
            by_col.entry(c).or_default().push((r, v));
        }
        let mut out = SparseOp::zero(self.dim);
        for (&(j, k), &bv) in &other.entries {
            if let Some(col) = by_col.get(&j) {
                for &(i, av) in col {
                    let e = out.entries.entry((i, k)).or_insert(0);
                    *e += av * bv;
                }
            }
        }
        out.entries.retain(|_, v| *v != 0);
        out
    }
}

/// Basis of a Δ truncation: indexed pairs `(a, x)` with `x` right-dividing
/// `a`, `length(a) ≤ n`.
pub struct DeltaTruncation<E> {
    pub pairs: Vec<DeltaPair<E>>,
    pub depth: usize,
    /// Printed-form lookup; a miss falls back to a semantic scan, which
    /// only matters for backends whose printing is not canonical.
    index: BTreeMap<String, usize>,
}

/// Where a column goes under a shift.
pub enum ShiftImage {
    /// `px` no longer divides `a` (a genuine zero of the operator).
    Zero,
    /// Index of the image basis vector.
    Interior(usize),
    /// `px` divides `a` but the pair fell outside the truncation window
    /// (self-similar instances only).
    OutOfWindow,
}

pub fn build_delta<M: LcmMonoid>(m: &M, n: usize) -> Result<DeltaTruncation<M::Elem>> {
    let elems = m.enumerate_up_to(n)?;
    let mut pairs = Vec::new();
    let mut index = BTreeMap::new();
    for a in &elems {
        for x in &elems {
            if m.length(x) > m.length(a) {
                continue;
            }
            if m.divide(Side::Right, x, a)?.is_some() {
                index.insert(
                    format!("{}|{}", m.fmt_elem(a), m.fmt_elem(x)),
                    pairs.len(),
                );
                pairs.push(DeltaPair {
                    a: a.clone(),
                    x: x.clone(),
                });
            }
        }
        m.check_ceiling(pairs.len())?;
    }
    Ok(DeltaTruncation {
        pairs,
        depth: n,
        index,
    })
}

impl<E> DeltaTruncation<E> {
    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    pub fn index_of<M: LcmMonoid<Elem = E>>(&self, m: &M, a: &E, x: &E) -> Option<usize> {
        if let Some(&i) = self
            .index
            .get(&format!("{}|{}", m.fmt_elem(a), m.fmt_elem(x)))
        {
            return Some(i);
        }
        self.pairs
            .iter()
            .position(|pair| m.eq(&pair.a, a) && m.eq(&pair.x, x))
    }

    /// Column-by-column action of `J_p` (or its adjoint).
    pub fn shift_image<M: LcmMonoid<Elem = E>>(
        &self,
        m: &M,
        p: &E,
        col: usize,
        adjoint: bool,
    ) -> Result<ShiftImage> {
        let pair = &self.pairs[col];
        if !adjoint {
            let px = m.mul(p, &pair.x);
            if m.divide(Side::Right, &px, &pair.a)?.is_none() {
                return Ok(ShiftImage::Zero);
            }
            Ok(match self.index_of(m, &pair.a, &px) {
                Some(i) => ShiftImage::Interior(i),
                None => ShiftImage::OutOfWindow,
            })
        } else {
            // δ_x^a ↦ δ_{p₁}^a when x = p·p₁
            match m.divide(Side::Left, p, &pair.x)? {
                None => Ok(ShiftImage::Zero),
                Some(p1) => Ok(match self.index_of(m, &pair.a, &p1) {
                    Some(i) => ShiftImage::Interior(i),
                    None => ShiftImage::OutOfWindow,
                }),
            }
        }
    }

    /// Columns whose `J_p`-image divides `a` but leaves the window; empty
    /// for free and grid instances.
    pub fn boundary_columns<M: LcmMonoid<Elem = E>>(
        &self,
        m: &M,
        p: &E,
        adjoint: bool,
    ) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for col in 0..self.dim() {
            if matches!(self.shift_image(m, p, col, adjoint)?, ShiftImage::OutOfWindow) {
                out.push(col);
            }
        }
        Ok(out)
    }
}

/// The matrix of `J_p` (or `J_p*`) on the truncation.
pub fn j_matrix<M: LcmMonoid>(
    m: &M,
    p: &M::Elem,
    t: &DeltaTruncation<M::Elem>,
    adjoint: bool,
) -> Result<SparseOp> {
    let mut out = SparseOp::zero(t.dim());
    for col in 0..t.dim() {
        if let ShiftImage::Interior(row) = t.shift_image(m, p, col, adjoint)? {
            out.set(row, col, 1);
        }
    }
    Ok(out)
}

/// Diagonal projection onto the members of a constructible set.
pub fn e_matrix<M: LcmMonoid>(
    m: &M,
    y: &ConstructibleSet<M::Elem>,
    t: &DeltaTruncation<M::Elem>,
) -> Result<SparseOp> {
    let mut out = SparseOp::zero(t.dim());
    for (i, pair) in t.pairs.iter().enumerate() {
        if cs_member(m, pair, y)? {
            out.set(i, i, 1);
        }
    }
    Ok(out)
}

/// `J_p J_q* J_r` as a matrix; the zero triple gives the zero matrix.
pub fn represent_triple<M: LcmMonoid>(
    m: &M,
    s: &Triple<M::Elem>,
    t: &DeltaTruncation<M::Elem>,
) -> Result<SparseOp> {
    let parts = match s.parts() {
        None => return Ok(SparseOp::zero(t.dim())),
        Some(p) => p,
    };
    let jp = j_matrix(m, &parts.p, t, false)?;
    let jq = j_matrix(m, &parts.q, t, true)?;
    let jr = j_matrix(m, &parts.r, t, false)?;
    Ok(jp.mul(&jq).mul(&jr))
}

/// Diagonal expectation: `[p,q,r]` survives exactly when `q = rp` (then it
/// is its own diagonal); everything else maps to zero.
pub fn expectation<M: LcmMonoid>(
    m: &M,
    s: &Triple<M::Elem>,
    t: &DeltaTruncation<M::Elem>,
) -> Result<SparseOp> {
    match s.parts() {
        None => Ok(SparseOp::zero(t.dim())),
        Some(parts) => {
            if m.eq(&parts.q, &m.mul(&parts.r, &parts.p)) {
                represent_triple(m, s, t)
            } else {
                Ok(SparseOp::zero(t.dim()))
            }
        }
    }
}

/// A token in a word of generators: `J(p)` or its adjoint.
#[derive(Clone, Debug)]
pub enum JToken<E> {
    J(E),
    Adj(E),
}

/// Reduce a word of generator tokens to the normal form `[p, q, r]` with
/// `q ∈ Pp ∩ rP`, or zero.
///
/// Adjacent plain tokens merge by `J_p J_q = J_{pq}` and adjacent adjoints
/// by `J_p* J_q* = J_{qp}*`, giving an alternating word
/// `J_{p₁} J_{q₁}* ⋯ J_{p_n} J_{q_n}* J_{p_{n+1}}` (identities pad the
/// ends). Each trailing `J_x* J_y J_z*` collapses through both LCMs:
///
/// ```text
/// J_x* J_y J_z* = J_{x₁} J_{y₂·y·y₁}* J_{z₁}
///   where xP ∩ yP = kP, x·x₁ = y·y₁ = k, and Py ∩ Pz = Ph, y₂y = z₁z = h
/// ```
///
/// and a final two-step normalization lands in the stated form.
pub fn reduce_word<M: LcmMonoid>(m: &M, tokens: &[JToken<M::Elem>]) -> Result<Triple<M::Elem>> {
    // alternating form: plains[i], stars[i], plains[i+1], ...
    let mut plains: Vec<M::Elem> = vec![m.identity()];
    let mut stars: Vec<M::Elem> = Vec::new();
    for tok in tokens {
        match tok {
            JToken::J(p) => {
                if stars.len() == plains.len() {
                    // previous token was a star: start a new plain slot
                    plains.push(p.clone());
                } else {
                    let last = plains.last_mut().unwrap();
                    *last = m.mul(last, p);
                }
            }
            JToken::Adj(p) => {
                if stars.len() == plains.len() {
                    let last = stars.last_mut().unwrap();
                    // (J_a J_b)* = J_b* J_a*, so stacking adjoints prepends
                    *last = m.mul(p, last);
                } else {
                    stars.push(p.clone());
                }
            }
        }
    }
    if stars.len() == plains.len() {
        plains.push(m.identity());
    }

    // collapse the trailing J_x* J_y J_z* until one star remains
    while stars.len() >= 2 {
        let z = stars.pop().unwrap();
        let y = plains.remove(stars.len());
        let x = stars.pop().unwrap();
        let right = match m.right_lcm(&x, &y)? {
            Some(w) => w,
            None => return Ok(Triple::Zero),
        };
        let left = match m.left_lcm(&y, &z)? {
            Some(w) => w,
            None => return Ok(Triple::Zero),
        };
        let (x1, y1) = (right.w1, right.w2);
        let (y2, z1) = (left.w1, left.w2);
        let middle = m.mul(&y2, &m.mul(&y, &y1));
        // splice J_{x1} J_middle* J_{z1} back into the word
        let i = stars.len();
        plains[i] = m.mul(&plains[i], &x1);
        stars.push(middle);
        let next = plains.remove(i + 1);
        plains.insert(i + 1, m.mul(&z1, &next));
    }

    let (p, q, r) = match stars.len() {
        0 => {
            let p = plains.pop().unwrap();
            return Ok(crate::isg::generator(m, p));
        }
        _ => (plains[0].clone(), stars[0].clone(), plains[1].clone()),
    };

    // final normalization of J_p J_q* J_r into witness form
    let left = match m.left_lcm(&p, &q)? {
        Some(w) => w,
        None => return Ok(Triple::Zero),
    };
    // left: p₁·p = q₁·q = a
    let (a, q1) = (left.r, left.w2);
    let q1r = m.mul(&q1, &r);
    let right = match m.right_lcm(&a, &q1r)? {
        Some(w) => w,
        None => return Ok(Triple::Zero),
    };
    // right: a·a₁ = (q₁r)·r₁ = k
    let (k, a1) = (right.r.clone(), right.w1);
    make_triple(m, m.mul(&p, &a1), k, q1r)
}
