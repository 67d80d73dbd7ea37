//! The calculus of constructible subsets of Δ.
//!
//! Δ is the set of pairs `(a, x)` with `x` a right divisor of `a`. For an
//! LCM monoid the constructible subsets close up into the family
//! `{Δ_p ∩ Δ^q} ∪ {∅}`, so a set is stored intensionally as the pair
//! `(p, q)`, canonicalized within its unit classes so equal sets compare
//! equal. Only the test suites ever expand membership over finite
//! truncations.

use crate::error::Result;
use crate::monoid::{LcmMonoid, Side};

/// `Δ_p ∩ Δ^q`, or the empty set.
#[derive(Clone, Debug)]
pub enum ConstructibleSet<E> {
    Empty,
    /// Stored with `p` canonical in `pP` and `q` canonical in `Pq`.
    Span { p: E, q: E },
}

/// A point `(a, x)` of Δ: `x` right-divides `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeltaPair<E> {
    pub a: E,
    pub x: E,
}

impl<E> DeltaPair<E> {
    pub fn new<M: LcmMonoid<Elem = E>>(m: &M, a: E, x: E) -> Result<Option<Self>> {
        Ok(m.divide(Side::Right, &x, &a)?.map(|_| DeltaPair { a, x }))
    }
}

impl<E: Clone> ConstructibleSet<E> {
    /// The full set Δ.
    pub fn full<M: LcmMonoid<Elem = E>>(m: &M) -> Self {
        ConstructibleSet::Span {
            p: m.identity(),
            q: m.identity(),
        }
    }

    pub fn new<M: LcmMonoid<Elem = E>>(m: &M, p: &E, q: &E) -> Self {
        ConstructibleSet::Span {
            p: m.canon_class(Side::Right, p),
            q: m.canon_class(Side::Left, q),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ConstructibleSet::Empty)
    }
}

/// Same set: unit-equivalent in both slots (or both empty).
pub fn cs_eq<M: LcmMonoid>(
    m: &M,
    y: &ConstructibleSet<M::Elem>,
    z: &ConstructibleSet<M::Elem>,
) -> Result<bool> {
    match (y, z) {
        (ConstructibleSet::Empty, ConstructibleSet::Empty) => Ok(true),
        (ConstructibleSet::Span { p, q }, ConstructibleSet::Span { p: a, q: b }) => {
            Ok(m.unit_solve(Side::Right, p, a)?.is_some()
                && m.unit_solve(Side::Left, q, b)?.is_some())
        }
        _ => Ok(false),
    }
}

/// `(Δ_p ∩ Δ^q) ∩ (Δ_a ∩ Δ^b)` via one LCM on each side.
pub fn cs_intersect<M: LcmMonoid>(
    m: &M,
    y: &ConstructibleSet<M::Elem>,
    z: &ConstructibleSet<M::Elem>,
) -> Result<ConstructibleSet<M::Elem>> {
    let (p, q, a, b) = match (y, z) {
        (ConstructibleSet::Empty, _) | (_, ConstructibleSet::Empty) => {
            return Ok(ConstructibleSet::Empty)
        }
        (ConstructibleSet::Span { p, q }, ConstructibleSet::Span { p: a, q: b }) => (p, q, a, b),
    };
    let right = match m.right_lcm(p, a)? {
        Some(w) => w.r,
        None => return Ok(ConstructibleSet::Empty),
    };
    let left = match m.left_lcm(q, b)? {
        Some(w) => w.r,
        None => return Ok(ConstructibleSet::Empty),
    };
    Ok(ConstructibleSet::new(m, &right, &left))
}

/// Direction of a translation: `Push` is `Y ↦ Y_r`, `Pull` is `Y ↦ Y^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Translate {
    Push,
    Pull,
}

/// Translation of a constructible set by `r`.
///
/// `(Δ_p ∩ Δ^q)_r = Δ_{rp} ∩ Δ^{r₁}` when `Pr ∩ Pq = Pk`, `r₁r = q₁q = k`;
/// `(Δ_p ∩ Δ^q)^r = Δ_{r₁} ∩ Δ^{qr}` when `pP ∩ rP = kP`,
/// `pp₁ = rr₁ = k`; empty otherwise.
pub fn cs_translate<M: LcmMonoid>(
    m: &M,
    dir: Translate,
    y: &ConstructibleSet<M::Elem>,
    r: &M::Elem,
) -> Result<ConstructibleSet<M::Elem>> {
    let (p, q) = match y {
        ConstructibleSet::Empty => return Ok(ConstructibleSet::Empty),
        ConstructibleSet::Span { p, q } => (p, q),
    };
    match dir {
        Translate::Push => match m.left_lcm(r, q)? {
            Some(wit) => {
                // wit: w1·r = w2·q = k, so w1 is the r-cofactor r₁
                Ok(ConstructibleSet::new(m, &m.mul(r, p), &wit.w1))
            }
            None => Ok(ConstructibleSet::Empty),
        },
        Translate::Pull => match m.right_lcm(p, r)? {
            Some(wit) => {
                // wit: p·w1 = r·w2 = k, so w2 is the r-cofactor r₁
                Ok(ConstructibleSet::new(m, &wit.w2, &m.mul(q, r)))
            }
            None => Ok(ConstructibleSet::Empty),
        },
    }
}

/// Membership of a Δ-point: `(a, x) ∈ Δ_p ∩ Δ^q` iff `x = p·x'` for some
/// `x'` and `a = c·(q·x)` for some `c`.
pub fn cs_member<M: LcmMonoid>(
    m: &M,
    pair: &DeltaPair<M::Elem>,
    y: &ConstructibleSet<M::Elem>,
) -> Result<bool> {
    let (p, q) = match y {
        ConstructibleSet::Empty => return Ok(false),
        ConstructibleSet::Span { p, q } => (p, q),
    };
    if m.divide(Side::Left, p, &pair.x)?.is_none() {
        return Ok(false);
    }
    let qx = m.mul(q, &pair.x);
    Ok(m.divide(Side::Right, &qx, &pair.a)?.is_some())
}

pub fn cs_fmt<M: LcmMonoid>(m: &M, y: &ConstructibleSet<M::Elem>) -> String {
    match y {
        ConstructibleSet::Empty => "0".to_string(),
        ConstructibleSet::Span { p, q } => format!("e({};{})", m.fmt_elem(p), m.fmt_elem(q)),
    }
}
