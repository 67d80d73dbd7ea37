//! Finite-depth semilattices, filters, covers, and the action on filters.
//!
//! Everything here is a finite shadow: semilattices are built from
//! depth-bounded generators and closed under meet, filters are enumerated
//! inside them, and cover checks are explicitly relative to the chosen
//! truncation. In a finite meet-semilattice every filter has a minimum, so
//! filters are stored by their generator.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::isg::{self, Triple};
use crate::monoid::{LcmMonoid, Side};

/// A finite meet-semilattice with a total meet table, a zero and a top.
#[derive(Clone, Debug)]
pub struct FiniteSemilattice {
    pub labels: Vec<String>,
    meet: Vec<u32>,
    pub zero: usize,
    pub top: usize,
}

impl FiniteSemilattice {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n() + b] as usize
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    /// Build from abstract elements: `gens` seeds the set, `meet_fn` is the
    /// binary meet returning `None` for zero, `eq` identifies duplicates.
    /// The result is closed under meet, with zero adjoined at index 0 and
    /// the top element required among the generators.
    pub fn close<T: Clone>(
        gens: Vec<T>,
        top: &T,
        mut meet_fn: impl FnMut(&T, &T) -> Result<Option<T>>,
        mut eq: impl FnMut(&T, &T) -> Result<bool>,
        mut label: impl FnMut(&T) -> String,
        ceiling: usize,
    ) -> Result<(FiniteSemilattice, Vec<Option<T>>)> {
        let mut elems: Vec<T> = Vec::new();
        for g in gens {
            let mut dup = false;
            for e in &elems {
                if eq(e, &g)? {
                    dup = true;
                    break;
                }
            }
            if !dup {
                elems.push(g);
            }
        }
        // close under meet
        let mut i = 0;
        while i < elems.len() {
            let mut j = 0;
            while j <= i {
                if let Some(m) = meet_fn(&elems[i], &elems[j])? {
                    let mut found = false;
                    for e in &elems {
                        if eq(e, &m)? {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        elems.push(m);
                        if elems.len() > ceiling {
                            return Err(Error::ResourceLimit {
                                count: elems.len(),
                                ceiling,
                            });
                        }
                    }
                }
                j += 1;
            }
            i += 1;
        }
        let mut top_idx = None;
        for (i, e) in elems.iter().enumerate() {
            if eq(e, top)? {
                top_idx = Some(i + 1);
                break;
            }
        }
        let top_idx = top_idx.expect("top must be among the generators");
        let n = elems.len() + 1;
        let mut table = vec![0u32; n * n];
        for i in 0..elems.len() {
            for j in 0..elems.len() {
                let val = match meet_fn(&elems[i], &elems[j])? {
                    None => 0usize,
                    Some(m) => {
                        let mut idx = None;
                        for (k, e) in elems.iter().enumerate() {
                            if eq(e, &m)? {
                                idx = Some(k + 1);
                                break;
                            }
                        }
                        idx.expect("meet closure complete")
                    }
                };
                table[(i + 1) * n + (j + 1)] = val as u32;
            }
        }
        let mut labels = vec!["0".to_string()];
        labels.extend(elems.iter().map(&mut label));
        let lattice = FiniteSemilattice {
            labels,
            meet: table,
            zero: 0,
            top: top_idx,
        };
        let mut reps: Vec<Option<T>> = vec![None];
        reps.extend(elems.into_iter().map(Some));
        lattice.validate();
        Ok((lattice, reps))
    }

    /// Meet table sanity: commutative, associative, idempotent, zero
    /// absorbing, top neutral.
    fn validate(&self) {
        let n = self.n();
        for a in 0..n {
            debug_assert_eq!(self.meet(a, a), a);
            debug_assert_eq!(self.meet(a, self.zero), self.zero);
            debug_assert_eq!(self.meet(a, self.top), a);
            for b in 0..n {
                debug_assert_eq!(self.meet(a, b), self.meet(b, a));
                for c in 0..n {
                    debug_assert_eq!(
                        self.meet(self.meet(a, b), c),
                        self.meet(a, self.meet(b, c))
                    );
                }
            }
        }
    }

    /// Indices of nonzero elements.
    pub fn nonzero(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&i| i != self.zero)
    }
}

/// A filter in a finite semilattice: the up-set of its minimum element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Filter {
    pub min: usize,
}

impl Filter {
    pub fn members(&self, l: &FiniteSemilattice) -> BTreeSet<usize> {
        l.nonzero().filter(|&e| l.leq(self.min, e)).collect()
    }

    pub fn contains(&self, l: &FiniteSemilattice, e: usize) -> bool {
        e != l.zero && l.leq(self.min, e)
    }
}

/// All filters and the ultrafilters among them. In a finite semilattice a
/// filter is principal, so there is one per nonzero element and the
/// ultrafilters are generated by the minimal nonzero elements.
pub fn enumerate_filters(l: &FiniteSemilattice) -> (Vec<Filter>, Vec<Filter>) {
    let filters: Vec<Filter> = l.nonzero().map(|min| Filter { min }).collect();
    let ultra = filters
        .iter()
        .filter(|f| {
            l.nonzero()
                .all(|e| !(l.leq(e, f.min) && e != f.min))
        })
        .cloned()
        .collect();
    (filters, ultra)
}

/// Is `c` a cover of `e` inside `l`: every nonzero `f ≤ e` meets some
/// member of `c`. The verdict is relative to the finite truncation `l`.
pub fn is_cover(l: &FiniteSemilattice, c: &[usize], e: usize) -> bool {
    debug_assert!(c.iter().all(|&x| l.leq(x, e)));
    l.nonzero()
        .filter(|&f| l.leq(f, e))
        .all(|f| c.iter().any(|&x| l.meet(x, f) != l.zero))
}

/// `e` is dense in `f`: `e ≤ f` and every nonzero `g ≤ f` meets `e`.
pub fn is_dense_in(l: &FiniteSemilattice, e: usize, f: usize) -> bool {
    l.leq(e, f) && is_cover(l, &[e], f)
}

/// The glued product `E ×₀ F`: nonzero pairs plus a common zero.
pub struct SemilatticeProduct {
    pub lattice: FiniteSemilattice,
    /// For each nonzero product element, the pair of factor indices.
    pub pairs: Vec<Option<(usize, usize)>>,
}

pub fn product_semilattice(
    e: &FiniteSemilattice,
    f: &FiniteSemilattice,
) -> SemilatticeProduct {
    let e_nz: Vec<usize> = e.nonzero().collect();
    let f_nz: Vec<usize> = f.nonzero().collect();
    let mut pairs: Vec<Option<(usize, usize)>> = vec![None];
    let mut labels = vec!["0".to_string()];
    for &a in &e_nz {
        for &b in &f_nz {
            pairs.push(Some((a, b)));
            labels.push(format!("({},{})", e.labels[a], f.labels[b]));
        }
    }
    let n = pairs.len();
    let index_of = |a: usize, b: usize| -> usize {
        1 + e_nz.iter().position(|&x| x == a).unwrap() * f_nz.len()
            + f_nz.iter().position(|&x| x == b).unwrap()
    };
    let mut table = vec![0u32; n * n];
    for i in 1..n {
        let (a1, b1) = pairs[i].unwrap();
        for j in 1..n {
            let (a2, b2) = pairs[j].unwrap();
            let am = e.meet(a1, a2);
            let bm = f.meet(b1, b2);
            table[i * n + j] = if am == e.zero || bm == f.zero {
                0
            } else {
                index_of(am, bm) as u32
            };
        }
    }
    let top = index_of(e.top, f.top);
    let lattice = FiniteSemilattice {
        labels,
        meet: table,
        zero: 0,
        top,
    };
    lattice.validate();
    SemilatticeProduct { lattice, pairs }
}

impl SemilatticeProduct {
    /// The correspondence `ξ ↦ (ξ_l, ξ_r)` of a product filter.
    pub fn project_filter(&self, phi: &Filter) -> (Filter, Filter) {
        let (a, b) = self.pairs[phi.min].expect("filter minimum is nonzero");
        (Filter { min: a }, Filter { min: b })
    }

    /// The inverse correspondence `(ξ, η) ↦ ξ × η`.
    pub fn pair_filter(&self, xi: &Filter, eta: &Filter) -> Filter {
        let min = self
            .pairs
            .iter()
            .position(|p| *p == Some((xi.min, eta.min)))
            .expect("pair present");
        Filter { min }
    }
}

/// One side's principal-ideal semilattice at depth `d`, with canonical
/// class representatives attached to the nonzero elements.
pub struct IdealLattice<E> {
    pub side: Side,
    pub lattice: FiniteSemilattice,
    pub reps: Vec<Option<E>>,
    pub depth: usize,
}

/// `Side::Right` builds `{pP}`, `Side::Left` builds `{Pp}`, both closed
/// under intersection, with zero for the empty set.
pub fn ideal_lattice<M: LcmMonoid>(m: &M, side: Side, depth: usize) -> Result<IdealLattice<M::Elem>> {
    let gens: Vec<M::Elem> = m
        .enumerate_up_to(depth)?
        .into_iter()
        .map(|e| m.canon_class(side, &e))
        .collect();
    let top = m.canon_class(side, &m.identity());
    let (mut lattice, reps) = FiniteSemilattice::close(
        gens,
        &top,
        |a, b| {
            let wit = match side {
                Side::Right => m.right_lcm(a, b)?,
                Side::Left => m.left_lcm(a, b)?,
            };
            Ok(wit.map(|w| m.canon_class(side, &w.r)))
        },
        |a, b| Ok(m.unit_solve(side, a, b)?.is_some()),
        |e| match side {
            Side::Right => format!("{}P", m.fmt_elem(e)),
            Side::Left => format!("P{}", m.fmt_elem(e)),
        },
        m.ceiling(),
    )?;
    lattice.labels[0] = "∅".to_string();
    Ok(IdealLattice {
        side,
        lattice,
        reps,
        depth,
    })
}

impl<E> IdealLattice<E> {
    /// Index of the class of `x`, if it is representable at this depth.
    pub fn class_of<M: LcmMonoid<Elem = E>>(&self, m: &M, x: &E) -> Result<Option<usize>> {
        for (i, rep) in self.reps.iter().enumerate() {
            if let Some(rep) = rep {
                if m.unit_solve(self.side, rep, x)?.is_some() {
                    return Ok(Some(i));
                }
            }
        }
        Ok(None)
    }
}

/// The pair `(Pq, pP)` attached to an idempotent `[p, qp, q]`.
#[derive(Clone, Debug)]
pub struct IdealPair<E> {
    pub left: E,
    pub right: E,
}

/// φ of an idempotent: `[p, qp, q] ↦ (Pq, pP)`, slots canonicalized.
pub fn phi_ideal_pairs<M: LcmMonoid>(m: &M, e: &Triple<M::Elem>) -> Result<IdealPair<M::Elem>> {
    if !isg::is_idempotent(m, e) {
        return Err(Error::NotIdempotent);
    }
    let t = e.parts().expect("nonzero");
    Ok(IdealPair {
        left: m.canon_class(Side::Left, &t.r),
        right: m.canon_class(Side::Right, &t.p),
    })
}

pub fn ideal_pair_eq<M: LcmMonoid>(
    m: &M,
    a: &IdealPair<M::Elem>,
    b: &IdealPair<M::Elem>,
) -> Result<bool> {
    Ok(m.unit_solve(Side::Left, &a.left, &b.left)?.is_some()
        && m.unit_solve(Side::Right, &a.right, &b.right)?.is_some())
}

/// The depth-`d` truncation of the idempotent semilattice of the triple
/// semigroup: all `[p, qp, q]` with `|p|, |q| ≤ d`, closed under product.
pub struct IdempotentLattice<E> {
    pub lattice: FiniteSemilattice,
    pub triples: Vec<Option<Triple<E>>>,
}

pub fn build_semilattice<M: LcmMonoid>(
    m: &M,
    depth: usize,
    key: impl Fn(&Triple<M::Elem>) -> String,
) -> Result<IdempotentLattice<M::Elem>> {
    let gens = isg::enumerate_idempotents(m, depth, &key)?;
    let top = isg::top(m);
    let (lattice, reps) = FiniteSemilattice::close(
        gens,
        &top,
        |a, b| {
            let p = isg::product(m, a, b)?;
            Ok(if p.is_zero() { None } else { Some(p) })
        },
        |a, b| isg::triple_eq(m, a, b),
        |t| isg::fmt_triple(m, t),
        m.ceiling(),
    )?;
    Ok(IdempotentLattice {
        lattice,
        triples: reps,
    })
}

/// A filter state for the action: a pair of filters in the two ideal
/// lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterState {
    pub left: Filter,
    pub right: Filter,
}

/// Result of acting on a filter state, with a truncation flag set when an
/// image ideal fell outside the depth window and was dropped.
#[derive(Clone, Debug)]
pub struct ActedState {
    pub state: FilterState,
    pub truncated: bool,
}

/// The action of a triple `s = [p,q,r]` on `(ξ, η)`:
/// `ξ ↦ ξ·r⁻¹·q·p⁻¹` and `η ↦ p·q⁻¹·r·η`, defined when `Pr ∈ ξ` and
/// `r₁P ∈ η` (with `q = rr₁`). Image ideals longer than the lattice depth
/// are dropped and flagged.
pub fn act_on_filter<M: LcmMonoid>(
    m: &M,
    s: &Triple<M::Elem>,
    left_lat: &IdealLattice<M::Elem>,
    right_lat: &IdealLattice<M::Elem>,
    state: &FilterState,
) -> Result<Option<ActedState>> {
    assert_eq!(left_lat.side, Side::Left);
    assert_eq!(right_lat.side, Side::Right);
    let t = match s.parts() {
        None => return Ok(None),
        Some(t) => t,
    };
    // domain: Pr ∈ ξ and r₁P ∈ η
    match left_lat.class_of(m, &t.r)? {
        Some(i) if state.left.contains(&left_lat.lattice, i) => {}
        _ => return Ok(None),
    }
    match right_lat.class_of(m, &t.r1)? {
        Some(i) if state.right.contains(&right_lat.lattice, i) => {}
        _ => return Ok(None),
    }

    let mut truncated = false;

    // left filter: for each member Pt, compute ((Pt·r⁻¹)·q)·p⁻¹
    let mut left_mins: Vec<usize> = Vec::new();
    for i in state.left.members(&left_lat.lattice) {
        let rep = left_lat.reps[i].as_ref().expect("nonzero member");
        // Pt·r⁻¹ = P(cofactor of r) via the left lcm of r and t
        let step1 = match m.left_lcm(&t.r, rep)? {
            Some(w) => w.w1,
            None => continue,
        };
        // ·q appends
        let step2 = m.mul(&step1, &t.q);
        // ·p⁻¹
        let step3 = match m.left_lcm(&t.p, &step2)? {
            Some(w) => w.w1,
            None => continue,
        };
        match left_lat.class_of(m, &step3)? {
            Some(c) if c != left_lat.lattice.zero => left_mins.push(c),
            _ => truncated = true,
        }
    }
    // right filter: for each member tP, compute p·(q⁻¹·(r·t))
    let mut right_mins: Vec<usize> = Vec::new();
    for i in state.right.members(&right_lat.lattice) {
        let rep = right_lat.reps[i].as_ref().expect("nonzero member");
        let step1 = m.mul(&t.r, rep);
        // q⁻¹·(xP) = (cofactor of q)P via the right lcm of q and x
        let step2 = match m.right_lcm(&t.q, &step1)? {
            Some(w) => w.w1,
            None => continue,
        };
        let step3 = m.mul(&t.p, &step2);
        match right_lat.class_of(m, &step3)? {
            Some(c) if c != right_lat.lattice.zero => right_mins.push(c),
            _ => truncated = true,
        }
    }

    let fold_min = |lat: &FiniteSemilattice, mins: &[usize]| -> Option<usize> {
        let mut acc: Option<usize> = None;
        for &c in mins {
            acc = Some(match acc {
                None => c,
                Some(a) => lat.meet(a, c),
            });
        }
        acc.filter(|&a| a != lat.zero)
    };

    // the image of the filter minimum is the minimum of the image; if it
    // was dropped, fall back to the meet of the surviving images
    let left_min = match fold_min(&left_lat.lattice, &left_mins) {
        Some(x) => x,
        None => {
            truncated = true;
            left_lat.lattice.top
        }
    };
    let right_min = match fold_min(&right_lat.lattice, &right_mins) {
        Some(x) => x,
        None => {
            truncated = true;
            right_lat.lattice.top
        }
    };
    Ok(Some(ActedState {
        state: FilterState {
            left: Filter { min: left_min },
            right: Filter { min: right_min },
        },
        truncated,
    }))
}
