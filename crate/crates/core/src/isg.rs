//! The inverse semigroup of validated triples over an LCM monoid.
//!
//! A nonzero element is a class `[p, q, r]` with `q ∈ Pp ∩ rP`, two classes
//! being equal when units `u, v` give `p = au`, `q = vbu`, `r = vc`. The
//! product is
//!
//! ```text
//! [p,q,r][a,b,c] = [p·q₁, r₁·(ra)·a₁, b₁·c]
//! ```
//!
//! where `(ra)P ∩ qP = kP` with `(ra)a₁ = qq₁ = k` and `P(ra) ∩ Pb = Pl`
//! with `r₁(ra) = b₁b = l`, and zero when either intersection is empty.
//! The star is `[p,q,r]* = [r₁, q, p₁]` with `q = rr₁ = p₁p`; both
//! witnesses are cached at validation time so star and product never
//! re-divide.

use crate::error::{Error, Result};
use crate::monoid::{LcmMonoid, Side};

#[derive(Clone, Debug)]
pub struct TripleParts<E> {
    pub p: E,
    pub q: E,
    pub r: E,
    /// `p1·p = q`
    pub p1: E,
    /// `r·r1 = q`
    pub r1: E,
}

#[derive(Clone, Debug)]
pub enum Triple<E> {
    Zero,
    Of(TripleParts<E>),
}

impl<E> Triple<E> {
    pub fn is_zero(&self) -> bool {
        matches!(self, Triple::Zero)
    }

    pub fn parts(&self) -> Option<&TripleParts<E>> {
        match self {
            Triple::Zero => None,
            Triple::Of(t) => Some(t),
        }
    }
}

/// Validate `q ∈ Pp ∩ rP` and cache the two witnesses.
pub fn make_triple<M: LcmMonoid>(
    m: &M,
    p: M::Elem,
    q: M::Elem,
    r: M::Elem,
) -> Result<Triple<M::Elem>> {
    let p1 = m.divide(Side::Right, &p, &q)?.ok_or_else(|| {
        Error::InvalidTriple(format!(
            "q = {} is not a left multiple of p = {}",
            m.fmt_elem(&q),
            m.fmt_elem(&p)
        ))
    })?;
    let r1 = m.divide(Side::Left, &r, &q)?.ok_or_else(|| {
        Error::InvalidTriple(format!(
            "q = {} is not a right multiple of r = {}",
            m.fmt_elem(&q),
            m.fmt_elem(&r)
        ))
    })?;
    Ok(Triple::Of(TripleParts { p, q, r, p1, r1 }))
}

/// The generator `[p, p, p]`, the triple form of `p` itself. Both
/// witnesses are the identity.
pub fn generator<M: LcmMonoid>(m: &M, p: M::Elem) -> Triple<M::Elem> {
    Triple::Of(TripleParts {
        p1: m.identity(),
        r1: m.identity(),
        q: p.clone(),
        r: p.clone(),
        p,
    })
}

/// The identity `[1, 1, 1]`.
pub fn top<M: LcmMonoid>(m: &M) -> Triple<M::Elem> {
    generator(m, m.identity())
}

/// `[p,q,r]* = [r₁, q, p₁]`; the new witnesses are the old outer slots.
pub fn star<E: Clone>(s: &Triple<E>) -> Triple<E> {
    match s {
        Triple::Zero => Triple::Zero,
        Triple::Of(t) => Triple::Of(TripleParts {
            p: t.r1.clone(),
            q: t.q.clone(),
            r: t.p1.clone(),
            p1: t.r.clone(),
            r1: t.p.clone(),
        }),
    }
}

pub fn product<M: LcmMonoid>(
    m: &M,
    s: &Triple<M::Elem>,
    t: &Triple<M::Elem>,
) -> Result<Triple<M::Elem>> {
    let (s, t) = match (s, t) {
        (Triple::Of(s), Triple::Of(t)) => (s, t),
        _ => return Ok(Triple::Zero),
    };
    let ra = m.mul(&s.r, &t.p);
    let right = match m.right_lcm(&ra, &s.q)? {
        Some(w) => w,
        None => return Ok(Triple::Zero),
    };
    // right: ra·a₁ = q·q₁ = k, with a₁ already absorbed into k
    let (k, q1) = (right.r, right.w2);
    let left = match m.left_lcm(&ra, &t.q)? {
        Some(w) => w,
        None => return Ok(Triple::Zero),
    };
    // left: r₁·ra = b₁·b = l
    let (r1, b1) = (left.w1, left.w2);
    let new_p = m.mul(&s.p, &q1);
    let new_q = m.mul(&r1, &k);
    let new_r = m.mul(&b1, &t.r);
    make_triple(m, new_p, new_q, new_r)
}

/// Equality of classes by solving for the two units and checking the middle
/// slot: `p = au`, `r = vc`, then `q = v·b·u`.
pub fn triple_eq<M: LcmMonoid>(
    m: &M,
    s: &Triple<M::Elem>,
    t: &Triple<M::Elem>,
) -> Result<bool> {
    let (s, t) = match (s, t) {
        (Triple::Zero, Triple::Zero) => return Ok(true),
        (Triple::Of(s), Triple::Of(t)) => (s, t),
        _ => return Ok(false),
    };
    let u = match m.unit_solve(Side::Right, &s.p, &t.p)? {
        Some(u) => u,
        None => return Ok(false),
    };
    let v = match m.unit_solve(Side::Left, &s.r, &t.r)? {
        Some(v) => v,
        None => return Ok(false),
    };
    Ok(m.eq(&s.q, &m.mul(&v, &m.mul(&t.q, &u))))
}

/// `ss = s`, decided without products: the class is idempotent iff
/// `q = r·p`, which is invariant under the equivalence.
pub fn is_idempotent<M: LcmMonoid>(m: &M, s: &Triple<M::Elem>) -> bool {
    match s {
        Triple::Zero => false,
        Triple::Of(t) => m.eq(&t.q, &m.mul(&t.r, &t.p)),
    }
}

/// Natural partial order: `s ≤ t` iff `t·(s*s) = s`.
pub fn natural_leq<M: LcmMonoid>(
    m: &M,
    s: &Triple<M::Elem>,
    t: &Triple<M::Elem>,
) -> Result<bool> {
    if s.is_zero() {
        return Ok(true);
    }
    let restricted = product(m, t, &product(m, &star(s), s)?)?;
    triple_eq(m, &restricted, s)
}

/// Ideal-containment order on idempotents: `[p,qp,q] ≤ [a,ba,b]` iff
/// `pP ⊆ aP` and `Pq ⊆ Pb`. Cross-checks `natural_leq` in the suites.
pub fn idempotent_leq<M: LcmMonoid>(
    m: &M,
    s: &Triple<M::Elem>,
    t: &Triple<M::Elem>,
) -> Result<bool> {
    match (s, t) {
        (Triple::Zero, _) => Ok(true),
        (_, Triple::Zero) => Ok(false),
        (Triple::Of(s), Triple::Of(t)) => {
            // pP ⊆ aP iff a left-divides p; Pq ⊆ Pb iff b right-divides q
            Ok(m.divide(Side::Left, &t.p, &s.p)?.is_some()
                && m.divide(Side::Right, &t.r, &s.r)?.is_some())
        }
    }
}

pub fn fmt_triple<M: LcmMonoid>(m: &M, s: &Triple<M::Elem>) -> String {
    match s {
        Triple::Zero => "0".to_string(),
        Triple::Of(t) => format!(
            "[{},{},{}]",
            m.fmt_elem(&t.p),
            m.fmt_elem(&t.q),
            m.fmt_elem(&t.r)
        ),
    }
}

/// All valid triples with every slot of length at most `n`, without
/// deduplication.
pub fn enumerate_triples_raw<M: LcmMonoid>(
    m: &M,
    n: usize,
) -> Result<Vec<Triple<M::Elem>>> {
    let elems = m.enumerate_up_to(n)?;
    m.check_ceiling(elems.len().saturating_pow(3))?;
    let mut out = Vec::new();
    for q in &elems {
        for p in &elems {
            if m.divide(Side::Right, p, q)?.is_none() {
                continue;
            }
            for r in &elems {
                if m.divide(Side::Left, r, q)?.is_none() {
                    continue;
                }
                out.push(make_triple(m, p.clone(), q.clone(), r.clone())?);
            }
        }
    }
    Ok(out)
}

/// Enumerate triples deduplicated by class equality. `key` must be constant
/// on equivalence classes (a canonical-form printer); buckets with equal
/// keys are still confirmed pairwise with `triple_eq`.
pub fn enumerate_triples_keyed<M: LcmMonoid>(
    m: &M,
    n: usize,
    key: impl Fn(&Triple<M::Elem>) -> String,
) -> Result<Vec<Triple<M::Elem>>> {
    let raw = enumerate_triples_raw(m, n)?;
    let mut buckets: std::collections::BTreeMap<String, Vec<usize>> = Default::default();
    let mut out: Vec<Triple<M::Elem>> = Vec::new();
    for s in raw {
        let k = key(&s);
        let ids = buckets.entry(k).or_default();
        let mut dup = false;
        for &i in ids.iter() {
            if triple_eq(m, &out[i], &s)? {
                dup = true;
                break;
            }
        }
        if !dup {
            ids.push(out.len());
            out.push(s);
        }
    }
    Ok(out)
}

/// Deduplicated enumeration for instances with trivial unit group, where
/// classes are singletons and the printed form is already canonical.
pub fn enumerate_triples<M: LcmMonoid>(m: &M, n: usize) -> Result<Vec<Triple<M::Elem>>> {
    enumerate_triples_keyed(m, n, |s| fmt_triple(m, s))
}

/// All idempotents `[p, qp, q]` with `|p|, |q| ≤ n`, deduplicated.
pub fn enumerate_idempotents<M: LcmMonoid>(
    m: &M,
    n: usize,
    key: impl Fn(&Triple<M::Elem>) -> String,
) -> Result<Vec<Triple<M::Elem>>> {
    let elems = m.enumerate_up_to(n)?;
    let mut out: Vec<Triple<M::Elem>> = Vec::new();
    let mut buckets: std::collections::BTreeMap<String, Vec<usize>> = Default::default();
    for p in &elems {
        for q in &elems {
            let s = make_triple(m, p.clone(), m.mul(q, p), q.clone())?;
            let k = key(&s);
            let ids = buckets.entry(k).or_default();
            let mut dup = false;
            for &i in ids.iter() {
                if triple_eq(m, &out[i], &s)? {
                    dup = true;
                    break;
                }
            }
            if !dup {
                ids.push(out.len());
                out.push(s);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::odometer::odometer_monoid;
    use crate::instances::FreeMonoid;
    use crate::word::Word;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn t(m: &FreeMonoid, p: &str, q: &str, r: &str) -> Triple<Word> {
        make_triple(m, w(p), w(q), w(r)).unwrap()
    }

    #[test]
    fn make_triple_examples() {
        let m = FreeMonoid::new(2);
        let s = t(&m, "0", "00", "00");
        let parts = s.parts().unwrap();
        assert_eq!(parts.p1, w("0"));
        assert_eq!(parts.r1, Word::empty());
        assert!(make_triple(&m, w("0"), w("1"), w("1")).is_err());
        // [p,p,p] is valid for any p
        assert!(!generator(&m, w("10")).is_zero());
    }

    #[test]
    fn product_examples() {
        let m = FreeMonoid::new(2);
        let got = product(&m, &t(&m, "", "0", "0"), &t(&m, "0", "0", "0")).unwrap();
        assert!(triple_eq(&m, &got, &t(&m, "0", "00", "00")).unwrap());
        // generator law [p][q] = [pq]
        let got = product(&m, &t(&m, "0", "0", "0"), &t(&m, "1", "1", "1")).unwrap();
        assert!(triple_eq(&m, &got, &t(&m, "01", "01", "01")).unwrap());
        // id_{Δ^0} · id_{Δ^1} = 0
        let got = product(&m, &t(&m, "", "0", "0"), &t(&m, "", "1", "1")).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn star_examples() {
        let m = FreeMonoid::new(2);
        let s = star(&t(&m, "0", "00", "00"));
        assert!(triple_eq(&m, &s, &t(&m, "", "00", "0")).unwrap());
        let p = generator(&m, w("0"));
        assert!(triple_eq(&m, &star(&p), &t(&m, "", "0", "")).unwrap());
        assert!(star::<Word>(&Triple::Zero).is_zero());
    }

    #[test]
    fn ss_star_forms() {
        // [p,q,r][p,q,r]* = [p, p₁p, p₁] and [p,q,r]*[p,q,r] = [r₁, rr₁, r]
        let m = FreeMonoid::new(2);
        for s in enumerate_triples(&m, 2).unwrap() {
            let parts = s.parts().unwrap().clone();
            let ss = product(&m, &s, &star(&s)).unwrap();
            let expect =
                make_triple(&m, parts.p.clone(), m.mul(&parts.p1, &parts.p), parts.p1.clone())
                    .unwrap();
            assert!(triple_eq(&m, &ss, &expect).unwrap());
            let ss = product(&m, &star(&s), &s).unwrap();
            let expect =
                make_triple(&m, parts.r1.clone(), m.mul(&parts.r, &parts.r1), parts.r.clone())
                    .unwrap();
            assert!(triple_eq(&m, &ss, &expect).unwrap());
        }
    }

    #[test]
    fn triple_eq_on_odometer_units() {
        let m = odometer_monoid().with_group_bound(3);
        // [(0,a),(0,a),(0,a)] equals [(0,e),(0,e),(0,a)]-shifted form with
        // u = (ε,a), v = identity
        let a = m.parse_elem("(0,1)").unwrap();
        let e0 = m.parse_elem("(0,0)").unwrap();
        let s = make_triple(&m, a.clone(), a.clone(), a.clone()).unwrap();
        let t2 = make_triple(&m, e0.clone(), e0, a).unwrap();
        assert!(triple_eq(&m, &s, &t2).unwrap());
        assert!(triple_eq(&m, &s, &s).unwrap());
    }

    #[test]
    fn order_examples() {
        let m = FreeMonoid::new(2);
        // [01, 11·01, 11] ≤ [0, 1·0, 1]
        let small = t(&m, "01", "1101", "11");
        let big = t(&m, "0", "10", "1");
        assert!(natural_leq(&m, &small, &big).unwrap());
        assert!(idempotent_leq(&m, &small, &big).unwrap());
        assert!(natural_leq(&m, &small, &small).unwrap());
        assert!(!natural_leq(&m, &big, &small).unwrap());
        assert!(!idempotent_leq(&m, &big, &small).unwrap());
    }

    #[test]
    fn idempotent_characterization() {
        let m = FreeMonoid::new(2);
        for s in enumerate_triples(&m, 2).unwrap() {
            let via_product = {
                let sq = product(&m, &s, &s).unwrap();
                triple_eq(&m, &sq, &s).unwrap()
            };
            assert_eq!(via_product, is_idempotent(&m, &s));
        }
    }

    #[test]
    fn idempotent_product_law() {
        // [p,qp,q][a,ba,b] = [r,sr,s] with rP = pP ∩ aP and Ps = Pb ∩ Pq,
        // zero when either intersection is empty; the label of a nonzero
        // result vanishes
        let m = FreeMonoid::new(2);
        let elems = m.enumerate_up_to(2).unwrap();
        for p in &elems {
            for q in &elems {
                let e = make_triple(&m, p.clone(), m.mul(q, p), q.clone()).unwrap();
                for a in &elems {
                    for b in &elems {
                        let f = make_triple(&m, a.clone(), m.mul(b, a), b.clone()).unwrap();
                        let got = product(&m, &e, &f).unwrap();
                        let right = m.right_lcm(p, a).unwrap();
                        let left = m.left_lcm(q, b).unwrap();
                        match (right, left) {
                            (Some(rw), Some(lw)) => {
                                let expect = make_triple(
                                    &m,
                                    rw.r.clone(),
                                    m.mul(&lw.r, &rw.r),
                                    lw.r.clone(),
                                )
                                .unwrap();
                                assert!(triple_eq(&m, &got, &expect).unwrap());
                                let label = crate::label::group_label(&m, &got).unwrap();
                                assert!(label.is_identity());
                                assert_eq!(crate::shift::cocycle_h(&got).unwrap(), 0);
                            }
                            _ => assert!(got.is_zero()),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let m = FreeMonoid::new(2);
        // slots of length <= 2 over two letters: 45 classes
        assert_eq!(enumerate_triples(&m, 2).unwrap().len(), 45);
        assert_eq!(enumerate_triples(&m, 1).unwrap().len(), 9);
    }
}
