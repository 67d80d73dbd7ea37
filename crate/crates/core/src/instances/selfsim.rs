//! Zappa–Szép products `X* ⋈ G` of the free monoid with a self-similar
//! group action.
//!
//! A backend supplies the action `g · x` and restriction `g|_x` one letter
//! at a time, together with group arithmetic and a transport solver: given
//! equal-length words `α, δ` and a target restriction `k`, find `j` with
//! `j · α = δ` and `j|_α = k`. For recurrent actions such a `j` always
//! exists; the odometer backend computes it in closed form, the automaton
//! backend searches a bounded ball in `G` and may come back inconclusive.

use crate::error::{Error, Result};
use crate::monoid::{LcmMonoid, LcmWitness, Side};
use crate::word::Word;

pub trait SelfSimilarGroup {
    type G: Clone + std::fmt::Debug;

    fn alphabet(&self) -> u8;
    fn g_identity(&self) -> Self::G;
    fn g_mul(&self, a: &Self::G, b: &Self::G) -> Self::G;
    fn g_inv(&self, a: &Self::G) -> Self::G;
    fn g_eq(&self, a: &Self::G, b: &Self::G) -> bool;

    /// `(g · x, g|_x)` for a single letter.
    fn act_letter(&self, g: &Self::G, x: u8) -> (u8, Self::G);

    /// Solve `j · alpha = delta`, `j|_alpha = k` for equal-length words.
    fn transport(&self, alpha: &Word, delta: &Word, k: &Self::G) -> Result<Option<Self::G>>;

    /// Group elements within the enumeration bound, identity first,
    /// deterministic order.
    fn enumerate_group(&self, bound: u32) -> Vec<Self::G>;

    /// Exact canonical representative of the left unit class of `(w, g)`,
    /// when the backend can compute one. `None` falls back to a bounded
    /// (non-certifying) search.
    fn canon_left_class(&self, _w: &Word, _g: &Self::G) -> Option<(Word, Self::G)> {
        None
    }

    /// Whether equality and searches in this backend are exact. Bounded
    /// automaton backends answer `false` and their results are
    /// non-certifying.
    fn certified(&self) -> bool;

    fn g_fmt(&self, g: &Self::G) -> String;

    /// Group element for an integer exponent of the designated generator.
    fn g_from_exponent(&self, m: i64) -> Self::G;

    /// Inverse of `g_from_exponent` when the element is such a power.
    fn g_to_exponent(&self, g: &Self::G) -> Option<i64>;
}

/// `(g · w, g|_w)` by folding the letter action along `w`.
pub fn act_restrict<A: SelfSimilarGroup>(action: &A, g: &A::G, w: &Word) -> (Word, A::G) {
    let mut out = Vec::with_capacity(w.len());
    let mut h = g.clone();
    for &x in &w.0 {
        let (y, h2) = action.act_letter(&h, x);
        out.push(y);
        h = h2;
    }
    (Word(out), h)
}

/// An element `(word, g)` of `X* ⋈ G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZsElem<G> {
    pub word: Word,
    pub g: G,
}

#[derive(Clone, Debug)]
pub struct ZsMonoid<A: SelfSimilarGroup> {
    pub action: A,
    group_bound: u32,
    ceiling: usize,
}

impl<A: SelfSimilarGroup> ZsMonoid<A> {
    pub fn new(action: A) -> Self {
        ZsMonoid {
            action,
            group_bound: 8,
            ceiling: 1_000_000,
        }
    }

    pub fn with_group_bound(mut self, bound: u32) -> Self {
        self.group_bound = bound;
        self
    }

    pub fn group_bound(&self) -> u32 {
        self.group_bound
    }

    pub fn elem(&self, word: Word, g: A::G) -> ZsElem<A::G> {
        ZsElem { word, g }
    }

    pub fn transport(&self, alpha: &Word, delta: &Word, k: &A::G) -> Result<Option<A::G>> {
        assert_eq!(alpha.len(), delta.len(), "transport needs equal lengths");
        self.action.transport(alpha, delta, k)
    }
}

impl<A: SelfSimilarGroup> LcmMonoid for ZsMonoid<A> {
    type Elem = ZsElem<A::G>;

    fn identity(&self) -> Self::Elem {
        ZsElem {
            word: Word::empty(),
            g: self.action.g_identity(),
        }
    }

    /// `(α, g)(β, h) = (α(g·β), g|_β h)`.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (moved, rest) = act_restrict(&self.action, &a.g, &b.word);
        ZsElem {
            word: a.word.concat(&moved),
            g: self.action.g_mul(&rest, &b.g),
        }
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.word == b.word && self.action.g_eq(&a.g, &b.g)
    }

    fn length(&self, a: &Self::Elem) -> usize {
        a.word.len()
    }

    fn divide(&self, side: Side, p: &Self::Elem, q: &Self::Elem) -> Result<Option<Self::Elem>> {
        match side {
            // p·x = q: word(p) must be a prefix, then untwist by p.g
            Side::Left => {
                let tail = match p.word.strip_prefix(&q.word) {
                    Some(t) => t,
                    None => return Ok(None),
                };
                let g_inv = self.action.g_inv(&p.g);
                let (w, _) = act_restrict(&self.action, &g_inv, &tail);
                let (_, rest) = act_restrict(&self.action, &p.g, &w);
                let h = self.action.g_mul(&self.action.g_inv(&rest), &q.g);
                Ok(Some(ZsElem { word: w, g: h }))
            }
            // x·p = q: split word(q) = head·tail with |tail| = |word(p)|,
            // then x = (head, j) where j·word(p) = tail and j|_word(p)·p.g = q.g
            Side::Right => {
                if q.word.len() < p.word.len() {
                    return Ok(None);
                }
                let split = q.word.len() - p.word.len();
                let head = Word(q.word.0[..split].to_vec());
                let tail = Word(q.word.0[split..].to_vec());
                let k = self.action.g_mul(&q.g, &self.action.g_inv(&p.g));
                match self.action.transport(&p.word, &tail, &k)? {
                    Some(j) => Ok(Some(ZsElem { word: head, g: j })),
                    None => Ok(None),
                }
            }
        }
    }

    /// `xP ∩ yP` depends only on the word parts: nonempty iff one word is a
    /// prefix of the other, and then generated by the longer element.
    fn right_lcm(
        &self,
        p: &Self::Elem,
        q: &Self::Elem,
    ) -> Result<Option<LcmWitness<Self::Elem>>> {
        if p.word.is_prefix_of(&q.word) {
            let w1 = self.divide(Side::Left, p, q)?.expect("prefix divides");
            Ok(Some(LcmWitness {
                r: q.clone(),
                w1,
                w2: self.identity(),
            }))
        } else if q.word.is_prefix_of(&p.word) {
            let w2 = self.divide(Side::Left, q, p)?.expect("prefix divides");
            Ok(Some(LcmWitness {
                r: p.clone(),
                w1: self.identity(),
                w2,
            }))
        } else {
            Ok(None)
        }
    }

    /// For recurrent backends `P(α,g)` is determined by `|α|`, so the left
    /// LCM is whichever argument has the longer word part, with transport
    /// supplying the witness. A bounded backend may answer inconclusively;
    /// it never reports a wrong generator.
    fn left_lcm(&self, p: &Self::Elem, q: &Self::Elem) -> Result<Option<LcmWitness<Self::Elem>>> {
        let p_shorter = p.word.len() <= q.word.len();
        let (short, long) = if p_shorter { (p, q) } else { (q, p) };
        match self.divide(Side::Right, short, long)? {
            Some(w) => Ok(Some(if p_shorter {
                LcmWitness {
                    r: long.clone(),
                    w1: w,
                    w2: self.identity(),
                }
            } else {
                LcmWitness {
                    r: long.clone(),
                    w1: self.identity(),
                    w2: w,
                }
            })),
            None => Err(Error::Inconclusive(
                "left lcm: no transport witness within the search bound".into(),
            )),
        }
    }

    fn canon_class(&self, side: Side, a: &Self::Elem) -> Self::Elem {
        match side {
            // aP = (word, 1)P: units act on the group part only
            Side::Right => ZsElem {
                word: a.word.clone(),
                g: self.action.g_identity(),
            },
            Side::Left => {
                if let Some((word, g)) = self.action.canon_left_class(&a.word, &a.g) {
                    return ZsElem { word, g };
                }
                // bounded fallback: minimal (word, group) pair reachable by
                // units from the enumeration ball
                let mut best: Option<(String, Self::Elem)> = None;
                for u in self.action.enumerate_group(self.group_bound) {
                    let (w, rest) = act_restrict(&self.action, &u, &a.word);
                    let e = ZsElem {
                        word: w,
                        g: self.action.g_mul(&rest, &a.g),
                    };
                    let key = format!("{}|{}", e.word, self.action.g_fmt(&e.g));
                    if best.as_ref().is_none_or(|(k, _)| key < *k) {
                        best = Some((key, e));
                    }
                }
                best.expect("group enumeration nonempty").1
            }
        }
    }

    fn enumerate_up_to(&self, n: usize) -> Result<Vec<Self::Elem>> {
        let words = Word::all_up_to(self.action.alphabet(), n);
        let group = self.action.enumerate_group(self.group_bound);
        let count = words.len().saturating_mul(group.len());
        self.check_ceiling(count)?;
        let mut out = Vec::with_capacity(count);
        for w in &words {
            for g in &group {
                out.push(ZsElem {
                    word: w.clone(),
                    g: g.clone(),
                });
            }
        }
        Ok(out)
    }

    fn ceiling(&self) -> usize {
        self.ceiling
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String {
        format!("({},{})", a.word, self.action.g_fmt(&a.g))
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("expected (word,exponent), got {s:?}"),
            })?;
        let comma = inner.rfind(',').ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "expected (word,exponent)".into(),
        })?;
        let (ws, gs) = (&inner[..comma], &inner[comma + 1..]);
        let word = if ws.trim().is_empty() {
            Word::empty()
        } else {
            Word::parse(ws.trim()).ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("not a word: {ws:?}"),
            })?
        };
        if word.0.iter().any(|&x| x >= self.action.alphabet()) {
            return Err(Error::Parse {
                pos: 0,
                msg: "letter out of range".into(),
            });
        }
        let m: i64 = gs.trim().parse().map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("bad exponent: {e}"),
        })?;
        Ok(ZsElem {
            word,
            g: self.action.g_from_exponent(m),
        })
    }
}
