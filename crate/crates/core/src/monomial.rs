//! The monomial algebra of a self-similar action.
//!
//! Words `s_α u_g s_β*` in the isometries `s_x` and unitaries `u_g`,
//! subject to the usual relations (orthogonal ranges, `u_g u_h = u_{gh}`,
//! `u_g* = u_{g⁻¹}`, and the intertwining `u_g s_x = s_{g·x} u_{g|_x}`),
//! multiply back into monomials or vanish, so no linear combinations are
//! ever needed. The one genuinely summed relation (`∑ s_x s_x* = 1`) is a
//! cover statement and lives in the semilattice layer instead.
//!
//! The product has two branches, derived from the relations once and
//! guarded in the tests by an independent step-by-step rewriting engine:
//!
//! ```text
//! (α,g,β)(γ,h,δ) = (α(g·ω), g|_ω·h, δ)                 if γ = βω
//!                = (α, g·(h⁻¹|_μ)⁻¹, δ·(h⁻¹·μ))        if β = γμ
//!                = 0                                    otherwise
//! ```

use crate::error::Result;
use crate::instances::selfsim::{act_restrict, SelfSimilarGroup, ZsMonoid};
use crate::isg::Triple;
use crate::word::Word;

/// `s_α u_g s_β*`, or zero.
#[derive(Clone, Debug)]
pub enum Monomial<G> {
    Zero,
    Of { alpha: Word, g: G, beta: Word },
}

impl<G> Monomial<G> {
    pub fn is_zero(&self) -> bool {
        matches!(self, Monomial::Zero)
    }
}

pub fn mono_identity<A: SelfSimilarGroup>(action: &A) -> Monomial<A::G> {
    Monomial::Of {
        alpha: Word::empty(),
        g: action.g_identity(),
        beta: Word::empty(),
    }
}

pub fn mono_eq<A: SelfSimilarGroup>(
    action: &A,
    m1: &Monomial<A::G>,
    m2: &Monomial<A::G>,
) -> bool {
    match (m1, m2) {
        (Monomial::Zero, Monomial::Zero) => true,
        (
            Monomial::Of { alpha, g, beta },
            Monomial::Of {
                alpha: a2,
                g: g2,
                beta: b2,
            },
        ) => alpha == a2 && beta == b2 && action.g_eq(g, g2),
        _ => false,
    }
}

pub fn mono_mul<A: SelfSimilarGroup>(
    action: &A,
    m1: &Monomial<A::G>,
    m2: &Monomial<A::G>,
) -> Monomial<A::G> {
    let (alpha, g, beta) = match m1 {
        Monomial::Zero => return Monomial::Zero,
        Monomial::Of { alpha, g, beta } => (alpha, g, beta),
    };
    let (gamma, h, delta) = match m2 {
        Monomial::Zero => return Monomial::Zero,
        Monomial::Of { alpha, g, beta } => (alpha, g, beta),
    };
    if let Some(omega) = beta.strip_prefix(gamma) {
        // s_β* s_γ = s_ω, then push u_g through
        let (moved, rest) = act_restrict(action, g, &omega);
        Monomial::Of {
            alpha: alpha.concat(&moved),
            g: action.g_mul(&rest, h),
            beta: delta.clone(),
        }
    } else if let Some(mu) = gamma.strip_prefix(beta) {
        // s_β* s_γ = s_μ*, then pull u_h backwards through s_μ*
        let h_inv = action.g_inv(h);
        let (moved, rest) = act_restrict(action, &h_inv, &mu);
        Monomial::Of {
            alpha: alpha.clone(),
            g: action.g_mul(g, &action.g_inv(&rest)),
            beta: delta.concat(&moved),
        }
    } else {
        Monomial::Zero
    }
}

/// `(α, g, β)* = (β, g⁻¹, α)`.
pub fn mono_star<A: SelfSimilarGroup>(action: &A, m: &Monomial<A::G>) -> Monomial<A::G> {
    match m {
        Monomial::Zero => Monomial::Zero,
        Monomial::Of { alpha, g, beta } => Monomial::Of {
            alpha: beta.clone(),
            g: action.g_inv(g),
            beta: alpha.clone(),
        },
    }
}

/// Represent a triple `[(α,g), (β,h), (γ,k)]` as the monomial
/// `s_α u_g u_h* s_β* s_γ u_k`.
pub fn pi_represent<A: SelfSimilarGroup>(
    m: &ZsMonoid<A>,
    s: &Triple<<ZsMonoid<A> as crate::monoid::LcmMonoid>::Elem>,
) -> Result<Monomial<A::G>> {
    let t = match s.parts() {
        None => return Ok(Monomial::Zero),
        Some(t) => t,
    };
    let left = Monomial::Of {
        alpha: t.p.word.clone(),
        g: m.action.g_mul(&t.p.g, &m.action.g_inv(&t.q.g)),
        beta: t.q.word.clone(),
    };
    let right = Monomial::Of {
        alpha: t.r.word.clone(),
        g: t.r.g.clone(),
        beta: Word::empty(),
    };
    Ok(mono_mul(&m.action, &left, &right))
}

pub fn mono_fmt<A: SelfSimilarGroup>(action: &A, m: &Monomial<A::G>) -> String {
    match m {
        Monomial::Zero => "0".to_string(),
        Monomial::Of { alpha, g, beta } => {
            format!("s[{}]·u[{}]·s*[{}]", alpha, action.g_fmt(g), beta)
        }
    }
}
