//! Self-similar actions described by a finite transducer.
//!
//! The JSON format lists the alphabet size, the states, and a transition
//! table `(state, letter) -> (output letter, next state)`. A state named
//! `"e"` must act as the identity. Group elements are words in states and
//! their formal inverses; equality is decided by comparing actions to a
//! configurable depth, so everything computed through this backend is
//! *non-certifying* and the word problem is never decided exactly.
//!
//! ```json
//! {
//!   "alphabet_size": 2,
//!   "states": ["e", "a"],
//!   "transitions": { "e": [[0,"e"],[1,"e"]], "a": [[1,"e"],[0,"a"]] }
//! }
//! ```

use std::collections::HashMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::word::Word;

use super::selfsim::{SelfSimilarGroup, ZsMonoid};

#[derive(Deserialize)]
struct AutomatonFile {
    alphabet_size: u8,
    states: Vec<String>,
    transitions: HashMap<String, Vec<(u8, String)>>,
}

/// A state index with an orientation: `false` is the state itself, `true`
/// its formal inverse.
pub type StateLetter = (u16, bool);

/// Reduced word in states and inverse states.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct StateWord(pub Vec<StateLetter>);

#[derive(Clone, Debug)]
pub struct AutomatonAction {
    alphabet: u8,
    state_names: Vec<String>,
    /// `table[state][letter] = (output, next state)`
    table: Vec<Vec<(u8, u16)>>,
    identity: u16,
    eq_depth: usize,
    search_bound: usize,
}

pub type AutomatonMonoid = ZsMonoid<AutomatonAction>;

impl AutomatonAction {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: AutomatonFile =
            serde_json::from_str(text).map_err(|e| Error::BadAutomaton(e.to_string()))?;
        if file.alphabet_size < 2 {
            return Err(Error::BadAutomaton("alphabet must have size >= 2".into()));
        }
        let identity = file
            .states
            .iter()
            .position(|s| s == "e")
            .ok_or_else(|| Error::BadAutomaton("missing identity state \"e\"".into()))?
            as u16;
        let mut table = Vec::with_capacity(file.states.len());
        for name in &file.states {
            let row = file
                .transitions
                .get(name)
                .ok_or_else(|| Error::BadAutomaton(format!("no transitions for state {name}")))?;
            if row.len() != file.alphabet_size as usize {
                return Err(Error::BadAutomaton(format!(
                    "state {name} must list {} transitions",
                    file.alphabet_size
                )));
            }
            let mut cooked = Vec::with_capacity(row.len());
            let mut seen = vec![false; file.alphabet_size as usize];
            for (out, next) in row {
                if *out >= file.alphabet_size {
                    return Err(Error::BadAutomaton(format!(
                        "state {name}: output letter {out} out of range"
                    )));
                }
                if seen[*out as usize] {
                    return Err(Error::BadAutomaton(format!(
                        "state {name} is not a permutation of the alphabet"
                    )));
                }
                seen[*out as usize] = true;
                let next_idx = file
                    .states
                    .iter()
                    .position(|s| s == next)
                    .ok_or_else(|| Error::BadAutomaton(format!("unknown state {next}")))?;
                cooked.push((*out, next_idx as u16));
            }
            table.push(cooked);
        }
        // identity state must fix letters and stay put
        let id_row = &table[identity as usize];
        if !id_row.iter().enumerate().all(|(x, &(y, n))| x as u8 == y && n == identity) {
            return Err(Error::BadAutomaton("state \"e\" must act trivially".into()));
        }
        Ok(AutomatonAction {
            alphabet: file.alphabet_size,
            state_names: file.states,
            table,
            identity,
            eq_depth: 6,
            search_bound: 3,
        })
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::BadAutomaton(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn with_eq_depth(mut self, depth: usize) -> Self {
        self.eq_depth = depth;
        self
    }

    pub fn eq_depth(&self) -> usize {
        self.eq_depth
    }

    fn reduce(&self, mut letters: Vec<StateLetter>) -> StateWord {
        letters.retain(|&(s, _)| s != self.identity);
        let mut out: Vec<StateLetter> = Vec::with_capacity(letters.len());
        for l in letters {
            if let Some(&(s, inv)) = out.last() {
                if s == l.0 && inv != l.1 {
                    out.pop();
                    continue;
                }
            }
            out.push(l);
        }
        StateWord(out)
    }

    /// One letter through one oriented state.
    fn step(&self, (state, inv): StateLetter, x: u8) -> (u8, StateLetter) {
        if !inv {
            let (y, next) = self.table[state as usize][x as usize];
            (y, (next, false))
        } else {
            // s^{-1}·x = y where s·y = x, and s^{-1}|_x = (s|_y)^{-1}
            let (y, next) = (0..self.alphabet)
                .find_map(|y| {
                    let (out, next) = self.table[state as usize][y as usize];
                    (out == x).then_some((y, next))
                })
                .expect("rows are permutations");
            (y, (next, true))
        }
    }
}

impl SelfSimilarGroup for AutomatonAction {
    type G = StateWord;

    fn alphabet(&self) -> u8 {
        self.alphabet
    }

    fn g_identity(&self) -> StateWord {
        StateWord(Vec::new())
    }

    fn g_mul(&self, a: &StateWord, b: &StateWord) -> StateWord {
        let mut v = a.0.clone();
        v.extend_from_slice(&b.0);
        self.reduce(v)
    }

    fn g_inv(&self, a: &StateWord) -> StateWord {
        StateWord(a.0.iter().rev().map(|&(s, inv)| (s, !inv)).collect())
    }

    /// Equal-to-depth: same action on every word of length `eq_depth`.
    fn g_eq(&self, a: &StateWord, b: &StateWord) -> bool {
        if a == b {
            return true;
        }
        for w in Word::all_of_length(self.alphabet, self.eq_depth) {
            if self.act_word_only(a, &w) != self.act_word_only(b, &w) {
                return false;
            }
        }
        true
    }

    fn act_letter(&self, g: &StateWord, x: u8) -> (u8, StateWord) {
        // letters apply right-to-left: (st)·x = s·(t·x)
        let mut y = x;
        let mut rest = Vec::with_capacity(g.0.len());
        for &l in g.0.iter().rev() {
            let (out, next) = self.step(l, y);
            y = out;
            rest.push(next);
        }
        rest.reverse();
        (y, self.reduce(rest))
    }

    fn transport(&self, alpha: &Word, delta: &Word, k: &StateWord) -> Result<Option<StateWord>> {
        for g in self.enumerate_group(self.search_bound as u32) {
            let (img, rest) = super::selfsim::act_restrict(self, &g, alpha);
            if img == *delta && self.g_eq(&rest, k) {
                return Ok(Some(g));
            }
        }
        Err(Error::Inconclusive(format!(
            "no transport witness for {alpha} -> {delta} within word length {}",
            self.search_bound
        )))
    }

    fn enumerate_group(&self, bound: u32) -> Vec<StateWord> {
        // breadth-first over reduced words, deduplicated to depth
        let mut out = vec![StateWord(Vec::new())];
        let mut frontier = vec![StateWord(Vec::new())];
        let letters: Vec<StateLetter> = (0..self.table.len() as u16)
            .filter(|&s| s != self.identity)
            .flat_map(|s| [(s, false), (s, true)])
            .collect();
        for _ in 0..bound {
            let mut next = Vec::new();
            for w in &frontier {
                for &l in &letters {
                    let cand = self.g_mul(w, &StateWord(vec![l]));
                    if cand.0.len() <= w.0.len() {
                        continue; // cancelled, already seen
                    }
                    if out.iter().any(|o| self.g_eq(o, &cand)) {
                        continue;
                    }
                    out.push(cand.clone());
                    next.push(cand);
                }
            }
            frontier = next;
        }
        out
    }

    fn certified(&self) -> bool {
        false
    }

    fn g_fmt(&self, g: &StateWord) -> String {
        if g.0.is_empty() {
            return "e".to_string();
        }
        g.0.iter()
            .map(|&(s, inv)| {
                let name = &self.state_names[s as usize];
                if inv {
                    format!("{name}'")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(".")
    }

    fn g_from_exponent(&self, m: i64) -> StateWord {
        let gen = (0..self.table.len() as u16)
            .find(|&s| s != self.identity)
            .unwrap_or(self.identity);
        let letter = (gen, m < 0);
        StateWord(vec![letter; m.unsigned_abs() as usize])
    }

    fn g_to_exponent(&self, g: &StateWord) -> Option<i64> {
        let gen = (0..self.table.len() as u16).find(|&s| s != self.identity)?;
        if g.0.is_empty() {
            return Some(0);
        }
        let inv = g.0[0].1;
        if g.0.iter().all(|&(s, i)| s == gen && i == inv) {
            let n = g.0.len() as i64;
            Some(if inv { -n } else { n })
        } else {
            None
        }
    }
}

impl AutomatonAction {
    fn act_word_only(&self, g: &StateWord, w: &Word) -> Word {
        super::selfsim::act_restrict(self, g, w).0
    }
}

/// The odometer transducer, for cross-checks against the exact backend.
pub const ODOMETER_JSON: &str = r#"{
  "alphabet_size": 2,
  "states": ["e", "a"],
  "transitions": { "e": [[0,"e"],[1,"e"]], "a": [[1,"e"],[0,"a"]] }
}"#;
