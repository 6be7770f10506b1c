//! Free-pregroup types and the contraction-only reducer.
//!
//! A type is a string of simple terms `x^(n)`: an atom with an integer
//! adjoint exponent. The only rewrite rule is the adjacent contraction
//! `x^(n) x^(n+1) → 1`. A sentence is admissible when the concatenation of
//! its word types reduces to the designated sentence type.
//!
//! Adjacent-pair cancellation realises exactly the well-nested (non-crossing)
//! pairings, so admissibility is decided by interval dynamic programming;
//! the brute-force rewriter that tries every adjacent contraction order is
//! kept alongside as the cross-check oracle.

use crate::pomonoid::{Classification, Pomonoid};
use crate::prelude::*;

/// A simple term: atom index and adjoint exponent.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct SimpleTerm {
    pub atom: usize,
    pub exponent: i32,
}

/// A pregroup type: a finite string of simple terms.
pub type PregroupType = Vec<SimpleTerm>;

#[derive(Clone, Debug)]
pub struct Lexicon {
    pub atoms: Vec<String>,
    pub words: BTreeMap<String, PregroupType>,
    pub sentence: SimpleTerm,
    /// Admissible exponent range for simple terms.
    pub exponent_window: (i32, i32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LexiconError {
    UnknownWord(String),
    ExponentOutOfWindow { atom: usize, exponent: i32 },
}

impl Lexicon {
    pub fn validate(&self) -> Result<(), LexiconError> {
        let (lo, hi) = self.exponent_window;
        for t in self
            .words
            .values()
            .flatten()
            .chain(core::iter::once(&self.sentence))
        {
            if t.exponent < lo || t.exponent > hi {
                return Err(LexiconError::ExponentOutOfWindow {
                    atom: t.atom,
                    exponent: t.exponent,
                });
            }
        }
        Ok(())
    }

    pub fn type_of_sentence(&self, words: &[&str]) -> Result<PregroupType, LexiconError> {
        let mut out = Vec::new();
        for w in words {
            let t = self
                .words
                .get(*w)
                .ok_or_else(|| LexiconError::UnknownWord((*w).to_owned()))?;
            out.extend(t.iter().copied());
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Admissible, with the list of contracted index pairs into the input
    /// string (the residual position carries the target term).
    Accepted {
        trace: Vec<(usize, usize)>,
    },
    Rejected,
}

impl Verdict {
    pub fn accepted(&self) -> bool {
        matches!(self, Verdict::Accepted { .. })
    }
}

fn contracts(left: SimpleTerm, right: SimpleTerm) -> bool {
    left.atom == right.atom && left.exponent + 1 == right.exponent
}

/// Decide whether `terms` reduces to exactly `[target]` using adjacent
/// contractions, by interval DP over well-nested pairings. Returns a
/// contraction trace on acceptance.
pub fn free_pregroup_reduce(terms: &[SimpleTerm], target: SimpleTerm) -> Verdict {
    let n = terms.len();
    // empty[i][j]: terms[i..j] contracts away completely.
    let mut empty = vec![vec![false; n + 1]; n + 1];
    // choice[i][j]: the partner k of i in one witnessing pairing.
    let mut choice = vec![vec![usize::MAX; n + 1]; n + 1];
    for i in 0..=n {
        empty[i][i] = true;
    }
    for len in (2..=n).step_by(2) {
        for i in 0..=n - len {
            let j = i + len;
            for k in i + 1..j {
                if contracts(terms[i], terms[k]) && empty[i + 1][k] && empty[k + 1][j] {
                    empty[i][j] = true;
                    choice[i][j] = k;
                    break;
                }
            }
        }
    }

    fn collect_trace(i: usize, j: usize, choice: &[Vec<usize>], trace: &mut Vec<(usize, usize)>) {
        if i == j {
            return;
        }
        let k = choice[i][j];
        trace.push((i, k));
        collect_trace(i + 1, k, choice, trace);
        collect_trace(k + 1, j, choice, trace);
    }

    for p in 0..n {
        if terms[p] == target && empty[0][p] && empty[p + 1][n] {
            let mut trace = Vec::new();
            collect_trace(0, p, &choice, &mut trace);
            collect_trace(p + 1, n, &choice, &mut trace);
            trace.sort();
            return Verdict::Accepted { trace };
        }
    }
    Verdict::Rejected
}

/// Brute-force oracle: apply every possible adjacent contraction in every
/// order and test whether `[target]` is reachable.
pub fn brute_force_reduce(terms: &[SimpleTerm], target: SimpleTerm) -> bool {
    fn search(s: &[SimpleTerm], target: SimpleTerm, seen: &mut BTreeSet<Vec<SimpleTerm>>) -> bool {
        if s.len() == 1 && s[0] == target {
            return true;
        }
        if s.len() < 2 {
            return false;
        }
        if !seen.insert(s.to_owned()) {
            return false;
        }
        for i in 0..s.len() - 1 {
            if contracts(s[i], s[i + 1]) {
                let mut next = Vec::with_capacity(s.len() - 2);
                next.extend_from_slice(&s[..i]);
                next.extend_from_slice(&s[i + 2..]);
                if search(&next, target, seen) {
                    return true;
                }
            }
        }
        false
    }
    let mut seen = BTreeSet::new();
    search(terms, target, &mut seen)
}

/// Interpret a simple type in a contractive pomonoid: positive exponents
/// iterate the right proto-inverse, negative ones the left proto-inverse.
pub fn interpret_term(c: &Classification, t: SimpleTerm, atom_values: &[usize]) -> Option<usize> {
    let mut v = atom_values[t.atom];
    if t.exponent >= 0 {
        for _ in 0..t.exponent {
            v = c.right_proto_inverse[v]?;
        }
    } else {
        for _ in 0..-t.exponent {
            v = c.left_proto_inverse[v]?;
        }
    }
    Some(v)
}

/// Soundness of accepted reductions against a pomonoid model: the product
/// of the interpreted terms is below the interpreted target.
pub fn check_soundness(
    p: &Pomonoid,
    c: &Classification,
    terms: &[SimpleTerm],
    target: SimpleTerm,
    atom_values: &[usize],
) -> Option<bool> {
    let product = terms.iter().try_fold(p.unit, |acc, &t| {
        interpret_term(c, t, atom_values).map(|v| p.mul(acc, v))
    })?;
    let tgt = interpret_term(c, target, atom_values)?;
    Some(p.le(product, tgt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pomonoid::{classify, fixtures};

    fn t(atom: usize, exponent: i32) -> SimpleTerm {
        SimpleTerm { atom, exponent }
    }

    #[test]
    fn single_sentence_type_accepted_with_empty_trace() {
        let v = free_pregroup_reduce(&[t(0, 0)], t(0, 0));
        assert_eq!(v, Verdict::Accepted { trace: vec![] });
    }

    #[test]
    fn noun_verb_example() {
        // types: n · (nʳ s) with target s; nʳ is n with exponent 1.
        let terms = [t(0, 0), t(0, 1), t(1, 0)];
        match free_pregroup_reduce(&terms, t(1, 0)) {
            Verdict::Accepted { trace } => assert_eq!(trace, vec![(0, 1)]),
            Verdict::Rejected => panic!("expected acceptance"),
        }
    }

    #[test]
    fn repeated_atom_rejected() {
        let terms = [t(0, 0), t(0, 0)];
        assert_eq!(free_pregroup_reduce(&terms, t(1, 0)), Verdict::Rejected);
    }

    #[test]
    fn crossing_pairings_rejected_by_both() {
        // a^0 b^0 a^1 b^1 can only cancel through a crossing pairing, which
        // adjacent rewriting cannot realise.
        let terms = [t(0, 0), t(1, 0), t(0, 1), t(1, 1)];
        assert_eq!(free_pregroup_reduce(&terms, t(2, 0)), Verdict::Rejected);
        assert!(!brute_force_reduce(&terms, t(2, 0)));
    }

    #[test]
    fn dp_agrees_with_brute_force_exhaustively() {
        // All strings of length ≤ 5 over 2 atoms with exponents in [-1, 1],
        // target s = atom 1 exponent 0. Length 6 runs in the acceptance
        // suite over 3 atoms.
        let mut alphabet = Vec::new();
        for atom in 0..2 {
            for e in -1..=1 {
                alphabet.push(t(atom, e));
            }
        }
        let target = t(1, 0);
        let mut stack = vec![Vec::new()];
        while let Some(s) = stack.pop() {
            if !s.is_empty() {
                let dp = free_pregroup_reduce(&s, target).accepted();
                let bf = brute_force_reduce(&s, target);
                assert_eq!(dp, bf, "disagreement on {s:?}");
            }
            if s.len() < 5 {
                for &a in &alphabet {
                    let mut next = s.clone();
                    next.push(a);
                    stack.push(next);
                }
            }
        }
    }

    #[test]
    fn traces_replay_to_the_target() {
        let terms = [t(0, -1), t(0, 0), t(1, 0), t(1, 1), t(1, 0)];
        if let Verdict::Accepted { trace } = free_pregroup_reduce(&terms, t(1, 0)) {
            // Replaying the trace as deletions must leave exactly the target.
            let mut alive: Vec<usize> = (0..terms.len()).collect();
            // Contractions must pair adjacent-after-deletion positions; we
            // simply delete and check the residue.
            for (i, j) in &trace {
                alive.retain(|p| p != i && p != j);
                assert!(contracts(terms[*i], terms[*j]));
            }
            assert_eq!(alive.len(), 1);
            assert_eq!(terms[alive[0]], t(1, 0));
        } else {
            panic!("expected acceptance");
        }
    }

    #[test]
    fn soundness_in_z2() {
        let p = fixtures::cyclic_group(2);
        let c = classify(&p);
        // atoms n ↦ g, s ↦ 1.
        let atom_values = [1, 0];
        let terms = [t(0, 0), t(0, 1), t(1, 0)];
        assert!(free_pregroup_reduce(&terms, t(1, 0)).accepted());
        assert_eq!(
            check_soundness(&p, &c, &terms, t(1, 0), &atom_values),
            Some(true)
        );
    }

    #[test]
    fn lexicon_window_enforced() {
        let mut words = BTreeMap::new();
        words.insert("big".to_owned(), vec![t(0, 3)]);
        let lex = Lexicon {
            atoms: vec!["n".into(), "s".into()],
            words,
            sentence: t(1, 0),
            exponent_window: (-2, 2),
        };
        assert!(matches!(
            lex.validate(),
            Err(LexiconError::ExponentOutOfWindow { .. })
        ));
    }
}
