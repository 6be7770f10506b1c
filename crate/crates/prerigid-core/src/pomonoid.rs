//! Finite partially ordered monoids, their classification, and the thin
//! monoidal category a pomonoid presents.
//!
//! A pomonoid is a poset with a monotone monoid structure. Viewed as a
//! category with a unique morphism `a → b` exactly when `a ≤ b`, tensor
//! given by multiplication and unit by the monoid identity, the interesting
//! grades of structure are:
//!
//! * protogroup: every `t` has proto-inverses `t*` and `*t` with
//!   `t*·t ≤ 1` and `t·*t ≤ 1`;
//! * contractive: additionally `a·b ≤ 1 ⇔ a ≤ b* ⇔ b ≤ *a`; this is
//!   exactly pre-rigidity of the thin category, and forces `t*`, `*t`
//!   to be unique;
//! * residuated: all residuals `c/b = max{a | a·b ≤ c}` and
//!   `a\c = max{b | a·b ≤ c}` exist; this is closedness;
//! * pregroup: `t*·t ≤ 1 ≤ t·t*` and `t·*t ≤ 1 ≤ *t·t`; this is rigidity.
//!
//! The inclusions pregroup ⊆ residuated ⊆ contractive ⊆ protogroup are
//! verified against a brute-force oracle in the tests.

use crate::cat::{CatError, Category, HomSpace, HomSpaces, Monoidal};
use crate::prelude::*;
use crate::rational::{pow10, rat, Rat};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pomonoid {
    pub elements: Vec<String>,
    /// `leq[a][b]` iff `a ≤ b`.
    pub leq: Vec<Vec<bool>>,
    /// `mult[a][b]` is the index of `a·b`.
    pub mult: Vec<Vec<usize>>,
    pub unit: usize,
}

impl Pomonoid {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    /// The genuine maximum of a subset, if one exists.
    pub fn maximum(&self, set: &[usize]) -> Option<usize> {
        set.iter()
            .copied()
            .find(|&m| set.iter().all(|&s| self.le(s, m)))
    }

    /// Poset axioms, monoid axioms and monotonicity, checked exhaustively.
    /// Every violated tuple is listed.
    pub fn validate(&self) -> Report {
        let n = self.size();
        let mut report = Report::new();
        let set = format!("all tuples over {n} elements");
        let ok = |report: &mut Report, anchor: &str, claim: &str, failures: Vec<String>| {
            if failures.is_empty() {
                report.pass(anchor, claim, &set);
            } else {
                report.fail(anchor, claim, failures.join("; "), &set);
            }
        };

        let mut f = Vec::new();
        for a in 0..n {
            if !self.le(a, a) {
                f.push(format!("{} ≰ itself", self.elements[a]));
            }
        }
        ok(&mut report, "pomonoid.reflexive", "order is reflexive", f);

        let mut f = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.le(a, b) && self.le(b, a) {
                    f.push(format!(
                        "{} and {} mutually comparable",
                        self.elements[a], self.elements[b]
                    ));
                }
            }
        }
        ok(
            &mut report,
            "pomonoid.antisymmetric",
            "order is antisymmetric",
            f,
        );

        let mut f = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.le(a, b) && self.le(b, c) && !self.le(a, c) {
                        f.push(format!(
                            "{} ≤ {} ≤ {} but not {} ≤ {}",
                            self.elements[a],
                            self.elements[b],
                            self.elements[c],
                            self.elements[a],
                            self.elements[c]
                        ));
                    }
                }
            }
        }
        ok(&mut report, "pomonoid.transitive", "order is transitive", f);

        let mut f = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        f.push(format!(
                            "({}·{})·{} ≠ {}·({}·{})",
                            self.elements[a],
                            self.elements[b],
                            self.elements[c],
                            self.elements[a],
                            self.elements[b],
                            self.elements[c]
                        ));
                    }
                }
            }
        }
        ok(
            &mut report,
            "pomonoid.associative",
            "multiplication is associative",
            f,
        );

        let mut f = Vec::new();
        for a in 0..n {
            if self.mul(self.unit, a) != a || self.mul(a, self.unit) != a {
                f.push(format!("unit not neutral on {}", self.elements[a]));
            }
        }
        ok(&mut report, "pomonoid.unital", "unit is neutral", f);

        let mut f = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if self.le(a, c)
                            && self.le(b, d)
                            && !self.le(self.mul(a, b), self.mul(c, d))
                        {
                            f.push(format!(
                                "{} ≤ {} and {} ≤ {} but {}·{} ≰ {}·{}",
                                self.elements[a],
                                self.elements[c],
                                self.elements[b],
                                self.elements[d],
                                self.elements[a],
                                self.elements[b],
                                self.elements[c],
                                self.elements[d]
                            ));
                        }
                    }
                }
            }
        }
        ok(
            &mut report,
            "pomonoid.monotone",
            "multiplication is monotone",
            f,
        );

        report
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Classification {
    pub is_protogroup: bool,
    pub is_contractive: bool,
    pub is_residuated: bool,
    pub is_pregroup: bool,
    /// `t*` per element, where defined (contractive case; unique).
    pub right_proto_inverse: Vec<Option<usize>>,
    /// `*t` per element.
    pub left_proto_inverse: Vec<Option<usize>>,
    /// `c/b`: `right_residual[c][b] = max{a | a·b ≤ c}`.
    pub right_residual: Vec<Vec<Option<usize>>>,
    /// `a\c`: `left_residual[a][c] = max{b | a·b ≤ c}`.
    pub left_residual: Vec<Vec<Option<usize>>>,
}

/// Classify a validated pomonoid. Proto-inverse tables are populated as the
/// maxima `t* = max{a | a·t ≤ 1}` and `*t = max{b | t·b ≤ 1}` whenever those
/// maxima exist; the contractive flag requires them for every element, and
/// uniqueness of the resulting proto-inverses is verified separately.
pub fn classify(p: &Pomonoid) -> Classification {
    let n = p.size();
    let one = p.unit;

    let is_protogroup = (0..n)
        .all(|t| (0..n).any(|a| p.le(p.mul(a, t), one)) && (0..n).any(|b| p.le(p.mul(t, b), one)));

    let mut right_proto = vec![None; n];
    let mut left_proto = vec![None; n];
    for t in 0..n {
        let left_candidates: Vec<usize> = (0..n).filter(|&a| p.le(p.mul(a, t), one)).collect();
        right_proto[t] = p.maximum(&left_candidates);
        let right_candidates: Vec<usize> = (0..n).filter(|&b| p.le(p.mul(t, b), one)).collect();
        left_proto[t] = p.maximum(&right_candidates);
    }
    // max{a | a·t ≤ 1} satisfies a·t ≤ 1 ⇔ a ≤ t* by definition of maximum
    // plus monotonicity, so existence of both maxima for every t is exactly
    // the contractive condition.
    let is_contractive = (0..n).all(|t| right_proto[t].is_some() && left_proto[t].is_some());

    let mut right_res = vec![vec![None; n]; n];
    let mut left_res = vec![vec![None; n]; n];
    for c in 0..n {
        for b in 0..n {
            let cands: Vec<usize> = (0..n).filter(|&a| p.le(p.mul(a, b), c)).collect();
            right_res[c][b] = p.maximum(&cands);
        }
    }
    for a in 0..n {
        for c in 0..n {
            let cands: Vec<usize> = (0..n).filter(|&b| p.le(p.mul(a, b), c)).collect();
            left_res[a][c] = p.maximum(&cands);
        }
    }
    let is_residuated = right_res.iter().flatten().all(|r| r.is_some())
        && left_res.iter().flatten().all(|r| r.is_some());

    let is_pregroup = (0..n).all(|t| {
        (0..n).any(|x| p.le(p.mul(x, t), one) && p.le(one, p.mul(t, x)))
            && (0..n).any(|y| p.le(p.mul(t, y), one) && p.le(one, p.mul(y, t)))
    });

    Classification {
        is_protogroup,
        is_contractive,
        is_residuated,
        is_pregroup,
        right_proto_inverse: right_proto,
        left_proto_inverse: left_proto,
        right_residual: right_res,
        left_residual: left_res,
    }
}

/// Direct quantifier evaluation of each defining condition, with no shared
/// machinery with [`classify`]. Used as the cross-check oracle.
pub fn classify_oracle(p: &Pomonoid) -> (bool, bool, bool, bool) {
    let n = p.size();
    let one = p.unit;
    let protogroup = (0..n)
        .all(|t| (0..n).any(|s| p.le(p.mul(s, t), one)) && (0..n).any(|s| p.le(p.mul(t, s), one)));
    // Contractive: an assignment t ↦ (t*, *t) satisfying the biconditional
    // a·b ≤ 1 ⇔ a ≤ b* ⇔ b ≤ *a exists.
    let contractive = (0..n).all(|t| {
        (0..n).any(|u| (0..n).all(|a| p.le(p.mul(a, t), one) == p.le(a, u)))
            && (0..n).any(|u| (0..n).all(|b| p.le(p.mul(t, b), one) == p.le(b, u)))
    });
    let residuated = (0..n).all(|b| {
        (0..n).all(|c| {
            (0..n).any(|m| {
                p.le(p.mul(m, b), c) && (0..n).all(|a| !p.le(p.mul(a, b), c) || p.le(a, m))
            })
        })
    }) && (0..n).all(|a| {
        (0..n).all(|c| {
            (0..n).any(|m| {
                p.le(p.mul(a, m), c) && (0..n).all(|b| !p.le(p.mul(a, b), c) || p.le(b, m))
            })
        })
    });
    let pregroup = (0..n).all(|t| {
        (0..n).any(|x| p.le(p.mul(x, t), one) && p.le(one, p.mul(t, x)))
            && (0..n).any(|y| p.le(p.mul(t, y), one) && p.le(one, p.mul(y, t)))
    });
    (protogroup, contractive, residuated, pregroup)
}

/// Uniqueness of proto-inverses in the contractive case: no other element
/// satisfies the defining biconditional.
pub fn check_proto_inverse_uniqueness(p: &Pomonoid, c: &Classification) -> Report {
    let mut report = Report::new();
    let n = p.size();
    let set = format!("all {n} elements");
    if !c.is_contractive {
        report.fail(
            "pomonoid.proto_unique",
            "proto-inverses are unique",
            "pomonoid is not contractive".to_string(),
            &set,
        );
        return report;
    }
    for t in 0..n {
        let star = c.right_proto_inverse[t].expect("contractive");
        let others: Vec<usize> = (0..n)
            .filter(|&u| (0..n).all(|a| p.le(p.mul(a, t), p.unit) == p.le(a, u)))
            .collect();
        report.check_eq(
            "pomonoid.proto_unique",
            "right proto-inverse is the unique element with a·t ≤ 1 ⇔ a ≤ u",
            &set,
            &others,
            &vec![star],
        );
        let star_l = c.left_proto_inverse[t].expect("contractive");
        let others: Vec<usize> = (0..n)
            .filter(|&u| (0..n).all(|b| p.le(p.mul(t, b), p.unit) == p.le(b, u)))
            .collect();
        report.check_eq(
            "pomonoid.proto_unique",
            "left proto-inverse is the unique element with t·b ≤ 1 ⇔ b ≤ u",
            &set,
            &others,
            &vec![star_l],
        );
    }
    report
}

/// The derived laws of a contractive pomonoid:
/// `1* = 1 = *1`, `t ≤ *(t*)`, `t ≤ (*t)*`, `b*·a* ≤ (a·b)*`,
/// `*b·*a ≤ *(a·b)`, plus the Galois condition `a ≤ b* ⇔ b ≤ *a`.
pub fn check_derived_laws(p: &Pomonoid, c: &Classification) -> Report {
    let mut report = Report::new();
    let n = p.size();
    let set = format!("all pairs over {n} elements");
    if !c.is_contractive {
        report.fail(
            "pomonoid.derived",
            "derived laws require a contractive pomonoid",
            "contractive flag not set".to_string(),
            &set,
        );
        return report;
    }
    let rp = |t: usize| c.right_proto_inverse[t].expect("contractive");
    let lp = |t: usize| c.left_proto_inverse[t].expect("contractive");

    report.check_eq(
        "pomonoid.derived.unit",
        "1* = 1 = *1",
        &set,
        &(rp(p.unit), lp(p.unit)),
        &(p.unit, p.unit),
    );

    let mut f = Vec::new();
    for t in 0..n {
        if !p.le(t, lp(rp(t))) {
            f.push(format!("{} ≰ *({}*)", p.elements[t], p.elements[t]));
        }
        if !p.le(t, rp(lp(t))) {
            f.push(format!("{} ≰ (*{})*", p.elements[t], p.elements[t]));
        }
    }
    if f.is_empty() {
        report.pass("pomonoid.derived.double", "t ≤ *(t*) and t ≤ (*t)*", &set);
    } else {
        report.fail(
            "pomonoid.derived.double",
            "t ≤ *(t*) and t ≤ (*t)*",
            f.join("; "),
            &set,
        );
    }

    let mut f = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !p.le(p.mul(rp(b), rp(a)), rp(p.mul(a, b))) {
                f.push(format!(
                    "b*·a* ≰ (a·b)* at (a,b) = ({}, {})",
                    p.elements[a], p.elements[b]
                ));
            }
            if !p.le(p.mul(lp(b), lp(a)), lp(p.mul(a, b))) {
                f.push(format!(
                    "*b·*a ≰ *(a·b) at (a,b) = ({}, {})",
                    p.elements[a], p.elements[b]
                ));
            }
        }
    }
    if f.is_empty() {
        report.pass(
            "pomonoid.derived.antihom",
            "proto-inversion reverses products up to order",
            &set,
        );
    } else {
        report.fail(
            "pomonoid.derived.antihom",
            "proto-inversion reverses products up to order",
            f.join("; "),
            &set,
        );
    }

    let mut f = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if p.le(a, rp(b)) != p.le(b, lp(a)) {
                f.push(format!(
                    "Galois failure at ({}, {})",
                    p.elements[a], p.elements[b]
                ));
            }
        }
    }
    if f.is_empty() {
        report.pass("pomonoid.derived.galois", "a ≤ b* ⇔ b ≤ *a", &set);
    } else {
        report.fail(
            "pomonoid.derived.galois",
            "a ≤ b* ⇔ b ≤ *a",
            f.join("; "),
            &set,
        );
    }

    report
}

/// Sentence admissibility in a concrete pomonoid: multiply the word types in
/// order and compare with the sentence type. The empty sentence is judged on
/// the unit element.
pub fn finite_sentence_check(p: &Pomonoid, word_types: &[usize], sentence: usize) -> bool {
    let product = word_types.iter().fold(p.unit, |acc, &w| p.mul(acc, w));
    p.le(product, sentence)
}

/// The thin monoidal category presented by a pomonoid: objects are
/// elements, `hom(a, b)` is a singleton when `a ≤ b` and empty otherwise,
/// tensor is multiplication.
#[derive(Clone, Debug)]
pub struct PomonoidCat {
    pub p: Pomonoid,
}

/// The unique morphism witnessing `a ≤ b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeqWitness {
    pub src: usize,
    pub tgt: usize,
}

impl PomonoidCat {
    /// Wrap a pomonoid after validation; every violation is reported.
    pub fn new(p: Pomonoid) -> Result<Self, Report> {
        let report = p.validate();
        if report.all_passed() {
            Ok(PomonoidCat { p })
        } else {
            Err(report)
        }
    }

    pub fn objects(&self) -> Vec<usize> {
        (0..self.p.size()).collect()
    }
}

impl Category for PomonoidCat {
    type Obj = usize;
    type Mor = LeqWitness;

    fn source(&self, f: &LeqWitness) -> usize {
        f.src
    }
    fn target(&self, f: &LeqWitness) -> usize {
        f.tgt
    }
    fn identity(&self, x: &usize) -> LeqWitness {
        LeqWitness { src: *x, tgt: *x }
    }
    fn compose(&self, g: &LeqWitness, f: &LeqWitness) -> Result<LeqWitness, CatError> {
        if f.tgt != g.src {
            return Err(self.compose_err(g, f));
        }
        Ok(LeqWitness {
            src: f.src,
            tgt: g.tgt,
        })
    }
}

impl Monoidal for PomonoidCat {
    fn unit(&self) -> usize {
        self.p.unit
    }
    fn tensor_obj(&self, x: &usize, y: &usize) -> usize {
        self.p.mul(*x, *y)
    }
    fn tensor_mor(&self, f: &LeqWitness, g: &LeqWitness) -> LeqWitness {
        // Monotonicity of the multiplication makes this well-defined.
        LeqWitness {
            src: self.p.mul(f.src, g.src),
            tgt: self.p.mul(f.tgt, g.tgt),
        }
    }
}

impl HomSpaces for PomonoidCat {
    fn hom(&self, x: &usize, y: &usize) -> HomSpace<LeqWitness> {
        if self.p.le(*x, *y) {
            HomSpace::Enumerated(vec![LeqWitness { src: *x, tgt: *y }])
        } else {
            HomSpace::Enumerated(Vec::new())
        }
    }
}

/// Bounded refutation that the pomonoid of terminating decimals `≥ 1`
/// (with the opposite order, which is contractive since 1 becomes a
/// maximum) is residuated.
///
/// Over the slice `{m/10^n | n ≤ bound, 1 ≤ m/10^n ≤ 2}` the check
/// certifies that 1 is extremal (so the slice is contractive with trivial
/// proto-inverses), and that every slice element `a` with `3a ≥ 4` is
/// strictly beaten by another terminating decimal `b` with `3b ≥ 4` and
/// `b < a` (exhibited one digit deeper), so no slice element can be the
/// required residual `4/3`. A bound below 2 is reported inconclusive.
pub fn decimals_counterexample_check(bound_n: u32) -> Report {
    let mut report = Report::new();
    let set = format!("terminating decimals in [1, 2] with at most {bound_n} digits");
    if bound_n < 2 {
        report.fail(
            "decimals.residual",
            "slice large enough to exhibit strictly descending residual candidates",
            "bound below 2 is inconclusive: the slice has no second digit level".to_string(),
            &set,
        );
        return report;
    }

    // Slice elements m/10^n, 10^n ≤ m ≤ 2·10^n, n ≤ bound.
    let mut slice: Vec<Rat> = Vec::new();
    for n in 0..=bound_n {
        let denom = pow10(n);
        let lo = 10i64.pow(n);
        let hi = 2 * lo;
        for m in lo..=hi {
            slice.push(rat(m) / denom.clone());
        }
    }
    slice.sort();
    slice.dedup();

    let one_v = rat(1);
    if slice.iter().all(|a| one_v <= *a) {
        report.pass(
            "decimals.contractive",
            "1 is extremal on the slice, so the opposite order is contractive with trivial proto-inverses",
            &set,
        );
    } else {
        report.fail(
            "decimals.contractive",
            "1 is extremal on the slice",
            "found element below 1".to_string(),
            &set,
        );
    }

    let four_thirds = rat(4) / rat(3);
    let mut beaten = 0usize;
    let mut failures = Vec::new();
    for a in slice.iter().filter(|a| **a > four_thirds) {
        // Candidate one digit deeper: the least m/10^(bound+1) above 4/3.
        let denom = pow10(bound_n + 1);
        let m = (four_thirds.clone() * denom.clone()).floor() + rat(1);
        let b = m / denom;
        if b > four_thirds && b < *a {
            beaten += 1;
        } else {
            failures.push(format!("{a} not beaten"));
        }
    }
    if failures.is_empty() && beaten > 0 {
        report.pass(
            "decimals.residual",
            &format!(
                "all {beaten} slice candidates above 4/3 are strictly beaten one digit deeper, so the slice contains no residual 4/3"
            ),
            &set,
        );
    } else {
        report.fail(
            "decimals.residual",
            "every candidate above 4/3 is strictly beaten",
            failures.join("; "),
            &set,
        );
    }
    report
}

/// Fixture constructors used across the test suites.
pub mod fixtures {
    use super::Pomonoid;
    use crate::prelude::*;

    /// The trivial one-element pomonoid.
    pub fn trivial() -> Pomonoid {
        Pomonoid {
            elements: vec!["1".to_owned()],
            leq: vec![vec![true]],
            mult: vec![vec![0]],
            unit: 0,
        }
    }

    /// A finite cyclic group with the discrete order.
    pub fn cyclic_group(n: usize) -> Pomonoid {
        let elements = (0..n).map(|i| format!("g{i}")).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        let mult = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        Pomonoid {
            elements,
            leq,
            mult,
            unit: 0,
        }
    }

    /// Two-element chain `a ≤ 1` with idempotent `a`.
    pub fn chain_idempotent() -> Pomonoid {
        Pomonoid {
            elements: vec!["1".to_owned(), "a".to_owned()],
            leq: vec![vec![true, false], vec![true, true]],
            mult: vec![vec![0, 1], vec![1, 1]],
            unit: 0,
        }
    }

    /// Four elements `0 ≤ x, y ≤ 1` with `x`, `y` incomparable and all
    /// products of non-units equal to `0`. The unit is a maximum, so the
    /// pomonoid is contractive, but `{a | a·x ≤ 0} = {x, y, 0}` has no
    /// maximum, so it is not residuated.
    pub fn contractive_not_residuated() -> Pomonoid {
        let t = true;
        let f = false;
        Pomonoid {
            elements: vec!["1".into(), "x".into(), "y".into(), "0".into()],
            leq: vec![
                vec![t, f, f, f],
                vec![t, t, f, f],
                vec![t, f, t, f],
                vec![t, t, t, t],
            ],
            mult: vec![
                vec![0, 1, 2, 3],
                vec![1, 3, 3, 3],
                vec![2, 3, 3, 3],
                vec![3, 3, 3, 3],
            ],
            unit: 0,
        }
    }

    /// Chain `1 ≤ a`: the unit is a minimum, so the unit object of the thin
    /// category is initial and the category is not right closed.
    pub fn initial_unit_chain() -> Pomonoid {
        Pomonoid {
            elements: vec!["1".to_owned(), "a".to_owned()],
            leq: vec![vec![true, true], vec![false, true]],
            mult: vec![vec![0, 1], vec![1, 1]],
            unit: 0,
        }
    }

    /// A deliberately broken table: non-associative entry.
    pub fn broken_associativity() -> Pomonoid {
        Pomonoid {
            elements: vec!["1".into(), "a".into(), "b".into()],
            leq: vec![
                vec![true, false, false],
                vec![false, true, false],
                vec![false, false, true],
            ],
            // a·a = b, a·b = a, b·a = b, b·b = b: (a·a)·a = b·a = b but
            // a·(a·a) = a·b = a.
            mult: vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 2]],
            unit: 0,
        }
    }

    /// The group Z_2 ordered by `1 ≤ g`: associative and unital, but not
    /// monotone since `1 ≤ g` would force `g = g·1 ≤ g·g = 1`.
    pub fn non_monotone() -> Pomonoid {
        Pomonoid {
            elements: vec!["1".into(), "g".into()],
            leq: vec![vec![true, true], vec![false, true]],
            mult: vec![vec![0, 1], vec![1, 0]],
            unit: 0,
        }
    }
}
