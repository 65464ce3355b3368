//! Completion of monoid-with-zero presentations.
//!
//! Relations `u = v` and `u = 0` between words over single-character
//! generators are oriented by shortlex order and closed under critical pairs
//! (overlaps and inclusions of left-hand sides). When completion succeeds,
//! the irreducible words form a basis of the quotient algebra and the
//! normal form of `u·v` gives its structure constants.

use std::cmp::Ordering;

use crate::ring::TableSpec;

/// Right-hand side of a rule; `None` is the zero of the algebra.
pub type Rhs = Option<String>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: String,
    pub rhs: Rhs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompletionError {
    /// More than the allowed number of rules were generated.
    RuleLimit(usize),
    /// More irreducible words than the limit, up to the given length.
    TooManyWords { limit: usize, length: usize },
}

/// A confluent, terminating rewriting system.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    alphabet: Vec<char>,
    rules: Vec<Rule>,
}

fn shortlex(alphabet: &[char], u: &str, v: &str) -> Ordering {
    let rank = |c: char| alphabet.iter().position(|&a| a == c).unwrap_or(usize::MAX);
    u.chars()
        .count()
        .cmp(&v.chars().count())
        .then_with(|| u.chars().map(rank).cmp(v.chars().map(rank)))
}

fn reduce_with(rules: &[Rule], word: &str) -> Rhs {
    let mut w = word.to_string();
    'outer: loop {
        for rule in rules {
            if let Some(at) = w.find(&rule.lhs) {
                let r = rule.rhs.as_ref()?;
                w.replace_range(at..at + rule.lhs.len(), r);
                continue 'outer;
            }
        }
        return Some(w);
    }
}

/// Orients `u = v` into a rule, or `None` if both sides coincide.
fn orient(alphabet: &[char], u: Rhs, v: Rhs) -> Option<Rule> {
    match (u, v) {
        (None, None) => None,
        (Some(w), None) | (None, Some(w)) => Some(Rule { lhs: w, rhs: None }),
        (Some(a), Some(b)) => match shortlex(alphabet, &a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Rule { lhs: a, rhs: Some(b) }),
            Ordering::Less => Some(Rule { lhs: b, rhs: Some(a) }),
        },
    }
}

fn splice(prefix: &str, middle: &Rhs, suffix: &str) -> Rhs {
    middle.as_ref().map(|m| format!("{prefix}{m}{suffix}"))
}

/// Words on which two rules both apply, each with its two one-step rewrites.
fn critical_pairs(r1: &Rule, r2: &Rule) -> Vec<(Rhs, Rhs)> {
    let (l1, l2) = (&r1.lhs, &r2.lhs);
    let mut out = Vec::new();
    // Proper overlaps: a suffix of l1 equals a prefix of l2.
    for k in 1..l1.len().min(l2.len()) {
        if l1[l1.len() - k..] == l2[..k] {
            let left = splice("", &r1.rhs, &l2[k..]);
            let right = splice(&l1[..l1.len() - k], &r2.rhs, "");
            out.push((left, right));
        }
    }
    // Inclusions: l2 occurs inside l1.
    if l2.len() <= l1.len() && !std::ptr::eq(r1, r2) {
        let mut from = 0;
        while let Some(off) = l1[from..].find(l2.as_str()) {
            let at = from + off;
            out.push((r1.rhs.clone(), splice(&l1[..at], &r2.rhs, &l1[at + l2.len()..])));
            from = at + 1;
        }
    }
    out
}

impl RewriteSystem {
    /// Runs completion on `relations` (`(u, None)` means `u = 0`).
    pub fn complete(alphabet: &[char], relations: &[(&str, Option<&str>)], max_rules: usize) -> Result<RewriteSystem, CompletionError> {
        let alphabet = alphabet.to_vec();
        let mut rules: Vec<Rule> = Vec::new();
        let mut pending: Vec<(Rhs, Rhs)> =
            relations.iter().map(|(u, v)| (Some(u.to_string()), v.map(str::to_string))).collect();
        loop {
            while let Some((u, v)) = pending.pop() {
                let u = u.and_then(|w| reduce_with(&rules, &w));
                let v = v.and_then(|w| reduce_with(&rules, &w));
                if let Some(rule) = orient(&alphabet, u, v) {
                    if rules.len() >= max_rules {
                        return Err(CompletionError::RuleLimit(max_rules));
                    }
                    // Rules whose left side the new rule rewrites go back to the queue.
                    let (keep, stale): (Vec<Rule>, Vec<Rule>) =
                        rules.into_iter().partition(|r| !r.lhs.contains(rule.lhs.as_str()));
                    rules = keep;
                    pending.extend(stale.into_iter().map(|r| (Some(r.lhs), r.rhs)));
                    for r in &mut rules {
                        r.rhs = r.rhs.take().and_then(|w| reduce_with(std::slice::from_ref(&rule), &w));
                    }
                    rules.push(rule);
                }
            }
            let mut new_pairs = Vec::new();
            for r1 in &rules {
                for r2 in &rules {
                    for (u, v) in critical_pairs(r1, r2) {
                        let (u, v) = (u.and_then(|w| reduce_with(&rules, &w)), v.and_then(|w| reduce_with(&rules, &w)));
                        if u != v {
                            new_pairs.push((u, v));
                        }
                    }
                }
            }
            if new_pairs.is_empty() {
                rules.sort_by(|a, b| shortlex(&alphabet, &a.lhs, &b.lhs));
                return Ok(RewriteSystem { alphabet, rules });
            }
            pending = new_pairs;
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Normal form of `word`, `None` if it reduces to zero.
    pub fn normal_form(&self, word: &str) -> Rhs {
        reduce_with(&self.rules, word)
    }

    fn is_irreducible(&self, word: &str) -> bool {
        self.rules.iter().all(|r| !word.contains(&r.lhs))
    }

    fn next_level(&self, level: &[String]) -> Vec<String> {
        // Every factor of an irreducible word is irreducible, so extending the
        // previous level by one letter reaches them all.
        level
            .iter()
            .flat_map(|w| self.alphabet.iter().map(move |c| format!("{w}{c}")))
            .filter(|w| self.is_irreducible(w))
            .collect()
    }

    /// Irreducible words of length `1..=max_len`, in shortlex order.
    pub fn irreducible_words(&self, max_len: usize) -> Vec<String> {
        let mut out = Vec::new();
        let mut level = vec![String::new()];
        for _ in 0..max_len {
            level = self.next_level(&level);
            if level.is_empty() {
                break;
            }
            out.extend(level.iter().cloned());
        }
        out
    }

    /// The finite basis of irreducible nonempty words, or an error once more
    /// than `limit` have been found.
    pub fn basis(&self, limit: usize) -> Result<Vec<String>, CompletionError> {
        let mut out = Vec::new();
        let mut level = vec![String::new()];
        let mut length = 0;
        loop {
            level = self.next_level(&level);
            length += 1;
            if level.is_empty() {
                return Ok(out);
            }
            out.extend(level.iter().cloned());
            if out.len() > limit {
                return Err(CompletionError::TooManyWords { limit, length });
            }
        }
    }

    /// Structure constants of the quotient algebra over `GF(p)` with unity
    /// adjoined: basis `1` followed by the irreducible words.
    pub fn table_spec(&self, p: u64, limit: usize) -> Result<TableSpec, CompletionError> {
        let words = self.basis(limit)?;
        let mut basis = vec![String::new()];
        basis.extend(words);
        let index = |w: &str| basis.iter().position(|b| b == w).expect("normal forms are basis words");
        let mut constants = Vec::new();
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate() {
                if let Some(w) = self.normal_form(&format!("{u}{v}")) {
                    constants.push((i, j, index(&w), 1));
                }
            }
        }
        let mut unity = vec![0; basis.len()];
        unity[0] = 1;
        basis[0] = "1".to_string();
        Ok(TableSpec { p, basis, unity, constants })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ABX: [char; 3] = ['a', 'b', 'x'];

    fn example_relations(with_ba: bool) -> Vec<(&'static str, Option<&'static str>)> {
        let mut rels = vec![
            ("axa", Some("a")),
            ("bxb", Some("b")),
            ("xax", Some("x")),
            ("xbx", Some("x")),
            ("aa", None),
            ("bb", None),
            ("ab", None),
            ("xx", None),
        ];
        if with_ba {
            rels.push(("ba", None));
        }
        rels
    }

    #[test]
    fn example_presentation_has_nine_word_basis() {
        let sys = RewriteSystem::complete(&ABX, &example_relations(true), 100).unwrap();
        let basis = sys.basis(64).unwrap();
        assert_eq!(basis, ["a", "b", "x", "ax", "bx", "xa", "xb", "axb", "bxa"]);
    }

    #[test]
    fn listed_relations_without_ba_give_an_infinite_quotient() {
        let sys = RewriteSystem::complete(&ABX, &example_relations(false), 100).unwrap();
        assert_eq!(sys.normal_form("ba"), Some("ba".to_string()));
        // Irreducible words exist at every length: (bax)^n b never reduces.
        let counts: Vec<usize> = (1..=12).map(|n| sys.irreducible_words(n).len()).collect();
        assert!(counts.windows(2).all(|w| w[1] > w[0]), "{counts:?}");
        assert!(matches!(sys.basis(64), Err(CompletionError::TooManyWords { limit: 64, .. })));
    }

    #[test]
    fn completion_adds_consequences() {
        // ab = 0 and b = c force ac = 0.
        let sys = RewriteSystem::complete(&['a', 'b', 'c'], &[("ab", None), ("c", Some("b"))], 10).unwrap();
        assert_eq!(sys.normal_form("ac"), None);
        assert_eq!(sys.normal_form("ca"), Some("ba".to_string()));
    }

    #[test]
    fn completion_resolves_overlaps() {
        // aba -> b overlaps itself on "a": (aba)ba = bba and ab(aba) = abb.
        let sys = RewriteSystem::complete(&['a', 'b'], &[("aba", Some("b"))], 20).unwrap();
        assert_eq!(sys.normal_form("ababa"), sys.normal_form("bba"));
        assert_eq!(sys.normal_form("bba"), sys.normal_form("abb"));
    }

    #[test]
    fn rule_limit_is_enforced() {
        assert_eq!(
            RewriteSystem::complete(&ABX, &example_relations(true), 3).unwrap_err(),
            CompletionError::RuleLimit(3)
        );
    }

    #[test]
    fn table_spec_of_example_is_associative_with_unity() {
        let sys = RewriteSystem::complete(&ABX, &example_relations(true), 100).unwrap();
        let spec = sys.table_spec(2, 64).unwrap();
        assert_eq!(spec.basis.len(), 10);
        assert!(crate::ring::Ring::table(&spec).is_ok());
    }
}
