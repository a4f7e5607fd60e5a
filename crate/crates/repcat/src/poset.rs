//! Finite posets given by their order relation.

use crate::RepError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    elements: Vec<String>,
    leq: Vec<Vec<bool>>,
}

/// A failed order axiom with the offending elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetViolation {
    pub law: &'static str,
    pub elements: Vec<usize>,
}

impl FinitePoset {
    pub fn new(elements: Vec<String>, leq: Vec<Vec<bool>>) -> Result<FinitePoset, RepError> {
        let p = FinitePoset::unchecked(elements, leq)?;
        if let Some(v) = p.check().first() {
            return Err(RepError::Poset(format!("{} fails at {:?}", v.law, v.elements)));
        }
        Ok(p)
    }

    pub fn unchecked(elements: Vec<String>, leq: Vec<Vec<bool>>) -> Result<FinitePoset, RepError> {
        let n = elements.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(RepError::Shape(format!("order relation on {n} elements must be {n}x{n}")));
        }
        let mut seen = std::collections::BTreeSet::new();
        if let Some(dup) = elements.iter().find(|e| !seen.insert(e.as_str())) {
            return Err(RepError::Poset(format!("duplicate element {dup:?}")));
        }
        Ok(FinitePoset { elements, leq })
    }

    /// Reflexive-transitive closure of the given covering pairs.
    pub fn from_covers(elements: Vec<String>, covers: &[(usize, usize)]) -> Result<FinitePoset, RepError> {
        let n = elements.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(RepError::Shape(format!("cover ({a}, {b}) outside {n} elements")));
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        FinitePoset::new(elements, leq)
    }

    pub fn chain(n: usize) -> FinitePoset {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FinitePoset::from_covers((0..n).map(|i| i.to_string()).collect(), &covers).expect("chain")
    }

    pub fn point() -> FinitePoset {
        FinitePoset::chain(1)
    }

    pub fn discrete(n: usize) -> FinitePoset {
        FinitePoset::from_covers((0..n).map(|i| i.to_string()).collect(), &[]).expect("antichain")
    }

    /// `a < b, a < c`.
    pub fn vee() -> FinitePoset {
        FinitePoset::from_covers(vec!["a".into(), "b".into(), "c".into()], &[(0, 1), (0, 2)]).expect("vee")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn relation(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn index_of(&self, label: &str) -> Result<usize, RepError> {
        self.elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| RepError::NotInPoset(label.to_string()))
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn check(&self) -> Vec<PosetViolation> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            if !self.leq[a][a] {
                out.push(PosetViolation { law: "reflexivity", elements: vec![a] });
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if self.leq[a][b] && self.leq[b][a] {
                    out.push(PosetViolation { law: "antisymmetry", elements: vec![a, b] });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.leq[a][b] && self.leq[b][c] && !self.leq[a][c] {
                        out.push(PosetViolation { law: "transitivity", elements: vec![a, b, c] });
                    }
                }
            }
        }
        out
    }

    /// All strictly comparable pairs `(lo, hi)`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Strict chains `a < b < c`.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (a, b) in self.pairs() {
            for c in 0..self.len() {
                if self.lt(b, c) {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    /// Pairs `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.pairs()
            .into_iter()
            .filter(|&(a, b)| !(0..self.len()).any(|m| self.lt(a, m) && self.lt(m, b)))
            .collect()
    }

    pub fn up_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.leq(x, y)).collect()
    }

    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.leq(y, x)).collect()
    }

    pub fn opposite(&self) -> FinitePoset {
        let n = self.len();
        let leq = (0..n).map(|a| (0..n).map(|b| self.leq[b][a]).collect()).collect();
        FinitePoset { elements: self.elements.clone(), leq }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_and_vees() {
        let c = FinitePoset::chain(3);
        assert_eq!(c.pairs(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(c.triples(), vec![(0, 1, 2)]);
        assert_eq!(c.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(c.up_set(1), vec![1, 2]);
        assert_eq!(c.opposite().down_set(1), vec![1, 2]);
        let v = FinitePoset::vee();
        assert!(v.check().is_empty());
        assert!(!v.leq(1, 2) && !v.leq(2, 1));
        assert_eq!(FinitePoset::discrete(2).pairs(), vec![]);
    }

    #[test]
    fn axioms_are_checked() {
        let cyc = vec![vec![true, true], vec![true, true]];
        assert!(matches!(FinitePoset::new(vec!["a".into(), "b".into()], cyc), Err(RepError::Poset(_))));
        let bad = FinitePoset::unchecked(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![true, true, false], vec![false, true, true], vec![false, false, true]],
        )
        .unwrap();
        assert_eq!(bad.check()[0].law, "transitivity");
        let norefl = FinitePoset::unchecked(vec!["a".into()], vec![vec![false]]).unwrap();
        assert_eq!(norefl.check()[0].law, "reflexivity");
        assert!(FinitePoset::point().index_of("x").is_err());
    }
}
