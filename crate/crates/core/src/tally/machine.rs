use std::cmp::Ordering;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PileId(pub usize);

/// Piles of identical tokens and a counter of primitive operations.
///
/// Only four things cost a step: adding one token, removing one token,
/// moving one token between piles, and comparing two piles. Counting a
/// pile costs one step per token in it. Tokens placed by
/// [`TallyMachine::pile_with`] are the machine's input and are free.
#[derive(Debug, Clone, Default)]
pub struct TallyMachine {
    names: Vec<String>,
    counts: Vec<u64>,
    steps: u64,
}

impl TallyMachine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pile(&mut self, name: impl Into<String>) -> PileId {
        self.pile_with(name, 0)
    }

    pub fn pile_with(&mut self, name: impl Into<String>, tokens: u64) -> PileId {
        self.names.push(name.into());
        self.counts.push(tokens);
        PileId(self.counts.len() - 1)
    }

    fn check(&self, p: PileId) -> Result<()> {
        if p.0 < self.counts.len() {
            Ok(())
        } else {
            Err(Error::UnknownPile(p.0))
        }
    }

    pub fn add_one(&mut self, p: PileId) -> Result<()> {
        self.check(p)?;
        self.counts[p.0] += 1;
        self.steps += 1;
        Ok(())
    }

    pub fn remove_one(&mut self, p: PileId) -> Result<()> {
        self.check(p)?;
        if self.counts[p.0] == 0 {
            return Err(Error::EmptyPile(self.names[p.0].clone()));
        }
        self.counts[p.0] -= 1;
        self.steps += 1;
        Ok(())
    }

    pub fn move_one(&mut self, from: PileId, to: PileId) -> Result<()> {
        self.check(from)?;
        self.check(to)?;
        if self.counts[from.0] == 0 {
            return Err(Error::EmptyPile(self.names[from.0].clone()));
        }
        self.counts[from.0] -= 1;
        self.counts[to.0] += 1;
        self.steps += 1;
        Ok(())
    }

    pub fn compare(&mut self, a: PileId, b: PileId) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        self.steps += 1;
        Ok(self.counts[a.0].cmp(&self.counts[b.0]))
    }

    /// Counts a pile token by token.
    pub fn count(&mut self, p: PileId) -> Result<u64> {
        self.check(p)?;
        let n = self.counts[p.0];
        self.steps += n;
        Ok(n)
    }

    pub fn is_empty(&self, p: PileId) -> bool {
        self.counts.get(p.0).is_none_or(|&n| n == 0)
    }

    /// Pile size without charging a step; for reporting.
    pub fn peek(&self, p: PileId) -> u64 {
        self.counts.get(p.0).copied().unwrap_or(0)
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn total_tokens(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn piles(&self) -> impl Iterator<Item = (&str, u64)> {
        self.names.iter().map(String::as_str).zip(self.counts.iter().copied())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instruction {
    AddOne(PileId),
    RemoveOne(PileId),
    MoveOne { from: PileId, to: PileId },
    Compare(PileId, PileId),
    Count(PileId),
}

/// A straight-line program over named piles with given starting tokens.
#[derive(Debug, Clone, Default)]
pub struct TallyProgram {
    pub piles: Vec<(String, u64)>,
    pub instructions: Vec<Instruction>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TallyResult {
    pub piles: Vec<(String, u64)>,
    pub steps: u64,
    pub comparisons: Vec<Ordering>,
    pub counts: Vec<u64>,
}

impl TallyProgram {
    pub fn run(&self) -> Result<TallyResult> {
        let mut m = TallyMachine::new();
        for (name, n) in &self.piles {
            m.pile_with(name.clone(), *n);
        }
        let mut comparisons = Vec::new();
        let mut counts = Vec::new();
        for ins in &self.instructions {
            match *ins {
                Instruction::AddOne(p) => m.add_one(p)?,
                Instruction::RemoveOne(p) => m.remove_one(p)?,
                Instruction::MoveOne { from, to } => m.move_one(from, to)?,
                Instruction::Compare(a, b) => comparisons.push(m.compare(a, b)?),
                Instruction::Count(p) => counts.push(m.count(p)?),
            }
        }
        Ok(TallyResult {
            piles: m.piles().map(|(n, c)| (n.to_string(), c)).collect(),
            steps: m.steps(),
            comparisons,
            counts,
        })
    }
}
