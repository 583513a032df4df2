//! Backtracking over in/out labellings.
//!
//! The engine enumerates sets satisfying a base property (conflict-free,
//! admissible, complete or stable) together with a handful of side
//! constraints. Branching picks the lowest undecided argument and tries
//! `in` before `out`. Labelling an argument `in` forces all its attackers
//! and targets `out`; every other rule is checked as a prune after each
//! step, and is exact once all arguments are decided.

use std::time::Instant;

use crate::error::DeadlineExceeded;
use crate::framework::ArgumentationFramework;
use crate::set::ArgumentSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Base {
    ConflictFree,
    Admissible,
    Complete,
    Stable,
}

#[derive(Debug, Clone)]
pub(crate) struct Query {
    pub base: Base,
    pub require_in: ArgumentSet,
    pub require_out: ArgumentSet,
    /// At least one of these must be in.
    pub some_in: Option<ArgumentSet>,
    /// At least one of these must be out.
    pub some_out: Option<ArgumentSet>,
    /// Each of these must be in the range of the set.
    pub cover: Option<ArgumentSet>,
    /// At least one of these must be in the range of the set.
    pub some_cover: Option<ArgumentSet>,
}

impl Query {
    pub fn new(base: Base) -> Self {
        Query {
            base,
            require_in: ArgumentSet::new(),
            require_out: ArgumentSet::new(),
            some_in: None,
            some_out: None,
            cover: None,
            some_cover: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    Undecided,
    In,
    Out,
}

pub(crate) enum Flow {
    Continue,
    Stop,
}

pub(crate) struct Engine<'a> {
    af: &'a ArgumentationFramework,
    query: Query,
    labels: Vec<Label>,
    trail: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
}

impl<'a> Engine<'a> {
    pub fn new(af: &'a ArgumentationFramework, query: Query, deadline: Option<Instant>) -> Self {
        Engine {
            af,
            query,
            labels: vec![Label::Undecided; af.len()],
            trail: Vec::new(),
            nodes: 0,
            deadline,
        }
    }

    /// Feeds every model to `on_model` until it returns [`Flow::Stop`].
    ///
    /// Returns `Ok(true)` when the space was exhausted and `Ok(false)` when
    /// the callback stopped the search.
    pub fn run(
        &mut self,
        mut on_model: impl FnMut(&ArgumentSet) -> Result<Flow, DeadlineExceeded>,
    ) -> Result<bool, DeadlineExceeded> {
        if !self.init() {
            return Ok(true);
        }
        // (argument, trail length before the decision, out-branch taken)
        let mut stack: Vec<(usize, usize, bool)> = Vec::new();
        'descend: loop {
            self.tick()?;
            let from = stack.last().map_or(0, |d| d.0 + 1);
            match self.next_undecided(from) {
                None => {
                    let model = self.model();
                    if let Flow::Stop = on_model(&model)? {
                        return Ok(false);
                    }
                }
                Some(a) => {
                    stack.push((a, self.trail.len(), false));
                    if self.assign_in(a) && self.viable() {
                        continue 'descend;
                    }
                }
            }
            loop {
                let Some((a, mark, out_taken)) = stack.pop() else {
                    return Ok(true);
                };
                self.undo(mark);
                if !out_taken {
                    stack.push((a, mark, true));
                    if self.assign_out(a) && self.viable() {
                        continue 'descend;
                    }
                }
            }
        }
    }

    fn tick(&mut self) -> Result<(), DeadlineExceeded> {
        self.nodes += 1;
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(DeadlineExceeded { partial: None }),
            _ => Ok(()),
        }
    }

    fn init(&mut self) -> bool {
        let n = self.af.len();
        if self.query.require_in.bound() > n
            || !self.query.require_in.is_disjoint(&self.query.require_out)
        {
            return false;
        }
        let require_in = self.query.require_in.clone();
        let require_out = self.query.require_out.clone();
        require_in.iter().all(|a| self.assign_in(a))
            && require_out
                .iter()
                .filter(|&a| a < n)
                .all(|a| self.assign_out(a))
            && self.viable()
    }

    fn next_undecided(&self, from: usize) -> Option<usize> {
        (from..self.labels.len()).find(|&a| self.labels[a] == Label::Undecided)
    }

    fn model(&self) -> ArgumentSet {
        (0..self.labels.len())
            .filter(|&a| self.labels[a] == Label::In)
            .collect()
    }

    fn set(&mut self, a: usize, label: Label) {
        self.labels[a] = label;
        self.trail.push(a);
    }

    fn undo(&mut self, mark: usize) {
        for a in self.trail.drain(mark..) {
            self.labels[a] = Label::Undecided;
        }
    }

    fn assign_in(&mut self, a: usize) -> bool {
        match self.labels[a] {
            Label::In => return true,
            Label::Out => return false,
            Label::Undecided => {}
        }
        if self.af.is_self_attacking(a) {
            return false;
        }
        self.set(a, Label::In);
        let af = self.af;
        for &b in af.attackers(a).iter().chain(af.targets(a)) {
            match self.labels[b] {
                Label::In => return false,
                Label::Out => {}
                Label::Undecided => self.set(b, Label::Out),
            }
        }
        true
    }

    fn assign_out(&mut self, a: usize) -> bool {
        match self.labels[a] {
            Label::In => false,
            Label::Out => true,
            Label::Undecided => {
                self.set(a, Label::Out);
                true
            }
        }
    }

    /// Some attacker of `a` is (or may still become) in.
    fn may_be_attacked(&self, a: usize) -> bool {
        self.af
            .attackers(a)
            .iter()
            .any(|&c| self.labels[c] != Label::Out)
    }

    fn is_attacked(&self, a: usize) -> bool {
        self.af
            .attackers(a)
            .iter()
            .any(|&c| self.labels[c] == Label::In)
    }

    fn may_cover(&self, a: usize) -> bool {
        self.labels[a] != Label::Out || self.may_be_attacked(a)
    }

    /// False if no completion of the current labelling can be a model.
    fn viable(&self) -> bool {
        let af = self.af;
        let base = self.query.base;
        for a in 0..af.len() {
            match self.labels[a] {
                Label::In => {
                    if matches!(base, Base::Admissible | Base::Complete)
                        && !af.attackers(a).iter().all(|&b| self.may_be_attacked(b))
                    {
                        return false;
                    }
                }
                Label::Out => match base {
                    Base::Stable if !self.may_be_attacked(a) => return false,
                    // an out argument that is already defended can never be
                    // excluded again, since the in-set only grows
                    Base::Complete if af.attackers(a).iter().all(|&b| self.is_attacked(b)) => {
                        return false
                    }
                    _ => {}
                },
                Label::Undecided => {}
            }
        }
        let q = &self.query;
        if let Some(cover) = &q.cover {
            if !cover.iter().all(|x| self.may_cover(x)) {
                return false;
            }
        }
        if let Some(s) = &q.some_in {
            if !s.iter().any(|x| self.labels[x] != Label::Out) {
                return false;
            }
        }
        if let Some(s) = &q.some_out {
            if !s.iter().any(|x| self.labels[x] != Label::In) {
                return false;
            }
        }
        if let Some(s) = &q.some_cover {
            if !s.iter().any(|x| self.may_cover(x)) {
                return false;
            }
        }
        true
    }
}
